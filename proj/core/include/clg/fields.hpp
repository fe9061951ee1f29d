#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clg/linalg.hpp"

namespace clg {

/// Rectangular pixel grid. spacing is the cell edge length; integrals are
/// weighted by spacing^2.
struct Grid {
  int width = 1;
  int height = 1;
  double spacing = 1.0;

  Grid() = default;
  Grid(int w, int h, double sp = 1.0);

  std::size_t npixels() const { return std::size_t(width) * height; }
  std::size_t index(int x, int y) const {
    return std::size_t(y) * width + x;
  }
  double cell_area() const { return spacing * spacing; }

  bool operator==(const Grid&) const = default;
};

/// Scalar samples on a grid, row-major.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid_(g), v_(g.npixels(), fill) {}

  const Grid& grid() const { return grid_; }
  double operator()(int x, int y) const { return v_[grid_.index(x, y)]; }
  double& operator()(int x, int y) { return v_[grid_.index(x, y)]; }

  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

 private:
  Grid grid_;
  std::vector<double> v_;
};

/// Two scalar components per pixel.
class VectorField2 {
 public:
  VectorField2() = default;
  explicit VectorField2(const Grid& g)
      : grid_(g), x_(g.npixels(), 0.0), y_(g.npixels(), 0.0) {}

  const Grid& grid() const { return grid_; }
  Vec2 at(int x, int y) const {
    const std::size_t i = grid_.index(x, y);
    return {x_[i], y_[i]};
  }
  void set(int x, int y, Vec2 v) {
    const std::size_t i = grid_.index(x, y);
    x_[i] = v.x;
    y_[i] = v.y;
  }
  double xc(int x, int y) const { return x_[grid_.index(x, y)]; }
  double yc(int x, int y) const { return y_[grid_.index(x, y)]; }

  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }
  std::vector<double>& xs() { return x_; }
  std::vector<double>& ys() { return y_; }

 private:
  Grid grid_;
  std::vector<double> x_, y_;
};

/// Four scalar components per pixel; row i of the matrix is the gradient
/// of vector component i.
class MatrixField2x2 {
 public:
  MatrixField2x2() = default;
  explicit MatrixField2x2(const Grid& g)
      : grid_(g),
        xx_(g.npixels(), 0.0),
        xy_(g.npixels(), 0.0),
        yx_(g.npixels(), 0.0),
        yy_(g.npixels(), 0.0) {}

  const Grid& grid() const { return grid_; }
  Mat2 at(int x, int y) const {
    const std::size_t i = grid_.index(x, y);
    return {xx_[i], xy_[i], yx_[i], yy_[i]};
  }
  void set(int x, int y, Mat2 m) {
    const std::size_t i = grid_.index(x, y);
    xx_[i] = m.xx;
    xy_[i] = m.xy;
    yx_[i] = m.yx;
    yy_[i] = m.yy;
  }

  const std::vector<double>& xxs() const { return xx_; }
  const std::vector<double>& xys() const { return xy_; }
  const std::vector<double>& yxs() const { return yx_; }
  const std::vector<double>& yys() const { return yy_; }

 private:
  Grid grid_;
  std::vector<double> xx_, xy_, yx_, yy_;
};

/// Observation mask plus observed data. observed[i] != 0 marks a pixel
/// where data f is available (the complement is the region to inpaint).
/// At least one pixel must be observed.
struct Mask {
  Grid grid;
  std::vector<std::uint8_t> observed;
  ScalarField f;

  static Mask all_observed(const ScalarField& data);
  /// indicator > 0 marks observed pixels; throws std::domain_error when no
  /// pixel is observed, std::invalid_argument on grid mismatch.
  static Mask from_indicator(const ScalarField& data,
                             const ScalarField& indicator);

  bool is_observed(int x, int y) const {
    return observed[grid.index(x, y)] != 0;
  }
  std::size_t observed_count() const;
  double observed_mean() const;
};

}  // namespace clg
