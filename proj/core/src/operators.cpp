#include "clg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace clg {

namespace {

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
  }
}

}  // namespace

VectorField2 grad_scalar(const ScalarField& u) {
  const Grid& g = u.grid();
  VectorField2 out(g);
  const double inv = 1.0 / g.spacing;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const double gx = x + 1 < g.width ? (u(x + 1, y) - u(x, y)) * inv : 0.0;
      const double gy = y + 1 < g.height ? (u(x, y + 1) - u(x, y)) * inv : 0.0;
      out.set(x, y, {gx, gy});
    }
  }
  return out;
}

MatrixField2x2 grad_vector(const VectorField2& v) {
  const Grid& g = v.grid();
  MatrixField2x2 out(g);
  const double inv = 1.0 / g.spacing;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      Mat2 m;
      if (x + 1 < g.width) {
        m.xx = (v.xc(x + 1, y) - v.xc(x, y)) * inv;
        m.yx = (v.yc(x + 1, y) - v.yc(x, y)) * inv;
      }
      if (y + 1 < g.height) {
        m.xy = (v.xc(x, y + 1) - v.xc(x, y)) * inv;
        m.yy = (v.yc(x, y + 1) - v.yc(x, y)) * inv;
      }
      out.set(x, y, m);
    }
  }
  return out;
}

ScalarField div_vector(const VectorField2& p) {
  const Grid& g = p.grid();
  ScalarField out(g);
  const double inv = 1.0 / g.spacing;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      double d = 0.0;
      if (x + 1 < g.width) d += p.xc(x, y);
      if (x > 0) d -= p.xc(x - 1, y);
      if (y + 1 < g.height) d += p.yc(x, y);
      if (y > 0) d -= p.yc(x, y - 1);
      out(x, y) = d * inv;
    }
  }
  return out;
}

VectorField2 div_matrix(const MatrixField2x2& s) {
  const Grid& g = s.grid();
  VectorField2 out(g);
  const double inv = 1.0 / g.spacing;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      Vec2 d;
      if (x + 1 < g.width) {
        const Mat2 m = s.at(x, y);
        d.x += m.xx;
        d.y += m.yx;
      }
      if (x > 0) {
        const Mat2 m = s.at(x - 1, y);
        d.x -= m.xx;
        d.y -= m.yx;
      }
      if (y + 1 < g.height) {
        const Mat2 m = s.at(x, y);
        d.x += m.xy;
        d.y += m.yy;
      }
      if (y > 0) {
        const Mat2 m = s.at(x, y - 1);
        d.x -= m.xy;
        d.y -= m.yy;
      }
      out.set(x, y, inv * d);
    }
  }
  return out;
}

std::pair<VectorField2, MatrixField2x2> lambda_apply(const ScalarField& u,
                                                     const VectorField2& v) {
  require_same_grid(u.grid(), v.grid(), "lambda_apply");
  VectorField2 coupling = grad_scalar(u);
  const Grid& g = u.grid();
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      coupling.set(x, y, coupling.at(x, y) - v.at(x, y));
    }
  }
  return {std::move(coupling), grad_vector(v)};
}

std::pair<ScalarField, VectorField2> lambda_adjoint(
    const VectorField2& rho, const MatrixField2x2& sigma) {
  require_same_grid(rho.grid(), sigma.grid(), "lambda_adjoint");
  ScalarField first = div_vector(rho);
  for (double& t : first.values()) t = -t;
  VectorField2 second = div_matrix(sigma);
  const Grid& g = rho.grid();
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      second.set(x, y, -(rho.at(x, y) + second.at(x, y)));
    }
  }
  return {std::move(first), std::move(second)};
}

double inner(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "inner");
  double s = 0.0;
  const auto& av = a.values();
  const auto& bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) s += av[i] * bv[i];
  return s * a.grid().cell_area();
}

double inner(const VectorField2& a, const VectorField2& b) {
  require_same_grid(a.grid(), b.grid(), "inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.xs().size(); ++i) {
    s += a.xs()[i] * b.xs()[i] + a.ys()[i] * b.ys()[i];
  }
  return s * a.grid().cell_area();
}

double inner(const MatrixField2x2& a, const MatrixField2x2& b) {
  require_same_grid(a.grid(), b.grid(), "inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.xxs().size(); ++i) {
    s += a.xxs()[i] * b.xxs()[i] + a.xys()[i] * b.xys()[i] +
         a.yxs()[i] * b.yxs()[i] + a.yys()[i] * b.yys()[i];
  }
  return s * a.grid().cell_area();
}

double sup_abs(const ScalarField& a) {
  double m = 0.0;
  for (double t : a.values()) m = std::max(m, std::abs(t));
  return m;
}

double sup_norm(const VectorField2& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.xs().size(); ++i) {
    m = std::max(m, std::hypot(a.xs()[i], a.ys()[i]));
  }
  return m;
}

double sup_norm(const MatrixField2x2& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.xxs().size(); ++i) {
    const double n = std::sqrt(
        a.xxs()[i] * a.xxs()[i] + a.xys()[i] * a.xys()[i] +
        a.yxs()[i] * a.yxs()[i] + a.yys()[i] * a.yys()[i]);
    m = std::max(m, n);
  }
  return m;
}

ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid(), "add_scaled");
  ScalarField out = a;
  for (std::size_t i = 0; i < out.values().size(); ++i) {
    out.values()[i] += s * b.values()[i];
  }
  return out;
}

VectorField2 add_scaled(const VectorField2& a, double s,
                        const VectorField2& b) {
  require_same_grid(a.grid(), b.grid(), "add_scaled");
  VectorField2 out = a;
  for (std::size_t i = 0; i < out.xs().size(); ++i) {
    out.xs()[i] += s * b.xs()[i];
    out.ys()[i] += s * b.ys()[i];
  }
  return out;
}

bool all_finite(const ScalarField& a) {
  for (double t : a.values()) {
    if (!std::isfinite(t)) return false;
  }
  return true;
}

bool all_finite(const VectorField2& a) {
  for (std::size_t i = 0; i < a.xs().size(); ++i) {
    if (!std::isfinite(a.xs()[i]) || !std::isfinite(a.ys()[i])) return false;
  }
  return true;
}

}  // namespace clg
