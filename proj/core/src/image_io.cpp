#include "clg/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace clg {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& detail) {
  throw std::runtime_error("image '" + path + "': " + detail);
}

int next_pnm_token(std::istream& is, const std::string& path) {
  // Skips whitespace and '#' comment lines, then reads a decimal number.
  char c;
  while (is.get(c)) {
    if (c == '#') {
      while (is.get(c) && c != '\n') {
      }
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      is.putback(c);
      break;
    }
  }
  int value;
  if (!(is >> value)) fail(path, "truncated or malformed PNM header");
  return value;
}

ScalarField load_pgm(std::ifstream& is, const std::string& path, bool binary) {
  const int w = next_pnm_token(is, path);
  const int h = next_pnm_token(is, path);
  const int maxval = next_pnm_token(is, path);
  if (w < 1 || h < 1) fail(path, "invalid dimensions");
  if (maxval < 1 || maxval > 255) {
    fail(path, "unsupported maxval " + std::to_string(maxval) +
                   " (only 8-bit PGM is supported)");
  }
  ScalarField out(Grid(w, h));
  if (binary) {
    char sep;
    if (!is.get(sep)) fail(path, "truncated after header");
    std::vector<unsigned char> row(std::size_t(w));
    for (int y = 0; y < h; ++y) {
      if (!is.read(reinterpret_cast<char*>(row.data()), w)) {
        fail(path, "truncated pixel data");
      }
      for (int x = 0; x < w; ++x) {
        if (row[x] > maxval) fail(path, "sample above maxval");
        out(x, y) = double(row[x]) / maxval;
      }
    }
  } else {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int v = next_pnm_token(is, path);
        if (v < 0 || v > maxval) fail(path, "sample out of range");
        out(x, y) = double(v) / maxval;
      }
    }
  }
  return out;
}

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

ScalarField load_png(const std::string& path) {
  PngReadCloser c;
  c.fp = std::fopen(path.c_str(), "rb");
  if (!c.fp) fail(path, "cannot open");
  c.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                 nullptr);
  if (!c.png) fail(path, "libpng init failed");
  c.info = png_create_info_struct(c.png);
  if (!c.info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(c.png))) fail(path, "corrupt PNG stream");
  png_init_io(c.png, c.fp);
  png_read_info(c.png, c.info);

  const png_uint_32 w = png_get_image_width(c.png, c.info);
  const png_uint_32 h = png_get_image_height(c.png, c.info);
  const int depth = png_get_bit_depth(c.png, c.info);
  const int color = png_get_color_type(c.png, c.info);
  if (color != PNG_COLOR_TYPE_GRAY || depth != 8) {
    fail(path, "unsupported PNG (need 8-bit grayscale, got color type " +
                   std::to_string(color) + ", depth " + std::to_string(depth) +
                   ")");
  }
  ScalarField out(Grid(int(w), int(h)));
  std::vector<unsigned char> row(w);
  for (png_uint_32 y = 0; y < h; ++y) {
    png_read_row(c.png, row.data(), nullptr);
    for (png_uint_32 x = 0; x < w; ++x) {
      out(int(x), int(y)) = double(row[x]) / 255.0;
    }
  }
  png_read_end(c.png, nullptr);
  return out;
}

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngWriteCloser() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

unsigned char quantize(double x) {
  const double c = std::clamp(x, 0.0, 1.0);
  return static_cast<unsigned char>(std::floor(c * 255.0 + 0.5));
}

void save_png(const ScalarField& field, const std::string& path) {
  const Grid& g = field.grid();
  PngWriteCloser c;
  c.fp = std::fopen(path.c_str(), "wb");
  if (!c.fp) fail(path, "cannot open for writing");
  c.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                  nullptr);
  if (!c.png) fail(path, "libpng init failed");
  c.info = png_create_info_struct(c.png);
  if (!c.info) fail(path, "libpng init failed");
  if (setjmp(png_jmpbuf(c.png))) fail(path, "PNG write failed");
  png_init_io(c.png, c.fp);
  png_set_IHDR(c.png, c.info, g.width, g.height, 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(c.png, c.info);
  std::vector<unsigned char> row(std::size_t(g.width));
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) row[x] = quantize(field(x, y));
    png_write_row(c.png, row.data());
  }
  png_write_end(c.png, nullptr);
}

void save_pgm(const ScalarField& field, const std::string& path) {
  const Grid& g = field.grid();
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(path, "cannot open for writing");
  os << "P5\n" << g.width << " " << g.height << "\n255\n";
  std::vector<unsigned char> row(std::size_t(g.width));
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) row[x] = quantize(field(x, y));
    os.write(reinterpret_cast<const char*>(row.data()), g.width);
  }
  if (!os) fail(path, "write failed");
}

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() &&
         std::equal(suf.rbegin(), suf.rend(), s.rbegin());
}

}  // namespace

ScalarField load_image(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(path, "cannot open");
  char magic[2] = {0, 0};
  if (!is.read(magic, 2)) fail(path, "empty file");
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
    return load_pgm(is, path, magic[1] == '5');
  }
  if (magic[0] == char(0x89) && magic[1] == 'P') {
    is.close();
    return load_png(path);
  }
  fail(path, "unrecognized format (expected PGM P2/P5 or PNG)");
}

void save_image(const ScalarField& field, const std::string& path) {
  for (double t : field.values()) {
    if (!std::isfinite(t)) fail(path, "refusing to write non-finite field");
  }
  if (has_suffix(path, ".png")) {
    save_png(field, path);
  } else {
    save_pgm(field, path);
  }
}

Mask load_mask(const std::string& path, const ScalarField& f) {
  const ScalarField indicator = load_image(path);
  if (!(indicator.grid().width == f.grid().width &&
        indicator.grid().height == f.grid().height)) {
    throw std::invalid_argument("mask '" + path +
                                "': dimensions do not match the image");
  }
  // Re-sample onto f's grid so a nonunit spacing carries over.
  ScalarField aligned(f.grid());
  aligned.values() = indicator.values();
  return Mask::from_indicator(f, aligned);
}

}  // namespace clg
