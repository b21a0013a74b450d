#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace ish {

// Row-major real matrix; backing store for images and per-pixel maps.
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  Raster() = default;
  Raster(int w, int h, double fill = 0.0)
      : width(w), height(h), v(static_cast<size_t>(w) * static_cast<size_t>(h), fill) {}

  double& at(int x, int y) { return v[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return v[static_cast<size_t>(y) * width + x]; }
  bool same_size(const Raster& o) const { return width == o.width && height == o.height; }
};

// Grayscale image, intensities in [0, 1].
struct GrayImage : Raster {
  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0) : Raster(w, h, fill) {}
  explicit GrayImage(Raster r) : Raster(std::move(r)) {}
};

// Per-pixel x/y derivatives.
struct GradientField {
  Raster gx;
  Raster gy;
};

// Decode a binary PGM (P5) or PNG (8/16-bit gray or RGB) file.
// RGB collapses to luminance with weights (0.299, 0.587, 0.114); all values
// rescale to [0, 1] regardless of source bit depth.
GrayImage load_image(const std::filesystem::path& path);

// Debug dump as 8-bit binary PGM.
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

// Normalized 1-D Gaussian taps, truncated at radius ceil(4*sigma).
std::vector<double> gaussian_kernel(double sigma);

// Separable Gaussian blur with symmetric boundary reflection.
Raster gaussian_smooth(const Raster& img, double sigma);
GrayImage gaussian_smooth(const GrayImage& img, double sigma);

// Central differences inside, one-sided on the borders. Needs >= 3x3.
GradientField gradient(const Raster& img);

// Quarter-turn; exact pixel permutation.
GrayImage rotate90(const GrayImage& img);

}  // namespace ish
