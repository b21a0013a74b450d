#pragma once

#include <vector>

#include "ish/image.hpp"

namespace ish {

struct Point {
  double x = 0;
  double y = 0;
};

// Gaussian-windowed gradient outer products: [jxx jxy; jxy jyy] per pixel.
struct TensorField {
  Raster jxx;
  Raster jxy;
  Raster jyy;
  double sigma = 0;  // gradient pre-smoothing scale
  double tau = 0;    // window scale, fixed to 3*sigma
};

// Detected salient points, strongest cornerness first.
struct CornerSet {
  std::vector<Point> points;
  std::vector<double> cornerness_values;
  double sigma_star = 0;
  double diameter = 0;
};

TensorField structure_tensor(const GrayImage& img, double sigma);

// det(J) - kappa * tr(J)^2 per pixel.
Raster cornerness(const TensorField& field, double kappa = 0.04);

// Pixels with positive cornerness strictly above every in-bounds neighbor,
// strongest max_count kept. Ties at the cut break by (y, x) ascending.
CornerSet local_maxima(const Raster& c, int max_count);

// Two-round detection: scout at sigma0, then re-detect at the object-dependent
// scale sigma* = max(rho * diam(scout corners), sigma0).
CornerSet detect_adaptive(const GrayImage& img, double sigma0 = 2.0, double rho = 0.025,
                          int max_count = 100, double kappa = 0.04);

// Max pairwise Euclidean distance; 0 for fewer than two points.
double diameter(const std::vector<Point>& points);

}  // namespace ish
