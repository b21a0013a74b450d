#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ish/harris.hpp"

namespace ish {

// Undirected weighted graph over corner points:
//   W_ij = exp(-|ci - cj|^2 / (2 r^2 d*^2))  if i != j and |ci - cj| <= 3 r d*,
//   0 otherwise,
// where d* is the diameter of the node set.
struct SaliencyGraph {
  std::vector<Point> nodes;
  Eigen::MatrixXd weights;
  double radius_param = 0;
  double diameter = 0;
};

struct GraphLaplacian {
  Eigen::MatrixXd matrix;  // degree matrix minus weights
  Eigen::VectorXd degree;  // row sums of W
};

SaliencyGraph build_graph(const CornerSet& corners, double r = 1.0 / 15.0);
SaliencyGraph build_graph(std::vector<Point> nodes, double r = 1.0 / 15.0);

// All unordered pairs within cutoff (inclusive), found through a quadtree.
// Set-equal to the brute-force scan.
std::vector<std::pair<int, int>> neighbor_pairs(const std::vector<Point>& nodes, double cutoff);

GraphLaplacian laplacian(const SaliencyGraph& g);

// Edge-list CSV dump (i,j,weight) with a node coordinate header block.
void write_graph_csv(const SaliencyGraph& g, std::ostream& out);

}  // namespace ish
