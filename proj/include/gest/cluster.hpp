#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gest/frame.hpp"

namespace gest {

enum class Connectivity { four, eight };

struct ClusterBBox {
  int min_col = 0;
  int min_row = 0;
  int max_col = 0;
  int max_row = 0;

  friend bool operator==(const ClusterBBox&, const ClusterBBox&) = default;
};

// A maximal set of white pixels connected under the chosen adjacency.
struct Cluster {
  int id = 0;  // discovery order in the row-major scan
  std::int64_t pixel_count = 0;
  std::vector<PixelCoord> pixels;  // pixels[0] is the seed; capped, see below
  ClusterBBox bbox{};
  double centroid_col = 0;
  double centroid_row = 0;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct ClusterSet {
  std::vector<Cluster> clusters;  // ordered by first-discovered scan index
  int source_width = 0;
  int source_height = 0;

  friend bool operator==(const ClusterSet&, const ClusterSet&) = default;
};

// Per-cluster pixel lists stop growing past this many entries; count,
// bounding box and centroid stay exact regardless.
inline constexpr std::size_t default_pixel_cap = std::size_t{1} << 20;

// Stack-based seed fill over a visited record; the input frame is never
// mutated and recursion is never used.
ClusterSet extract_clusters(const BinaryFrame& frame, Connectivity conn,
                            std::size_t pixel_cap = default_pixel_cap);

std::size_t cluster_count(const ClusterSet& set);

// Arithmetic mean of the member coordinates, as (col, row).
std::pair<double, double> centroid(const Cluster& cluster);

// The cluster whose first pixel appears earliest in row-major scan order.
// Throws gest::error on an empty set.
const Cluster& top_left_cluster(const ClusterSet& set);

}  // namespace gest
