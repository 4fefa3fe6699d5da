#include <algorithm>
#include <random>

#include "doctest.h"
#include "gest/cluster.hpp"
#include "oracle_components.hpp"
#include "test_support.hpp"

using namespace gest;

namespace {

std::vector<PixelCoord> sorted_pixels(const Cluster& c) {
  std::vector<PixelCoord> out = c.pixels;
  std::sort(out.begin(), out.end(), [](PixelCoord a, PixelCoord b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

void check_against_oracle(const BinaryFrame& frame, Connectivity conn) {
  const ClusterSet set = extract_clusters(frame, conn);
  const auto expected = oracle::components(frame, conn);
  REQUIRE(set.clusters.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Cluster& c = set.clusters[i];
    CHECK(c.id == static_cast<int>(i));
    CHECK(c.pixel_count == static_cast<std::int64_t>(expected[i].size()));
    CHECK(sorted_pixels(c) == expected[i]);

    int min_col = expected[i][0].col, max_col = expected[i][0].col;
    int min_row = expected[i][0].row, max_row = expected[i][0].row;
    double sum_col = 0, sum_row = 0;
    for (const PixelCoord& p : expected[i]) {
      min_col = std::min(min_col, p.col);
      max_col = std::max(max_col, p.col);
      min_row = std::min(min_row, p.row);
      max_row = std::max(max_row, p.row);
      sum_col += p.col;
      sum_row += p.row;
    }
    CHECK(c.bbox == ClusterBBox{min_col, min_row, max_col, max_row});
    CHECK(c.centroid_col ==
          doctest::Approx(sum_col / expected[i].size()).epsilon(1e-12));
    CHECK(c.centroid_row ==
          doctest::Approx(sum_row / expected[i].size()).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("an all-black frame has no clusters") {
  const BinaryFrame frame(5, 4);
  const ClusterSet set = extract_clusters(frame, Connectivity::four);
  CHECK(cluster_count(set) == 0);
  CHECK_THROWS_AS(top_left_cluster(set), error);
}

TEST_CASE("a lone pixel forms a singleton cluster") {
  const BinaryFrame frame = testsupport::frame_from(4, 4, {{2, 1}});
  const ClusterSet set = extract_clusters(frame, Connectivity::four);
  REQUIRE(cluster_count(set) == 1);
  const Cluster& c = set.clusters[0];
  CHECK(c.pixel_count == 1);
  CHECK(centroid(c) == std::pair{2.0, 1.0});
  CHECK(c.bbox == ClusterBBox{2, 1, 2, 1});
}

TEST_CASE("diagonal neighbors split under four-connectivity only") {
  const BinaryFrame frame = testsupport::frame_from(4, 4, {{0, 0}, {1, 1}});
  CHECK(cluster_count(extract_clusters(frame, Connectivity::four)) == 2);

  const ClusterSet eight = extract_clusters(frame, Connectivity::eight);
  REQUIRE(cluster_count(eight) == 1);
  CHECK(eight.clusters[0].pixel_count == 2);
}

TEST_CASE("two blocks split by a black column form two clusters") {
  // columns 0-1 and 3-4 white on rows 1-2
  const BinaryFrame frame = testsupport::frame_from(
      5, 4, {{0, 1}, {1, 1}, {0, 2}, {1, 2}, {3, 1}, {4, 1}, {3, 2}, {4, 2}});
  for (Connectivity conn : {Connectivity::four, Connectivity::eight}) {
    const ClusterSet set = extract_clusters(frame, conn);
    REQUIRE(cluster_count(set) == 2);
    CHECK(set.clusters[0].pixel_count == 4);
    CHECK(set.clusters[1].pixel_count == 4);
    check_against_oracle(frame, conn);
  }
}

TEST_CASE("isolated pixels each count once") {
  BinaryFrame frame(20, 20);
  for (int i = 0; i < 10; ++i) frame.set_bit(2 * i, 2 * i, true);
  CHECK(cluster_count(extract_clusters(frame, Connectivity::four)) == 10);
}

TEST_CASE("clusters come out in row-major discovery order") {
  // first touched at (row 1, col 5) and (row 0, col 9)
  const BinaryFrame frame =
      testsupport::frame_from(12, 4, {{5, 1}, {5, 2}, {9, 0}});
  const ClusterSet set = extract_clusters(frame, Connectivity::four);
  REQUIRE(cluster_count(set) == 2);
  CHECK(top_left_cluster(set).pixels[0] == PixelCoord{9, 0});
}

TEST_CASE("partition matches the union-find oracle on random frames") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 120; ++i) {
    const int w = 1 + static_cast<int>(rng() % 48);
    const int h = 1 + static_cast<int>(rng() % 48);
    const BinaryFrame frame =
        testsupport::random_binary(rng, w, h, density(rng));
    check_against_oracle(frame, Connectivity::four);
    check_against_oracle(frame, Connectivity::eight);
  }
}

TEST_CASE("extraction is deterministic") {
  std::mt19937 rng(9);
  const BinaryFrame frame = testsupport::random_binary(rng, 33, 21, 0.4);
  const ClusterSet a = extract_clusters(frame, Connectivity::four);
  const ClusterSet b = extract_clusters(frame, Connectivity::four);
  CHECK(a == b);
}

TEST_CASE("translation shifts centroids and boxes, preserves counts") {
  std::mt19937 rng(77);
  for (int i = 0; i < 20; ++i) {
    const int w = 24, h = 24;
    const BinaryFrame base = testsupport::random_binary(rng, 12, 12, 0.35);
    const int dc = static_cast<int>(rng() % 8);
    const int dr = static_cast<int>(rng() % 8);

    BinaryFrame placed(w, h);
    BinaryFrame shifted(w, h);
    for (int row = 0; row < 12; ++row)
      for (int col = 0; col < 12; ++col)
        if (base.bit(col, row)) {
          placed.set_bit(col, row, true);
          shifted.set_bit(col + dc, row + dr, true);
        }

    const ClusterSet a = extract_clusters(placed, Connectivity::four);
    const ClusterSet b = extract_clusters(shifted, Connectivity::four);
    REQUIRE(a.clusters.size() == b.clusters.size());
    for (std::size_t k = 0; k < a.clusters.size(); ++k) {
      CHECK(a.clusters[k].pixel_count == b.clusters[k].pixel_count);
      CHECK(a.clusters[k].bbox.min_col + dc == b.clusters[k].bbox.min_col);
      CHECK(a.clusters[k].bbox.max_row + dr == b.clusters[k].bbox.max_row);
      CHECK(a.clusters[k].centroid_col + dc ==
            doctest::Approx(b.clusters[k].centroid_col).epsilon(1e-9));
      CHECK(a.clusters[k].centroid_row + dr ==
            doctest::Approx(b.clusters[k].centroid_row).epsilon(1e-9));
    }
  }
}

TEST_CASE("a full 1024x1024 frame labels without recursion") {
  BinaryFrame frame(1024, 1024);
  for (int row = 0; row < 1024; ++row)
    for (int col = 0; col < 1024; ++col) frame.set_bit(col, row, true);
  const ClusterSet set = extract_clusters(frame, Connectivity::four);
  REQUIRE(cluster_count(set) == 1);
  CHECK(set.clusters[0].pixel_count == std::int64_t{1024} * 1024);
  CHECK(set.clusters[0].centroid_col == 511.5);
  CHECK(set.clusters[0].centroid_row == 511.5);
  CHECK(set.clusters[0].bbox == ClusterBBox{0, 0, 1023, 1023});
}

TEST_CASE("the pixel cap trims lists but not the statistics") {
  const BinaryFrame frame = testsupport::frame_from(
      6, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
  const ClusterSet set = extract_clusters(frame, Connectivity::four, 2);
  REQUIRE(cluster_count(set) == 1);
  CHECK(set.clusters[0].pixels.size() == 2);
  CHECK(set.clusters[0].pixel_count == 6);
  CHECK(set.clusters[0].centroid_col == 2.5);
  CHECK(set.clusters[0].bbox == ClusterBBox{0, 0, 5, 0});
}
