#include "gest/cluster.hpp"

#include <array>

namespace gest {

namespace {

struct NeighborTable {
  std::array<int, 8> dc;
  std::array<int, 8> dr;
  int count;
};

constexpr NeighborTable kFour{{-1, 1, 0, 0, 0, 0, 0, 0},
                              {0, 0, -1, 1, 0, 0, 0, 0},
                              4};
constexpr NeighborTable kEight{{-1, 1, 0, 0, -1, 1, -1, 1},
                               {0, 0, -1, 1, -1, -1, 1, 1},
                               8};

}  // namespace

ClusterSet extract_clusters(const BinaryFrame& frame, Connectivity conn,
                            std::size_t pixel_cap) {
  ClusterSet out;
  out.source_width = frame.width();
  out.source_height = frame.height();
  const int w = frame.width();
  const int h = frame.height();
  if (w == 0 || h == 0) return out;

  const NeighborTable& nb =
      conn == Connectivity::four ? kFour : kEight;
  const std::size_t stride = frame.row_stride();
  const std::uint8_t* bytes = frame.bytes().data();

  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::int32_t> stack;

  for (int row = 0; row < h; ++row) {
    const std::uint8_t* row_bytes = bytes + static_cast<std::size_t>(row) * stride;
    for (int col = 0; col < w;) {
      // whole black bytes are skipped in one step
      if ((col & 7) == 0 && row_bytes[col >> 3] == 0) {
        col += 8;
        continue;
      }
      const std::size_t seed = static_cast<std::size_t>(row) * w + col;
      if (!frame.bit(col, row) || visited[seed]) {
        ++col;
        continue;
      }

      Cluster cluster;
      cluster.id = static_cast<int>(out.clusters.size());
      cluster.bbox = {col, row, col, row};
      std::int64_t sum_col = 0;
      std::int64_t sum_row = 0;

      visited[seed] = 1;
      stack.clear();
      stack.push_back(static_cast<std::int32_t>(seed));
      while (!stack.empty()) {
        const std::int32_t idx = stack.back();
        stack.pop_back();
        const int pc = idx % w;
        const int pr = idx / w;

        ++cluster.pixel_count;
        sum_col += pc;
        sum_row += pr;
        if (pc < cluster.bbox.min_col) cluster.bbox.min_col = pc;
        if (pc > cluster.bbox.max_col) cluster.bbox.max_col = pc;
        if (pr < cluster.bbox.min_row) cluster.bbox.min_row = pr;
        if (pr > cluster.bbox.max_row) cluster.bbox.max_row = pr;
        if (cluster.pixels.size() < pixel_cap)
          cluster.pixels.push_back({pc, pr});

        for (int n = 0; n < nb.count; ++n) {
          const int nc = pc + nb.dc[n];
          const int nr = pr + nb.dr[n];
          if (nc < 0 || nc >= w || nr < 0 || nr >= h) continue;
          const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
          if (visited[nidx] || !frame.bit(nc, nr)) continue;
          visited[nidx] = 1;
          stack.push_back(static_cast<std::int32_t>(nidx));
        }
      }

      cluster.centroid_col =
          static_cast<double>(sum_col) / static_cast<double>(cluster.pixel_count);
      cluster.centroid_row =
          static_cast<double>(sum_row) / static_cast<double>(cluster.pixel_count);
      out.clusters.push_back(std::move(cluster));
      ++col;
    }
  }
  return out;
}

std::size_t cluster_count(const ClusterSet& set) { return set.clusters.size(); }

std::pair<double, double> centroid(const Cluster& cluster) {
  return {cluster.centroid_col, cluster.centroid_row};
}

const Cluster& top_left_cluster(const ClusterSet& set) {
  if (set.clusters.empty())
    throw error("top_left_cluster: no clusters to track");
  return set.clusters.front();
}

}  // namespace gest
