#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace queens {

// Board square. 1-based: row i counted from the top, column j from the left.
struct BoardCoord {
  int i = 1;
  int j = 1;

  friend bool operator==(const BoardCoord&, const BoardCoord&) = default;
};

inline bool coord_valid(BoardCoord c, int n) {
  return c.i >= 1 && c.i <= n && c.j >= 1 && c.j <= n;
}

// Row-major flat index in [0, n^2). Bijective with BoardCoord for fixed n.
inline int vertex_index(BoardCoord c, int n) {
  if (n < 1 || !coord_valid(c, n))
    throw std::invalid_argument("vertex_index: coordinate (" + std::to_string(c.i) + "," +
                                std::to_string(c.j) + ") out of range for n=" + std::to_string(n));
  return (c.i - 1) * n + (c.j - 1);
}

inline BoardCoord coord_of(int index, int n) {
  if (n < 1 || index < 0 || index >= n * n)
    throw std::invalid_argument("coord_of: index out of range");
  return {index / n + 1, index % n + 1};
}

// Two distinct squares are adjacent iff they share a row, a column, a
// diagonal (constant i-j) or an antidiagonal (constant i+j).
inline bool coords_adjacent(BoardCoord u, BoardCoord v) {
  if (u == v) return false;
  return u.i == v.i || u.j == v.j || u.i - u.j == v.i - v.j || u.i + u.j == v.i + v.j;
}

// The queens graph on an n x n board. Immutable after construction; adjacency
// is kept as sorted neighbor lists (dense rows are materialized on demand by
// the exact linear algebra layer).
class QueensGraph {
 public:
  explicit QueensGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("QueensGraph: n must be >= 1");
    adj_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        auto& nbrs = adj_[static_cast<std::size_t>(vertex_index({i, j}, n))];
        nbrs.reserve(static_cast<std::size_t>(4 * (n - 1)));
        for (int t = 1; t <= n; ++t) {
          if (t != j) nbrs.push_back(vertex_index({i, t}, n));  // row
          if (t != i) nbrs.push_back(vertex_index({t, j}, n));  // column
        }
        for (int d = -(n - 1); d <= n - 1; ++d) {
          if (d == 0) continue;
          if (coord_valid({i + d, j + d}, n)) nbrs.push_back(vertex_index({i + d, j + d}, n));
          if (coord_valid({i + d, j - d}, n)) nbrs.push_back(vertex_index({i + d, j - d}, n));
        }
        std::sort(nbrs.begin(), nbrs.end());
      }
    }
  }

  int n() const { return n_; }
  int vertex_count() const { return n_ * n_; }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const int> neighbors(BoardCoord c) const { return neighbors(vertex_index(c, n_)); }

  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int degree(BoardCoord c) const { return degree(vertex_index(c, n_)); }

  long long edge_count() const {
    long long sum = 0;
    for (const auto& nbrs : adj_) sum += static_cast<long long>(nbrs.size());
    return sum / 2;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
};

inline QueensGraph build_graph(int n) { return QueensGraph(n); }

}  // namespace queens
