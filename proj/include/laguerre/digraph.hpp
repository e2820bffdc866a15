#pragma once

// The two-row bipartite digraph of a (partial) permutation. Top vertices are
// 1..cols, bottom vertices 1'..cols'; an edge j -> k' records sigma(j) = k.
// Vertices without their edge are vacant. Columns are appended left to right
// while a history is read, so the graph after column i is the restriction g_i.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "laguerre/permutation.hpp"

namespace laguerre {

struct ChainResult {
  int terminal = 0;     // last vertex reached; vacant whenever !closed
  bool closed = false;  // the chain came back to its starting column

  friend bool operator==(const ChainResult&, const ChainResult&) = default;
};

class PartialBipartiteGraph {
public:
  int columns() const { return static_cast<int>(top_out_.size()); }

  /// Appends column (cols+1) with both new vertices vacant.
  void add_column() {
    top_out_.push_back(kNone);
    bottom_in_.push_back(kNone);
  }

  bool has_out(int top) const { return top_out_[index(top)] != kNone; }
  bool has_in(int bottom) const { return bottom_in_[index(bottom)] != kNone; }
  /// Bottom endpoint of the edge leaving top vertex j, 0 if vacant.
  int out_of(int top) const { return top_out_[index(top)]; }
  /// Top endpoint of the edge entering bottom vertex k', 0 if vacant.
  int in_of(int bottom) const { return bottom_in_[index(bottom)]; }

  int vacant_top_count() const { return count_vacant(top_out_); }
  int vacant_bottom_count() const { return count_vacant(bottom_in_); }

  /// k-th vacant top vertex from the left (1-based k).
  int kth_vacant_top(int k) const { return kth_vacant(top_out_, k, "top"); }
  int kth_vacant_bottom(int k) const { return kth_vacant(bottom_in_, k, "bottom"); }

  /// Rank of a vacant vertex among the vacant vertices of its row.
  int vacancy_index_top(int top) const { return vacancy_index(top_out_, top, "top"); }
  int vacancy_index_bottom(int bottom) const { return vacancy_index(bottom_in_, bottom, "bottom"); }

  /// Records top -> bottom'. Both endpoints must exist and still be vacant.
  void add_edge(int top, int bottom) {
    check_vertex(top, "top");
    check_vertex(bottom, "bottom");
    if (has_out(top)) throw std::logic_error("top vertex " + std::to_string(top) + " already has an edge");
    if (has_in(bottom)) throw std::logic_error("bottom vertex " + std::to_string(bottom) + "' already has an edge");
    top_out_[index(top)] = bottom;
    bottom_in_[index(bottom)] = top;
  }

  /// Walks backwards from bottom vertex start': to the top vertex v with
  /// v -> start', then to v', and so on. Stops at the first bottom vertex
  /// without an incoming edge (open), or when the walk reaches the starting
  /// column again (closed).
  ChainResult follow_chain_from_bottom(int start) const {
    check_vertex(start, "bottom");
    int current = start;
    while (true) {
      const int top = in_of(current);
      if (top == kNone) return {current, false};
      if (top == start) return {top, true};
      current = top;
    }
  }

  /// Mirror of follow_chain_from_bottom: from top vertex start along
  /// start -> v', then v -> ..., ending at a top vertex without an outgoing
  /// edge (open) or back at column start (closed).
  ChainResult follow_chain_from_top(int start) const {
    check_vertex(start, "top");
    int current = start;
    while (true) {
      const int bottom = out_of(current);
      if (bottom == kNone) return {current, false};
      if (bottom == start) return {bottom, true};
      current = bottom;
    }
  }

  bool complete() const { return vacant_top_count() == 0; }

  /// The permutation of a complete graph; throws std::logic_error otherwise.
  Permutation to_permutation() const {
    if (!complete()) {
      throw std::logic_error("graph has " + std::to_string(vacant_top_count()) + " vacant top vertices");
    }
    return Permutation(top_out_);
  }

  friend bool operator==(const PartialBipartiteGraph&, const PartialBipartiteGraph&) = default;

private:
  static constexpr int kNone = 0;

  static std::size_t index(int v) { return static_cast<std::size_t>(v - 1); }

  void check_vertex(int v, const char* row) const {
    if (v < 1 || v > columns()) {
      throw std::out_of_range(std::string(row) + " vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(columns()));
    }
  }

  static int count_vacant(const std::vector<int>& row) {
    int c = 0;
    for (int e : row) c += (e == kNone);
    return c;
  }

  static int kth_vacant(const std::vector<int>& row, int k, const char* name) {
    if (k >= 1) {
      int seen = 0;
      for (std::size_t v = 0; v < row.size(); ++v) {
        if (row[v] == kNone && ++seen == k) return static_cast<int>(v + 1);
      }
    }
    throw std::out_of_range(std::string("no vacant ") + name + " vertex of rank " + std::to_string(k) + " (" +
                            std::to_string(count_vacant(row)) + " vacant)");
  }

  int vacancy_index(const std::vector<int>& row, int v, const char* name) const {
    check_vertex(v, name);
    if (row[index(v)] != kNone) {
      throw std::invalid_argument(std::string(name) + " vertex " + std::to_string(v) + " is not vacant");
    }
    int rank = 1;
    for (std::size_t u = 0; u < index(v); ++u) rank += (row[u] == kNone);
    return rank;
  }

  std::vector<int> top_out_;
  std::vector<int> bottom_in_;
};

}  // namespace laguerre
