#pragma once

#include "qkchev/weyl.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace qkchev {

enum class EdgeKind : std::uint8_t { None = 0, Bruhat = 1, Quantum = 2 };

struct QbgEdge {
  Elem source = 0;
  Elem target = 0;
  int label = 0;  // positive root index
  EdgeKind kind = EdgeKind::None;
};

// A directed path given by its vertices (start included) and edge data.
struct DirectedPath {
  std::vector<Elem> vertices;
  std::vector<int> labels;
  std::vector<EdgeKind> kinds;

  DirectedPath() = default;
  explicit DirectedPath(Elem start) : vertices{start} {}

  Elem start() const { return vertices.front(); }
  Elem end() const { return vertices.back(); }
  int length() const { return static_cast<int>(labels.size()); }
  bool trivial() const { return labels.empty(); }
  int first_label() const { return labels.front(); }
  int final_label() const { return labels.back(); }
  void push(int label, EdgeKind kind, Elem to) {
    labels.push_back(label);
    kinds.push_back(kind);
    vertices.push_back(to);
  }
  void pop() {
    labels.pop_back();
    kinds.pop_back();
    vertices.pop_back();
  }
  bool operator==(const DirectedPath& o) const {
    return vertices == o.vertices && labels == o.labels && kinds == o.kinds;
  }
};

CorootVec path_qwt(const RootSystem& rs, const DirectedPath& p);

// The parabolic quantum Bruhat graph QBG(W^L) for a node set L; L = 0 is
// the full graph on W. Edges are stored densely per (vertex, root).
class QuantumBruhatGraph {
 public:
  QuantumBruhatGraph(const WeylGroup& g, NodeSet lambda);
  QuantumBruhatGraph(const QuantumBruhatGraph&) = delete;
  QuantumBruhatGraph& operator=(const QuantumBruhatGraph&) = delete;

  const WeylGroup& group() const { return g_; }
  const RootSystem& roots() const { return g_.roots(); }
  NodeSet parabolic() const { return lambda_; }
  const std::vector<Elem>& vertices() const { return verts_; }
  bool is_vertex(Elem x) const { return g_.is_min_rep(x, lambda_); }

  EdgeKind kind(Elem x, int r) const { return kinds_[slot(x, r)]; }
  Elem target(Elem x, int r) const { return targets_[slot(x, r)]; }
  std::optional<QbgEdge> edge(Elem x, int r) const;
  // Out-edges of x ordered by root index.
  std::vector<QbgEdge> out_edges(Elem x) const;
  std::size_t num_edges() const { return num_edges_; }

 private:
  std::size_t slot(Elem x, int r) const { return static_cast<std::size_t>(x) * npos_ + r; }

  const WeylGroup& g_;
  NodeSet lambda_;
  int npos_;
  std::vector<Elem> verts_;
  std::vector<EdgeKind> kinds_;
  std::vector<Elem> targets_;
  std::size_t num_edges_ = 0;
};

// Total order on the positive roots read off a reduced word of w0:
// beta_k = s_{j1} ... s_{j(k-1)} alpha_{jk}.
class ReflectionOrder {
 public:
  // Uses a reduced word of w0 whose prefix is a reduced word of the longest
  // element of W_split, so the roots of the split subsystem come first.
  // `largest_first` picks the other deterministic family of reduced words.
  ReflectionOrder(const WeylGroup& g, NodeSet split, bool largest_first = false);
  // Any reduced word of w0 (1-based letters are not used here: 0-based).
  ReflectionOrder(const WeylGroup& g, const std::vector<int>& w0_word);

  const std::vector<int>& sequence() const { return seq_; }
  const std::vector<int>& word() const { return word_; }
  int rank_of(int r) const { return rank_[r]; }
  bool before(int a, int b) const { return rank_[a] < rank_[b]; }
  // True when every root of Delta+_S precedes every other positive root.
  bool respects(const RootSystem& rs, NodeSet s) const;

 private:
  void build(const WeylGroup& g);

  std::vector<int> word_;
  std::vector<int> seq_;
  std::vector<int> rank_;
};

// Shortest paths in the full graph QBG(W) relative to one reflection order.
// Per-target tables (distance, first label of the label-increasing and
// label-decreasing paths, qwt) are computed on first use.
class ShortestPaths {
 public:
  ShortestPaths(const QuantumBruhatGraph& full, const ReflectionOrder& ord);
  ShortestPaths(const ShortestPaths&) = delete;
  ShortestPaths& operator=(const ShortestPaths&) = delete;

  const QuantumBruhatGraph& graph() const { return full_; }
  const ReflectionOrder& order() const { return ord_; }

  int distance(Elem v, Elem w) const { return table(w).dist[v]; }
  CorootVec qwt(Elem v, Elem w) const;
  // -1 when v == w.
  int first_increasing(Elem v, Elem w) const { return table(w).inc[v]; }
  int first_decreasing(Elem v, Elem w) const { return table(w).dec[v]; }
  DirectedPath increasing(Elem v, Elem w) const;
  DirectedPath decreasing(Elem v, Elem w) const;
  // The label-increasing path if all its labels pass `allowed`; otherwise
  // no label-increasing path with such labels exists.
  std::optional<DirectedPath> increasing_within(Elem v, Elem w, const std::function<bool(int)>& allowed) const;

  // Maximum of uW_L for the dual v-tilted order, found as the unique coset
  // element whose label-increasing path to v avoids Delta+_L. The order
  // must list Delta+_L first.
  Elem tbmax(Elem u, NodeSet lambda, Elem v) const;

 private:
  struct Table {
    std::vector<std::int16_t> dist;
    std::vector<std::int16_t> inc, dec;
    std::vector<std::int16_t> qwt;  // |W| x rank
  };
  const Table& table(Elem target) const;
  std::unique_ptr<Table> build(Elem target) const;

  const QuantumBruhatGraph& full_;
  const ReflectionOrder& ord_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<Table>> tables_;
};

// Degree filter for QBG_{a varpi_i}: an edge with label b is kept iff
// a <varpi_i, b^vee> is an integer, with a = num / den.
struct DegreeFilter {
  int node = 0;
  int num = 0;
  int den = 1;
  bool admits(const RootSystem& rs, int r) const {
    return (static_cast<long>(num) * rs.coroot(r)[node]) % den == 0;
  }
};

// All label-increasing paths in QBG(W) from w with labels outside
// Delta+_L (optionally also in the filtered subgraph), the trivial path
// included. Visited in depth-first order; the callback sees each path once.
void for_each_increasing_star(const QuantumBruhatGraph& full, const ReflectionOrder& ord, Elem w, NodeSet lambda,
                              const std::optional<DegreeFilter>& filter,
                              const std::function<void(const DirectedPath&)>& visit);
std::vector<DirectedPath> increasing_star(const QuantumBruhatGraph& full, const ReflectionOrder& ord, Elem w,
                                          NodeSet lambda, const std::optional<DegreeFilter>& filter = std::nullopt);

}  // namespace qkchev
