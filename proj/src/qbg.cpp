#include "qkchev/qbg.hpp"

#include "qkchev/error.hpp"

#include <algorithm>
#include <deque>

namespace qkchev {

CorootVec path_qwt(const RootSystem& rs, const DirectedPath& p) {
  CorootVec q(rs.rank());
  for (int k = 0; k < p.length(); ++k)
    if (p.kinds[k] == EdgeKind::Quantum) q += rs.coroot(p.labels[k]);
  return q;
}

QuantumBruhatGraph::QuantumBruhatGraph(const WeylGroup& g, NodeSet lambda)
    : g_(g), lambda_(lambda & all_nodes(g.rank())), npos_(g.roots().num_positive()) {
  const RootSystem& rs = g.roots();
  verts_ = g.min_reps(lambda_);
  kinds_.assign(static_cast<std::size_t>(g.size()) * npos_, EdgeKind::None);
  targets_.assign(kinds_.size(), -1);
  std::vector<int> drop(npos_);
  for (int r = 0; r < npos_; ++r) drop[r] = rs.two_rho_pairing(r, lambda_);
  for (Elem x : verts_) {
    for (int r = 0; r < npos_; ++r) {
      if (rs.in_subsystem(r, lambda_)) continue;
      Elem y = g.min_rep(g.rmul_reflection(x, r), lambda_);
      EdgeKind k = EdgeKind::None;
      if (g.length(y) == g.length(x) + 1) k = EdgeKind::Bruhat;
      else if (g.length(y) == g.length(x) + 1 - drop[r]) k = EdgeKind::Quantum;
      kinds_[slot(x, r)] = k;
      targets_[slot(x, r)] = y;
      if (k != EdgeKind::None) ++num_edges_;
    }
  }
}

std::optional<QbgEdge> QuantumBruhatGraph::edge(Elem x, int r) const {
  EdgeKind k = kind(x, r);
  if (k == EdgeKind::None) return std::nullopt;
  return QbgEdge{x, target(x, r), r, k};
}

std::vector<QbgEdge> QuantumBruhatGraph::out_edges(Elem x) const {
  std::vector<QbgEdge> out;
  for (int r = 0; r < npos_; ++r)
    if (auto e = edge(x, r)) out.push_back(*e);
  return out;
}

ReflectionOrder::ReflectionOrder(const WeylGroup& g, NodeSet split, bool largest_first) {
  split &= all_nodes(g.rank());
  Elem top = g.longest_in(split);
  // w0 = top * rest with lengths adding up.
  Elem rest = g.mul(top, g.longest());
  word_ = g.reduced_word(top, !largest_first);
  auto tail = g.reduced_word(rest, !largest_first);
  word_.insert(word_.end(), tail.begin(), tail.end());
  build(g);
  if (!respects(g.roots(), split)) fail_internal("reflection order does not list the split subsystem first");
}

ReflectionOrder::ReflectionOrder(const WeylGroup& g, const std::vector<int>& w0_word) : word_(w0_word) {
  if (static_cast<int>(word_.size()) != g.length(g.longest()) || g.from_word(word_) != g.longest())
    throw PreconditionError("not a reduced word of the longest element");
  build(g);
}

void ReflectionOrder::build(const WeylGroup& g) {
  const RootSystem& rs = g.roots();
  rank_.assign(rs.num_positive(), -1);
  for (std::size_t k = 0; k < word_.size(); ++k) {
    RootVec b = RootVec::unit(rs.rank(), word_[k]);
    for (std::size_t m = k; m-- > 0;) b = rs.reflect_simple(word_[m], b);
    int r = rs.index_of(b);
    if (rank_[r] >= 0) fail_internal("reflection order repeats a root");
    rank_[r] = static_cast<int>(seq_.size());
    seq_.push_back(r);
  }
}

bool ReflectionOrder::respects(const RootSystem& rs, NodeSet s) const {
  int last_inside = -1, first_outside = static_cast<int>(seq_.size());
  for (int r = 0; r < rs.num_positive(); ++r) {
    if (rs.in_subsystem(r, s)) last_inside = std::max(last_inside, rank_[r]);
    else first_outside = std::min(first_outside, rank_[r]);
  }
  return last_inside < first_outside;
}

ShortestPaths::ShortestPaths(const QuantumBruhatGraph& full, const ReflectionOrder& ord) : full_(full), ord_(ord) {
  if (full.parabolic() != 0) throw PreconditionError("shortest paths are taken in the full graph QBG(W)");
  tables_.resize(static_cast<std::size_t>(full.group().size()));
}

const ShortestPaths::Table& ShortestPaths::table(Elem target) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = tables_[target];
  if (!slot) slot = build(target);
  return *slot;
}

std::unique_ptr<ShortestPaths::Table> ShortestPaths::build(Elem t) const {
  const WeylGroup& g = full_.group();
  const RootSystem& rs = g.roots();
  const int n = rs.rank(), npos = rs.num_positive();
  const std::size_t size = static_cast<std::size_t>(g.size());
  auto tab = std::make_unique<Table>();
  tab->dist.assign(size, -1);
  tab->inc.assign(size, -1);
  tab->dec.assign(size, -1);
  tab->qwt.assign(size * n, 0);

  // Reverse BFS: v -> v s_r = y is an edge with label r.
  std::vector<Elem> order{t};
  tab->dist[t] = 0;
  for (std::size_t q = 0; q < order.size(); ++q) {
    Elem y = order[q];
    for (int r = 0; r < npos; ++r) {
      Elem v = g.rmul_reflection(y, r);
      if (tab->dist[v] >= 0 || full_.kind(v, r) == EdgeKind::None) continue;
      tab->dist[v] = static_cast<std::int16_t>(tab->dist[y] + 1);
      order.push_back(v);
    }
  }
  if (order.size() != size) fail_internal("quantum Bruhat graph is not strongly connected");

  // BFS order is nondecreasing in distance, so successors are done first.
  for (std::size_t q = 1; q < order.size(); ++q) {
    Elem v = order[q];
    int inc = -1, dec = -1, n_inc = 0, n_dec = 0;
    for (int r = 0; r < npos; ++r) {
      if (full_.kind(v, r) == EdgeKind::None) continue;
      Elem y = full_.target(v, r);
      if (tab->dist[y] != tab->dist[v] - 1) continue;
      if (y == t || ord_.rank_of(tab->inc[y]) > ord_.rank_of(r)) {
        inc = r;
        ++n_inc;
      }
      if (y == t || ord_.rank_of(tab->dec[y]) < ord_.rank_of(r)) {
        dec = r;
        ++n_dec;
      }
    }
    if (n_inc != 1 || n_dec != 1)
      fail_internal("label-monotone shortest path is not unique (" + std::to_string(n_inc) + ", " +
                    std::to_string(n_dec) + " candidates)");
    tab->inc[v] = static_cast<std::int16_t>(inc);
    tab->dec[v] = static_cast<std::int16_t>(dec);
    Elem y = full_.target(v, inc);
    for (int j = 0; j < n; ++j) {
      int c = tab->qwt[static_cast<std::size_t>(y) * n + j];
      if (full_.kind(v, inc) == EdgeKind::Quantum) c += rs.coroot(inc)[j];
      tab->qwt[static_cast<std::size_t>(v) * n + j] = static_cast<std::int16_t>(c);
    }
  }
  return tab;
}

CorootVec ShortestPaths::qwt(Elem v, Elem w) const {
  const Table& tab = table(w);
  const int n = full_.roots().rank();
  CorootVec q(n);
  for (int j = 0; j < n; ++j) q[j] = tab.qwt[static_cast<std::size_t>(v) * n + j];
  return q;
}

DirectedPath ShortestPaths::increasing(Elem v, Elem w) const {
  const Table& tab = table(w);
  DirectedPath p(v);
  while (p.end() != w) {
    int r = tab.inc[p.end()];
    p.push(r, full_.kind(p.end(), r), full_.target(p.end(), r));
  }
  return p;
}

DirectedPath ShortestPaths::decreasing(Elem v, Elem w) const {
  const Table& tab = table(w);
  DirectedPath p(v);
  while (p.end() != w) {
    int r = tab.dec[p.end()];
    p.push(r, full_.kind(p.end(), r), full_.target(p.end(), r));
  }
  return p;
}

std::optional<DirectedPath> ShortestPaths::increasing_within(Elem v, Elem w,
                                                             const std::function<bool(int)>& allowed) const {
  DirectedPath p = increasing(v, w);
  for (int r : p.labels)
    if (!allowed(r)) return std::nullopt;
  return p;
}

Elem ShortestPaths::tbmax(Elem u, NodeSet lambda, Elem v) const {
  const WeylGroup& g = full_.group();
  const RootSystem& rs = g.roots();
  if (!ord_.respects(rs, lambda)) throw PreconditionError("tbmax: reflection order does not list Delta+_L first");
  const Table& tab = table(v);
  Elem base = g.min_rep(u, lambda);
  Elem found = -1;
  int hits = 0;
  for (Elem z : g.subgroup(lambda)) {
    Elem c = g.mul(base, z);
    // Labels of an increasing path avoid Delta+_L iff its first one does.
    if (c == v || !rs.in_subsystem(tab.inc[c], lambda)) {
      found = c;
      ++hits;
    }
  }
  if (hits != 1) fail_internal("tbmax: " + std::to_string(hits) + " coset elements qualify");
  return found;
}

void for_each_increasing_star(const QuantumBruhatGraph& full, const ReflectionOrder& ord, Elem w, NodeSet lambda,
                              const std::optional<DegreeFilter>& filter,
                              const std::function<void(const DirectedPath&)>& visit) {
  const RootSystem& rs = full.roots();
  const auto& seq = ord.sequence();
  DirectedPath path(w);
  // Recurse over positions in the order rather than root indices so the
  // increasing condition is a simple bound.
  std::function<void(int)> grow = [&](int from) {
    visit(path);
    for (int pos = from; pos < static_cast<int>(seq.size()); ++pos) {
      int r = seq[pos];
      if (rs.in_subsystem(r, lambda)) continue;
      if (filter && !filter->admits(rs, r)) continue;
      EdgeKind k = full.kind(path.end(), r);
      if (k == EdgeKind::None) continue;
      path.push(r, k, full.target(path.end(), r));
      grow(pos + 1);
      path.pop();
    }
  };
  grow(0);
}

std::vector<DirectedPath> increasing_star(const QuantumBruhatGraph& full, const ReflectionOrder& ord, Elem w,
                                          NodeSet lambda, const std::optional<DegreeFilter>& filter) {
  std::vector<DirectedPath> out;
  for_each_increasing_star(full, ord, w, lambda, filter, [&](const DirectedPath& p) { out.push_back(p); });
  return out;
}

}  // namespace qkchev
