#pragma once

#include "qkchev/qbg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace qkchev {

// Least N with N / <varpi_i, a^vee> integral for every positive root a with
// nonzero pairing.
int compute_N(const RootSystem& rs, int i);

// eta = (v_1, ..., v_s ; a_0, ..., a_s) of shape varpi_i, v_k in W^J.
struct QlsPath {
  int node = 0;
  std::vector<Elem> vertices;
  std::vector<Rational> breaks;

  int size() const { return static_cast<int>(vertices.size()); }
  bool operator==(const QlsPath& o) const {
    return node == o.node && vertices == o.vertices && breaks == o.breaks;
  }
  bool operator<(const QlsPath& o) const;
};

// Collapse equal neighbours of an N-step sequence (w_1, ..., w_N) into
// breakpoint form with breakpoints k/N in lowest terms.
QlsPath collapse_steps(int node, const std::vector<Elem>& steps);
// Inverse of collapse_steps; throws if some breakpoint is not in (1/N)Z.
std::vector<Elem> expand_steps(const QlsPath& eta, int n_steps);

// A tuple (p_N, ..., p_1) from bQLS(w). parts[k - 1] holds p_k.
struct BPathTuple {
  Elem start = 0;
  std::vector<DirectedPath> parts;

  const DirectedPath& part(int k) const { return parts[k - 1]; }
  DirectedPath& part(int k) { return parts[k - 1]; }
  Elem end() const { return parts.front().end(); }
  bool operator==(const BPathTuple& o) const { return start == o.start && parts == o.parts; }
};

struct BPathStats {
  int length = 0;
  Elem end = 0;
  CorootVec qwt;
  CorootVec qwt2;  // qwt minus the contribution of p_1
};

// Everything that depends on (type, i): J = I \ {i}, N, a reflection order
// listing Delta+_J first, the shortest-path tables, QBG(W^J) and cached
// reachability in its subgraphs QBG_{(k/N) varpi_i}(W^J).
class ShapeContext {
 public:
  // n_steps = 0 picks compute_N(i). `alt_order` builds the reflection order
  // from the other family of reduced words (see ReflectionOrder).
  ShapeContext(const QuantumBruhatGraph& full, int i, int n_steps = 0, bool alt_order = false);
  ShapeContext(const ShapeContext&) = delete;
  ShapeContext& operator=(const ShapeContext&) = delete;

  const WeylGroup& group() const { return full_.group(); }
  const RootSystem& roots() const { return full_.roots(); }
  const QuantumBruhatGraph& full() const { return full_; }
  const QuantumBruhatGraph& quotient() const { return quotient_; }
  const ReflectionOrder& order() const { return order_; }
  const ShortestPaths& paths() const { return paths_; }
  int node() const { return i_; }
  NodeSet J() const { return j_; }
  int N() const { return n_; }
  // <varpi_i, theta^vee> = 1.
  bool minuscule_like() const;

  Elem project(Elem w) const { return group().min_rep(w, j_); }
  // Edges of QBG(W^J) with label b kept in QBG_{a varpi_i}: a <varpi_i, b^vee> in Z.
  bool admits(const Rational& a, int r) const;
  DegreeFilter filter_for_step(int k) const { return DegreeFilter{i_, k - 1, n_}; }

  // Directed path from x to y in QBG_{a varpi_i}(W^J); trivial paths count.
  // With bruhat_only, only Bruhat edges may be used.
  bool connected(Elem x, Elem y, const Rational& a, bool bruhat_only = false) const;

 private:
  struct Reach {
    std::vector<char> m;  // m[ix * nv + iy]
  };
  const Reach& reach(const Rational& a, bool bruhat_only) const;

  const QuantumBruhatGraph& full_;
  int i_;
  NodeSet j_;
  int n_;
  QuantumBruhatGraph quotient_;
  ReflectionOrder order_;
  ShortestPaths paths_;
  std::vector<int> vindex_;  // W -> position in quotient_.vertices(), or -1

  mutable std::mutex mu_;
  // Keyed by the admitted-label mask, which is all that a affects.
  mutable std::map<std::pair<std::vector<bool>, bool>, std::unique_ptr<Reach>> reach_;
};

// All of QLS(varpi_i), sorted, each exactly once.
std::vector<QlsPath> enumerate_qls(const ShapeContext& ctx);
// Validates the definition directly in breakpoint form.
bool is_qls(const ShapeContext& ctx, const QlsPath& eta);
// Every connecting path can be chosen with Bruhat edges only.
bool is_ls(const ShapeContext& ctx, const QlsPath& eta);

Weight qls_weight(const ShapeContext& ctx, const QlsPath& eta);
// (kappa(eta, v), zeta(eta, v)).
std::pair<Elem, CorootVec> kappa_zeta(const ShapeContext& ctx, const QlsPath& eta, Elem v);
inline Elem kappa(const ShapeContext& ctx, const QlsPath& eta, Elem v) { return kappa_zeta(ctx, eta, v).first; }

// bQLS(w) visited in depth-first order; the tuple passed to the callback is
// only valid during the call.
void for_each_bqls(const ShapeContext& ctx, Elem w, const std::function<void(const BPathTuple&)>& visit);
std::vector<BPathTuple> enumerate_bqls(const ShapeContext& ctx, Elem w);
// Membership in bQLS(w) checked part by part against the definition.
bool is_bqls(const ShapeContext& ctx, Elem w, const BPathTuple& p);

// (eta_p, ed(p_1)).
std::pair<QlsPath, Elem> bpath_to_qls(const ShapeContext& ctx, const BPathTuple& p);
BPathStats bpath_stats(const RootSystem& rs, const BPathTuple& p);

}  // namespace qkchev
