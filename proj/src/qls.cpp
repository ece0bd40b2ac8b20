#include "qkchev/qls.hpp"

#include "qkchev/error.hpp"

#include <algorithm>
#include <numeric>

namespace qkchev {

int compute_N(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw PreconditionError("node out of range");
  int n = 1;
  for (int r = 0; r < rs.num_positive(); ++r) {
    int c = rs.coroot(r)[i];
    if (c != 0) n = std::lcm(n, c);
  }
  return n;
}

bool QlsPath::operator<(const QlsPath& o) const {
  if (node != o.node) return node < o.node;
  if (vertices != o.vertices) return vertices < o.vertices;
  return std::lexicographical_compare(breaks.begin(), breaks.end(), o.breaks.begin(), o.breaks.end());
}

QlsPath collapse_steps(int node, const std::vector<Elem>& steps) {
  if (steps.empty()) throw PreconditionError("empty step sequence");
  const long long n = static_cast<long long>(steps.size());
  QlsPath eta;
  eta.node = node;
  eta.breaks.push_back(Rational(0));
  for (long long k = 0; k < n; ++k) {
    if (k > 0 && steps[k] == steps[k - 1]) continue;
    if (k > 0) eta.breaks.push_back(Rational(k, n));
    eta.vertices.push_back(steps[k]);
  }
  eta.breaks.push_back(Rational(1));
  return eta;
}

std::vector<Elem> expand_steps(const QlsPath& eta, int n_steps) {
  std::vector<Elem> out;
  for (int k = 0; k < eta.size(); ++k) {
    Rational len = (eta.breaks[k + 1] - eta.breaks[k]) * Rational(n_steps);
    if (len.denominator() != 1) throw PreconditionError("breakpoint not in (1/N)Z");
    out.insert(out.end(), static_cast<std::size_t>(len.numerator()), eta.vertices[k]);
  }
  return out;
}

ShapeContext::ShapeContext(const QuantumBruhatGraph& full, int i, int n_steps, bool alt_order)
    : full_(full),
      i_(i),
      j_(complement(singleton(i), full.roots().rank())),
      n_(n_steps > 0 ? n_steps : compute_N(full.roots(), i)),
      quotient_(full.group(), j_),
      order_(full.group(), j_, alt_order),
      paths_(full, order_) {
  if (n_ % compute_N(roots(), i) != 0) throw PreconditionError("N must be a multiple of N_i");
  vindex_.assign(static_cast<std::size_t>(group().size()), -1);
  const auto& vs = quotient_.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k) vindex_[vs[k]] = static_cast<int>(k);
}

bool ShapeContext::minuscule_like() const { return roots().theta_coroot()[i_] == 1; }

bool ShapeContext::admits(const Rational& a, int r) const {
  long long c = a.numerator() * roots().coroot(r)[i_];
  return c % a.denominator() == 0;
}

const ShapeContext::Reach& ShapeContext::reach(const Rational& a, bool bruhat_only) const {
  const RootSystem& rs = roots();
  std::vector<bool> mask(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) mask[r] = !rs.in_subsystem(r, j_) && admits(a, r);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = reach_[{mask, bruhat_only}];
  if (slot) return *slot;
  const auto& vs = quotient_.vertices();
  const std::size_t nv = vs.size();
  slot = std::make_unique<Reach>();
  slot->m.assign(nv * nv, 0);
  std::vector<int> queue;
  for (std::size_t s = 0; s < nv; ++s) {
    char* row = &slot->m[s * nv];
    queue.assign(1, static_cast<int>(s));
    row[s] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = vs[queue[q]];
      for (int r = 0; r < rs.num_positive(); ++r) {
        if (!mask[r]) continue;
        EdgeKind k = quotient_.kind(x, r);
        if (k == EdgeKind::None || (bruhat_only && k != EdgeKind::Bruhat)) continue;
        int y = vindex_[quotient_.target(x, r)];
        if (!row[y]) {
          row[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return *slot;
}

bool ShapeContext::connected(Elem x, Elem y, const Rational& a, bool bruhat_only) const {
  int ix = vindex_[x], iy = vindex_[y];
  if (ix < 0 || iy < 0) throw PreconditionError("element is not a minimal coset representative");
  const Reach& r = reach(a, bruhat_only);
  return r.m[static_cast<std::size_t>(ix) * quotient_.vertices().size() + iy] != 0;
}

std::vector<QlsPath> enumerate_qls(const ShapeContext& ctx) {
  const auto& vs = ctx.quotient().vertices();
  const int n = ctx.N();
  std::vector<QlsPath> out;
  std::vector<Elem> steps;
  std::function<void()> grow = [&]() {
    const int k = static_cast<int>(steps.size()) + 1;
    if (k > n) {
      out.push_back(collapse_steps(ctx.node(), steps));
      return;
    }
    Rational a(k - 1, n);
    for (Elem y : vs) {
      if (k > 1 && y != steps.back() && !ctx.connected(y, steps.back(), a)) continue;
      steps.push_back(y);
      grow();
      steps.pop_back();
    }
  };
  grow();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_qls(const ShapeContext& ctx, const QlsPath& eta) {
  const int s = eta.size();
  if (s < 1 || static_cast<int>(eta.breaks.size()) != s + 1 || eta.node != ctx.node()) return false;
  if (eta.breaks.front() != Rational(0) || eta.breaks.back() != Rational(1)) return false;
  for (int k = 0; k < s; ++k) {
    if (!(eta.breaks[k] < eta.breaks[k + 1])) return false;
    if (!ctx.quotient().is_vertex(eta.vertices[k])) return false;
  }
  for (int k = 1; k < s; ++k) {
    if (eta.vertices[k] == eta.vertices[k - 1]) return false;
    if (!ctx.connected(eta.vertices[k], eta.vertices[k - 1], eta.breaks[k])) return false;
  }
  return true;
}

bool is_ls(const ShapeContext& ctx, const QlsPath& eta) {
  for (int k = 1; k < eta.size(); ++k)
    if (!ctx.connected(eta.vertices[k], eta.vertices[k - 1], eta.breaks[k], true)) return false;
  return true;
}

Weight qls_weight(const ShapeContext& ctx, const QlsPath& eta) {
  const WeylGroup& g = ctx.group();
  const int n = g.rank();
  std::vector<Rational> acc(n, Rational(0));
  for (int k = 0; k < eta.size(); ++k) {
    Weight vk = g.act(eta.vertices[k], ctx.roots().fundamental(ctx.node()));
    Rational len = eta.breaks[k + 1] - eta.breaks[k];
    for (int j = 0; j < n; ++j) acc[j] += len * Rational(vk[j]);
  }
  Weight out(n);
  for (int j = 0; j < n; ++j) {
    if (acc[j].denominator() != 1) fail_internal("QLS path weight is not integral");
    out[j] = static_cast<int>(acc[j].numerator());
  }
  return out;
}

std::pair<Elem, CorootVec> kappa_zeta(const ShapeContext& ctx, const QlsPath& eta, Elem v) {
  const ShortestPaths& sp = ctx.paths();
  Elem cur = v;
  CorootVec zeta(ctx.roots().rank());
  for (Elem vk : eta.vertices) {
    Elem next = sp.tbmax(vk, ctx.J(), cur);
    zeta += sp.qwt(next, cur);
    cur = next;
  }
  return {cur, zeta};
}

void for_each_bqls(const ShapeContext& ctx, Elem w, const std::function<void(const BPathTuple&)>& visit) {
  const int n = ctx.N();
  BPathTuple tuple;
  tuple.start = w;
  tuple.parts.assign(n, DirectedPath(w));
  std::function<void(int, Elem)> fill = [&](int k, Elem from) {
    if (k == 0) {
      visit(tuple);
      return;
    }
    std::optional<DegreeFilter> filter;
    if (k > 1) filter = ctx.filter_for_step(k);
    for_each_increasing_star(ctx.full(), ctx.order(), from, ctx.J(), filter, [&](const DirectedPath& p) {
      tuple.parts[k - 1] = p;
      fill(k - 1, p.end());
    });
  };
  fill(n, w);
}

std::vector<BPathTuple> enumerate_bqls(const ShapeContext& ctx, Elem w) {
  std::vector<BPathTuple> out;
  for_each_bqls(ctx, w, [&](const BPathTuple& p) { out.push_back(p); });
  return out;
}

bool is_bqls(const ShapeContext& ctx, Elem w, const BPathTuple& p) {
  const int n = ctx.N();
  if (static_cast<int>(p.parts.size()) != n || p.start != w) return false;
  const QuantumBruhatGraph& full = ctx.full();
  const RootSystem& rs = ctx.roots();
  Elem from = w;
  for (int k = n; k >= 1; --k) {
    const DirectedPath& q = p.part(k);
    if (q.start() != from || q.vertices.size() != q.labels.size() + 1 || q.kinds.size() != q.labels.size())
      return false;
    std::optional<DegreeFilter> filter;
    if (k > 1) filter = ctx.filter_for_step(k);
    for (int e = 0; e < q.length(); ++e) {
      int r = q.labels[e];
      if (r < 0 || r >= rs.num_positive() || rs.in_subsystem(r, ctx.J())) return false;
      if (e > 0 && !ctx.order().before(q.labels[e - 1], r)) return false;
      if (filter && !filter->admits(rs, r)) return false;
      if (full.kind(q.vertices[e], r) == EdgeKind::None || full.kind(q.vertices[e], r) != q.kinds[e]) return false;
      if (full.target(q.vertices[e], r) != q.vertices[e + 1]) return false;
    }
    from = q.end();
  }
  return true;
}

std::pair<QlsPath, Elem> bpath_to_qls(const ShapeContext& ctx, const BPathTuple& p) {
  const int n = static_cast<int>(p.parts.size());
  std::vector<Elem> steps(n);
  // w_k = floor(ed(p_{k+1})), with ed(p_{N+1}) = w.
  for (int k = 1; k <= n; ++k) steps[k - 1] = ctx.project(k == n ? p.start : p.part(k + 1).end());
  return {collapse_steps(ctx.node(), steps), p.end()};
}

BPathStats bpath_stats(const RootSystem& rs, const BPathTuple& p) {
  BPathStats st;
  st.end = p.end();
  st.qwt = CorootVec(rs.rank());
  st.qwt2 = CorootVec(rs.rank());
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    st.length += p.parts[k].length();
    CorootVec q = path_qwt(rs, p.parts[k]);
    st.qwt += q;
    if (k > 0) st.qwt2 += q;
  }
  return st;
}

}  // namespace qkchev
