#include "qkchev/qkring.hpp"

#include "qkchev/error.hpp"

namespace qkchev {

GroupAlgElem GroupAlgElem::constant(int rank, long long c) { return monomial(Weight(rank), c); }

GroupAlgElem GroupAlgElem::monomial(const Weight& mu, long long c) {
  GroupAlgElem a;
  a.add(mu, c);
  return a;
}

long long GroupAlgElem::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

void GroupAlgElem::add(const Weight& mu, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(mu, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, -c);
  return *this;
}

GroupAlgElem GroupAlgElem::operator-() const {
  GroupAlgElem r;
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
  return r;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r;
  for (const auto& [mu, c] : a.terms_)
    for (const auto& [nu, e] : b.terms_) r.add(mu + nu, c * e);
  return r;
}

GroupAlgElem specialize_nonequivariant(const GroupAlgElem& a) {
  if (a.is_zero()) return a;
  return GroupAlgElem::constant(a.terms().begin()->first.size(), nonequivariant_value(a));
}

long long nonequivariant_value(const GroupAlgElem& a) {
  long long s = 0;
  for (const auto& [mu, c] : a.terms()) s += c;
  return s;
}

GroupAlgElem NovikovPoly::coeff(const CorootVec& deg) const {
  auto it = terms_.find(deg);
  return it == terms_.end() ? GroupAlgElem() : it->second;
}

void NovikovPoly::add(const CorootVec& deg, const GroupAlgElem& c) {
  if (!deg.nonnegative()) throw PreconditionError("Novikov degree must be effective");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(deg, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NovikovPoly& NovikovPoly::operator+=(const NovikovPoly& o) {
  for (const auto& [deg, c] : o.terms_) add(deg, c);
  return *this;
}

NovikovPoly QKClass::coeff(Elem z) const {
  auto it = terms_.find(z);
  return it == terms_.end() ? NovikovPoly() : it->second;
}

void QKClass::add(Elem z, const CorootVec& deg, const GroupAlgElem& c) {
  if (project(deg, k_) != deg) throw PreconditionError("Novikov degree has support outside K");
  if (c.is_zero()) return;
  auto& slot = terms_[z];
  slot.add(deg, c);
  if (slot.is_zero()) terms_.erase(z);
}

QKClass QKClass::degree_zero() const {
  QKClass r(rank_, k_);
  CorootVec zero(rank_);
  for (const auto& [z, poly] : terms_) r.add(z, zero, poly.coeff(zero));
  return r;
}

QKClass specialize_nonequivariant(const QKClass& a) {
  QKClass r(a.rank(), a.parabolic());
  for (const auto& [z, poly] : a.terms())
    for (const auto& [deg, c] : poly.terms()) r.add(z, deg, specialize_nonequivariant(c));
  return r;
}

namespace {

BqlsEntry entry_with_eta(const ShapeContext& shape, const BPathTuple& p, QlsPath eta, const Weight& exponent) {
  BqlsEntry e;
  e.path = p;
  e.eta = std::move(eta);
  e.exponent = exponent;
  BPathStats st = bpath_stats(shape.roots(), p);
  e.length = st.length;
  e.length1 = p.part(1).length();
  e.qwt = st.qwt;
  e.qwt2 = st.qwt2;
  e.end = st.end;
  e.end2 = p.part(1).start();
  return e;
}

}  // namespace

BqlsEntry make_entry(const ShapeContext& shape, const BPathTuple& p) {
  QlsPath eta = bpath_to_qls(shape, p).first;
  Weight mu = qls_weight(shape, eta) - shape.roots().fundamental(shape.node());
  return entry_with_eta(shape, p, std::move(eta), mu);
}

std::vector<BqlsEntry> bqls_entries(const ShapeContext& shape, Elem w) {
  std::vector<BqlsEntry> out;
  std::map<QlsPath, Weight> weights;
  const Weight fund = shape.roots().fundamental(shape.node());
  for_each_bqls(shape, w, [&](const BPathTuple& p) {
    QlsPath eta = bpath_to_qls(shape, p).first;
    auto it = weights.find(eta);
    if (it == weights.end()) it = weights.emplace(eta, qls_weight(shape, eta) - fund).first;
    out.push_back(entry_with_eta(shape, p, std::move(eta), it->second));
  });
  return out;
}

QKClass chevalley(const Context& ctx, int i, Elem w, bool alt_order) {
  return chevalley_parabolic(ctx, i, w, ctx.all(), alt_order);
}

namespace {

void check_chevalley_args(const Context& ctx, int i, Elem w, NodeSet K) {
  if (i < 0 || i >= ctx.rank()) throw PreconditionError("node out of range");
  if (!contains(K, i))
    throw PreconditionError("node " + std::to_string(i + 1) +
                            " is not in K: O^{s_i} is the unit class of G/P there, so there is no Chevalley "
                            "formula to apply");
  if (!ctx.group().is_min_rep(w, complement(K, ctx.rank())))
    throw PreconditionError("w is not a minimal coset representative");
}

}  // namespace

QKClass chevalley_parabolic(const Context& ctx, int i, Elem w, NodeSet K, bool alt_order) {
  check_chevalley_args(ctx, i, w, K);
  return chevalley_from_entries(ctx, i, w, K, bqls_entries(ctx.shape(i, alt_order), w));
}

QKClass chevalley_from_entries(const Context& ctx, int i, Elem w, NodeSet K, const std::vector<BqlsEntry>& entries) {
  const int n = ctx.rank();
  K &= ctx.all();
  check_chevalley_args(ctx, i, w, K);
  const NodeSet comp = complement(K, n);
  QKClass out(n, K);
  out.add(w, CorootVec(n), GroupAlgElem::constant(n, 1));
  for (const BqlsEntry& e : entries)
    out.add(ctx.group().min_rep(e.end, comp), project(e.qwt, K), GroupAlgElem::monomial(e.exponent, -e.sign()));
  return out;
}

std::vector<QKClass> chevalley_by_qls(const Context& ctx, int i) {
  const WeylGroup& g = ctx.group();
  const int n = ctx.rank();
  const ShapeContext& shape = ctx.shape(i);
  std::vector<QKClass> out(static_cast<std::size_t>(g.size()), QKClass(n, ctx.all()));
  for (Elem w = 0; w < g.size(); ++w) out[w].add(w, CorootVec(n), GroupAlgElem::constant(n, 1));
  const Weight fund = ctx.roots().fundamental(i);
  for (const QlsPath& eta : enumerate_qls(shape)) {
    const Weight mu = qls_weight(shape, eta) - fund;
    for (Elem v = 0; v < g.size(); ++v) {
      auto [w, zeta] = kappa_zeta(shape, eta, v);
      const int sign = (g.length(v) - g.length(w) + 1) % 2 ? -1 : 1;
      out[w].add(v, zeta, GroupAlgElem::monomial(mu, sign));
    }
  }
  return out;
}

QKClass classical_product_si(const Context& ctx, int i, Elem w, NodeSet K) {
  return chevalley_parabolic(ctx, i, w, K).degree_zero();
}

}  // namespace qkchev
