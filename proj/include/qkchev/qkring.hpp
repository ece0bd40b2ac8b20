#pragma once

#include "qkchev/context.hpp"

#include <map>
#include <vector>

namespace qkchev {

// Element of Z[P]: finite sum of c e^mu, weights in fundamental-weight
// coordinates. Zero coefficients are never stored.
class GroupAlgElem {
 public:
  using Terms = std::map<Weight, long long>;

  GroupAlgElem() = default;
  static GroupAlgElem constant(int rank, long long c);
  static GroupAlgElem monomial(const Weight& mu, long long c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Weight& mu) const;
  void add(const Weight& mu, long long c);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  GroupAlgElem operator-() const;
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  bool operator==(const GroupAlgElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const GroupAlgElem& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

// e^nu -> 1. The result is a constant (or zero).
GroupAlgElem specialize_nonequivariant(const GroupAlgElem& a);
long long nonequivariant_value(const GroupAlgElem& a);

// Polynomial in the Novikov variables with coefficients in Z[P]; degrees
// are effective coroot vectors.
class NovikovPoly {
 public:
  using Terms = std::map<CorootVec, GroupAlgElem>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GroupAlgElem coeff(const CorootVec& deg) const;
  void add(const CorootVec& deg, const GroupAlgElem& c);
  NovikovPoly& operator+=(const NovikovPoly& o);
  bool operator==(const NovikovPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const NovikovPoly& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

// Element of QK_T(G/P), P given by K (nodes whose Novikov variables
// survive): sum over minimal representatives z of W^{I \ K} of
// (Novikov polynomial) O^z.
class QKClass {
 public:
  using Terms = std::map<Elem, NovikovPoly>;

  QKClass(int rank, NodeSet K) : rank_(rank), k_(K) {}

  int rank() const { return rank_; }
  NodeSet parabolic() const { return k_; }
  const Terms& terms() const { return terms_; }
  NovikovPoly coeff(Elem z) const;
  // Throws if deg has support off K or a negative entry.
  void add(Elem z, const CorootVec& deg, const GroupAlgElem& c);
  QKClass degree_zero() const;
  bool operator==(const QKClass& o) const { return rank_ == o.rank_ && k_ == o.k_ && terms_ == o.terms_; }
  bool operator!=(const QKClass& o) const { return !(*this == o); }

 private:
  int rank_;
  NodeSet k_;
  Terms terms_;
};

QKClass specialize_nonequivariant(const QKClass& a);

// One tuple of bQLS(w) together with what the formulas read off it.
struct BqlsEntry {
  BPathTuple path;
  QlsPath eta;
  Weight exponent;  // -varpi_i + wt(eta_p)
  int length = 0;
  int length1 = 0;  // l(p_1)
  CorootVec qwt;
  CorootVec qwt2;
  Elem end = 0;   // ed(p)
  Elem end2 = 0;  // ed(p_2)

  int sign() const { return length % 2 ? -1 : 1; }
};

BqlsEntry make_entry(const ShapeContext& shape, const BPathTuple& p);
std::vector<BqlsEntry> bqls_entries(const ShapeContext& shape, Elem w);

// chevalley_parabolic from an already enumerated bQLS(w).
QKClass chevalley_from_entries(const Context& ctx, int i, Elem w, NodeSet K, const std::vector<BqlsEntry>& entries);

// O^{s_i} * O^w in QK_T(G/B) as a sum over bQLS(w).
QKClass chevalley(const Context& ctx, int i, Elem w, bool alt_order = false);
// The same in QK_T(G/P): degrees projected to K, Schubert indices to
// minimal representatives. Requires i in K and w minimal for I \ K.
QKClass chevalley_parabolic(const Context& ctx, int i, Elem w, NodeSet K, bool alt_order = false);
// The G/B product for every w at once, summed over pairs (eta, v) in
// QLS(varpi_i) x W grouped by kappa(eta, v); indexed by w.
std::vector<QKClass> chevalley_by_qls(const Context& ctx, int i);
// Q = 0 part of chevalley_parabolic: the product in K_T(G/P).
QKClass classical_product_si(const Context& ctx, int i, Elem w, NodeSet K);

}  // namespace qkchev
