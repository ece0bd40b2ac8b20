#include <doctest.h>

#include "qkchev/error.hpp"
#include "qkchev/qkring.hpp"

#include <map>
#include <set>
#include <tuple>

using namespace qkchev;

namespace {

GroupAlgElem e_root(const RootSystem& rs, const RootVec& b, long long c = 1) {
  return GroupAlgElem::monomial(rs.to_weight(b), c);
}

GroupAlgElem one(int n) { return GroupAlgElem::constant(n, 1); }

// Push a G/B class to G/P: Schubert index to its minimal representative,
// degree projected to K.
QKClass push_forward(const Context& ctx, const QKClass& c, NodeSet K) {
  QKClass out(ctx.rank(), K);
  const NodeSet comp = complement(K, ctx.rank());
  for (const auto& [z, poly] : c.terms())
    for (const auto& [deg, coeff] : poly.terms()) out.add(ctx.group().min_rep(z, comp), project(deg, K), coeff);
  return out;
}

const char* const kSmallTypes[] = {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D3", "G2"};

}  // namespace

TEST_CASE("group algebra arithmetic") {
  RootSystem rs(LieType::parse("A2"));
  GroupAlgElem a = one(2) - e_root(rs, {1, 0});
  GroupAlgElem b = one(2) + e_root(rs, {1, 0});
  CHECK(a * b == one(2) - e_root(rs, {2, 0}));
  CHECK((a - a).is_zero());
  CHECK((a + (-a)).terms().empty());
  CHECK(a.coeff(Weight(2)) == 1);
  CHECK(a.coeff(rs.to_weight(RootVec{1, 0})) == -1);

  NovikovPoly p;
  CHECK_THROWS_AS(p.add(CorootVec{-1, 0}, a), PreconditionError);
  QKClass c(2, 0b01);
  CHECK_THROWS_AS(c.add(0, CorootVec{0, 1}, a), PreconditionError);
  c.add(0, CorootVec{1, 0}, a);
  c.add(0, CorootVec{1, 0}, -a);
  CHECK(c.terms().empty());
}

TEST_CASE("specialization at the trivial torus") {
  RootSystem a1(LieType::parse("A1"));
  CHECK(specialize_nonequivariant(e_root(a1, {-1})) == one(1));
  CHECK(specialize_nonequivariant(one(1) - e_root(a1, {-1})).is_zero());
  RootSystem g2(LieType::parse("G2"));
  CHECK(nonequivariant_value(one(2) + e_root(g2, {-3, -2})) == 2);
}

TEST_CASE("A1: O^{s1} * O^{s1}") {
  Context ctx("A1");
  const Elem s1 = ctx.group().parse("1");
  const RootSystem& rs = ctx.roots();
  QKClass want(1, 0b1);
  want.add(s1, CorootVec{0}, one(1) - e_root(rs, {-1}));
  want.add(ctx.group().identity(), CorootVec{1}, e_root(rs, {-1}));
  CHECK(chevalley(ctx, 0, s1) == want);
  CHECK(chevalley_by_qls(ctx, 0)[s1] == want);

  QKClass classical(1, 0b1);
  classical.add(s1, CorootVec{0}, one(1) - e_root(rs, {-1}));
  CHECK(classical_product_si(ctx, 0, s1, 0b1) == classical);
}

TEST_CASE("O^e is the unit") {
  for (const char* name : kSmallTypes) {
    CAPTURE(name);
    Context ctx(name);
    const int n = ctx.rank();
    for (int i = 0; i < n; ++i) {
      QKClass want(n, ctx.all());
      want.add(ctx.group().reflection(i), CorootVec(n), one(n));
      CHECK(chevalley(ctx, i, ctx.group().identity()) == want);
      CHECK(classical_product_si(ctx, i, ctx.group().identity(), ctx.all()) == want);
    }
  }
}

TEST_CASE("bQLS route agrees with the sum over (eta, v)") {
  for (const char* name : kSmallTypes) {
    CAPTURE(name);
    Context ctx(name);
    for (int i = 0; i < ctx.rank(); ++i) {
      CAPTURE(i);
      const auto by_pairs = chevalley_by_qls(ctx, i);
      for (Elem w = 0; w < ctx.group().size(); ++w) CHECK(chevalley(ctx, i, w) == by_pairs[w]);
    }
  }
}

TEST_CASE("no cancellation among tuples for G/B") {
  for (const char* name : kSmallTypes) {
    CAPTURE(name);
    Context ctx(name);
    for (int i = 0; i < ctx.rank(); ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w) {
        std::map<std::tuple<Elem, CorootVec, Weight>, std::set<int>> signs;
        for (const BqlsEntry& e : bqls_entries(ctx.shape(i), w)) signs[{e.end, e.qwt, e.exponent}].insert(e.sign());
        for (const auto& [key, s] : signs) CHECK(s.size() == 1);
      }
  }
}

TEST_CASE("quantum tuples have a positive i-th degree") {
  for (const char* name : kSmallTypes) {
    CAPTURE(name);
    Context ctx(name);
    for (int i = 0; i < ctx.rank(); ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w)
        for (const BqlsEntry& e : bqls_entries(ctx.shape(i), w))
          if (!e.qwt.is_zero()) CHECK(e.qwt[i] > 0);
  }
}

TEST_CASE("product does not depend on the reflection order") {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    CAPTURE(name);
    Context ctx(name);
    for (int i = 0; i < ctx.rank(); ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w) CHECK(chevalley(ctx, i, w, true) == chevalley(ctx, i, w, false));
  }
}

TEST_CASE("degree-zero part is the classical product") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    Context ctx(name);
    const int n = ctx.rank();
    for (NodeSet K = 1; K <= ctx.all(); ++K)
      for (int i = 0; i < n; ++i) {
        if (!contains(K, i)) continue;
        for (Elem w : ctx.group().min_reps(complement(K, n))) {
          QKClass full = chevalley_parabolic(ctx, i, w, K);
          QKClass cl = classical_product_si(ctx, i, w, K);
          for (const auto& [z, poly] : cl.terms()) {
            CHECK(poly.terms().size() == 1);
            CHECK(poly.terms().begin()->first.is_zero());
            CHECK(full.coeff(z).coeff(CorootVec(n)) == poly.coeff(CorootVec(n)));
          }
          for (const auto& [z, poly] : full.terms())
            if (!poly.coeff(CorootVec(n)).is_zero()) CHECK(cl.terms().count(z) == 1);
        }
      }
  }
}

TEST_CASE("parabolic product is the projection of the G/B product") {
  for (const char* name : {"A2", "A3", "B2", "C2", "G2"}) {
    CAPTURE(name);
    Context ctx(name);
    const int n = ctx.rank();
    for (NodeSet K = 1; K <= ctx.all(); ++K)
      for (int i = 0; i < n; ++i) {
        if (!contains(K, i)) continue;
        for (Elem w : ctx.group().min_reps(complement(K, n)))
          CHECK(chevalley_parabolic(ctx, i, w, K) == push_forward(ctx, chevalley(ctx, i, w), K));
      }
  }
}

TEST_CASE("projective plane") {
  Context ctx("A2");
  const RootSystem& rs = ctx.roots();
  const WeylGroup& g = ctx.group();
  const NodeSet K = 0b01;
  // O^{s1} * O^{s1}: the two quantum terms of G/B cancel after projection.
  QKClass sq(2, K);
  sq.add(g.parse("1"), CorootVec{0, 0}, one(2) - e_root(rs, {-1, 0}));
  sq.add(g.parse("2,1"), CorootVec{0, 0}, e_root(rs, {-1, 0}));
  CHECK(chevalley_parabolic(ctx, 0, g.parse("1"), K) == sq);
  // O^{s1} * O^{pt} = (1 - e^{-a1-a2}) O^{pt} + e^{-a1-a2} Q.
  QKClass pt(2, K);
  pt.add(g.parse("2,1"), CorootVec{0, 0}, one(2) - e_root(rs, {-1, -1}));
  pt.add(g.identity(), CorootVec{1, 0}, e_root(rs, {-1, -1}));
  CHECK(chevalley_parabolic(ctx, 0, g.parse("2,1"), K) == pt);
  CHECK(specialize_nonequivariant(chevalley_parabolic(ctx, 0, g.parse("2,1"), K)).terms().size() == 1);
}

TEST_CASE("G2: the tuple through the quantum theta edge") {
  Context ctx("G2");
  const WeylGroup& g = ctx.group();
  const RootSystem& rs = ctx.roots();
  const Elem w = g.parse("2,1,2,1,2");
  const auto entries = bqls_entries(ctx.shape(1), w);
  int found = 0;
  for (const BqlsEntry& e : entries) {
    if (e.length != 1 || e.end != g.identity() || e.path.part(4).length() != 1) continue;
    ++found;
    CHECK(e.qwt == rs.theta_coroot());
    CHECK(e.qwt == CorootVec{1, 2});
    CHECK(e.exponent == -rs.fundamental(1));
    CHECK(e.eta.vertices == std::vector<Elem>{g.identity(), w});
    CHECK(e.eta.breaks == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    // p_4 carries the edge; all other parts are trivial.
    CHECK(e.path.part(4).length() == 1);
  }
  CHECK(found == 1);
  // Its contribution -(-1)^1 e^{-varpi_2} Q^{theta^vee} O^e is present.
  QKClass c = chevalley(ctx, 1, w);
  CHECK(c.coeff(g.identity()).coeff(CorootVec{1, 2}).coeff(-rs.fundamental(1)) >= 1);
  // varpi_2 = 3a1 + 2a2.
  CHECK(rs.fundamental(1) == rs.to_weight(RootVec{3, 2}));
}

TEST_CASE("rejected arguments") {
  Context ctx("A2");
  CHECK_THROWS_AS(chevalley_parabolic(ctx, 1, 0, 0b01), PreconditionError);
  CHECK_THROWS_AS(chevalley_parabolic(ctx, 0, ctx.group().parse("2"), 0b01), PreconditionError);
  CHECK_THROWS_AS(chevalley(ctx, 2, 0), PreconditionError);
}
