#include <doctest.h>

#include "qkchev/checks.hpp"
#include "qkchev/error.hpp"
#include "qkchev/io.hpp"

#include <functional>

using namespace qkchev;

namespace {

GroupAlgElem one(int n) { return GroupAlgElem::constant(n, 1); }

// Every correction vector in [-B, B]^{I \ K} satisfying the lift
// conditions, by exhaustive search.
std::vector<CorootVec> all_lifts(const RootSystem& rs, const CorootVec& d, NodeSet K, int B) {
  const int n = rs.rank();
  const NodeSet comp = complement(K, n);
  std::vector<int> free;
  for (int j = 0; j < n; ++j)
    if (contains(comp, j)) free.push_back(j);
  std::vector<CorootVec> out;
  CorootVec xi = d;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == free.size()) {
      for (int r = 0; r < rs.num_positive(); ++r) {
        if (!rs.in_subsystem(r, comp)) continue;
        int v = rs.pairing(rs.root_weight(r), xi);
        if (v != 0 && v != -1) return;
      }
      out.push_back(xi);
      return;
    }
    for (int c = -B; c <= B; ++c) {
      xi[free[k]] = c;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("two-point values") {
  Workbench wb;
  const Kgw& a2 = wb.kgw("A2");
  const WeylGroup& g = a2.context().group();
  const NodeSet all = a2.context().all();
  for (Elem x = 0; x < g.size(); ++x) CHECK(a2.two_point(g.identity(), x, CorootVec(2), all) == one(2));
  CHECK(a2.two_point(g.longest(), g.identity(), CorootVec(2), all).is_zero());
  // G/P: x must be maximal, z minimal.
  CHECK_THROWS_AS(a2.two_point(0, g.parse("1"), CorootVec(2), 0b01), PreconditionError);
  CHECK_THROWS_AS(a2.two_point(g.parse("2"), g.longest(), CorootVec(2), 0b01), PreconditionError);

  const Kgw& g2 = wb.kgw("G2");
  const WeylGroup& h = g2.context().group();
  const Elem w = h.parse("2,1,2,1,2");
  for (int d1 = 1; d1 <= 4; ++d1)
    for (Elem x = 0; x < h.size(); ++x) CHECK(g2.two_point(w, x, CorootVec{d1, 2}, 0b11) == one(2));
}

TEST_CASE("G2 worked example") {
  Workbench wb;
  const Kgw& kgw = wb.kgw("G2");
  const Context& ctx = kgw.context();
  const WeylGroup& g = ctx.group();
  const RootSystem& rs = ctx.roots();
  const Elem w = g.parse("2,1,2,1,2");
  const GroupAlgElem e_theta = GroupAlgElem::monomial(-rs.to_weight(RootVec{3, 2}));
  for (int d1 = 1; d1 <= 3; ++d1) {
    const CorootVec d{d1, 2};
    for (Elem x = 0; x < g.size(); ++x) {
      CAPTURE(g.format(x));
      const bool special = x == g.identity() || x == g.parse("1");
      const GroupAlgElem want = special ? one(2) + e_theta : one(2);
      for (Method m : {Method::Pairing, Method::Full, Method::Reduced}) CHECK(kgw.three_point(m, 1, w, x, d, 3) == want);
      const auto pbr = kgw.pbr_set(1, w, x, d, 3);
      CHECK(pbr.size() == (special ? 1u : 0u));
      if (special) {
        // (t_w, t_w, w => e, t_e, t_e, t_e)
        const BPathTuple& p = pbr.front();
        REQUIRE(p.parts.size() == 6);
        for (int k = 1; k <= 6; ++k) CHECK(p.part(k).length() == (k == 4 ? 1 : 0));
        CHECK(p.part(4).kinds[0] == EdgeKind::Quantum);
        CHECK(p.part(4).labels[0] == rs.theta_index());
      }
      CHECK(kgw.pbr_sum(1, w, x, d, 3) == (special ? -e_theta : GroupAlgElem()));
      CHECK(kgw.correction_term_qls(1, w, x, d, 3) == kgw.pbr_sum(1, w, x, d, 3));
      CheckReport r = kgw.divisor_axiom_check(1, w, x, d, 3);
      CHECK(r.ok());
      CHECK(r.detail == (special ? "-e^[-3,-2]" : "0"));
    }
  }
  CHECK(nonequivariant_value(kgw.three_point_reduced(1, w, 0, CorootVec{1, 2}, 3)) == 2);
}

TEST_CASE("pbQLS is all of bQLS when nothing constrains it") {
  Workbench wb;
  for (const char* name : {"A2", "B2", "G2"}) {
    const Kgw& kgw = wb.kgw(name);
    const Context& ctx = kgw.context();
    const int n = ctx.rank();
    CorootVec big(n);
    for (int j = 0; j < n; ++j) big[j] = 20;
    for (int i = 0; i < n; ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w)
        CHECK(kgw.pbqls_set(i, w, ctx.group().longest(), big, ctx.all()).size() == kgw.entries(i, w).size());
  }
}

TEST_CASE("divisor-axiom analogue") {
  Workbench wb;
  // Every node of C3 has <varpi_i, theta^vee> = 1.
  CheckReport c3 = check_divisor(wb.kgw("C3"), 0b111, 1, false);
  CHECK(c3.ok());
  CHECK(c3.instances == 3 * 48 * 48 * 8);
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    for (NodeSet K = 1; K <= kgw.context().all(); ++K) CHECK(check_divisor(kgw, K, 2, false).ok());
  }
}

TEST_CASE("three formulas agree, signed sums vanish, correction term") {
  Workbench wb;
  for (const char* name : {"A1", "A2", "B2", "C2", "G2"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    for (NodeSet K = 1; K <= kgw.context().all(); ++K) {
      CAPTURE(K);
      CHECK(check_triple_agreement(kgw, K, 2).ok());
      CHECK(check_qk2p(kgw, K, 2).ok());
      CHECK(check_correction_equality(kgw, K, 2).ok());
    }
  }
}

TEST_CASE("pbR vanishes for <varpi_i, theta^vee> = 1 and d_i > 0") {
  Workbench wb;
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    CAPTURE(name);
    CHECK(check_vanishing(wb.kgw(name), 2).ok());
  }
  // G2, i = 2 is not in the list and pbR is nonempty there.
  const Kgw& g2 = wb.kgw("G2");
  CHECK(!g2.pbr_set(1, g2.context().group().parse("2,1,2,1,2"), 0, CorootVec{1, 2}, 3).empty());
}

TEST_CASE("sijections") {
  Workbench wb;
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    const Context& ctx = kgw.context();
    // Theta is an involution on every tuple.
    for (int i = 0; i < ctx.rank(); ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w)
        for (const BqlsEntry& e : kgw.entries(i, w)) {
          BPathTuple t = kgw.sijection_theta(i, e.path);
          CHECK(is_bqls(ctx.shape(i), w, t));
          CHECK(kgw.sijection_theta(i, t) == e.path);
        }
    for (NodeSet K = 1; K <= ctx.all(); ++K) CHECK(check_sijections(kgw, K, 2).ok());
  }
}

TEST_CASE("sijections reject tuples outside their domains") {
  Workbench wb;
  const Kgw& kgw = wb.kgw("G2");
  const WeylGroup& g = kgw.context().group();
  const Elem w = g.parse("2,1,2,1,2");
  const CorootVec d{1, 2};
  const BPathTuple p = kgw.pbr_set(1, w, 0, d, 3).front();
  try {
    kgw.sijection_psi(1, w, 0, d, 3, p);
    FAIL("Psi accepted a tuple of pbR");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("pbR") != std::string::npos);
  }
  try {
    kgw.sijection_theta_prime(1, w, 0, d, 3, p);
    FAIL("Theta' accepted a tuple outside B_2");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("pbQLS^+") != std::string::npos);
  }
  BPathTuple bad = p;
  bad.start = g.identity();
  CHECK_THROWS_AS(kgw.sijection_psi(1, w, 0, d, 3, bad), PreconditionError);
}

TEST_CASE("Peterson lift") {
  Workbench wb;
  const Kgw& a2 = wb.kgw("A2");
  CHECK(a2.peterson_lift(CorootVec{0, 0}, 0b01) == CorootVec{0, 0});
  CHECK(a2.peterson_lift(CorootVec{1, 0}, 0b01) == CorootVec{1, 0});
  CHECK(a2.peterson_lift(CorootVec{2, 1}, 0b11) == CorootVec{2, 1});
  CHECK_THROWS_AS(a2.peterson_lift(CorootVec{0, 1}, 0b01), PreconditionError);
  CHECK_THROWS_AS(a2.peterson_lift(CorootVec{-1, 0}, 0b01), PreconditionError);

  for (const char* name : {"A3", "B3", "C3", "G2", "B2"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    const RootSystem& rs = kgw.context().roots();
    for (NodeSet K : proper_parabolics(rs.rank()))
      for (const CorootVec& d : degree_grid(rs.rank(), K, 2)) {
        auto lifts = all_lifts(rs, d, K, 8);
        REQUIRE(lifts.size() == 1);
        CHECK(kgw.peterson_lift(d, K) == lifts[0]);
      }
  }
}

TEST_CASE("comparison with G/B") {
  Workbench wb;
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    for (NodeSet K : proper_parabolics(kgw.context().rank())) CHECK(check_comparison(kgw, K, 2).ok());
  }
}

TEST_CASE("Moebius function of the Bruhat order") {
  Workbench wb;
  for (const char* name : {"A3", "B2", "G2"}) {
    CAPTURE(name);
    const Kgw& kgw = wb.kgw(name);
    const WeylGroup& g = kgw.context().group();
    const int n = kgw.context().rank();
    // Full flag variety: mu(y, x) = (-1)^{l(x) - l(y)} for every y <= x.
    for (Elem x = 0; x < g.size(); ++x) {
      int below = 0;
      for (const auto& [y, mu] : kgw.mobius(x, all_nodes(n))) {
        CHECK(g.bruhat_leq(y, x));
        CHECK(mu == ((g.length(x) - g.length(y)) % 2 ? -1 : 1));
        ++below;
      }
      int expected = 0;
      for (Elem y = 0; y < g.size(); ++y) expected += g.bruhat_leq(y, x);
      CHECK(below == expected);
    }
    // Partial flag varieties: the defining recursion.
    for (NodeSet K : proper_parabolics(n)) {
      const NodeSet comp = complement(K, n);
      const auto reps = g.min_reps(comp);
      for (Elem x : reps) {
        std::map<Elem, int> mu;
        for (const auto& [y, m] : kgw.mobius(x, K)) mu[y] = m;
        for (Elem y : reps) {
          if (!g.bruhat_leq(y, x)) continue;
          int s = 0;
          for (Elem z : reps)
            if (g.bruhat_leq(y, z) && g.bruhat_leq(z, x)) s += mu.count(z) ? mu[z] : 0;
          CHECK(s == (y == x ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("dual basis and line bundle") {
  Workbench wb;
  CHECK(check_g2_dual_basis(wb).ok());
  for (const char* name : {"A2", "B2", "G2"}) {
    const Kgw& kgw = wb.kgw(name);
    const Context& ctx = kgw.context();
    for (int i = 0; i < ctx.rank(); ++i)
      for (Elem w = 0; w < ctx.group().size(); ++w)
        for (Elem x = 0; x < ctx.group().size(); ++x)
          for (const CorootVec& d : degree_grid(ctx.rank(), ctx.all(), 1))
            CHECK(kgw.line_bundle_identity_check(i, w, x, d).ok());
  }
}

TEST_CASE("positivity, weak form") {
  Workbench wb;
  CHECK(check_positivity(wb.kgw("A2"), 2).ok());
  CHECK(check_positivity(wb.kgw("G2"), 2).ok());
  CHECK(check_positivity(wb.kgw("B2"), 2).ok());
  const Kgw& g2 = wb.kgw("G2");
  CHECK_THROWS_AS(g2.positivity_check(1, 0, CorootVec{0, 1}, 3), PreconditionError);
  // d = 0: O_e is the point class, which a general divisor misses; O_{w0} = 1.
  CHECK(g2.positivity_check(0, 0, CorootVec{0, 0}, 3).detail == "all values vanish");
  CheckReport r = g2.positivity_check(0, g2.context().group().longest(), CorootVec{0, 0}, 3);
  CHECK(r.ok());
  CHECK(r.detail == "epsilon=-1");
}

TEST_CASE("classification table") {
  for (const LieType& t : types_up_to_rank(8)) {
    CAPTURE(t.name());
    CHECK(computed_classification(RootSystem(t)) == published_classification(t));
  }
}

TEST_CASE("argument validation") {
  Workbench wb;
  const Kgw& kgw = wb.kgw("A2");
  const WeylGroup& g = kgw.context().group();
  try {
    kgw.three_point_reduced(1, 0, g.longest(), CorootVec{0, 0}, 0b01);
    FAIL("i outside K accepted");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("not in K") != std::string::npos);
  }
  CHECK_THROWS_AS(kgw.three_point_full(0, g.parse("2"), g.longest(), CorootVec{0, 0}, 0b01), PreconditionError);
  CHECK_THROWS_AS(kgw.three_point_full(0, 0, g.parse("1"), CorootVec{0, 0}, 0b01), PreconditionError);
  CHECK_THROWS_AS(kgw.three_point_full(0, 0, g.longest(), CorootVec{0, 1}, 0b01), PreconditionError);
  CHECK_THROWS_AS(kgw.three_point_full(0, 0, g.longest(), CorootVec{-1, 0}, 0b11), PreconditionError);
  CHECK_THROWS_AS(parse_method("fast"), PreconditionError);
}
