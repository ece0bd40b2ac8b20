#include <doctest.h>

#include "qkchev/error.hpp"
#include "qkchev/qls.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace qkchev;

namespace {

// QLS paths straight from the definition: breakpoints are drawn from all
// fractions with denominator at most 12, independently of N.
std::vector<QlsPath> qls_by_breakpoints(const ShapeContext& ctx) {
  std::set<Rational> fracs;
  for (int q = 2; q <= 12; ++q)
    for (int p = 1; p < q; ++p) fracs.insert(Rational(p, q));
  const auto& vs = ctx.quotient().vertices();
  std::vector<QlsPath> out;
  QlsPath cur;
  cur.node = ctx.node();
  cur.breaks.push_back(Rational(0));
  std::function<void()> grow = [&]() {
    cur.breaks.push_back(Rational(1));
    out.push_back(cur);
    cur.breaks.pop_back();
    for (auto it = fracs.upper_bound(cur.breaks.back()); it != fracs.end(); ++it)
      for (Elem y : vs) {
        if (y == cur.vertices.back() || !ctx.connected(y, cur.vertices.back(), *it)) continue;
        cur.vertices.push_back(y);
        cur.breaks.push_back(*it);
        grow();
        cur.breaks.pop_back();
        cur.vertices.pop_back();
      }
  };
  for (Elem v : vs) {
    cur.vertices.assign(1, v);
    grow();
  }
  std::sort(out.begin(), out.end());
  return out;
}

DirectedPath make_path(const QuantumBruhatGraph& q, Elem from, const std::vector<RootVec>& labels) {
  DirectedPath p(from);
  for (const auto& b : labels) {
    int r = q.roots().index_of(b);
    REQUIRE(q.kind(p.end(), r) != EdgeKind::None);
    p.push(r, q.kind(p.end(), r), q.target(p.end(), r));
  }
  return p;
}

const char* kSmallTypes[] = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

}  // namespace

TEST_CASE("N is the lcm of the nonzero pairings") {
  RootSystem g2(LieType::parse("G2"));
  CHECK(compute_N(g2, 1) == 6);
  CHECK(compute_N(g2, 0) == 2);
  CHECK(compute_N(RootSystem(LieType::parse("A1")), 0) == 1);
  for (const char* name : {"A3", "B3", "C4", "D4", "F4", "B4", "E6"}) {
    RootSystem rs(LieType::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      int n = compute_N(rs, i);
      for (int r = 0; r < rs.num_positive(); ++r)
        if (rs.coroot(r)[i] != 0) CHECK(n % rs.coroot(r)[i] == 0);
      if (rs.theta_coroot()[i] == 1) CHECK(2 % n == 0);
    }
  }
  CHECK_THROWS_AS(compute_N(g2, 2), PreconditionError);
}

TEST_CASE("step form and breakpoint form") {
  std::vector<Elem> steps{4, 4, 2, 1, 0, 0};
  QlsPath eta = collapse_steps(1, steps);
  CHECK(eta.vertices == std::vector<Elem>{4, 2, 1, 0});
  CHECK(eta.breaks == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)});
  CHECK(expand_steps(eta, 6) == steps);
  CHECK(expand_steps(eta, 12).size() == 12);
  CHECK_THROWS_AS(expand_steps(eta, 4), PreconditionError);
}

TEST_CASE("N-step enumeration matches the breakpoint definition") {
  for (const char* name : kSmallTypes) {
    RootSystem rs(LieType::parse(name));
    WeylGroup g(rs);
    QuantumBruhatGraph full(g, 0);
    for (int i = 0; i < rs.rank(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      ShapeContext ctx(full, i);
      auto qls = enumerate_qls(ctx);
      CHECK(qls == qls_by_breakpoints(ctx));
      for (const auto& eta : qls) {
        CHECK(is_qls(ctx, eta));
        for (const auto& b : eta.breaks) CHECK((b * Rational(ctx.N())).denominator() == 1);
      }
      // Constant paths are always there.
      std::size_t constants = std::count_if(qls.begin(), qls.end(), [](const QlsPath& e) { return e.size() == 1; });
      CHECK(constants == ctx.quotient().vertices().size());
      // N-independence.
      ShapeContext twice(full, i, 2 * ctx.N());
      CHECK(enumerate_qls(twice) == qls);
    }
  }
  RootSystem a2(LieType::parse("A2"));
  WeylGroup g(a2);
  QuantumBruhatGraph full(g, 0);
  ShapeContext ctx(full, 0);
  CHECK(enumerate_qls(ctx).size() == 3);
  RootSystem g2(LieType::parse("G2"));
  WeylGroup gg(g2);
  QuantumBruhatGraph fg(gg, 0);
  CHECK_THROWS_AS(ShapeContext(fg, 1, 4), PreconditionError);
}

TEST_CASE("weights of QLS paths") {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    RootSystem rs(LieType::parse(name));
    WeylGroup g(rs);
    QuantumBruhatGraph full(g, 0);
    for (int i = 0; i < rs.rank(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      ShapeContext ctx(full, i);
      auto qls = enumerate_qls(ctx);
      std::map<Weight, int> mult;
      for (const auto& eta : qls) ++mult[qls_weight(ctx, eta)];
      // The weight multiset is a character, hence Weyl invariant.
      for (int j = 0; j < rs.rank(); ++j)
        for (const auto& [wt, m] : mult) CHECK(mult[rs.reflect_simple(j, wt)] == m);
      CHECK(mult[rs.fundamental(i)] == 1);
      QlsPath top{i, {g.identity()}, {Rational(0), Rational(1)}};
      CHECK(qls_weight(ctx, top) == rs.fundamental(i));
      QlsPath bottom{i, {ctx.project(g.longest())}, {Rational(0), Rational(1)}};
      CHECK(qls_weight(ctx, bottom) == g.act(g.longest(), rs.fundamental(i)));
    }
  }
}

TEST_CASE("QLS equals LS exactly when <varpi_i, theta^vee> = 1") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    RootSystem rs(LieType::parse(name));
    WeylGroup g(rs);
    QuantumBruhatGraph full(g, 0);
    for (int i = 0; i < rs.rank(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      ShapeContext ctx(full, i);
      auto qls = enumerate_qls(ctx);
      bool all_ls = std::all_of(qls.begin(), qls.end(), [&](const QlsPath& e) { return is_ls(ctx, e); });
      CHECK(all_ls == ctx.minuscule_like());
      for (const auto& eta : qls)
        if (eta.size() == 1) CHECK(is_ls(ctx, eta));
    }
  }
}

TEST_CASE("G2 worked example") {
  RootSystem rs(LieType::parse("G2"));
  WeylGroup g(rs);
  QuantumBruhatGraph full(g, 0);
  ShapeContext ctx(full, 1);
  CHECK(ctx.N() == 6);
  CHECK_FALSE(ctx.minuscule_like());
  const Elem e = g.identity(), w = g.parse("2,1,2,1,2");
  const RootVec theta{3, 2};

  QlsPath eta{1, {e, w}, {Rational(0), Rational(1, 2), Rational(1)}};
  auto qls = enumerate_qls(ctx);
  CHECK(std::binary_search(qls.begin(), qls.end(), eta));
  CHECK(qls_weight(ctx, eta).is_zero());
  CHECK_FALSE(is_ls(ctx, eta));
  auto [k, z] = kappa_zeta(ctx, eta, e);
  CHECK(k == w);
  CHECK(z == CorootVec{1, 2});
  auto [k2, z2] = kappa_zeta(ctx, eta, g.parse("2"));
  CHECK(k2 == w);
  CHECK(z2 == CorootVec{1, 2});

  // p' and p'' in bQLS(w).
  BPathTuple p1;
  p1.start = w;
  p1.parts = {DirectedPath(e), DirectedPath(e), DirectedPath(e), make_path(full, w, {theta}), DirectedPath(w),
              DirectedPath(w)};
  BPathTuple p2 = p1;
  p2.parts[0] = make_path(full, e, {RootVec{0, 1}});
  auto bq = enumerate_bqls(ctx, w);
  CHECK(std::count_if(bq.begin(), bq.end(), [&](const BPathTuple& t) { return t.parts == p1.parts; }) == 1);
  CHECK(std::count_if(bq.begin(), bq.end(), [&](const BPathTuple& t) { return t.parts == p2.parts; }) == 1);
  CHECK(bpath_to_qls(ctx, p1) == std::make_pair(eta, e));
  CHECK(bpath_to_qls(ctx, p2) == std::make_pair(eta, g.parse("2")));
  BPathStats st1 = bpath_stats(rs, p1), st2 = bpath_stats(rs, p2);
  CHECK(st1.length == 1);
  CHECK(st1.end == e);
  CHECK(st1.qwt == CorootVec{1, 2});
  CHECK(st1.qwt2 == CorootVec{1, 2});
  CHECK(st2.length == 2);
  CHECK(st2.end == g.parse("2"));

  // The four-edge tuple in bQLS(s2).
  const Elem s2 = g.parse("2");
  BPathTuple p;
  p.start = s2;
  Elem a = g.parse("1,2"), b = g.parse("2,1,2"), c = g.parse("1,2,1,2");
  p.parts = {make_path(full, c, {RootVec{3, 1}}), DirectedPath(c), make_path(full, b, {RootVec{2, 1}}),
             make_path(full, a, {theta}), make_path(full, s2, {RootVec{1, 1}}), DirectedPath(s2)};
  CHECK(p.end() == w);
  auto bs = enumerate_bqls(ctx, s2);
  CHECK(std::count_if(bs.begin(), bs.end(), [&](const BPathTuple& t) { return t.parts == p.parts; }) == 1);
  auto [etap, v] = bpath_to_qls(ctx, p);
  CHECK(etap.vertices == std::vector<Elem>{c, b, a, s2});
  CHECK(etap.breaks ==
        std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)});
  CHECK(v == w);
  CHECK(bpath_stats(rs, p).length == 4);
  CHECK(bpath_stats(rs, p).qwt.is_zero());
}

TEST_CASE("bQLS(w) is in bijection with pairs (eta, v) with kappa(eta, v) = w") {
  for (const char* name : kSmallTypes) {
    RootSystem rs(LieType::parse(name));
    WeylGroup g(rs);
    QuantumBruhatGraph full(g, 0);
    for (int i = 0; i < rs.rank(); ++i) {
      CAPTURE(name);
      CAPTURE(i);
      ShapeContext ctx(full, i);
      auto qls = enumerate_qls(ctx);
      std::map<Elem, std::set<std::pair<QlsPath, Elem>>> fibres;
      std::map<std::pair<QlsPath, Elem>, CorootVec> zetas;
      for (const auto& eta : qls)
        for (Elem v = 0; v < g.size(); ++v) {
          auto [k, z] = kappa_zeta(ctx, eta, v);
          fibres[k].emplace(eta, v);
          zetas[{eta, v}] = z;
        }
      for (Elem w = 0; w < g.size(); ++w) {
        std::set<std::pair<QlsPath, Elem>> image;
        std::size_t count = 0, trivial = 0;
        for_each_bqls(ctx, w, [&](const BPathTuple& p) {
          ++count;
          auto img = bpath_to_qls(ctx, p);
          image.insert(img);
          BPathStats st = bpath_stats(rs, p);
          CHECK(zetas[img] == st.qwt);
          trivial += st.length == 0;
          for (int k = 1; k <= ctx.N(); ++k) {
            const DirectedPath& part = p.part(k);
            for (int t = 0; t < part.length(); ++t) {
              CHECK(ctx.filter_for_step(k).admits(rs, part.labels[t]));
              CHECK_FALSE(rs.in_subsystem(part.labels[t], ctx.J()));
              if (t > 0) CHECK(ctx.order().before(part.labels[t - 1], part.labels[t]));
            }
            Elem from = k == ctx.N() ? w : p.part(k + 1).end();
            CHECK(part.start() == from);
          }
        });
        CHECK(trivial == 1);
        CHECK(image.size() == count);
        CHECK(image == fibres[w]);
      }
    }
  }
}

TEST_CASE("kappa on constant paths") {
  RootSystem rs(LieType::parse("B3"));
  WeylGroup g(rs);
  QuantumBruhatGraph full(g, 0);
  for (int i = 0; i < 3; ++i) {
    ShapeContext ctx(full, i);
    for (Elem v = 0; v < g.size(); ++v) {
      QlsPath own{i, {ctx.project(v)}, {Rational(0), Rational(1)}};
      auto [k, z] = kappa_zeta(ctx, own, v);
      CHECK(k == v);
      CHECK(z.is_zero());
      for (Elem u : ctx.quotient().vertices()) {
        QlsPath c{i, {u}, {Rational(0), Rational(1)}};
        CHECK(kappa(ctx, c, v) == ctx.paths().tbmax(u, ctx.J(), v));
      }
    }
  }
}
