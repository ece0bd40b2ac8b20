#include "qkchev/checks.hpp"

#include "qkchev/error.hpp"
#include "qkchev/io.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace qkchev {

std::vector<CorootVec> degree_grid(int rank, NodeSet K, int cap) {
  std::vector<CorootVec> out{CorootVec(rank)};
  for (int j = 0; j < rank; ++j) {
    if (!contains(K, j)) continue;
    std::vector<CorootVec> next;
    for (const CorootVec& d : out)
      for (int c = 0; c <= cap; ++c) {
        CorootVec e = d;
        e[j] = c;
        next.push_back(e);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> proper_parabolics(int rank) {
  std::vector<NodeSet> out;
  for (NodeSet k = 1; k < all_nodes(rank); ++k) out.push_back(k);
  return out;
}

std::vector<LieType> types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  auto add = [&](Family f, int lo, int hi) {
    for (int r = lo; r <= std::min(hi, max_rank); ++r) out.push_back(LieType::make(f, r));
  };
  add(Family::A, 1, kMaxRank);
  add(Family::B, 2, kMaxRank);
  add(Family::C, 2, kMaxRank);
  add(Family::D, 3, kMaxRank);
  add(Family::E, 6, 8);
  add(Family::F, 4, 4);
  add(Family::G, 2, 2);
  return out;
}

const Context& Workbench::context(const std::string& type) {
  const std::string key = LieType::parse(type).name();
  auto& slot = contexts_[key];
  if (!slot) slot = std::make_unique<Context>(LieType::parse(key));
  return *slot;
}

const Kgw& Workbench::kgw(const std::string& type) {
  const std::string key = LieType::parse(type).name();
  auto& slot = kgws_[key];
  if (!slot) slot = std::make_unique<Kgw>(context(key));
  return *slot;
}

namespace {

template <class F>
void for_each_instance(const Kgw& kgw, NodeSet K, int cap, F&& f) {
  const Context& ctx = kgw.context();
  const WeylGroup& g = ctx.group();
  K &= ctx.all();
  const NodeSet comp = complement(K, ctx.rank());
  const auto ws = g.min_reps(comp);
  const auto xs = g.max_reps(comp);
  const auto ds = degree_grid(ctx.rank(), K, cap);
  for (int i = 0; i < ctx.rank(); ++i) {
    if (!contains(K, i)) continue;
    for (Elem w : ws)
      for (Elem x : xs)
        for (const CorootVec& d : ds) f(i, w, x, d);
  }
}

std::string describe(const Context& ctx, int i, Elem w, Elem x, const CorootVec& d, NodeSet K) {
  return ctx.roots().type().name() + " K=" + format_nodes(K, ctx.rank()) + " i=" + std::to_string(i + 1) +
         " w=" + ctx.group().format(w) + " x=" + ctx.group().format(x) + " d=" + format_coords(d);
}

// Runs one check and turns an exception into a recorded failure.
template <class F>
void guarded(CheckReport& rep, const std::string& where, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    ++rep.instances;
    rep.fail(where + ": " + e.what());
  }
}

std::vector<std::vector<int>> bfs_distances(const QuantumBruhatGraph& q) {
  const WeylGroup& g = q.group();
  const int npos = g.roots().num_positive();
  std::vector<std::vector<int>> d(g.size(), std::vector<int>(g.size(), -1));
  for (Elem s = 0; s < g.size(); ++s) {
    std::vector<Elem> queue{s};
    d[s][s] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Elem x = queue[k];
      for (int r = 0; r < npos; ++r) {
        if (q.kind(x, r) == EdgeKind::None) continue;
        const Elem y = q.target(x, r);
        if (d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return d;
}

template <class F>
CheckReport timed_criterion(F&& f, double& seconds) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CheckReport check_triple_agreement(const Kgw& kgw, NodeSet K, int cap) {
  const Context& ctx = kgw.context();
  CheckReport rep;
  rep.claim = "pairing, full and reduced 3-point values agree";
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    const std::string where = describe(ctx, i, w, x, d, K);
    guarded(rep, where, [&] {
      ++rep.instances;
      GroupAlgElem a = kgw.three_point_via_pairing(i, w, x, d, K);
      GroupAlgElem b = kgw.three_point_full(i, w, x, d, K);
      GroupAlgElem c = kgw.three_point_reduced(i, w, x, d, K);
      if (a != b || a != c)
        rep.fail(where + ": pairing " + format_group_alg(ctx.roots(), a) + ", full " +
                 format_group_alg(ctx.roots(), b) + ", reduced " + format_group_alg(ctx.roots(), c));
    });
  });
  return rep;
}

CheckReport check_divisor(const Kgw& kgw, NodeSet K, int cap, bool only_di_zero) {
  const Context& ctx = kgw.context();
  CheckReport rep;
  rep.claim = only_di_zero ? "3-point value equals the classical product paired with O_x when d_i = 0"
                           : "divisor-axiom analogue (d_i = 0, or d_i > 0 with <varpi_i, theta^vee> = 1)";
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    if (only_di_zero && d[i] != 0) return;
    guarded(rep, describe(ctx, i, w, x, d, K), [&] {
      CheckReport r = kgw.divisor_axiom_check(i, w, x, d, K);
      r.claim.clear();
      rep.absorb(r);
    });
  });
  return rep;
}

CheckReport check_qk2p(const Kgw& kgw, NodeSet K, int cap) {
  const Context& ctx = kgw.context();
  CheckReport rep;
  rep.claim = "signed sums over pbQLS^+ and over pbQLS^0 \\ pbR vanish";
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    guarded(rep, describe(ctx, i, w, x, d, K), [&] { rep.absorb(kgw.qk2p_sums_check(i, w, x, d, K)); });
  });
  return rep;
}

CheckReport check_correction_equality(const Kgw& kgw, NodeSet K, int cap) {
  const Context& ctx = kgw.context();
  CheckReport rep;
  rep.claim = "sum over pbR equals the sum over pairs (v, eta) with kappa(eta, v) = w";
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    const std::string where = describe(ctx, i, w, x, d, K);
    guarded(rep, where, [&] {
      ++rep.instances;
      GroupAlgElem a = kgw.pbr_sum(i, w, x, d, K);
      GroupAlgElem b = kgw.correction_term_qls(i, w, x, d, K);
      if (a != b)
        rep.fail(where + ": " + format_group_alg(ctx.roots(), a) + " != " + format_group_alg(ctx.roots(), b));
    });
  });
  return rep;
}

CheckReport check_sijections(const Kgw& kgw, NodeSet K, int cap) {
  const Context& ctx = kgw.context();
  CheckReport rep;
  rep.claim = "Theta, Theta' and Psi are sign-reversing involutions preserving eta";
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    guarded(rep, describe(ctx, i, w, x, d, K), [&] { rep.absorb(kgw.sijection_check(i, w, x, d, K)); });
  });
  return rep;
}

CheckReport check_comparison(const Kgw& kgw, NodeSet K, int cap) {
  const Context& ctx = kgw.context();
  const RootSystem& rs = ctx.roots();
  K &= ctx.all();
  const NodeSet comp = complement(K, ctx.rank());
  CheckReport rep;
  rep.claim = "Peterson lift conditions; parabolic values and pbR sums agree with G/B at the lift";
  for (const CorootVec& d : degree_grid(ctx.rank(), K, cap)) {
    const std::string where = rs.type().name() + " K=" + format_nodes(K, ctx.rank()) + " d=" + format_coords(d);
    guarded(rep, where, [&] {
      ++rep.instances;
      const CorootVec lift = kgw.peterson_lift(d, K);
      if (project(lift, K) != d) rep.fail(where + ": lift " + format_coords(lift) + " does not project to d");
      for (int r = 0; r < rs.num_positive(); ++r) {
        if (!rs.in_subsystem(r, comp)) continue;
        const int v = rs.pairing(rs.root_weight(r), lift);
        if (v != 0 && v != -1)
          rep.fail(where + ": <" + rs.format_root(rs.root(r)) + ", lift> = " + std::to_string(v));
      }
    });
  }
  for_each_instance(kgw, K, cap, [&](int i, Elem w, Elem x, const CorootVec& d) {
    guarded(rep, describe(ctx, i, w, x, d, K), [&] { rep.absorb(kgw.comparison_check(i, w, x, d, K)); });
  });
  return rep;
}

CheckReport check_vanishing(const Kgw& kgw, int cap) {
  const Context& ctx = kgw.context();
  const WeylGroup& g = ctx.group();
  const int n = ctx.rank();
  const NodeSet all = ctx.all();
  CheckReport rep;
  rep.claim = "pbR is empty when <varpi_i, theta^vee> = 1 and d_i > 0";
  const auto ds = degree_grid(n, all, cap);
  for (int i = 0; i < n; ++i) {
    const ShapeContext& shape = ctx.shape(i);
    if (!shape.minuscule_like()) continue;
    const NodeSet J = shape.J();
    long long positive = std::count_if(ds.begin(), ds.end(), [&](const CorootVec& d) { return d[i] > 0; });
    rep.instances += static_cast<long long>(g.size()) * g.size() * positive;
    for (Elem w = 0; w < g.size(); ++w) {
      for (const BqlsEntry& e : kgw.entries(i, w)) {
        if (e.length1 != 0 || e.qwt2[i] < 1 || e.qwt2[i] > cap) continue;
        for (Elem z : g.subgroup(J)) {
          const Elem x = g.mul(e.end, z);
          for (const CorootVec& d : ds)
            if (d[i] == e.qwt2[i] && kgw.in_pbr(i, e, x, d, all))
              rep.fail(describe(ctx, i, w, x, d, all) + ": pbR contains " + format_bpath(ctx, e.path));
        }
      }
    }
  }
  return rep;
}

CheckReport check_positivity(const Kgw& kgw, int cap) {
  const Context& ctx = kgw.context();
  const WeylGroup& g = ctx.group();
  const NodeSet all = ctx.all();
  CheckReport rep;
  rep.claim = "non-equivariant <O^{s_i}, O_u, (O^w)^vee>_d has sign epsilon (-1)^{l(w)}";
  for (int i = 0; i < ctx.rank(); ++i) {
    const bool minuscule = ctx.shape(i).minuscule_like();
    for (const CorootVec& d : degree_grid(ctx.rank(), all, cap)) {
      if (d[i] != 0 && !minuscule) continue;
      for (Elem u = 0; u < g.size(); ++u) {
        const std::string where = ctx.roots().type().name() + " i=" + std::to_string(i + 1) + " u=" + g.format(u) +
                                  " d=" + format_coords(d);
        guarded(rep, where, [&] { rep.absorb(kgw.positivity_check(i, u, d, all)); });
      }
    }
  }
  return rep;
}

CheckReport check_classification(Workbench& wb, int max_rank) {
  CheckReport rep;
  rep.claim = "computed classification matches the published table; QLS = LS iff <varpi_i, theta^vee> = 1";
  std::string skipped;
  for (const LieType& t : types_up_to_rank(max_rank)) {
    ++rep.instances;
    RootSystem rs(t);
    const NodeSet computed = computed_classification(rs), published = published_classification(t);
    if (computed != published)
      rep.fail(t.name() + ": computed {" + format_nodes(computed, t.rank) + "} but the table lists {" +
               format_nodes(published, t.rank) + "}");
    if (weyl_group_order(t) > static_cast<double>(default_group_bound())) {
      skipped += " " + t.name();
      continue;
    }
    const Context& ctx = wb.context(t.name());
    for (int i = 0; i < t.rank; ++i) {
      ++rep.instances;
      const ShapeContext& shape = ctx.shape(i);
      bool all_ls = true;
      for (const QlsPath& eta : enumerate_qls(shape)) all_ls = all_ls && is_ls(shape, eta);
      if (all_ls != contains(computed, i))
        rep.fail(t.name() + " i=" + std::to_string(i + 1) + ": QLS = LS is " + (all_ls ? "true" : "false"));
    }
  }
  if (!skipped.empty()) rep.detail = "QLS = LS not enumerated (Weyl group over the size bound):" + skipped;
  return rep;
}

CheckReport check_qbg_structure(const Context& ctx, int slack, bool with_tbmax) {
  const RootSystem& rs = ctx.roots();
  const WeylGroup& g = ctx.group();
  const QuantumBruhatGraph& q = ctx.full();
  const ShortestPaths& sp = ctx.paths();
  const ReflectionOrder& ord = sp.order();
  const int npos = rs.num_positive();
  const std::string name = rs.type().name();
  const auto dist = bfs_distances(q);
  CheckReport rep;
  rep.claim = "unique label-monotone paths, minimal qwt and tbmax in " + name;

  for (Elem v = 0; v < g.size(); ++v) {
    // Count label-increasing and label-decreasing paths from v by DFS.
    std::vector<int> inc(g.size()), dec(g.size());
    std::vector<CorootVec> inc_wt(g.size());
    CorootVec wt(rs.rank());
    std::function<void(Elem, int, bool)> dfs = [&](Elem y, int bound, bool up) {
      auto& hits = up ? inc : dec;
      if (++hits[y] == 1 && up) inc_wt[y] = wt;
      for (int r = 0; r < npos; ++r) {
        const int k = ord.rank_of(r);
        if (up ? k <= bound : k >= bound) continue;
        const EdgeKind kind = q.kind(y, r);
        if (kind == EdgeKind::None) continue;
        if (kind == EdgeKind::Quantum) wt += rs.coroot(r);
        dfs(q.target(y, r), k, up);
        if (kind == EdgeKind::Quantum) wt -= rs.coroot(r);
      }
    };
    dfs(v, -1, true);
    dfs(v, npos, false);
    for (Elem w = 0; w < g.size(); ++w) {
      ++rep.instances;
      if (inc[w] != 1 || dec[w] != 1)
        rep.fail(name + " " + g.format(v) + " => " + g.format(w) + ": " + std::to_string(inc[w]) +
                 " increasing and " + std::to_string(dec[w]) + " decreasing paths");
      else if (sp.qwt(v, w) != inc_wt[w] || sp.distance(v, w) != dist[v][w])
        rep.fail(name + " " + g.format(v) + " => " + g.format(w) + ": path tables disagree with the DFS");
    }

    // Layered walks: every walk of length up to shortest + slack has weight
    // at least qwt, with equality for the shortest ones.
    std::set<std::pair<Elem, CorootVec>> layer{{v, CorootVec(rs.rank())}};
    const int max_d = *std::max_element(dist[v].begin(), dist[v].end());
    for (int k = 0; k <= max_d + slack && !layer.empty(); ++k) {
      std::set<std::pair<Elem, CorootVec>> next;
      for (const auto& [y, w8] : layer) {
        if (k > dist[v][y] + slack) continue;
        ++rep.instances;
        const CorootVec best = sp.qwt(v, y);
        if (!best.leq(w8) || (k == dist[v][y] && best != w8))
          rep.fail(name + " " + g.format(v) + " => " + g.format(y) + ": walk of length " + std::to_string(k) +
                   " has weight " + format_coords(w8) + " against qwt " + format_coords(best));
        for (int r = 0; r < npos; ++r) {
          const EdgeKind kind = q.kind(y, r);
          if (kind == EdgeKind::None) continue;
          next.emplace(q.target(y, r), kind == EdgeKind::Quantum ? w8 + rs.coroot(r) : w8);
        }
      }
      layer = std::move(next);
    }
  }

  if (!with_tbmax) return rep;
  for (NodeSet lam = 0; lam <= ctx.all(); ++lam) {
    ReflectionOrder lord(g, lam);
    ShortestPaths lsp(q, lord);
    for (Elem u : g.min_reps(lam)) {
      std::vector<Elem> coset;
      for (Elem z : g.subgroup(lam)) coset.push_back(g.mul(u, z));
      for (Elem v = 0; v < g.size(); ++v) {
        ++rep.instances;
        std::vector<Elem> maxima;
        for (Elem c : coset)
          if (std::all_of(coset.begin(), coset.end(),
                          [&](Elem c2) { return dist[c2][v] == dist[c2][c] + dist[c][v]; }))
            maxima.push_back(c);
        const Elem got = lsp.tbmax(u, lam, v);
        if (maxima.size() != 1 || maxima[0] != got)
          rep.fail(name + " tbmax(" + g.format(u) + ", {" + format_nodes(lam, rs.rank()) + "}, " + g.format(v) +
                   ") = " + g.format(got) + " but the dual tilted order has " + std::to_string(maxima.size()) +
                   " maxima");
      }
    }
  }
  return rep;
}

CheckReport check_g2_three_point(Workbench& wb) {
  const Context& ctx = wb.context("G2");
  const Kgw& kgw = wb.kgw("G2");
  const RootSystem& rs = ctx.roots();
  const WeylGroup& g = ctx.group();
  const NodeSet all = ctx.all();
  const Elem w = g.parse("2,1,2,1,2");
  const GroupAlgElem one = GroupAlgElem::constant(2, 1);
  const GroupAlgElem special = one + GroupAlgElem::monomial(-rs.to_weight(RootVec{3, 2}));
  CheckReport rep;
  rep.claim = "G2, i = 2, w = s2s1s2s1s2, d = (d1, 2): 1 + e^{-(3a1+2a2)} at x in {e, s1}, else 1";
  for (int d1 = 1; d1 <= 3; ++d1) {
    const CorootVec d{d1, 2};
    for (Elem x = 0; x < g.size(); ++x) {
      ++rep.instances;
      const GroupAlgElem want = (x == g.identity() || x == g.parse("1")) ? special : one;
      const GroupAlgElem got = kgw.three_point_reduced(1, w, x, d, all);
      if (got != want)
        rep.fail("d=" + format_coords(d) + " x=" + g.format(x) + ": " + format_group_alg(rs, got) + ", expected " +
                 format_group_alg(rs, want));
    }
  }
  return rep;
}

CheckReport check_g2_dual_basis(Workbench& wb) {
  const Context& ctx = wb.context("G2");
  const Kgw& kgw = wb.kgw("G2");
  const RootSystem& rs = ctx.roots();
  const WeylGroup& g = ctx.group();
  const NodeSet all = ctx.all();
  const Elem w = g.parse("2,1,2,1,2");
  const Weight theta = rs.to_weight(RootVec{3, 2});
  const GroupAlgElem one = GroupAlgElem::constant(2, 1);
  CheckReport rep;
  rep.claim = "G2 dual-basis and line-bundle values for i = 2, w = s2s1s2s1s2, d = (d1, 2)";
  for (int d1 = 1; d1 <= 3; ++d1) {
    const CorootVec d{d1, 2};
    for (Elem x = 0; x < g.size(); ++x) {
      GroupAlgElem want_dual, want_line;
      if (x == g.identity()) {
        want_dual = one + GroupAlgElem::monomial(-theta);
        want_line = one + GroupAlgElem::monomial(theta);
      } else if (x == g.parse("2")) {
        want_dual = GroupAlgElem::monomial(-theta, -1);
        want_line = GroupAlgElem::monomial(theta, -1);
      }
      const std::string where = "d=" + format_coords(d) + " x=" + g.format(x);
      rep.instances += 3;
      const GroupAlgElem dual = kgw.dual_basis_invariant(1, w, x, d, all);
      if (dual != want_dual)
        rep.fail(where + ": dual basis " + format_group_alg(rs, dual) + ", expected " + format_group_alg(rs, want_dual));
      const GroupAlgElem line = kgw.line_bundle_invariant(1, w, x, d);
      if (line != want_line)
        rep.fail(where + ": line bundle " + format_group_alg(rs, line) + ", expected " +
                 format_group_alg(rs, want_line));
      CheckReport id = kgw.line_bundle_identity_check(1, w, x, d);
      for (const auto& f : id.failures) rep.fail(where + ": " + f);
    }
  }
  return rep;
}

std::vector<Criterion> run_acceptance(Workbench& wb, int cap, const std::function<void(CheckReport&)>& extra7,
                                      const std::function<void(const Criterion&)>& on_done) {
  struct Grid {
    const char* type;
    bool proper;
  };
  // Criterion-3 grid: K = I in six types, every proper K in three.
  const std::vector<Grid> grid = {{"A1", false}, {"A2", false}, {"A3", false}, {"B2", false}, {"C2", false},
                                  {"G2", false}, {"A2", true},  {"A3", true},  {"B2", true}};
  auto over_grid = [&](const std::function<CheckReport(const Kgw&, NodeSet)>& f, const std::string& claim) {
    CheckReport rep;
    rep.claim = claim;
    for (const Grid& gr : grid) {
      const Kgw& kgw = wb.kgw(gr.type);
      const int n = kgw.context().rank();
      std::vector<NodeSet> ks = gr.proper ? proper_parabolics(n) : std::vector<NodeSet>{all_nodes(n)};
      for (NodeSet K : ks) rep.absorb(f(kgw, K));
    }
    return rep;
  };

  std::vector<Criterion> out;
  auto run = [&](int number, const std::string& title, double limit, const std::function<CheckReport()>& f) {
    Criterion c;
    c.number = number;
    c.title = title;
    c.time_limit = limit;
    try {
      c.report = timed_criterion(f, c.seconds);
    } catch (const std::exception& e) {
      c.report.fail(std::string("exception: ") + e.what());
    }
    if (on_done) on_done(c);
    out.push_back(std::move(c));
  };

  run(1, "G2 worked three-point values", 10, [&] { return check_g2_three_point(wb); });
  run(2, "G2 dual-basis and line-bundle values", 10, [&] { return check_g2_dual_basis(wb); });
  run(3, "triple agreement of the 3-point formulas", 600, [&] {
    return over_grid([&](const Kgw& k, NodeSet K) { return check_triple_agreement(k, K, cap); },
                     "pairing, full and reduced 3-point values agree");
  });
  run(4, "parabolic theorem at d_i = 0", 0, [&] {
    return over_grid([&](const Kgw& k, NodeSet K) { return check_divisor(k, K, cap, true); },
                     "3-point value equals the classical product paired with O_x when d_i = 0");
  });
  run(5, "pbR vanishes for <varpi_i, theta^vee> = 1 and d_i > 0", 0, [&] {
    CheckReport rep;
    rep.claim = "pbR is empty when <varpi_i, theta^vee> = 1 and d_i > 0";
    for (const LieType& t : types_up_to_rank(4)) rep.absorb(check_vanishing(wb.kgw(t.name()), cap));
    return rep;
  });
  run(6, "signed sums over pbQLS^+ and pbQLS^0 \\ pbR; sijections", 0, [&] {
    CheckReport rep = over_grid([&](const Kgw& k, NodeSet K) { return check_qk2p(k, K, cap); },
                                "signed sums vanish; sijections are sign-reversing involutions");
    for (const char* t : {"A2", "B2", "G2"}) {
      const Kgw& kgw = wb.kgw(t);
      const int n = kgw.context().rank();
      std::vector<NodeSet> ks = proper_parabolics(n);
      ks.push_back(all_nodes(n));
      for (NodeSet K : ks) rep.absorb(check_sijections(kgw, K, cap));
    }
    return rep;
  });
  run(7, "quantum Bruhat graph structure", 0, [&] {
    CheckReport rep;
    rep.claim = "unique label-monotone paths, minimal qwt, tbmax against the dual tilted order";
    for (const char* t : {"A1", "A2", "A3", "B2", "C2", "D3", "B3", "C3", "G2"})
      rep.absorb(check_qbg_structure(wb.context(t), 4, true));
    if (extra7) extra7(rep);
    return rep;
  });
  run(8, "classification and QLS = LS", 0, [&] { return check_classification(wb, 4); });
  run(9, "Peterson lift and comparison with G/B", 0, [&] {
    CheckReport rep;
    rep.claim = "Peterson lift conditions; parabolic values and pbR sums agree with G/B at the lift";
    for (const char* t : {"A2", "A3", "B2"}) {
      const Kgw& kgw = wb.kgw(t);
      for (NodeSet K : proper_parabolics(kgw.context().rank())) rep.absorb(check_comparison(kgw, K, cap));
    }
    return rep;
  });
  run(10, "positivity, constant sign per parity", 0, [&] {
    CheckReport rep = check_positivity(wb.kgw("A2"), cap);
    rep.absorb(check_positivity(wb.kgw("G2"), cap));
    return rep;
  });
  return out;
}

}  // namespace qkchev
