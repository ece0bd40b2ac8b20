// Command-line front end. Run `qkchev --help` or `qkchev <command> --help`.

#include "qkchev/checks.hpp"
#include "qkchev/error.hpp"
#include "qkchev/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace qkchev;
using nlohmann::json;

namespace {

struct Config {
  std::string type;
  std::string K;
  int i = 0;
  std::string w = "e";
  std::string x = "e";
  std::string d;
  std::string format;
  bool nonequivariant = false;
  int degree_cap = 2;
  std::string method = "reduced";
  bool dual_basis = false;
  std::string a_lambda;
  bool ls_only = false;
  bool stats = false;
  std::string weight_basis = "root";
  int max_rank = 4;
  bool dump_rootsys = false;
  std::string check;
};

NodeSet parse_K(const Config& c, const Context& ctx) {
  return c.K.empty() ? ctx.all() : parse_nodes(c.K, ctx.rank());
}

int node_index(const Config& c, const Context& ctx) {
  if (c.i < 1 || c.i > ctx.rank())
    throw PreconditionError("-i: node must be between 1 and " + std::to_string(ctx.rank()));
  return c.i - 1;
}

// -d lists one entry per node of K, in increasing node order.
CorootVec parse_degree(const Config& c, const Context& ctx, NodeSet K) {
  CorootVec d(ctx.rank());
  if (c.d.empty()) return d;
  std::vector<int> vals;
  std::size_t pos = 0;
  while (pos <= c.d.size()) {
    std::size_t next = c.d.find(',', pos);
    if (next == std::string::npos) next = c.d.size();
    try {
      vals.push_back(std::stoi(c.d.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw PreconditionError("-d: '" + c.d + "' is not a comma list of integers");
    }
    pos = next + 1;
  }
  if (static_cast<int>(vals.size()) != popcount(K))
    throw PreconditionError("-d: expected " + std::to_string(popcount(K)) + " entries (one per node of K)");
  std::size_t k = 0;
  for (int j = 0; j < ctx.rank(); ++j)
    if (contains(K, j)) d[j] = vals[k++];
  return d;
}

std::string format_or(const Config& c, const std::string& fallback) { return c.format.empty() ? fallback : c.format; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw PreconditionError("--format: '" + f + "' is not supported by this command");
}

void dump_rootsys(const RootSystem& rs) {
  json roots = json::array();
  for (int r = 0; r < rs.num_positive(); ++r)
    roots.push_back({{"root", rs.root(r).to_vector()}, {"coroot", rs.coroot(r).to_vector()}});
  json cartan = json::array();
  for (int a = 0; a < rs.rank(); ++a) {
    json row = json::array();
    for (int b = 0; b < rs.rank(); ++b) row.push_back(rs.cartan()(a, b));
    cartan.push_back(row);
  }
  json j = {{"type", rs.type().name()},
            {"cartan", cartan},
            {"positive_roots", roots},
            {"theta", rs.theta().to_vector()},
            {"theta_coroot", rs.theta_coroot().to_vector()}};
  std::cout << j.dump(2) << "\n";
}

int cmd_qbg(const Config& c, const Context& ctx) {
  const std::string f = format_or(c, "dot");
  require_format(f, {"dot", "json", "tsv"});
  std::optional<QbgFilter> filter;
  const QuantumBruhatGraph* q = &ctx.full();
  if (c.i != 0) q = &ctx.shape(node_index(c, ctx)).quotient();
  if (!c.a_lambda.empty()) {
    if (c.i == 0) throw PreconditionError("--a-lambda needs -i");
    filter = QbgFilter{c.i - 1, parse_rational(c.a_lambda)};
  }
  if (f == "dot") std::cout << qbg_to_dot(*q, filter);
  else if (f == "json") std::cout << qbg_to_json(*q, filter).dump(2) << "\n";
  else std::cout << qbg_to_tsv(*q, filter);
  return 0;
}

int cmd_qls(const Config& c, const Context& ctx) {
  const std::string f = format_or(c, "text");
  require_format(f, {"text", "json"});
  const WeightBasis basis = parse_weight_basis(c.weight_basis);
  const ShapeContext& shape = ctx.shape(node_index(c, ctx));
  const Elem v = ctx.group().parse(c.w);
  json arr = json::array();
  for (const QlsPath& eta : enumerate_qls(shape)) {
    const bool ls = is_ls(shape, eta);
    if (c.ls_only && !ls) continue;
    if (f == "json") {
      json j = qls_to_json(ctx, eta);
      if (c.stats) {
        auto [k, zeta] = kappa_zeta(shape, eta, v);
        j["wt"] = format_weight(ctx.roots(), qls_weight(shape, eta), basis);
        j["initial"] = ctx.group().format(eta.vertices.front());
        j["ls"] = ls;
        j["kappa"] = ctx.group().format(k);
        j["zeta"] = zeta.to_vector();
      }
      arr.push_back(j);
      continue;
    }
    std::cout << format_qls(ctx, eta);
    if (c.stats) {
      auto [k, zeta] = kappa_zeta(shape, eta, v);
      std::cout << "  wt=" << format_weight(ctx.roots(), qls_weight(shape, eta), basis)
                << " iota=" << ctx.group().format(eta.vertices.front()) << (ls ? " LS" : " QLS")
                << " kappa(" << ctx.group().format(v) << ")=" << ctx.group().format(k)
                << " zeta=" << format_coords(zeta);
    }
    std::cout << "\n";
  }
  if (f == "json") std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_chevalley(const Config& c, const Context& ctx) {
  const std::string f = format_or(c, "text");
  require_format(f, {"text", "json", "tsv"});
  const WeightBasis basis = parse_weight_basis(c.weight_basis);
  const NodeSet K = parse_K(c, ctx);
  QKClass cls = chevalley_parabolic(ctx, node_index(c, ctx), ctx.group().parse(c.w), K);
  if (c.nonequivariant) cls = specialize_nonequivariant(cls);
  if (f == "json") std::cout << qkclass_to_json(ctx, cls, basis).dump(2) << "\n";
  else if (f == "tsv") std::cout << qkclass_to_tsv(ctx, cls, basis);
  else std::cout << format_qkclass(ctx, cls, basis);
  return 0;
}

int cmd_kgw(const Config& c, const Context& ctx) {
  const std::string f = format_or(c, "text");
  require_format(f, {"text", "json"});
  const WeightBasis basis = parse_weight_basis(c.weight_basis);
  const NodeSet K = parse_K(c, ctx);
  const CorootVec d = parse_degree(c, ctx, K);
  const Elem w = ctx.group().parse(c.w), x = ctx.group().parse(c.x);
  Kgw kgw(ctx);
  GroupAlgElem value;
  if (c.i == 0) {
    value = c.dual_basis ? kgw.dual_two_point(w, x, d, K) : kgw.two_point(w, x, d, K);
  } else if (c.dual_basis) {
    value = kgw.dual_basis_invariant(node_index(c, ctx), w, x, d, K, parse_method(c.method));
  } else {
    value = kgw.three_point(parse_method(c.method), node_index(c, ctx), w, x, d, K);
  }
  if (c.nonequivariant) {
    const long long v = nonequivariant_value(value);
    if (f == "json") std::cout << json(v).dump() << "\n";
    else std::cout << v << "\n";
  } else if (f == "json") {
    std::cout << group_alg_to_json(ctx.roots(), value, basis).dump(2) << "\n";
  } else {
    std::cout << format_group_alg(ctx.roots(), value, basis) << "\n";
  }
  return 0;
}

int cmd_lift(const Config& c, const Context& ctx) {
  const NodeSet K = parse_K(c, ctx);
  Kgw kgw(ctx);
  const CorootVec lift = kgw.peterson_lift(parse_degree(c, ctx, K), K);
  if (format_or(c, "text") == "json") std::cout << json(lift.to_vector()).dump() << "\n";
  else std::cout << format_coords(lift) << "\n";
  return 0;
}

void print_report(const std::string& f, const CheckReport& r) {
  if (f == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << (r.ok() ? "PASS" : "FAIL") << "  " << r.claim << "  (" << r.instances << " instances, " << r.failed
            << " failed)\n";
  if (!r.detail.empty()) std::cout << "  " << r.detail << "\n";
  for (const auto& s : r.failures) std::cout << "  " << s << "\n";
}

int cmd_check(const Config& c) {
  const std::string f = format_or(c, "json");
  require_format(f, {"json", "text"});
  Workbench wb;
  const int cap = c.degree_cap;
  if (cap < 0) throw PreconditionError("--degree-cap must be nonnegative");

  if (c.check == "all") {
    bool ok = true;
    json arr = json::array();
    for (const Criterion& cr : run_acceptance(wb, cap)) {
      ok = ok && cr.passed();
      if (f == "json") {
        json j = report_to_json(cr.report);
        j["criterion"] = cr.number;
        j["seconds"] = cr.seconds;
        j["pass"] = cr.passed();
        arr.push_back(j);
      } else {
        std::cout << "criterion " << cr.number << ": " << (cr.passed() ? "PASS" : "FAIL") << "  " << cr.title << "\n";
      }
    }
    if (f == "json") std::cout << arr.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  if (c.check == "classification") {
    CheckReport r = check_classification(wb, c.max_rank);
    print_report(f, r);
    return r.ok() ? 0 : 1;
  }

  // Without --type each check runs over its acceptance grid.
  std::vector<std::string> types;
  if (!c.type.empty()) types = {c.type};
  else if (c.check == "vanishing")
    for (const LieType& t : types_up_to_rank(c.max_rank)) types.push_back(t.name());
  else if (c.check == "comparison") types = {"A2", "A3", "B2"};
  else if (c.check == "sijections" || c.check == "positivity") types = {"A2", "B2", "G2"};
  else types = {"A1", "A2", "A3", "B2", "C2", "G2"};

  CheckReport total;
  for (const std::string& t : types) {
    const Kgw& kgw = wb.kgw(t);
    const int n = kgw.context().rank();
    std::vector<NodeSet> ks;
    if (!c.K.empty()) ks = {parse_nodes(c.K, n)};
    else if (c.check == "comparison") ks = proper_parabolics(n);
    else ks = {all_nodes(n)};
    for (NodeSet K : ks) {
      CheckReport r;
      if (c.check == "divisor") r = check_divisor(kgw, K, cap, false);
      else if (c.check == "triple") r = check_triple_agreement(kgw, K, cap);
      else if (c.check == "qk2p") r = check_qk2p(kgw, K, cap);
      else if (c.check == "correction-equality") r = check_correction_equality(kgw, K, cap);
      else if (c.check == "comparison") r = check_comparison(kgw, K, cap);
      else if (c.check == "sijections") r = check_sijections(kgw, K, cap);
      else if (c.check == "vanishing") r = check_vanishing(kgw, cap);
      else if (c.check == "positivity") r = check_positivity(kgw, cap);
      else throw PreconditionError("unknown check '" + c.check + "'");
      total.claim = r.claim;
      total.absorb(r);
    }
  }
  print_report(f, total);
  return total.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum K-theoretic Chevalley formulas and 3-point invariants of flag manifolds"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool need_type) {
    auto* t = sub->add_option("--type", c.type, "Lie type, e.g. A3, G2, E6");
    if (need_type) t->required();
    sub->add_option("--K", c.K, "nodes whose Novikov variables survive (G/P), comma list; default all");
    sub->add_option("--format", c.format, "output format: text, json, tsv or dot");
    sub->add_option("--weight-basis", c.weight_basis, "exponent basis: root or fundamental")
        ->check(CLI::IsMember({"root", "fundamental"}));
    sub->add_flag("--dump-rootsys", c.dump_rootsys, "print the root system data as JSON and exit");
  };
  auto element_opts = [&](CLI::App* sub) {
    sub->add_option("-i", c.i, "node i of O^{s_i}, 1-based");
    sub->add_option("-w", c.w, "Weyl group element as a reduced word, e.g. 2,1,2 (e for identity)");
    sub->add_option("-x", c.x, "Weyl group element for O_x (or (O^x)^vee with --dual-basis)");
    sub->add_option("-d", c.d, "degree, one entry per node of K");
  };

  CLI::App* qbg = app.add_subcommand("qbg", "quantum Bruhat graph (full, or QBG(W^J) with -i)");
  common(qbg, true);
  qbg->add_option("-i", c.i, "node i: graph on W^J with J = I minus {i}");
  qbg->add_option("--a-lambda", c.a_lambda, "keep only edges of QBG_{a varpi_i}, a = k/N");

  CLI::App* qls = app.add_subcommand("qls", "enumerate QLS(varpi_i)");
  common(qls, true);
  qls->add_option("-i", c.i, "node i")->required();
  qls->add_option("-w", c.w, "v for kappa(eta, v) in --stats");
  qls->add_flag("--ls-only", c.ls_only, "only the LS paths");
  qls->add_flag("--stats", c.stats, "show wt, initial direction and kappa/zeta");

  CLI::App* chev = app.add_subcommand("chevalley", "O^{s_i} * O^w in QK_T(G/B) or QK_T(G/P)");
  common(chev, true);
  element_opts(chev);
  chev->get_option("-i")->required();
  chev->add_flag("--nonequivariant", c.nonequivariant, "specialize e^mu to 1");

  CLI::App* kgw = app.add_subcommand("kgw", "2-point (no -i) or 3-point invariant <O^{s_i}, O^w, O_x>_d");
  common(kgw, true);
  element_opts(kgw);
  kgw->add_option("--method", c.method, "pairing, full or reduced")
      ->check(CLI::IsMember({"pairing", "full", "reduced"}));
  kgw->add_flag("--dual-basis", c.dual_basis, "use (O^x)^vee in place of O_x; x minimal");
  kgw->add_flag("--nonequivariant", c.nonequivariant, "print the non-equivariant integer");

  CLI::App* check = app.add_subcommand("check", "run an exhaustive check; exit 1 on any failure");
  common(check, false);
  check->add_option("name", c.check,
                    "divisor, vanishing, correction-equality, comparison, sijections, positivity, "
                    "classification, triple, qk2p or all")
      ->required()
      ->check(CLI::IsMember({"divisor", "vanishing", "correction-equality", "comparison", "sijections",
                             "positivity", "classification", "triple", "qk2p", "all"}));
  check->add_option("--degree-cap", c.degree_cap, "largest degree coordinate in the grids (default 2)");
  check->add_option("--max-rank", c.max_rank, "largest rank for classification and vanishing (default 4)");

  CLI::App* lift = app.add_subcommand("lift", "Peterson lift of a degree of G/P");
  common(lift, true);
  lift->add_option("-d", c.d, "degree, one entry per node of K");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c.dump_rootsys) {
      if (c.type.empty()) throw PreconditionError("--dump-rootsys needs --type");
      dump_rootsys(RootSystem(LieType::parse(c.type)));
      return 0;
    }
    if (check->parsed()) return cmd_check(c);
    Context ctx(LieType::parse(c.type));
    if (qbg->parsed()) return cmd_qbg(c, ctx);
    if (qls->parsed()) return cmd_qls(c, ctx);
    if (chev->parsed()) return cmd_chevalley(c, ctx);
    if (kgw->parsed()) return cmd_kgw(c, ctx);
    if (lift->parsed()) return cmd_lift(c, ctx);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
