#include "qkchev/io.hpp"

#include "qkchev/error.hpp"

#include <algorithm>
#include <sstream>

namespace qkchev {

using nlohmann::json;

WeightBasis parse_weight_basis(const std::string& s) {
  if (s == "root") return WeightBasis::Root;
  if (s == "fundamental") return WeightBasis::Fundamental;
  throw PreconditionError("unknown weight basis '" + s + "' (expected root or fundamental)");
}

namespace {

std::vector<Rational> coords(const RootSystem& rs, const Weight& mu, WeightBasis basis) {
  if (basis == WeightBasis::Root) return rs.to_root_coords(mu);
  std::vector<Rational> out;
  for (int j = 0; j < mu.size(); ++j) out.emplace_back(mu[j]);
  return out;
}

Weight from_coords(const RootSystem& rs, const std::vector<Rational>& c, WeightBasis basis) {
  const int n = rs.rank();
  if (static_cast<int>(c.size()) != n) throw PreconditionError("weight has the wrong number of coordinates");
  Weight out(n);
  for (int k = 0; k < n; ++k) {
    Rational v;
    if (basis == WeightBasis::Fundamental) {
      v = c[k];
    } else {
      for (int j = 0; j < n; ++j) v += c[j] * Rational(rs.to_weight(RootVec::unit(n, j))[k]);
    }
    if (v.denominator() != 1) throw PreconditionError("weight is not integral");
    out[k] = static_cast<int>(v.numerator());
  }
  return out;
}

json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return format_rational(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw PreconditionError("expected an integer or a fraction string, got " + j.dump());
}

// Display order: decreasing root coordinates, lexicographically.
std::vector<std::pair<Weight, long long>> display_order(const RootSystem& rs, const GroupAlgElem& a) {
  std::vector<std::pair<std::vector<Rational>, std::pair<Weight, long long>>> keyed;
  for (const auto& [mu, c] : a.terms()) keyed.push_back({rs.to_root_coords(mu), {mu, c}});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<std::pair<Weight, long long>> out;
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

std::string format_monomial(const RootSystem& rs, const Weight& mu, long long c, WeightBasis basis) {
  if (mu.is_zero()) return std::to_string(c);
  std::string e = "e^" + format_weight(rs, mu, basis);
  return c == 1 ? e : std::to_string(c) + "*" + e;
}

std::string edge_label(const RootSystem& rs, int r) { return rs.format_root(rs.root(r)); }

bool keep_edge(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& f, int r) {
  if (!f) return true;
  Rational v = f->a * Rational(q.roots().coroot(r)[f->node]);
  return v.denominator() == 1;
}

template <class F>
void for_each_edge(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& f, F&& visit) {
  for (Elem x : q.vertices())
    for (const QbgEdge& e : q.out_edges(x))
      if (keep_edge(q, f, e.label)) visit(e);
}

}  // namespace

std::string format_weight(const RootSystem& rs, const Weight& mu, WeightBasis basis) {
  std::string out = "[";
  bool first = true;
  for (const Rational& q : coords(rs, mu, basis)) {
    if (!first) out += ",";
    first = false;
    out += format_rational(q);
  }
  return out + "]";
}

std::string format_group_alg(const RootSystem& rs, const GroupAlgElem& a, WeightBasis basis) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, c] : display_order(rs, a)) {
    if (out.empty()) {
      out = c < 0 ? "-" + format_monomial(rs, mu, -c, basis) : format_monomial(rs, mu, c, basis);
    } else {
      out += c < 0 ? " - " : " + ";
      out += format_monomial(rs, mu, c < 0 ? -c : c, basis);
    }
  }
  return out;
}

std::string format_qkclass(const Context& ctx, const QKClass& c, WeightBasis basis) {
  if (c.terms().empty()) return "0\n";
  std::string out;
  for (const auto& [z, poly] : c.terms())
    for (const auto& [deg, coeff] : poly.terms())
      out += "O^{" + ctx.group().format(z) + "} Q^" + format_coords(deg) + " : " +
             format_group_alg(ctx.roots(), coeff, basis) + "\n";
  return out;
}

std::string format_qls(const Context& ctx, const QlsPath& eta) {
  std::string out = "(";
  for (int k = 0; k < eta.size(); ++k) {
    if (k) out += " | ";
    out += ctx.group().format(eta.vertices[k]);
  }
  out += " ; ";
  for (std::size_t k = 0; k < eta.breaks.size(); ++k) {
    if (k) out += ", ";
    out += format_rational(eta.breaks[k]);
  }
  return out + ")";
}

std::string format_bpath(const Context& ctx, const BPathTuple& p) {
  const WeylGroup& g = ctx.group();
  std::string out;
  for (int k = static_cast<int>(p.parts.size()); k >= 1; --k) {
    const DirectedPath& part = p.part(k);
    if (!out.empty()) out += " ; ";
    out += "p" + std::to_string(k) + ": " + g.format(part.start());
    for (int e = 0; e < part.length(); ++e) {
      const std::string lab = edge_label(ctx.roots(), part.labels[e]);
      out += part.kinds[e] == EdgeKind::Quantum ? " =" + lab + "=> " : " -" + lab + "-> ";
      out += g.format(part.vertices[e + 1]);
    }
  }
  return out;
}

json group_alg_to_json(const RootSystem& rs, const GroupAlgElem& a, WeightBasis basis) {
  json arr = json::array();
  for (const auto& [mu, c] : display_order(rs, a)) {
    json wt = json::array();
    for (const Rational& q : coords(rs, mu, basis)) wt.push_back(rational_json(q));
    arr.push_back({{"wt", wt}, {"c", c}});
  }
  return arr;
}

GroupAlgElem group_alg_from_json(const RootSystem& rs, const json& j, WeightBasis basis) {
  if (!j.is_array()) throw PreconditionError("coefficient must be a JSON array");
  GroupAlgElem out;
  for (const json& t : j) {
    std::vector<Rational> c;
    for (const json& x : t.at("wt")) c.push_back(rational_from_json(x));
    out.add(from_coords(rs, c, basis), t.at("c").get<long long>());
  }
  return out;
}

json qkclass_to_json(const Context& ctx, const QKClass& c, WeightBasis basis) {
  json arr = json::array();
  for (const auto& [z, poly] : c.terms())
    for (const auto& [deg, coeff] : poly.terms())
      arr.push_back({{"w", ctx.group().format(z)},
                     {"Q", deg.to_vector()},
                     {"coeff", group_alg_to_json(ctx.roots(), coeff, basis)}});
  return arr;
}

QKClass qkclass_from_json(const Context& ctx, const json& j, NodeSet K, WeightBasis basis) {
  if (!j.is_array()) throw PreconditionError("class must be a JSON array");
  QKClass out(ctx.rank(), K & ctx.all());
  for (const json& t : j) {
    const CorootVec deg = CorootVec::from_vector(t.at("Q").get<std::vector<int>>());
    if (deg.size() != ctx.rank()) throw PreconditionError("Novikov degree has the wrong length");
    out.add(ctx.group().parse(t.at("w").get<std::string>()), deg,
            group_alg_from_json(ctx.roots(), t.at("coeff"), basis));
  }
  return out;
}

std::string qkclass_to_tsv(const Context& ctx, const QKClass& c, WeightBasis basis) {
  std::string out = "w\tQ\twt\tc\n";
  for (const auto& [z, poly] : c.terms())
    for (const auto& [deg, coeff] : poly.terms())
      for (const auto& [mu, k] : display_order(ctx.roots(), coeff))
        out += ctx.group().format(z) + "\t" + format_coords(deg) + "\t" + format_weight(ctx.roots(), mu, basis) +
               "\t" + std::to_string(k) + "\n";
  return out;
}

json qls_to_json(const Context& ctx, const QlsPath& eta) {
  json v = json::array(), b = json::array();
  for (Elem x : eta.vertices) v.push_back(ctx.group().format(x));
  for (const Rational& q : eta.breaks) b.push_back(format_rational(q));
  return {{"node", eta.node + 1}, {"vertices", v}, {"breakpoints", b}};
}

QlsPath qls_from_json(const Context& ctx, int node, const json& j) {
  QlsPath eta;
  eta.node = node;
  if (j.contains("node") && j.at("node").get<int>() != node + 1)
    throw PreconditionError("QLS path belongs to a different node");
  for (const json& v : j.at("vertices")) eta.vertices.push_back(ctx.group().parse(v.get<std::string>()));
  for (const json& b : j.at("breakpoints")) eta.breaks.push_back(rational_from_json(b));
  if (eta.breaks.size() != eta.vertices.size() + 1)
    throw PreconditionError("a QLS path with s vertices needs s + 1 breakpoints");
  return eta;
}

std::string qbg_to_dot(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter) {
  const WeylGroup& g = q.group();
  std::ostringstream os;
  os << "digraph QBG {\n";
  for (Elem x : q.vertices()) os << "  \"" << g.format(x) << "\";\n";
  for_each_edge(q, filter, [&](const QbgEdge& e) {
    os << "  \"" << g.format(e.source) << "\" -> \"" << g.format(e.target) << "\" [label=\""
       << edge_label(q.roots(), e.label) << "\"" << (e.kind == EdgeKind::Quantum ? ", style=dashed" : "")
       << "];\n";
  });
  os << "}\n";
  return os.str();
}

json qbg_to_json(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter) {
  const WeylGroup& g = q.group();
  json verts = json::array(), edges = json::array();
  for (Elem x : q.vertices()) verts.push_back(g.format(x));
  for_each_edge(q, filter, [&](const QbgEdge& e) {
    edges.push_back({{"from", g.format(e.source)},
                     {"to", g.format(e.target)},
                     {"label", q.roots().root(e.label).to_vector()},
                     {"kind", e.kind == EdgeKind::Quantum ? "quantum" : "bruhat"}});
  });
  return {{"vertices", verts}, {"edges", edges}};
}

std::string qbg_to_tsv(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter) {
  const WeylGroup& g = q.group();
  std::string out = "from\tto\tlabel\tkind\n";
  for_each_edge(q, filter, [&](const QbgEdge& e) {
    out += g.format(e.source) + "\t" + g.format(e.target) + "\t" + edge_label(q.roots(), e.label) + "\t" +
           (e.kind == EdgeKind::Quantum ? "quantum" : "bruhat") + "\n";
  });
  return out;
}

json report_to_json(const CheckReport& r) {
  json j = {{"claim", r.claim}, {"instances", r.instances}, {"failed", r.failed}, {"failures", r.failures}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

}  // namespace qkchev
