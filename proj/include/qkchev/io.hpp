#pragma once

#include "qkchev/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qkchev {

enum class WeightBasis { Root, Fundamental };
WeightBasis parse_weight_basis(const std::string& s);

// "[-3,-2]"; root coordinates may be fractions for weights off the root
// lattice, printed as p/q.
std::string format_weight(const RootSystem& rs, const Weight& mu, WeightBasis basis = WeightBasis::Root);
// "1 + e^[-3,-2]", "-e^[-3,-2]", "0". Terms by decreasing exponent.
std::string format_group_alg(const RootSystem& rs, const GroupAlgElem& a, WeightBasis basis = WeightBasis::Root);
// One line per (z, degree): "O^{2,1} Q^[1,0] : 1 - e^[-1,0]".
std::string format_qkclass(const Context& ctx, const QKClass& c, WeightBasis basis = WeightBasis::Root);
// "(2,1 | 2 ; 0, 1/2, 1)": vertices, then breakpoints.
std::string format_qls(const Context& ctx, const QlsPath& eta);
std::string format_bpath(const Context& ctx, const BPathTuple& p);

nlohmann::json group_alg_to_json(const RootSystem& rs, const GroupAlgElem& a, WeightBasis basis = WeightBasis::Root);
GroupAlgElem group_alg_from_json(const RootSystem& rs, const nlohmann::json& j,
                                 WeightBasis basis = WeightBasis::Root);
// Array of {"w", "Q", "coeff"} objects in sorted order.
nlohmann::json qkclass_to_json(const Context& ctx, const QKClass& c, WeightBasis basis = WeightBasis::Root);
QKClass qkclass_from_json(const Context& ctx, const nlohmann::json& j, NodeSet K,
                          WeightBasis basis = WeightBasis::Root);
// Tab-separated rows "w  Q  wt  c", one per monomial.
std::string qkclass_to_tsv(const Context& ctx, const QKClass& c, WeightBasis basis = WeightBasis::Root);

nlohmann::json qls_to_json(const Context& ctx, const QlsPath& eta);
QlsPath qls_from_json(const Context& ctx, int node, const nlohmann::json& j);

// Edges of QBG(W^L), optionally restricted to QBG_{a varpi_i}.
struct QbgFilter {
  int node = 0;
  Rational a;
};
std::string qbg_to_dot(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter = std::nullopt);
nlohmann::json qbg_to_json(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter = std::nullopt);
std::string qbg_to_tsv(const QuantumBruhatGraph& q, const std::optional<QbgFilter>& filter = std::nullopt);

nlohmann::json report_to_json(const CheckReport& r);

}  // namespace qkchev
