#pragma once

#include "qkchev/qkring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace qkchev {

// Three ways to evaluate <O^{s_i}, O^w, O_x>_d: through the quantum
// K-pairing of the Chevalley product, as 2-point value minus the full sum
// over pbQLS(w, x, d), and minus only the sum over pbR(w, x, d).
enum class Method { Pairing, Full, Reduced };
Method parse_method(const std::string& s);
std::string method_name(Method m);

struct CheckReport {
  std::string claim;
  long long instances = 0;
  long long failed = 0;
  std::vector<std::string> failures;  // first few only
  std::string detail;

  bool ok() const { return failed == 0; }
  void fail(const std::string& what);
  void absorb(const CheckReport& o);
};

// Caches bQLS(w) and Chevalley products per (i, w) and evaluates the
// invariants of G/P for any K. Conventions for arguments throughout:
// w minimal in its coset for W_{I \ K}, x maximal, d effective and
// supported on K, i in K.
class Kgw {
 public:
  explicit Kgw(const Context& ctx);
  Kgw(const Kgw&) = delete;
  Kgw& operator=(const Kgw&) = delete;

  const Context& context() const { return ctx_; }

  const std::vector<BqlsEntry>& entries(int i, Elem w) const;
  const QKClass& chevalley(int i, Elem w, NodeSet K) const;
  const std::vector<QlsPath>& qls(int i) const;

  // Lemma-style 2-point value: 1 if xi >= [qwt(z => x)]_K, else 0.
  GroupAlgElem two_point(Elem z, Elem x, const CorootVec& xi, NodeSet K) const;

  GroupAlgElem three_point_via_pairing(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  GroupAlgElem three_point_full(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  GroupAlgElem three_point_reduced(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  GroupAlgElem three_point(Method m, int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

  bool in_pbqls(const BqlsEntry& e, Elem x, const CorootVec& d, NodeSet K) const;
  bool in_pbr(int i, const BqlsEntry& e, Elem x, const CorootVec& d, NodeSet K) const;
  std::vector<BPathTuple> pbqls_set(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  std::vector<BPathTuple> pbr_set(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  // sum over pbR of (-1)^{l(p)} e^{-varpi_i + wt(eta_p)}
  GroupAlgElem pbr_sum(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  // The same sum written over pairs (v, eta) with kappa(eta, v) = w.
  GroupAlgElem correction_term_qls(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

  // d_i = 0: compares with sum_z c_z <O^z, O_x>_d. d_i > 0 and
  // <varpi_i, theta^vee> = 1: compares with the 2-point value. Otherwise
  // only reports the correction term.
  CheckReport divisor_axiom_check(int i, Elem w, Elem x, const CorootVec& d, NodeSet K,
                                  Method m = Method::Reduced) const;
  // The signed sums over pbQLS^+ and over pbQLS^0 \ pbR vanish.
  CheckReport qk2p_sums_check(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

  // Toggle the final alpha_i edge of p_1.
  BPathTuple sijection_theta(int i, const BPathTuple& p) const;
  // Defined on B_2 and on pbQLS^0 \ pbR respectively; both toggle the
  // larger of beta = FL(p_1) and gamma = IL(dec(ed(p) => x)).
  BPathTuple sijection_theta_prime(int i, Elem w, Elem x, const CorootVec& d, NodeSet K, const BPathTuple& p) const;
  BPathTuple sijection_psi(int i, Elem w, Elem x, const CorootVec& d, NodeSet K, const BPathTuple& p) const;
  // Theta on A + B_1, Theta' on B_2 and Psi on pbQLS^0 \ pbR are
  // sign-reversing involutions preserving eta_p, and Theta(A) lies in B.
  CheckReport sijection_check(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

  // The unique lift with [d^]_K = d and <alpha, d^> in {0, -1} for the
  // positive roots alpha of the Levi of P.
  CorootVec peterson_lift(const CorootVec& d, NodeSet K) const;
  // Parabolic value equals the G/B value at (w, x, d^); likewise for the
  // sums over pbR and bR.
  CheckReport comparison_check(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

  // Moebius function of the Bruhat order on W^{I \ K} (minimal reps):
  // pairs (y, mu(y, x)) with y <= x and mu nonzero.
  const std::vector<std::pair<Elem, int>>& mobius(Elem x, NodeSet K) const;
  // <O^{s_i}, O^w, (O^x)^vee>_d with x a minimal representative.
  GroupAlgElem dual_basis_invariant(int i, Elem w, Elem x, const CorootVec& d, NodeSet K,
                                    Method m = Method::Reduced) const;
  GroupAlgElem dual_two_point(Elem w, Elem x, const CorootVec& d, NodeSet K) const;
  // <O_{w0 s_i}, O^w, (O^x)^vee>_d on G/B through the line-bundle identity.
  GroupAlgElem line_bundle_invariant(int i, Elem w, Elem x, const CorootVec& d) const;
  CheckReport line_bundle_identity_check(int i, Elem w, Elem x, const CorootVec& d) const;
  // Non-equivariant <O^{s_i}, O_u, (O^w)^vee>_d over all w: the sign times
  // (-1)^{l(w)} is the same for every nonzero value.
  CheckReport positivity_check(int i, Elem u, const CorootVec& d, NodeSet K) const;

  void check_args(int i, Elem w, Elem x, const CorootVec& d, NodeSet K) const;

 private:
  int gamma_of(int i, Elem z, Elem x) const;
  BPathTuple toggle_beta_gamma(int i, const BPathTuple& p, Elem x) const;
  // Classification of tuples for the sijections.
  enum class Zone { None, A, B1, B2, Zero, R };
  Zone zone(int i, Elem w, const BqlsEntry& e, Elem x, const CorootVec& d, NodeSet K) const;

  const Context& ctx_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, Elem>, std::unique_ptr<std::vector<BqlsEntry>>> entries_;
  mutable std::map<std::tuple<int, Elem, NodeSet>, std::unique_ptr<QKClass>> chevalley_;
  mutable std::map<int, std::unique_ptr<std::vector<QlsPath>>> qls_;
  mutable std::map<std::pair<Elem, NodeSet>, std::unique_ptr<std::vector<std::pair<Elem, int>>>> mobius_;
  mutable std::map<std::pair<CorootVec, NodeSet>, CorootVec> lifts_;
};

// Nodes i with <varpi_i, theta^vee> = 1 according to the published table
// (numbering as in rootsys.hpp).
NodeSet published_classification(const LieType& t);
NodeSet computed_classification(const RootSystem& rs);

}  // namespace qkchev
