#pragma once

#include "qkchev/lattice.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qkchev {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  // Throws PreconditionError for pairs that are not simple types.
  static LieType make(Family f, int rank);
  // "G2", "a3", "E6", ...
  static LieType parse(const std::string& s);
  std::string name() const;
  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
};

// Node numbering used throughout (0-based internally, 1-based in text):
//   A_n, D_n: the usual chains; D_n has n-1 and n attached to n-2.
//   B_n: alpha_n short.  C_n: alpha_n long.
//   E_n: chain 1-2-...-(n-1) with node n attached to node 3.
//   F4: alpha_1, alpha_2 long, alpha_3, alpha_4 short.
//   G2: alpha_1 short, alpha_2 long.
class RootSystem {
 public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return rank_; }
  // cartan()(j, k) = <alpha_j, alpha_k^vee>.
  const IMat& cartan() const { return cartan_; }
  // Symmetrizers: squared lengths normalised so the short roots have 1.
  int symmetrizer(int j) const { return d_[j]; }

  int num_positive() const { return static_cast<int>(roots_.size()); }
  // Positive roots sorted by height; index j < rank is alpha_j.
  const RootVec& root(int r) const { return roots_[r]; }
  const CorootVec& coroot(int r) const { return coroots_[r]; }
  const Weight& root_weight(int r) const { return root_weights_[r]; }
  int height(int r) const { return roots_[r].sum(); }
  // Index of a positive root, or nullopt.
  std::optional<int> find_root(const RootVec& b) const;
  int index_of(const RootVec& b) const;  // throws if not a positive root
  // True when the root's support lies in the node set.
  bool in_subsystem(int r, NodeSet s) const;

  int theta_index() const { return theta_; }
  const RootVec& theta() const { return roots_[theta_]; }
  const CorootVec& theta_coroot() const { return coroots_[theta_]; }

  Weight rho() const;
  Weight fundamental(int i) const { return Weight::unit(rank_, i); }
  // <2 rho - 2 rho_S, beta^vee> for the positive root with index r.
  int two_rho_pairing(int r, NodeSet s) const;

  int pairing(const Weight& lam, const CorootVec& xi) const;
  Weight to_weight(const RootVec& b) const;
  // Simple-root coordinates of a weight; rational in general.
  std::vector<Rational> to_root_coords(const Weight& lam) const;
  // Accepts positive and negative roots; throws for non-roots.
  CorootVec coroot_of(const RootVec& b) const;
  Weight reflect(const RootVec& b, const Weight& lam) const;
  Weight reflect_simple(int j, const Weight& lam) const;
  RootVec reflect_simple(int j, const RootVec& b) const;

  std::string format_root(const RootVec& b) const;  // "3a1+2a2"

 private:
  LieType type_;
  int rank_;
  IMat cartan_;
  std::vector<int> d_;
  std::vector<RootVec> roots_;
  std::vector<CorootVec> coroots_;
  std::vector<Weight> root_weights_;
  std::unordered_map<RootVec, int, LatticeHash<RootVec>> index_;
  int theta_ = 0;
};

// Standard counts used as a cross-check of the closure.
int expected_positive_count(const LieType& t);
// |W| by the product formula; double so E8 etc. do not overflow anything.
double weyl_group_order(const LieType& t);

}  // namespace qkchev
