#pragma once

#include "qkchev/rootsys.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qkchev {

// Elements are numbered 0..|W|-1 in breadth-first order, so ids are
// sorted by length and 0 is the identity.
using Elem = std::int32_t;

std::size_t default_group_bound();  // 10^6, or $QKFLAG_MAX_GROUP

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::size_t max_size = default_group_bound());
  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  Elem size() const { return static_cast<Elem>(len_.size()); }
  static constexpr Elem identity() { return 0; }
  Elem longest() const { return size() - 1; }

  int length(Elem w) const { return len_[w]; }
  // w(rho) in fundamental-weight coordinates; determines w.
  Weight key(Elem w) const;
  Elem find(const Weight& w_rho) const;  // -1 when absent

  Elem lmul(int j, Elem w) const { return left_[static_cast<std::size_t>(w) * rank() + j]; }
  Elem rmul(Elem w, int j) const { return right_[static_cast<std::size_t>(w) * rank() + j]; }
  Elem inverse(Elem w) const { return inv_[w]; }
  Elem mul(Elem u, Elem v) const;
  Elem from_word(const std::vector<int>& word) const;
  bool right_descent(Elem w, int j) const { return len_[rmul(w, j)] < len_[w]; }
  bool left_descent(Elem w, int j) const { return len_[lmul(j, w)] < len_[w]; }

  // Right-descent stripping: the smallest (or largest) descent is removed
  // first, so the word is assembled from its right end.
  std::vector<int> reduced_word(Elem w, bool smallest_first = true) const;

  // s_beta for the positive root with index r, and the product w s_beta.
  Elem reflection(int r) const;
  Elem rmul_reflection(Elem w, int r) const;

  Weight act(Elem w, const Weight& lam) const;
  RootVec act(Elem w, const RootVec& b) const;

  bool bruhat_leq(Elem u, Elem w) const;

  Elem min_rep(Elem w, NodeSet s) const;
  Elem max_rep(Elem w, NodeSet s) const;
  bool is_min_rep(Elem w, NodeSet s) const;
  bool is_max_rep(Elem w, NodeSet s) const;
  Elem longest_in(NodeSet s) const;
  // Elements of the parabolic subgroup W_S, sorted by id.
  const std::vector<Elem>& subgroup(NodeSet s) const;
  std::vector<Elem> min_reps(NodeSet s) const;
  std::vector<Elem> max_reps(NodeSet s) const;

  // "2,1,2" and "e"; 1-based indices. parse() reads any word, reduced or not.
  std::string format(Elem w) const;
  Elem parse(const std::string& s) const;

 private:
  void build_reflection_table() const;

  const RootSystem& rs_;
  std::vector<int> keys_;  // |W| x rank
  std::vector<int> len_;
  std::vector<Elem> left_, right_, inv_;
  std::unordered_map<Weight, Elem, LatticeHash<Weight>> lookup_;
  std::vector<Elem> refl_;

  mutable std::once_flag refl_once_;
  mutable std::vector<Elem> right_refl_;
  mutable std::mutex sub_mu_;
  mutable std::unordered_map<NodeSet, std::unique_ptr<std::vector<Elem>>> subgroups_;
};

}  // namespace qkchev
