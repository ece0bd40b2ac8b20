#pragma once

#include "qkchev/invariants.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qkchev {

// Degrees supported on K with every coordinate in [0, cap], lexicographic.
std::vector<CorootVec> degree_grid(int rank, NodeSet K, int cap);
// Nonempty proper subsets of the node set.
std::vector<NodeSet> proper_parabolics(int rank);
// Every accepted simple type of rank <= max_rank, in a fixed order.
std::vector<LieType> types_up_to_rank(int max_rank);

// Contexts and invariant caches by type name, built on first use.
class Workbench {
 public:
  const Context& context(const std::string& type);
  const Kgw& kgw(const std::string& type);

 private:
  std::map<std::string, std::unique_ptr<Context>> contexts_;
  std::map<std::string, std::unique_ptr<Kgw>> kgws_;
};

// Grid drivers. Each runs over i in K, w minimal and x maximal for
// W_{I \ K}, and d in degree_grid(rank, K, cap).
CheckReport check_triple_agreement(const Kgw& kgw, NodeSet K, int cap);
// only_di_zero restricts to the instances with d_i = 0.
CheckReport check_divisor(const Kgw& kgw, NodeSet K, int cap, bool only_di_zero);
CheckReport check_qk2p(const Kgw& kgw, NodeSet K, int cap);
CheckReport check_correction_equality(const Kgw& kgw, NodeSet K, int cap);
CheckReport check_sijections(const Kgw& kgw, NodeSet K, int cap);
// Lift conditions plus comparison_check on every instance.
CheckReport check_comparison(const Kgw& kgw, NodeSet K, int cap);
// pbR is empty for <varpi_i, theta^vee> = 1 and d_i > 0 (K = I). Only
// tuples with l(p_1) = 0 and d_i = qwt_2(p)_i can lie in pbR, so those are
// the only ones tested against every x and d; instances counts the grid.
CheckReport check_vanishing(const Kgw& kgw, int cap);
// All (i, u, d) at K = I that satisfy the precondition.
CheckReport check_positivity(const Kgw& kgw, int cap);
// Computed vs published classification and QLS = LS iff
// <varpi_i, theta^vee> = 1, for every type of rank <= max_rank.
CheckReport check_classification(Workbench& wb, int max_rank);
// Unique label-monotone paths, qwt minimality against all walks up to
// `slack` steps longer than shortest, and tbmax against the dual tilted
// order by brute force (the last only when with_tbmax).
CheckReport check_qbg_structure(const Context& ctx, int slack, bool with_tbmax);

// Worked G2 values of the three-point invariant and of the dual-basis and
// line-bundle invariants.
CheckReport check_g2_three_point(Workbench& wb);
CheckReport check_g2_dual_basis(Workbench& wb);

struct Criterion {
  int number = 0;
  std::string title;
  CheckReport report;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 for none

  bool passed() const { return report.ok() && (time_limit <= 0 || seconds <= time_limit); }
};

// The ten acceptance criteria in order. `extra7` adds checks to criterion 7
// (the acceptance binary compares the G2 graph with its golden file there).
std::vector<Criterion> run_acceptance(Workbench& wb, int cap,
                                      const std::function<void(CheckReport&)>& extra7 = {},
                                      const std::function<void(const Criterion&)>& on_done = {});

}  // namespace qkchev
