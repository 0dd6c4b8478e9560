#ifndef IMPRIM_HIERARCHY_HPP
#define IMPRIM_HIERARCHY_HPP

#include <optional>
#include <vector>

#include "imprim/budget.hpp"
#include "imprim/group.hpp"
#include "imprim/itype.hpp"
#include "imprim/perm.hpp"

namespace imprim {

// Searches for a partition of the points into n/m cells of size m that is
// invariant under every permutation in `a` (equivalently under the group
// they generate).  Complete depth-first search: repeatedly merge the
// smallest point in an under-full cell with the smallest viable partner and
// close under the generators, pruning branches whose cells overflow or
// whose cell sizes can no longer pack into blocks of size m.  Throws
// inconclusive_error when the node budget runs out.
std::optional<BlockSystem> invariant_uniform_partition_search(
    const std::vector<Perm>& a, int m, NodeCounter* nodes = nullptr);

// A set is primitive when it lies in no uniform-partition stabilizer: the
// search above must come up empty for every block size m with 1 < m < n.
bool is_primitive_set(const PermutationGroup& g, const std::vector<Perm>& s,
                      const Budget& budget = {});

// True iff no member is generated by the others.
bool is_independent_set(const PermutationGroup& g, const std::vector<Perm>& s);

// First conjugacy-class representative whose cycle type has empty i-type;
// empty when the group has no primitive element (the NP1 condition).
std::optional<Perm> has_primitive_element(const PermutationGroup& g,
                                          const Budget& budget = {});

// One EP-or-AP verdict.  Positive EP and negative AP results carry a
// definitive witness and are exhaustive by construction.  When the subset
// budget cuts a scan short, the decision stays at holds=false with
// exhaustive=false: nothing was established either way.
struct HierarchyDecision {
    bool holds = false;
    bool exhaustive = true;
    std::vector<Perm> witness;  // EP: a primitive k-set; AP refuted: the
                                // independent imprimitive k-set
};

// NP/EP/AP verdicts for k = 1..k_max (index k-1).  NP k is the negation of
// EP k; nep/nap are the smallest k where EP/AP hold, when seen.
struct HierarchyReport {
    int k_max = 0;
    std::vector<HierarchyDecision> ep;
    std::vector<HierarchyDecision> ap;
    std::optional<int> nep;
    std::optional<int> nap;
};

// Scans k-subsets of G with the first element restricted to class
// representatives and later elements drawn from classes no smaller in
// index.  EP k: some k-subset is a primitive set.  AP k: every independent
// k-subset is.  Both are monotone in k, so verdicts propagate upward once
// established.
HierarchyReport classify_hierarchy(const PermutationGroup& g, int k_max,
                                   const Budget& budget = {});

} // namespace imprim

#endif
