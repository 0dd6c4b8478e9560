#ifndef IMPRIM_ITYPE_HPP
#define IMPRIM_ITYPE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "imprim/budget.hpp"
#include "imprim/clustering.hpp"
#include "imprim/partition.hpp"
#include "imprim/perm.hpp"

namespace imprim {

// An ic-partition of type (k,m) is a partition of k*m all of whose parts are
// divisible by k.  A partition P of n has (k,m) in its i-type when its parts
// admit a clustering into ic-partitions of types (k_1,m)..(k_r,m) with
// k_1+..+k_r = k (so n = k*m).  A permutation is imprimitive exactly when
// the i-type of its cycle type is non-empty: the clusters describe how the
// cycles thread k blocks of size m.

struct ICWitness {
    std::uint64_t k = 0, m = 0;
    Partition quotient;  // parts divided by k; a partition of m
};

// Checks the ic property and returns the quotient witness.
std::optional<ICWitness> is_ic_partition(const Partition& p, std::uint64_t k,
                                         std::uint64_t m);

struct ITypePair {
    std::uint64_t k = 0, m = 0;
    friend bool operator==(const ITypePair&, const ITypePair&) = default;
    friend auto operator<=>(const ITypePair&, const ITypePair&) = default;
};

// An ic-partition of type (k,m) is one of type (k/d, d*m) for every d | k.
ITypePair ic_type_scaling(std::uint64_t k, std::uint64_t m, std::uint64_t d);

struct ITypeWitness {
    Clustering clustering;
    std::vector<std::uint64_t> k_i;  // aligned with clustering.clusters
};

struct ITypeSet {
    std::uint64_t n = 0;
    std::map<ITypePair, ITypeWitness> entries;

    bool contains(std::uint64_t k, std::uint64_t m) const {
        return entries.count(ITypePair{k, m}) > 0;
    }
    bool empty() const { return entries.empty(); }
    std::vector<ITypePair> pairs() const;
};

// Checks that `w` really exhibits (k,m) in the i-type of p: the clusters are
// a clustering of p's parts, cluster i is an ic-partition of type (k_i, m),
// and the k_i sum to k.  Used by tests and to validate untrusted input.
bool check_itype_witness(const Partition& p, std::uint64_t k, std::uint64_t m,
                         const ITypeWitness& w);

// Singleton-cluster certificate: when g0 = gcd(parts) > 1, every divisor d
// of g0 with 1 < d < n yields (n/d, d) via one cluster per part.
std::vector<ITypePair> gcd_shortcut_pairs(const Partition& p);

// Complete decision for one pair (n/m, m): backtracking over clusterings
// into ic-partitions (each cluster anchored by its largest part, branching
// over the cluster divisor).  Returns a witness or proves absence.
std::optional<ITypeWitness> itype_pair_decision(const Partition& p,
                                                std::uint64_t m,
                                                NodeCounter* nodes = nullptr);

// The full i-type with one witness per pair.  Strategy: gcd shortcut, then
// greedy per divisor, then lazy enumeration of clusterings (certifying every
// divisor of each clustering's sum-gcd), then the per-pair decision for
// anything still open.  Throws inconclusive_error if the budget runs out
// with pairs undecided.
ITypeSet i_type_set(const Partition& p, const Budget& budget = {});

// Non-emptiness of the i-type, decided without materializing witnesses.
bool is_imprimitive_cycle_type(const Partition& p, const Budget& budget = {});

// A permutation is primitive when every transitive group containing it is
// primitive, which holds exactly when the i-type of its cycle type is empty.
bool is_primitive_permutation(const Perm& a, const Budget& budget = {});

// True when the intersection of all the i-types is empty.  When the
// certified permutations generate a transitive group, that group is
// necessarily primitive.
bool disjoint_itype_certificate(const std::vector<ITypeSet>& sets);

// The distinct cycle types of the powers g^e of a permutation with cycle
// type p, keyed by the smallest such exponent (the divisors of lcm(parts)).
std::vector<std::pair<std::uint64_t, Partition>> power_types(const Partition& p);

} // namespace imprim

#endif
