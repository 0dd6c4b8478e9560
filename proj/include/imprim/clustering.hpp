#ifndef IMPRIM_CLUSTERING_HPP
#define IMPRIM_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imprim/budget.hpp"
#include "imprim/partition.hpp"

namespace imprim {

// A clustering groups the parts of a partition into non-empty clusters
// (a partition of the multiset of parts).  Cluster order is the order in
// which the producing algorithm opened them; use sorted_clusters() for a
// canonical presentation.
struct Clustering {
    std::vector<Partition> clusters;

    std::vector<std::uint64_t> cluster_sums() const;
    std::vector<Partition> sorted_clusters() const;  // ascending by <=>
    std::string str() const;                         // "((10,10),(5,1))"
};

// Streams every clustering of p exactly once, lazily, in the lexicographic
// order of canonical growth strings.  A growth string assigns each part
// (taken in non-increasing order) a cluster label; labels are first-use
// increasing, labels within a maximal run of equal parts are non-decreasing,
// and clusters first opened in the same run must have non-increasing
// signatures (count in the opening run, then in each later run).  Those
// three constraints select exactly one string per clustering.
class ClusteringStream {
public:
    explicit ClusteringStream(Partition p);

    // Next clustering, or nullopt when exhausted.  Search steps are charged
    // to `nodes` when provided.
    std::optional<Clustering> next(NodeCounter* nodes = nullptr);

    const std::vector<int>& growth_string() const { return a_; }
    std::uint64_t steps() const { return steps_; }

private:
    bool placement_ok(int pos, int value) const;
    bool canonical_complete() const;
    Clustering realize() const;

    Partition p_;
    std::vector<int> run_;      // run index of each position
    int nruns_ = 0;
    std::vector<int> a_;        // growth string
    std::vector<int> maxpfx_;   // maxpfx_[i] = max(a_[0..i-1]), maxpfx_[0] = -1
    int depth_ = 0;             // positions 0..depth_-1 are placed
    int cand_ = 0;              // value to try next at position depth_
    bool started_ = false;
    bool exhausted_ = false;
    std::uint64_t steps_ = 0;
};

// Materializes all clusterings (desk-scale partitions only).
std::vector<Clustering> enumerate_clusterings(const Partition& p,
                                              NodeCounter* nodes = nullptr);

// Largest-first greedy attempt to split p into clusters each summing to m:
// repeatedly open a cluster and add the largest unused part that still fits.
// Returns the clustering on success.  Fast, incomplete by design.
std::optional<Clustering> greedy_uniform_clustering(const Partition& p,
                                                    std::uint64_t m);

// Exact decision: can p be split into clusters each summing to m?  Complete
// backtracking (largest remaining part anchors the next cluster, members
// chosen in non-increasing order).
std::optional<Clustering> is_m_partition(const Partition& p, std::uint64_t m,
                                         NodeCounter* nodes = nullptr);

// The largest part must be divisible by m and forms its own cluster; the
// remaining parts must split exactly into sums of m.  Catches shapes like
// ((2,3),(10)) for m=5 that uniform sums miss.  Clusters of the remainder
// come first, the big-part cluster last.
std::optional<Clustering> is_special_m_partition(const Partition& p,
                                                 std::uint64_t m,
                                                 NodeCounter* nodes = nullptr);

// A divisor-level block certificate: for block size d, cluster i contributes
// k_i = sum_i / d whole blocks, which works iff every part of cluster i is
// divisible by k_i.
struct DivisorCertificate {
    std::uint64_t d = 0;                // the certified block size (the "m")
    std::vector<std::uint64_t> k_i;     // sum_i / d per cluster
};

// The gcd test: g = gcd of the cluster sums; certifies block size g when
// 1 < g < n and every part of cluster i is divisible by sum_i / g.
std::optional<DivisorCertificate> clustering_gcd_test(const Clustering& c,
                                                      std::uint64_t n);

// All block sizes d | g with 1 < d < n this clustering certifies.  The
// divisibility recheck runs per d: success at g does not imply success at
// smaller divisors, nor vice versa.
std::vector<DivisorCertificate> clustering_divisor_certificates(
    const Clustering& c, std::uint64_t n);

} // namespace imprim

#endif
