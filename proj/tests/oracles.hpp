#ifndef IMPRIM_TESTS_ORACLES_HPP
#define IMPRIM_TESTS_ORACLES_HPP

// Brute-force reference implementations for cross-checking the library.
// These chase the definitions directly and share no code with the real
// algorithms: restricted growth strings for clusterings, definition-level
// scans for i-types, breadth-first closure for groups, and exhaustive
// uniform-partition enumeration for invariance.  Desk-scale inputs only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "imprim/partition.hpp"
#include "imprim/perm.hpp"

namespace oracles {

using Cluster = std::vector<std::uint64_t>;          // parts, descending
using ClusterSet = std::vector<Cluster>;             // sorted for dedup

inline void rgs_rec(std::vector<int>& a, std::size_t i, int maxv,
                    std::vector<std::vector<int>>& out) {
    if (i == a.size()) {
        out.push_back(a);
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        a[i] = v;
        rgs_rec(a, i + 1, std::max(maxv, v), out);
    }
}

// Every restricted growth string of length n (every set partition of n
// labeled positions).
inline std::vector<std::vector<int>> all_rgs(std::size_t n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> a(n, 0);
    rgs_rec(a, 1, 0, out);
    return out;
}

// All clusterings of the parts of p, deduplicated as multisets of multisets.
inline std::set<ClusterSet> clusterings(const imprim::Partition& p) {
    std::set<ClusterSet> out;
    const auto& parts = p.parts();
    for (const auto& a : all_rgs(parts.size())) {
        const int labels = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
        ClusterSet cs(static_cast<std::size_t>(labels));
        for (std::size_t i = 0; i < parts.size(); ++i)
            cs[static_cast<std::size_t>(a[i])].push_back(parts[i]);
        for (auto& c : cs) std::sort(c.begin(), c.end(), std::greater<>());
        std::sort(cs.begin(), cs.end());
        out.insert(std::move(cs));
    }
    return out;
}

// Whether one clustering certifies the i-type pair (n/m, m): each cluster
// must sum to a multiple k_i * m with every part divisible by k_i.
inline bool certifies(const ClusterSet& cs, std::uint64_t m) {
    for (const auto& cluster : cs) {
        const std::uint64_t s =
            std::accumulate(cluster.begin(), cluster.end(), std::uint64_t{0});
        if (s % m != 0) return false;
        const std::uint64_t ki = s / m;
        for (auto part : cluster)
            if (part % ki != 0) return false;
    }
    return true;
}

// The i-type of p straight from the definition.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> itype(
    const imprim::Partition& p) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t n = p.n();
    const auto cls = clusterings(p);
    for (std::uint64_t m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        const std::uint64_t k = n / m;
        if (k < 2) continue;
        for (const auto& cs : cls)
            if (certifies(cs, m)) {
                out.insert({k, m});
                break;
            }
    }
    return out;
}

// Plain breadth-first closure over image vectors; independent of the BSGS.
// Returns all elements, or an empty vector if `cap` is exceeded.
inline std::vector<imprim::Perm> closure(const std::vector<imprim::Perm>& gens,
                                         std::size_t cap = 20000) {
    if (gens.empty()) return {};
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    std::vector<int> id(static_cast<std::size_t>(gens.front().degree()));
    std::iota(id.begin(), id.end(), 0);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                std::vector<int> w(v.size());
                for (std::size_t x = 0; x < v.size(); ++x)
                    w[x] = g(v[static_cast<std::size_t>(x)]);
                if (seen.insert(w).second) {
                    if (seen.size() > cap) return {};
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }
    std::vector<imprim::Perm> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(v);
    return out;
}

namespace detail {

// Cluster-at-a-time enumeration: the largest remaining part anchors the
// next cluster, joined by every sub-multiset of the rest (an odometer over
// per-part counts), then the remainder is clustered recursively.  Clusters
// sharing the anchor value must come out in non-increasing count-vector
// order (`bound` is the parent cluster when its anchor index matches), so
// each clustering is produced exactly once.  `visit` returns false to stop.
template <typename F>
inline bool clusterings_rec(std::vector<std::pair<std::uint64_t, int>>& avail,
                            std::vector<Cluster>& acc, F& visit,
                            const std::vector<int>* bound = nullptr,
                            std::size_t bound_first = 0) {
    std::size_t first = 0;
    while (first < avail.size() && avail[first].second == 0) ++first;
    if (first == avail.size()) return visit(acc);

    --avail[first].second;
    std::vector<int> take(avail.size(), 0);
    std::vector<int> cvec(avail.size(), 0);
    bool keep_going = true;
    for (;;) {
        for (std::size_t i = 0; i < avail.size(); ++i) cvec[i] = take[i];
        ++cvec[first];
        const bool within =
            !(bound && bound_first == first) ||
            !std::lexicographical_compare(
                bound->begin() + static_cast<std::ptrdiff_t>(first),
                bound->end(),
                cvec.begin() + static_cast<std::ptrdiff_t>(first), cvec.end());
        if (within) {
            Cluster cluster;
            for (std::size_t i = first; i < avail.size(); ++i) {
                for (int c = 0; c < cvec[i]; ++c) cluster.push_back(avail[i].first);
                avail[i].second -= take[i];
            }
            acc.push_back(std::move(cluster));
            keep_going = clusterings_rec(avail, acc, visit, &cvec, first);
            acc.pop_back();
            for (std::size_t i = first; i < avail.size(); ++i)
                avail[i].second += take[i];
            if (!keep_going) break;
        }

        std::size_t i = first;
        while (i < avail.size()) {
            if (take[i] < avail[i].second) {
                ++take[i];
                break;
            }
            take[i] = 0;
            ++i;
        }
        if (i == avail.size()) break;
    }
    ++avail[first].second;
    return keep_going;
}

} // namespace detail

// Streams every clustering of p exactly once (as descending clusters, the
// cluster holding the largest remaining part first).  A second, structurally
// different enumeration from all_rgs: used to cross-check both the library
// and the RGS oracle.  `visit(clusters)` returns false to stop early.
template <typename F>
inline void for_each_clustering(const imprim::Partition& p, F visit) {
    std::vector<std::pair<std::uint64_t, int>> avail;
    for (auto part : p.parts()) {
        if (!avail.empty() && avail.back().first == part)
            ++avail.back().second;
        else
            avail.emplace_back(part, 1);
    }
    std::vector<Cluster> acc;
    detail::clusterings_rec(avail, acc, visit);
}

// The i-type via for_each_clustering: feasible up to n = 24ish even with
// many repeated parts (repetition collapses the search tree).
inline std::set<std::pair<std::uint64_t, std::uint64_t>> itype_fast(
    const imprim::Partition& p) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t n = p.n();
    std::vector<std::uint64_t> open;
    for (std::uint64_t m = 2; m < n; ++m)
        if (n % m == 0 && n / m >= 2) open.push_back(m);
    for_each_clustering(p, [&](const std::vector<Cluster>& cs) {
        for (auto it = open.begin(); it != open.end();) {
            if (certifies(cs, *it)) {
                out.insert({n / *it, *it});
                it = open.erase(it);
            } else {
                ++it;
            }
        }
        return !open.empty();
    });
    return out;
}

// All partitions of {0..n-1} into n/m cells of size m, as block_of vectors.
inline std::vector<std::vector<int>> uniform_partitions(int n, int m) {
    std::vector<std::vector<int>> out;
    for (const auto& a : all_rgs(static_cast<std::size_t>(n))) {
        std::vector<int> count;
        bool ok = true;
        for (int v : a) {
            if (v >= static_cast<int>(count.size())) count.resize(v + 1, 0);
            ++count[static_cast<std::size_t>(v)];
        }
        for (int c : count)
            if (c != m) ok = false;
        if (ok && static_cast<int>(count.size()) == n / m) out.push_back(a);
    }
    return out;
}

// Whether every permutation in `s` maps cells of `block_of` onto cells.
inline bool partition_invariant(const std::vector<imprim::Perm>& s,
                                const std::vector<int>& block_of) {
    const int n = static_cast<int>(block_of.size());
    for (const auto& g : s) {
        std::vector<int> image_block(block_of.size(), -1);
        for (int x = 0; x < n; ++x) {
            int& ib = image_block[static_cast<std::size_t>(block_of[x])];
            const int bx = block_of[static_cast<std::size_t>(g(x))];
            if (ib == -1)
                ib = bx;
            else if (ib != bx)
                return false;
        }
    }
    return true;
}

// Primitivity by exhaustion: transitive and no invariant uniform partition
// with 1 < m < n.  Only for tiny degrees (the RGS scan is Bell(n)).
inline bool primitive(const std::vector<imprim::Perm>& gens, int n) {
    for (int m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        for (const auto& bp : uniform_partitions(n, m))
            if (partition_invariant(gens, bp)) return false;
    }
    return true;
}

} // namespace oracles

#endif
