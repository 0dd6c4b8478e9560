#include "imprim/clustering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace imprim {

std::vector<std::uint64_t> Clustering::cluster_sums() const {
    std::vector<std::uint64_t> sums;
    sums.reserve(clusters.size());
    for (const auto& c : clusters) sums.push_back(c.n());
    return sums;
}

std::vector<Partition> Clustering::sorted_clusters() const {
    std::vector<Partition> out = clusters;
    std::sort(out.begin(), out.end());
    return out;
}

std::string Clustering::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (i) out += ",";
        out += "(" + clusters[i].str() + ")";
    }
    return out + ")";
}

ClusteringStream::ClusteringStream(Partition p) : p_(std::move(p)) {
    const int l = static_cast<int>(p_.size());
    run_.resize(l);
    for (int i = 0; i < l; ++i) {
        if (i > 0 && p_[i] == p_[i - 1]) run_[i] = run_[i - 1];
        else run_[i] = (i > 0 ? run_[i - 1] + 1 : 0);
    }
    nruns_ = l > 0 ? run_.back() + 1 : 0;
    a_.assign(l, 0);
    maxpfx_.assign(l + 1, -1);
}

bool ClusteringStream::placement_ok(int pos, int v) const {
    if (v == 0) return true;
    const int b = v - 1;
    const int rc = run_[pos];
    int open_b = -1, open_v = -1;
    // counts of labels b and v per run, over the placed prefix
    std::vector<int> cntb(rc + 1, 0), cntv(rc + 1, 0);
    for (int i = 0; i < pos; ++i) {
        const int ai = a_[i];
        if (ai == b) {
            if (open_b < 0) open_b = run_[i];
            ++cntb[run_[i]];
        } else if (ai == v) {
            if (open_v < 0) open_v = run_[i];
            ++cntv[run_[i]];
        }
    }
    if (open_v < 0) open_v = rc;  // v opens with this placement
    if (open_b != open_v) return true;
    ++cntv[rc];
    for (int rr = open_b; rr < rc; ++rr)
        if (cntb[rr] != cntv[rr]) return cntb[rr] > cntv[rr];
    // In the current run the parts are equal, so labels are non-decreasing:
    // b's count is final while v's may still grow.  Reject as soon as v's
    // exceeds it; ties are resolved by later runs (or the final check).
    return cntv[rc] <= cntb[rc];
}

bool ClusteringStream::canonical_complete() const {
    const int l = static_cast<int>(p_.size());
    const int nc = maxpfx_[l] + 1;
    std::vector<int> open_run(nc, -1);
    std::vector<int> cnt(static_cast<std::size_t>(nc) * nruns_, 0);
    for (int i = 0; i < l; ++i) {
        const int c = a_[i];
        if (open_run[c] < 0) open_run[c] = run_[i];
        ++cnt[static_cast<std::size_t>(c) * nruns_ + run_[i]];
    }
    // Clusters opened in the same run carry consecutive labels; their
    // signatures must be non-increasing.
    for (int c = 1; c < nc; ++c) {
        if (open_run[c] != open_run[c - 1]) continue;
        for (int rr = open_run[c]; rr < nruns_; ++rr) {
            const int d = cnt[static_cast<std::size_t>(c - 1) * nruns_ + rr] -
                          cnt[static_cast<std::size_t>(c) * nruns_ + rr];
            if (d != 0) {
                if (d < 0) return false;
                break;
            }
        }
    }
    return true;
}

Clustering ClusteringStream::realize() const {
    const int l = static_cast<int>(p_.size());
    const int nc = maxpfx_[l] + 1;
    std::vector<std::vector<std::uint64_t>> groups(nc);
    for (int i = 0; i < l; ++i) groups[a_[i]].push_back(p_[i]);
    Clustering out;
    out.clusters.reserve(nc);
    for (auto& g : groups) out.clusters.emplace_back(std::move(g));
    return out;
}

std::optional<Clustering> ClusteringStream::next(NodeCounter* nodes) {
    if (exhausted_) return std::nullopt;
    const int l = static_cast<int>(p_.size());
    if (l == 0) {
        exhausted_ = true;
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        depth_ = 0;
        cand_ = 0;
    } else {
        depth_ = l - 1;
        cand_ = a_[depth_] + 1;
    }
    for (;;) {
        ++steps_;
        if (nodes) nodes->tick();
        if (depth_ == l) {
            if (canonical_complete()) return realize();
            --depth_;
            cand_ = a_[depth_] + 1;
            continue;
        }
        const int hi = maxpfx_[depth_] + 1;
        const int lo =
            (depth_ > 0 && p_[depth_] == p_[depth_ - 1]) ? a_[depth_ - 1] : 0;
        if (cand_ < lo) cand_ = lo;
        if (cand_ > hi) {
            if (depth_ == 0) {
                exhausted_ = true;
                return std::nullopt;
            }
            --depth_;
            cand_ = a_[depth_] + 1;
            continue;
        }
        if (placement_ok(depth_, cand_)) {
            a_[depth_] = cand_;
            maxpfx_[depth_ + 1] = std::max(maxpfx_[depth_], cand_);
            ++depth_;
            cand_ = 0;
        } else {
            ++cand_;
        }
    }
}

std::vector<Clustering> enumerate_clusterings(const Partition& p,
                                              NodeCounter* nodes) {
    std::vector<Clustering> out;
    ClusteringStream stream(p);
    while (auto c = stream.next(nodes)) out.push_back(std::move(*c));
    return out;
}

namespace {

// Multiset of remaining parts as (value desc, count) with O(1) take/untake.
struct Counts {
    std::vector<std::uint64_t> value;
    std::vector<int> count;
    int live = 0;  // parts still unused

    explicit Counts(const Partition& p) {
        for (auto v : p.parts()) {
            if (!value.empty() && value.back() == v) ++count.back();
            else {
                value.push_back(v);
                count.push_back(1);
            }
            ++live;
        }
    }
};

bool cover_uniform(Counts& cs, std::uint64_t m,
                   std::vector<std::vector<std::uint64_t>>& clusters,
                   NodeCounter* nodes);

// Extend the open cluster (members chosen with non-increasing values from
// index `from`) until it sums to m, then cover the rest.
bool extend_cluster(Counts& cs, std::uint64_t m, std::uint64_t need,
                    std::size_t from,
                    std::vector<std::vector<std::uint64_t>>& clusters,
                    NodeCounter* nodes) {
    if (nodes) nodes->tick();
    if (need == 0) return cover_uniform(cs, m, clusters, nodes);
    for (std::size_t i = from; i < cs.value.size(); ++i) {
        if (cs.count[i] == 0 || cs.value[i] > need) continue;
        --cs.count[i];
        --cs.live;
        clusters.back().push_back(cs.value[i]);
        if (extend_cluster(cs, m, need - cs.value[i], i, clusters, nodes))
            return true;
        clusters.back().pop_back();
        ++cs.count[i];
        ++cs.live;
    }
    return false;
}

bool cover_uniform(Counts& cs, std::uint64_t m,
                   std::vector<std::vector<std::uint64_t>>& clusters,
                   NodeCounter* nodes) {
    if (cs.live == 0) return true;
    // the largest unused part anchors the next cluster
    std::size_t i = 0;
    while (cs.count[i] == 0) ++i;
    if (cs.value[i] > m) return false;
    --cs.count[i];
    --cs.live;
    clusters.push_back({cs.value[i]});
    if (extend_cluster(cs, m, m - cs.value[i], i, clusters, nodes)) return true;
    clusters.pop_back();
    ++cs.count[i];
    ++cs.live;
    return false;
}

Clustering to_clustering(const std::vector<std::vector<std::uint64_t>>& groups) {
    Clustering out;
    out.clusters.reserve(groups.size());
    for (const auto& g : groups) out.clusters.emplace_back(g);
    return out;
}

void require_block_divisor(const Partition& p, std::uint64_t m) {
    if (m < 2 || p.n() % m != 0)
        throw std::invalid_argument("cluster sum must be a divisor >= 2 of n");
}

} // namespace

std::optional<Clustering> greedy_uniform_clustering(const Partition& p,
                                                    std::uint64_t m) {
    require_block_divisor(p, m);
    Counts cs(p);
    std::vector<std::vector<std::uint64_t>> groups;
    while (cs.live > 0) {
        groups.emplace_back();
        std::uint64_t need = m;
        while (need > 0) {
            std::size_t best = cs.value.size();
            for (std::size_t i = 0; i < cs.value.size(); ++i)
                if (cs.count[i] > 0 && cs.value[i] <= need) {
                    best = i;
                    break;
                }
            if (best == cs.value.size()) return std::nullopt;
            --cs.count[best];
            --cs.live;
            groups.back().push_back(cs.value[best]);
            need -= cs.value[best];
        }
    }
    return to_clustering(groups);
}

std::optional<Clustering> is_m_partition(const Partition& p, std::uint64_t m,
                                         NodeCounter* nodes) {
    if (m < 2) throw std::invalid_argument("cluster sum must be at least 2");
    if (p.n() % m != 0)
        throw std::invalid_argument("cluster sum must divide the partition total");
    Counts cs(p);
    std::vector<std::vector<std::uint64_t>> groups;
    if (cover_uniform(cs, m, groups, nodes)) return to_clustering(groups);
    return std::nullopt;
}

std::optional<Clustering> is_special_m_partition(const Partition& p,
                                                 std::uint64_t m,
                                                 NodeCounter* nodes) {
    if (m < 2) throw std::invalid_argument("cluster sum must be at least 2");
    if (p.empty()) return std::nullopt;
    const std::uint64_t big = p[0];
    if (big % m != 0) return std::nullopt;
    if ((p.n() - big) % m != 0) return std::nullopt;
    std::vector<std::uint64_t> rest(p.parts().begin() + 1, p.parts().end());
    std::vector<std::vector<std::uint64_t>> groups;
    if (!rest.empty()) {
        Counts cs((Partition(rest)));
        if (!cover_uniform(cs, m, groups, nodes)) return std::nullopt;
    }
    groups.push_back({big});
    return to_clustering(groups);
}

namespace {

bool divisor_certified(const Clustering& c,
                       const std::vector<std::uint64_t>& sums, std::uint64_t d) {
    for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        const std::uint64_t q = sums[i] / d;
        for (auto part : c.clusters[i].parts())
            if (part % q != 0) return false;
    }
    return true;
}

} // namespace

std::optional<DivisorCertificate> clustering_gcd_test(const Clustering& c,
                                                      std::uint64_t n) {
    const auto sums = c.cluster_sums();
    if (std::accumulate(sums.begin(), sums.end(), std::uint64_t{0}) != n)
        throw std::invalid_argument("clustering does not cover a partition of n");
    std::uint64_t g = 0;
    for (auto s : sums) g = std::gcd(g, s);
    if (g <= 1 || g >= n || !divisor_certified(c, sums, g)) return std::nullopt;
    DivisorCertificate res;
    res.d = g;
    for (auto s : sums) res.k_i.push_back(s / g);
    return res;
}

std::vector<DivisorCertificate> clustering_divisor_certificates(
    const Clustering& c, std::uint64_t n) {
    const auto sums = c.cluster_sums();
    if (std::accumulate(sums.begin(), sums.end(), std::uint64_t{0}) != n)
        throw std::invalid_argument("clustering does not cover a partition of n");
    std::uint64_t g = 0;
    for (auto s : sums) g = std::gcd(g, s);
    std::vector<DivisorCertificate> out;
    for (auto d : divisors(g)) {
        if (d <= 1 || d >= n || !divisor_certified(c, sums, d)) continue;
        DivisorCertificate res;
        res.d = d;
        for (auto s : sums) res.k_i.push_back(s / d);
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace imprim
