#include "imprim/itype.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace imprim {

std::optional<ICWitness> is_ic_partition(const Partition& p, std::uint64_t k,
                                         std::uint64_t m) {
    if (k == 0 || m == 0) throw std::invalid_argument("ic type requires k,m >= 1");
    if (p.n() != k * m) return std::nullopt;
    std::vector<std::uint64_t> q;
    q.reserve(p.size());
    for (auto part : p.parts()) {
        if (part % k != 0) return std::nullopt;
        q.push_back(part / k);
    }
    return ICWitness{k, m, Partition(std::move(q))};
}

ITypePair ic_type_scaling(std::uint64_t k, std::uint64_t m, std::uint64_t d) {
    if (d == 0 || k % d != 0)
        throw std::invalid_argument("scaling divisor must divide k");
    return ITypePair{k / d, d * m};
}

std::vector<ITypePair> ITypeSet::pairs() const {
    std::vector<ITypePair> out;
    out.reserve(entries.size());
    for (const auto& [pair, w] : entries) out.push_back(pair);
    return out;
}

bool check_itype_witness(const Partition& p, std::uint64_t k, std::uint64_t m,
                         const ITypeWitness& w) {
    if (w.clustering.clusters.size() != w.k_i.size()) return false;
    std::uint64_t ksum = 0;
    std::vector<std::uint64_t> used;
    for (std::size_t i = 0; i < w.k_i.size(); ++i) {
        if (!is_ic_partition(w.clustering.clusters[i], w.k_i[i], m)) return false;
        ksum += w.k_i[i];
        for (auto part : w.clustering.clusters[i].parts()) used.push_back(part);
    }
    if (ksum != k) return false;
    std::sort(used.begin(), used.end(), std::greater<>());
    return used == p.parts();
}

std::vector<ITypePair> gcd_shortcut_pairs(const Partition& p) {
    std::vector<ITypePair> out;
    const std::uint64_t n = p.n();
    const std::uint64_t g0 = gcd_of_parts(p);
    if (g0 <= 1) return out;
    for (auto d : divisors(g0))
        if (d > 1 && d < n) out.push_back(ITypePair{n / d, d});
    return out;
}

namespace {

struct MultisetCounts {
    std::vector<std::uint64_t> value;  // distinct, descending
    std::vector<int> count;
    int live = 0;
    std::uint64_t sum_left = 0;

    explicit MultisetCounts(const Partition& p) {
        for (auto v : p.parts()) {
            if (!value.empty() && value.back() == v) ++count.back();
            else {
                value.push_back(v);
                count.push_back(1);
            }
            ++live;
            sum_left += v;
        }
    }
    void take(std::size_t i) {
        --count[i];
        --live;
        sum_left -= value[i];
    }
    void untake(std::size_t i) {
        ++count[i];
        ++live;
        sum_left += value[i];
    }
};

// Backtracking cover of the part multiset by ic-clusters for a fixed block
// size m.  Each cluster is anchored at the largest remaining part v and
// carries its own divisor k (k | v, all members divisible by k, sum k*m).
struct PairSearch {
    std::uint64_t m;
    MultisetCounts cs;
    std::vector<std::vector<std::uint64_t>> groups;
    std::vector<std::uint64_t> ks;
    NodeCounter* nodes;

    PairSearch(const Partition& p, std::uint64_t m_, NodeCounter* nodes_)
        : m(m_), cs(p), nodes(nodes_) {}

    bool cover() {
        if (cs.live == 0) return true;
        std::size_t i = 0;
        while (cs.count[i] == 0) ++i;
        const std::uint64_t v = cs.value[i];
        for (auto k : divisors(v)) {
            if (k * m < v || k * m > cs.sum_left) continue;
            cs.take(i);
            groups.push_back({v});
            ks.push_back(k);
            if (extend(k, k * m - v, i)) return true;
            ks.pop_back();
            groups.pop_back();
            cs.untake(i);
        }
        return false;
    }

    bool extend(std::uint64_t k, std::uint64_t need, std::size_t from) {
        if (nodes) nodes->tick();
        if (need == 0) return cover();
        for (std::size_t i = from; i < cs.value.size(); ++i) {
            const std::uint64_t v = cs.value[i];
            if (cs.count[i] == 0 || v > need || v % k != 0) continue;
            cs.take(i);
            groups.back().push_back(v);
            if (extend(k, need - v, i)) return true;
            groups.back().pop_back();
            cs.untake(i);
        }
        return false;
    }
};

ITypeWitness make_witness(const std::vector<std::vector<std::uint64_t>>& groups,
                          std::vector<std::uint64_t> ks) {
    ITypeWitness w;
    w.clustering.clusters.reserve(groups.size());
    for (const auto& g : groups) w.clustering.clusters.emplace_back(g);
    w.k_i = std::move(ks);
    return w;
}

} // namespace

std::optional<ITypeWitness> itype_pair_decision(const Partition& p,
                                                std::uint64_t m,
                                                NodeCounter* nodes) {
    const std::uint64_t n = p.n();
    if (m < 2 || n % m != 0 || n / m < 2)
        throw std::invalid_argument("block size must satisfy 2 <= m <= n/2, m | n");
    PairSearch search(p, m, nodes);
    if (search.cover()) return make_witness(search.groups, search.ks);
    return std::nullopt;
}

ITypeSet i_type_set(const Partition& p, const Budget& budget) {
    ITypeSet out;
    const std::uint64_t n = p.n();
    out.n = n;
    if (p.empty()) throw std::invalid_argument("empty partition");
    const auto block_sizes = proper_divisors(n);
    if (block_sizes.empty()) return out;

    NodeCounter nodes(budget.nodes, "i_type_set(" + p.str() + ")");

    // Singleton clusters certify every divisor of the part gcd at once.
    const std::uint64_t g0 = gcd_of_parts(p);
    if (g0 > 1) {
        for (auto d : divisors(g0)) {
            if (d <= 1 || d >= n) continue;
            ITypeWitness w;
            w.clustering.clusters.reserve(p.size());
            for (auto part : p.parts()) {
                w.clustering.clusters.emplace_back(std::vector<std::uint64_t>{part});
                w.k_i.push_back(part / d);
            }
            out.entries.emplace(ITypePair{n / d, d}, std::move(w));
        }
    }

    // Cheap sum-m clusterings (every k_i = 1).
    for (auto m : block_sizes) {
        if (out.contains(n / m, m)) continue;
        if (auto c = greedy_uniform_clustering(p, m)) {
            ITypeWitness w;
            w.clustering = std::move(*c);
            w.k_i.assign(w.clustering.clusters.size(), 1);
            out.entries.emplace(ITypePair{n / m, m}, std::move(w));
        }
    }

    std::size_t missing = 0;
    for (auto m : block_sizes)
        if (!out.contains(n / m, m)) ++missing;
    if (missing == 0) return out;

    // Lazy enumeration, charging every certified divisor of each clustering.
    // The first clustering in stream order that certifies a pair becomes its
    // witness.  Half of the remaining budget goes here; if that is not
    // enough to exhaust the stream, the per-pair decision finishes the job.
    bool stream_done = false;
    {
        NodeCounter enum_nodes(nodes.remaining() / 2,
                               "clustering enumeration for " + p.str());
        try {
            ClusteringStream stream(p);
            while (missing > 0) {
                auto c = stream.next(&enum_nodes);
                if (!c) {
                    stream_done = true;
                    break;
                }
                for (auto& cert : clustering_divisor_certificates(*c, n)) {
                    if (out.contains(n / cert.d, cert.d)) continue;
                    ITypeWitness w;
                    w.clustering = *c;
                    w.k_i = std::move(cert.k_i);
                    out.entries.emplace(ITypePair{n / cert.d, cert.d}, std::move(w));
                    --missing;
                }
            }
            if (missing == 0) stream_done = true;
        } catch (const inconclusive_error&) {
            stream_done = false;
        }
        nodes.tick(std::min(enum_nodes.used(), nodes.remaining()));
    }

    if (!stream_done && missing > 0) {
        for (auto m : block_sizes) {
            if (out.contains(n / m, m)) continue;
            if (auto w = itype_pair_decision(p, m, &nodes))
                out.entries.emplace(ITypePair{n / m, m}, std::move(*w));
        }
    }
    return out;
}

bool is_imprimitive_cycle_type(const Partition& p, const Budget& budget) {
    const std::uint64_t n = p.n();
    if (p.empty()) throw std::invalid_argument("empty partition");
    const auto block_sizes = proper_divisors(n);
    if (block_sizes.empty()) return false;
    if (gcd_of_parts(p) > 1) return true;
    for (auto m : block_sizes)
        if (greedy_uniform_clustering(p, m)) return true;
    NodeCounter nodes(budget.nodes, "is_imprimitive(" + p.str() + ")");
    for (auto m : block_sizes)
        if (itype_pair_decision(p, m, &nodes)) return true;
    return false;
}

bool is_primitive_permutation(const Perm& a, const Budget& budget) {
    if (a.degree() < 2)
        throw std::invalid_argument("primitivity needs degree >= 2");
    return !is_imprimitive_cycle_type(a.cycle_type(), budget);
}

bool disjoint_itype_certificate(const std::vector<ITypeSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("no i-types given");
    for (const auto& [pair, w] : sets[0].entries) {
        bool in_all = true;
        for (std::size_t j = 1; j < sets.size() && in_all; ++j)
            in_all = sets[j].entries.count(pair) > 0;
        if (in_all) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, Partition>> power_types(const Partition& p) {
    std::uint64_t order = 1;
    for (auto part : p.parts()) order = std::lcm(order, part);
    std::vector<std::pair<std::uint64_t, Partition>> out;
    for (auto e : divisors(order)) out.emplace_back(e, partition_power(p, e));
    return out;
}

} // namespace imprim
