#include "imprim/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "imprim/clustering.hpp"
#include "imprim/partition.hpp"

namespace imprim {

namespace {

struct CellUnion {
    std::vector<int> parent, size;
    explicit CellUnion(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

// Merges a~b and closes under the generators; false when a cell would
// exceed m points.
bool merge_and_close(CellUnion& uf, const std::vector<Perm>& gens, int a,
                     int b, int m) {
    std::vector<std::pair<int, int>> todo{{a, b}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        const int rx = uf.find(x), ry = uf.find(y);
        if (rx == ry) continue;
        if (uf.size[rx] + uf.size[ry] > m) return false;
        const int lo = std::min(rx, ry), hi = std::max(rx, ry);
        uf.parent[hi] = lo;
        uf.size[lo] += uf.size[hi];
        for (const auto& s : gens) todo.emplace_back(s(x), s(y));
    }
    return true;
}

struct PartitionSearch {
    const std::vector<Perm>& gens;
    int n, m;
    NodeCounter* nodes;
    // Merges proven fruitless in the current subtree; saved/restored around
    // each node so facts never leak to states that don't subsume them.
    std::vector<std::pair<int, int>> forbidden;

    bool cells_can_pack(CellUnion& uf) {
        std::vector<std::uint64_t> sizes;
        for (int x = 0; x < n; ++x)
            if (uf.find(x) == x) sizes.push_back(uf.size[x]);
        NodeCounter packing(2000, "packing check");
        try {
            return is_m_partition(Partition(std::move(sizes)), m, &packing)
                .has_value();
        } catch (const inconclusive_error&) {
            return true;  // too costly to decide; pruning is optional
        }
    }

    std::optional<CellUnion> dfs(CellUnion uf) {
        nodes->tick();
        int anchor = -1;
        for (int x = 0; x < n; ++x)
            if (uf.size[uf.find(x)] < m) { anchor = x; break; }
        if (anchor == -1) return uf;  // every cell full: uniform partition
        const int ra = uf.find(anchor);
        const std::size_t saved = forbidden.size();
        std::vector<bool> tried(n, false);
        for (int b = anchor + 1; b < n; ++b) {
            const int rb = uf.find(b);
            if (rb == ra || tried[rb]) continue;
            tried[rb] = true;
            if (uf.size[ra] + uf.size[rb] > m) continue;
            CellUnion child = uf;
            if (!merge_and_close(child, gens, anchor, b, m)) continue;
            bool blocked = false;
            for (auto [x, y] : forbidden)
                if (child.find(x) == child.find(y)) { blocked = true; break; }
            if (blocked || !cells_can_pack(child)) continue;
            if (auto hit = dfs(std::move(child))) {
                forbidden.resize(saved);
                return hit;
            }
            forbidden.emplace_back(anchor, b);
        }
        forbidden.resize(saved);
        return std::nullopt;
    }
};

BlockSystem cells_to_block_system(CellUnion& uf, int n) {
    std::vector<std::vector<int>> cells;
    std::vector<int> where(n, -1);
    for (int x = 0; x < n; ++x) {
        const int r = uf.find(x);
        if (where[r] == -1) {
            where[r] = static_cast<int>(cells.size());
            cells.emplace_back();
        }
        cells[where[r]].push_back(x);
    }
    return make_block_system(std::move(cells), n);
}

std::optional<BlockSystem> uniform_partition_core(const std::vector<Perm>& a,
                                                  int n, int m,
                                                  NodeCounter* nodes) {
    if (m <= 1 || m >= n || n % m != 0)
        throw std::invalid_argument("block size must properly divide the degree");
    for (const auto& g : a)
        if (g.degree() != n) throw std::invalid_argument("degree mismatch");
    std::optional<NodeCounter> local;
    if (!nodes) {
        local.emplace(Budget{}.nodes, "uniform partition search");
        nodes = &*local;
    }
    PartitionSearch search{a, n, m, nodes, {}};
    auto hit = search.dfs(CellUnion(n));
    if (!hit) return std::nullopt;
    return cells_to_block_system(*hit, n);
}

} // namespace

std::optional<BlockSystem> invariant_uniform_partition_search(
    const std::vector<Perm>& a, int m, NodeCounter* nodes) {
    if (a.empty())
        throw std::invalid_argument("need at least one permutation to infer the degree");
    return uniform_partition_core(a, a.front().degree(), m, nodes);
}

bool is_primitive_set(const PermutationGroup& g, const std::vector<Perm>& s,
                      const Budget& budget) {
    for (const auto& e : s)
        if (!g.contains(e)) throw std::invalid_argument("set member not in the group");
    const int n = g.degree();
    NodeCounter nodes(budget.nodes, "uniform partition search");
    for (auto m : proper_divisors(n))
        if (uniform_partition_core(s, n, static_cast<int>(m), &nodes))
            return false;
    return true;
}

bool is_independent_set(const PermutationGroup& g, const std::vector<Perm>& s) {
    for (const auto& e : s)
        if (!g.contains(e)) throw std::invalid_argument("set member not in the group");
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<Perm> rest;
        rest.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j)
            if (j != i) rest.push_back(s[j]);
        if (PermutationGroup(g.degree(), rest).contains(s[i])) return false;
    }
    return true;
}

std::optional<Perm> has_primitive_element(const PermutationGroup& g,
                                          const Budget& budget) {
    for (const auto& cls : g.conjugacy_classes(budget))
        if (!is_imprimitive_cycle_type(cls.type, budget)) return cls.rep;
    return std::nullopt;
}

namespace {

// Scans k-subsets in (class, lex) order with the first element a class
// representative, calling test on each; returns the first subset accepted.
// Flips *exhausted to false (and stops) when the subset budget runs out.
template <typename TestFn>
std::optional<std::vector<Perm>> scan_subsets(
    const ClassifiedElements& ce, int k, NodeCounter& subsets, bool* exhausted,
    const TestFn& test) {
    const std::size_t total = ce.elements.size();
    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ce.class_of[a] < ce.class_of[b];
    });
    std::vector<Perm> chosen;
    chosen.reserve(k);
    // stack of position indices into `order`
    auto rec = [&](auto&& self, std::size_t from) -> std::optional<std::vector<Perm>> {
        if (static_cast<int>(chosen.size()) == k) {
            subsets.tick();
            if (test(chosen)) return chosen;
            return std::nullopt;
        }
        for (std::size_t pos = from; pos < total; ++pos) {
            if (chosen.empty()) {
                // first element must be its class representative: the first
                // entry of its class block in the (class, lex) order
                const int idx = order[pos];
                if (pos > 0 && ce.class_of[order[pos - 1]] == ce.class_of[idx])
                    continue;
            }
            chosen.push_back(ce.elements[order[pos]]);
            auto hit = self(self, pos + 1);
            chosen.pop_back();
            if (hit) return hit;
        }
        return std::nullopt;
    };
    try {
        return rec(rec, 0);
    } catch (const inconclusive_error&) {
        *exhausted = false;
        return std::nullopt;
    }
}

} // namespace

HierarchyReport classify_hierarchy(const PermutationGroup& g, int k_max,
                                   const Budget& budget) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    HierarchyReport rep;
    rep.k_max = k_max;
    rep.ep.resize(k_max);
    rep.ap.resize(k_max);
    const auto ce = g.classified_elements(budget);

    for (int k = 1; k <= k_max; ++k) {
        HierarchyDecision& ep = rep.ep[k - 1];
        if (rep.nep && k > *rep.nep) {
            // EP is monotone upward: pad the first witness with further
            // elements (supersets of primitive sets stay primitive)
            ep.holds = true;
            ep.exhaustive = true;
            ep.witness = rep.ep[*rep.nep - 1].witness;
            for (const auto& e : ce.elements) {
                if (static_cast<int>(ep.witness.size()) == k) break;
                if (std::find(ep.witness.begin(), ep.witness.end(), e) ==
                    ep.witness.end())
                    ep.witness.push_back(e);
            }
        } else {
            NodeCounter subsets(budget.subsets, "EP subset scan");
            bool exhausted = true;
            auto hit = scan_subsets(ce, k, subsets, &exhausted,
                                    [&](const std::vector<Perm>& s) {
                                        return is_primitive_set(g, s, budget);
                                    });
            if (hit) {
                ep.holds = true;
                ep.exhaustive = true;  // a found witness is definitive
                ep.witness = std::move(*hit);
            } else {
                ep.holds = false;
                ep.exhaustive = exhausted;
            }
        }
        if (ep.holds && !rep.nep) rep.nep = k;

        HierarchyDecision& ap = rep.ap[k - 1];
        if (rep.nap && k > *rep.nap) {
            ap.holds = true;  // AP is monotone upward as well
            ap.exhaustive = true;
        } else {
            NodeCounter subsets(budget.subsets, "AP subset scan");
            bool exhausted = true;
            auto counterexample =
                scan_subsets(ce, k, subsets, &exhausted,
                             [&](const std::vector<Perm>& s) {
                                 return is_independent_set(g, s) &&
                                        !is_primitive_set(g, s, budget);
                             });
            if (counterexample) {
                ap.holds = false;
                ap.exhaustive = true;  // a counterexample is definitive
                ap.witness = std::move(*counterexample);
            } else {
                // only a completed scan confirms AP; a truncated one
                // establishes nothing
                ap.holds = exhausted;
                ap.exhaustive = exhausted;
            }
        }
        if (ap.holds && ap.exhaustive && !rep.nap) rep.nap = k;
    }
    return rep;
}

} // namespace imprim
