#include "imprim/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace imprim {

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators)
    : degree_(degree) {
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    for (auto& g : generators) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    build();
}

void PermutationGroup::recompute_orbit(Level& lv) const {
    lv.orbit.assign(1, lv.beta);
    lv.where.assign(degree_, -1);
    lv.where[lv.beta] = 0;
    lv.transversal.assign(1, Perm::identity(degree_));
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
        const int p = lv.orbit[qi];
        for (const auto& s : lv.gens) {
            const int q = s(p);
            if (lv.where[q] < 0) {
                lv.where[q] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.transversal.push_back(lv.transversal[qi] * s);
            }
        }
    }
}

std::pair<Perm, std::size_t> PermutationGroup::strip(Perm g, std::size_t from) const {
    for (std::size_t lev = from; lev < levels_.size(); ++lev) {
        const Level& lv = levels_[lev];
        const int x = g(lv.beta);
        if (lv.where[x] < 0) return {std::move(g), lev};
        g = g * lv.transversal[lv.where[x]].inverse();
    }
    return {std::move(g), levels_.size()};
}

void PermutationGroup::build() {
    levels_.clear();
    base_.clear();
    order_ = 1;
    if (gens_.empty()) return;

    auto smallest_moved = [](const Perm& g) {
        for (int x = 0; x < g.degree(); ++x)
            if (g(x) != x) return x;
        return -1;
    };

    // One pool of strong generators; level l's generating set is every pool
    // member fixing the first l base points.  This keeps the level sets
    // nested, which the orbit-product order formula requires.
    std::vector<Perm> strong = gens_;
    auto fixes_prefix = [&](const Perm& g, std::size_t l) {
        for (std::size_t t = 0; t < l; ++t)
            if (g(levels_[t].beta) != levels_[t].beta) return false;
        return true;
    };
    auto refresh_level = [&](std::size_t l) {
        levels_[l].gens.clear();
        for (const auto& s : strong)
            if (fixes_prefix(s, l)) levels_[l].gens.push_back(s);
        recompute_orbit(levels_[l]);
    };

    Level l0;
    l0.beta = degree_;
    for (const auto& g : gens_) l0.beta = std::min(l0.beta, smallest_moved(g));
    levels_.push_back(std::move(l0));

    // Deterministic Schreier-Sims: verify levels deepest-first; every
    // non-trivial sifted Schreier generator joins the pool, the levels it
    // belongs to are refreshed, and verification resumes at the deepest
    // refreshed level.
    std::size_t i = levels_.size();  // next to verify is i-1
    while (i > 0) {
        --i;
        refresh_level(i);
        bool restart = false;
        for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restart; ++oi) {
            for (std::size_t si = 0; si < levels_[i].gens.size(); ++si) {
                const Level& lv = levels_[i];
                const Perm& s = lv.gens[si];
                const int q = s(lv.orbit[oi]);
                Perm schreier =
                    lv.transversal[oi] * s * lv.transversal[lv.where[q]].inverse();
                if (schreier.is_identity()) continue;
                auto [residue, j] = strip(std::move(schreier), i + 1);
                if (residue.is_identity()) continue;
                if (j == levels_.size()) {
                    Level nl;
                    nl.beta = smallest_moved(residue);
                    levels_.push_back(std::move(nl));
                }
                strong.push_back(std::move(residue));
                for (std::size_t l = i + 1; l <= j; ++l) refresh_level(l);
                i = j + 1;  // re-verify level j and everything above it
                restart = true;
                break;
            }
        }
    }

    base_.clear();
    order_ = 1;
    for (const auto& lv : levels_) {
        base_.push_back(lv.beta);
        order_ *= lv.orbit.size();
    }
}

bool PermutationGroup::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    if (g.is_identity()) return true;
    if (levels_.empty()) return false;
    auto [residue, lev] = strip(g, 0);
    return residue.is_identity();
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree_, false);
    for (int start = 0; start < degree_; ++start) {
        if (seen[start]) continue;
        std::vector<int> orb{start};
        seen[start] = true;
        for (std::size_t qi = 0; qi < orb.size(); ++qi)
            for (const auto& s : gens_) {
                const int q = s(orb[qi]);
                if (!seen[q]) {
                    seen[q] = true;
                    orb.push_back(q);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermutationGroup::is_transitive() const {
    return orbits().size() == 1;
}

void PermutationGroup::for_each_element(
    const std::function<bool(const Perm&)>& visit, NodeCounter* elements) const {
    // Odometer over the transversal chain: every element factors uniquely as
    // t_{k-1} * ... * t_0 with t_i in level i's transversal.
    const std::size_t k = levels_.size();
    if (k == 0) {
        if (elements) elements->tick();
        visit(Perm::identity(degree_));
        return;
    }
    std::vector<std::size_t> idx(k, 0);
    // partial[i] = t_{k-1} * ... * t_i, the picks for levels k-1 down to i
    std::vector<Perm> partial(k + 1, Perm::identity(degree_));
    for (std::size_t i = k; i-- > 0;)
        partial[i] = partial[i + 1] * levels_[i].transversal[0];
    for (;;) {
        if (elements) elements->tick();
        if (!visit(partial[0])) return;
        // advance the odometer: bump the deepest level first
        std::size_t i = 0;
        while (i < k && ++idx[i] == levels_[i].transversal.size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == k) return;
        for (std::size_t j = i + 1; j-- > 0;)
            partial[j] = partial[j + 1] * levels_[j].transversal[idx[j]];
    }
}

std::vector<Perm> PermutationGroup::elements(const Budget& budget) const {
    NodeCounter counter(budget.elements, "element enumeration");
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order_, 1 << 20)));
    for_each_element(
        [&](const Perm& g) {
            out.push_back(g);
            return true;
        },
        &counter);
    std::sort(out.begin(), out.end());
    return out;
}

ClassifiedElements PermutationGroup::classified_elements(
    const Budget& budget) const {
    ClassifiedElements out;
    out.elements = elements(budget);
    const auto& elems = out.elements;
    std::unordered_map<Perm, int, PermHash> index;
    index.reserve(elems.size() * 2);
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], static_cast<int>(i));

    // union-find over element indices; closure under conjugation by the
    // generators links exactly the conjugacy classes
    std::vector<int> parent(elems.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : gens_) {
            const int j = index.at(conjugate(elems[i], s));
            const int a = find(static_cast<int>(i)), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<int, int> class_index;  // root -> class position
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const int r = find(static_cast<int>(i));
        auto it = class_index.find(r);
        if (it == class_index.end()) {
            // elements are sorted, so the first index seen is the lex-least;
            // roots are minimal indices, so reps ascend lexicographically
            // and the identity (index 0) heads class 0
            it = class_index.emplace(r, static_cast<int>(out.classes.size())).first;
            ConjugacyClass c;
            c.rep = elems[i];
            c.size = 0;
            c.type = elems[i].cycle_type();
            out.classes.push_back(std::move(c));
        }
        ++out.classes[it->second].size;
        out.class_of.push_back(it->second);
    }
    return out;
}

std::vector<ConjugacyClass> PermutationGroup::conjugacy_classes(
    const Budget& budget) const {
    return classified_elements(budget).classes;
}

std::set<Partition> PermutationGroup::spectrum(const Budget& budget) const {
    NodeCounter counter(budget.elements, "spectrum enumeration");
    std::set<Partition> out;
    for_each_element(
        [&](const Perm& g) {
            out.insert(g.cycle_type());
            return true;
        },
        &counter);
    return out;
}

namespace {

struct PointUnion {
    std::vector<int> parent;
    explicit PointUnion(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::vector<std::vector<int>> cells_of(PointUnion& uf, int n) {
    std::map<int, std::vector<int>> cells;
    for (int x = 0; x < n; ++x) cells[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    out.reserve(cells.size());
    for (auto& [r, cell] : cells) out.push_back(std::move(cell));
    return out;
}

std::vector<std::vector<int>> closure_cells(const PermutationGroup& g,
                                            const std::vector<int>& seed) {
    const int n = g.degree();
    for (int p : seed)
        if (p < 0 || p >= n) throw std::invalid_argument("seed point out of range");
    PointUnion uf(n);
    std::queue<std::pair<int, int>> todo;
    for (std::size_t i = 1; i < seed.size(); ++i)
        if (uf.unite(seed[0], seed[i])) todo.emplace(seed[0], seed[i]);
    while (!todo.empty()) {
        auto [a, b] = todo.front();
        todo.pop();
        for (const auto& s : g.generators())
            if (uf.unite(s(a), s(b))) todo.emplace(s(a), s(b));
    }
    return cells_of(uf, n);
}

} // namespace

bool BlockSystem::uniform() const {
    if (blocks.empty()) return false;
    for (const auto& c : blocks)
        if (c.size() != blocks[0].size()) return false;
    return true;
}

int BlockSystem::block_size() const {
    if (!uniform()) throw std::logic_error("block system is not uniform");
    return static_cast<int>(blocks[0].size());
}

Partition BlockSystem::size_multiset() const {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(blocks.size());
    for (const auto& c : blocks) sizes.push_back(c.size());
    return Partition(std::move(sizes));
}

bool BlockSystem::is_trivial() const {
    return num_blocks() == 1 || num_blocks() == degree();
}

BlockSystem make_block_system(std::vector<std::vector<int>> cells, int degree) {
    BlockSystem bs;
    for (auto& c : cells) {
        if (c.empty()) throw std::invalid_argument("empty cell in block system");
        std::sort(c.begin(), c.end());
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    bs.block_of.assign(degree, -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (int p : cells[i]) {
            if (p < 0 || p >= degree || bs.block_of[p] != -1)
                throw std::invalid_argument("cells do not partition the points");
            bs.block_of[p] = static_cast<int>(i);
        }
    for (int p = 0; p < degree; ++p)
        if (bs.block_of[p] == -1)
            throw std::invalid_argument("cells do not partition the points");
    bs.blocks = std::move(cells);
    return bs;
}

bool is_invariant_partition(const PermutationGroup& g, const BlockSystem& bs) {
    if (bs.degree() != g.degree()) return false;
    for (const auto& s : g.generators())
        for (const auto& c : bs.blocks) {
            const int target = bs.block_of[s(c[0])];
            if (bs.blocks[target].size() != c.size()) return false;
            for (int p : c)
                if (bs.block_of[s(p)] != target) return false;
        }
    return true;
}

BlockSystem minimal_block_closure(const PermutationGroup& g,
                                  const std::vector<int>& seed) {
    if (!g.is_transitive())
        throw std::invalid_argument(
            "minimal_block_closure needs a transitive group; use "
            "invariant_uniform_partition_search for intransitive sets");
    return make_block_system(closure_cells(g, seed), g.degree());
}

bool is_primitive_group(const PermutationGroup& g) {
    const int n = g.degree();
    if (n == 1) return true;
    if (!g.is_transitive()) return false;
    for (int b = 1; b < n; ++b)
        if (closure_cells(g, {0, b}).size() != 1) return false;
    return true;
}

std::vector<BlockSystem> minimal_block_systems(const PermutationGroup& g) {
    std::vector<BlockSystem> out;
    const int n = g.degree();
    if (n == 1 || !g.is_transitive())
        throw std::invalid_argument(
            "minimal_block_systems needs a transitive group; use "
            "invariant_uniform_partition_search for intransitive sets");
    for (int b = 1; b < n; ++b) {
        auto cells = closure_cells(g, {0, b});
        if (cells.size() == 1 || cells.size() == static_cast<std::size_t>(n)) continue;
        auto bs = make_block_system(std::move(cells), n);
        if (std::find(out.begin(), out.end(), bs) == out.end())
            out.push_back(std::move(bs));
    }
    std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
        if (a.blocks[0].size() != b.blocks[0].size())
            return a.blocks[0].size() < b.blocks[0].size();
        return a.blocks < b.blocks;
    });
    return out;
}

} // namespace imprim
