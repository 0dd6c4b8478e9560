#ifndef IMPRIM_GROUP_HPP
#define IMPRIM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imprim/budget.hpp"
#include "imprim/partition.hpp"
#include "imprim/perm.hpp"

namespace imprim {

struct ConjugacyClass {
    Perm rep;            // lexicographically smallest member
    std::uint64_t size = 0;
    Partition type;      // shared cycle type
};

// Every element paired with the index of its conjugacy class.
struct ClassifiedElements {
    std::vector<Perm> elements;           // lexicographically sorted
    std::vector<int> class_of;            // aligned with elements
    std::vector<ConjugacyClass> classes;  // identity class first, reps ascending
};

// A finite permutation group on {0..degree-1}, given by generators.  A
// base/strong-generating-set chain is built deterministically on
// construction, so order and membership are exact.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<int>& base() const { return base_; }

    std::uint64_t order() const { return order_; }
    bool trivial() const { return order_ == 1; }
    bool contains(const Perm& g) const;

    // Orbits of the natural action: each ascending, ordered by first point.
    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const;

    // Visits every element exactly once in a fixed deterministic order;
    // stop early by returning false from the callback.
    void for_each_element(const std::function<bool(const Perm&)>& visit,
                          NodeCounter* elements = nullptr) const;
    // All elements, lexicographically sorted.
    std::vector<Perm> elements(const Budget& budget = {}) const;

    // Classes ordered by their (lex-smallest) representatives; the identity
    // class comes first.
    std::vector<ConjugacyClass> conjugacy_classes(const Budget& budget = {}) const;
    ClassifiedElements classified_elements(const Budget& budget = {}) const;

    // Distinct cycle types over all elements (identity included).
    std::set<Partition> spectrum(const Budget& budget = {}) const;

private:
    struct Level {
        int beta = 0;
        std::vector<Perm> gens;          // strong generators active here
        std::vector<int> orbit;          // BFS order from beta
        std::vector<int> where;          // point -> index into orbit, -1 outside
        std::vector<Perm> transversal;   // transversal[i](beta) == orbit[i]
    };

    void recompute_orbit(Level& lv) const;
    // Multiplies g by transversal inverses through levels [from..); returns
    // the residue and the level where sifting stopped.
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
    void build();

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<int> base_;
    std::vector<Level> levels_;
    std::uint64_t order_ = 1;
};

// A partition of the points into cells mapped onto each other by the group.
// Cells are ascending and ordered by first point; block_of maps each point
// to its cell index.
struct BlockSystem {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    int degree() const { return static_cast<int>(block_of.size()); }
    int num_blocks() const { return static_cast<int>(blocks.size()); }
    bool uniform() const;
    int block_size() const;           // cell size when uniform; throws otherwise
    Partition size_multiset() const;  // cell sizes as a partition of the degree
    bool is_trivial() const;          // all singletons, or one full cell

    friend bool operator==(const BlockSystem& a, const BlockSystem& b) {
        return a.blocks == b.blocks;
    }
};

// Packs cells (which must partition {0..degree-1}) into a BlockSystem.
BlockSystem make_block_system(std::vector<std::vector<int>> cells, int degree);

// True when every generator of g maps each cell of bs onto a cell.
bool is_invariant_partition(const PermutationGroup& g, const BlockSystem& bs);

// Finest G-invariant partition in which all the seed points share a cell:
// the union-find closure under x~y => s(x)~s(y).  Requires a transitive
// group (the classical block-system guarantee); for intransitive generator
// sets use invariant_uniform_partition_search instead.
BlockSystem minimal_block_closure(const PermutationGroup& g,
                                  const std::vector<int>& seed);

// A transitive group is primitive when every minimal closure of a pair
// {0, b} is the full point set.  Intransitive groups are never primitive
// here (degree >= 2); on one point the group counts as primitive.
bool is_primitive_group(const PermutationGroup& g);

// All minimal non-trivial block systems arising from pair closures, deduped,
// ordered by block size then content.  Empty for primitive groups.
std::vector<BlockSystem> minimal_block_systems(const PermutationGroup& g);

} // namespace imprim

#endif
