#ifndef IMPRIM_CONSTRUCTIONS_HPP
#define IMPRIM_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "imprim/fp.hpp"
#include "imprim/group.hpp"
#include "imprim/perm.hpp"

namespace imprim {

// H acting on b disjoint blocks of a points each (point j*a + i carries
// position i of block j), plus K permuting the blocks: the imprimitive
// wreath product H wr K of degree a*b.
PermutationGroup wreath_imprimitive(const PermutationGroup& h,
                                    const PermutationGroup& k);

// Points of the product action are k-tuples over {0..m-1}, row-major
// (t_0 most significant).  These embed one factor, resp. the top group,
// into Sym(m^k).
Perm product_action_coordinate(const Perm& h, int m, int k, int coord);
Perm product_action_coordinate_permutation(const Perm& sigma, int m, int k);

// H wr K in the product action on m^k points: H's generators applied in
// coordinate 0, K's generators permuting coordinates.  For k >= 2 the
// result is primitive exactly when H is primitive but not cyclic of prime
// order and K is transitive; this is asserted (degree permitting), not
// assumed.  Degrees above the cap are refused.
PermutationGroup wreath_product_action(const PermutationGroup& h,
                                       const PermutationGroup& k,
                                       std::size_t degree_cap = 100000);

// The induced action of G on k-subsets of its points, subsets ordered
// lexicographically.  When `faithful` is supplied it reports whether the
// induced image has the same order as G.
PermutationGroup action_on_k_subsets(const PermutationGroup& g, int k,
                                     bool* faithful = nullptr,
                                     std::size_t degree_cap = 100000);

// The subgroup of AGL(k,p) generated by the given matrices (as maps
// x -> Ax) and, when requested, the k standard translations x -> x + e_i.
// Points are the vectors of F_p^k in row-major order.
PermutationGroup affine_group(int p, int k,
                              const std::vector<FpMatrix>& matrix_generators,
                              bool include_translations);

// Reconstructs the affine map realizing `g` on F_p^k (translation g(0),
// matrix columns g(e_i) - g(0)); empty when g is not affine.
std::optional<AffineMap> affine_from_perm(int p, int k, const Perm& g);

// T^2 acting on T by x -> t^{-1} x s: generated by the left and right
// translations of T's generators.  Points are T's elements in BSGS
// enumeration order.  When `nonabelian` is supplied it reports whether T
// satisfies the nonabelian hypothesis (abelian T collapses T_L into T_R and
// the theorem does not apply).
PermutationGroup diagonal_square(const PermutationGroup& t,
                                 bool* nonabelian = nullptr,
                                 const Budget& budget = {});

// Standard small groups in their natural actions: S_n and A_n on n points,
// C_n regular, and the Klein four-group acting regularly on 4 points.
PermutationGroup symmetric_group(int n);
PermutationGroup alternating_group(int n);
PermutationGroup cyclic_group(int n);
PermutationGroup klein_four_regular();

// Named example groups.  Affine entries use matrix subgroups found once by
// the deterministic exhaustive searches below and frozen here; the searches
// are re-run by tests to confirm the frozen data.
const std::vector<std::string>& catalog_names();
PermutationGroup catalog(const std::string& name);

// Frozen matrix generators behind the affine catalog entries.
const std::vector<FpMatrix>& catalog_matrices(const std::string& name);

// Deterministic exhaustive searches over GL(2,3) / GL(2,5), lexicographic
// first match.  They pin down, respectively: a generating pair of the
// quaternion subgroup Q_8; an order-4 matrix with irreducible
// characteristic polynomial (a C_4 acting irreducibly); a dihedral D_8 plus
// an order-16 overgroup whose affine groups on 25 points are primitive with
// equal spectra; an SL(2,3) plus a dicyclic Q_12 with primitive affine
// groups of equal spectra.
std::vector<FpMatrix> search_gl23_quaternion();
std::vector<FpMatrix> search_gl23_irreducible_c4();
struct MatrixPairSearch {
    std::vector<FpMatrix> first, second;
};
MatrixPairSearch search_gl25_d8_pair();
MatrixPairSearch search_gl25_sl23_dic3_pair();

} // namespace imprim

#endif
