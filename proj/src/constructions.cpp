#include "imprim/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace imprim {

namespace {

bool is_prime_order(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Perm perm_from_images(std::vector<int> img) { return Perm(std::move(img)); }

std::uint64_t checked_power(int m, int k, std::size_t cap) {
    std::uint64_t n = 1;
    for (int i = 0; i < k; ++i) {
        n *= static_cast<std::uint64_t>(m);
        if (n > cap) throw std::invalid_argument("degree cap exceeded");
    }
    return n;
}

std::vector<int> digits_of(int x, int m, int k) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
        t[i] = x % m;
        x /= m;
    }
    return t;
}

int digits_rank(const std::vector<int>& t, int m) {
    long long x = 0;
    for (int d : t) x = x * m + d;
    return static_cast<int>(x);
}

} // namespace

PermutationGroup wreath_imprimitive(const PermutationGroup& h,
                                    const PermutationGroup& k) {
    const int a = h.degree(), b = k.degree();
    const long long n = static_cast<long long>(a) * b;
    if (n > 1000000) throw std::invalid_argument("degree cap exceeded");
    std::vector<Perm> gens;
    for (int j = 0; j < b; ++j)
        for (const auto& hg : h.generators()) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (int i = 0; i < a; ++i) img[j * a + i] = j * a + hg(i);
            gens.push_back(perm_from_images(std::move(img)));
        }
    for (const auto& kg : k.generators()) {
        std::vector<int> img(n);
        for (int j = 0; j < b; ++j)
            for (int i = 0; i < a; ++i) img[j * a + i] = kg(j) * a + i;
        gens.push_back(perm_from_images(std::move(img)));
    }
    return PermutationGroup(static_cast<int>(n), std::move(gens));
}

Perm product_action_coordinate(const Perm& h, int m, int k, int coord) {
    if (h.degree() != m) throw std::invalid_argument("factor degree mismatch");
    if (coord < 0 || coord >= k) throw std::invalid_argument("coordinate out of range");
    const int n = static_cast<int>(checked_power(m, k, 100000));
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) {
        auto t = digits_of(x, m, k);
        t[coord] = h(t[coord]);
        img[x] = digits_rank(t, m);
    }
    return perm_from_images(std::move(img));
}

Perm product_action_coordinate_permutation(const Perm& sigma, int m, int k) {
    if (sigma.degree() != k) throw std::invalid_argument("top group degree mismatch");
    const int n = static_cast<int>(checked_power(m, k, 100000));
    std::vector<int> img(n);
    std::vector<int> u(k);
    for (int x = 0; x < n; ++x) {
        const auto t = digits_of(x, m, k);
        for (int i = 0; i < k; ++i) u[sigma(i)] = t[i];
        img[x] = digits_rank(u, m);
    }
    return perm_from_images(std::move(img));
}

PermutationGroup wreath_product_action(const PermutationGroup& h,
                                       const PermutationGroup& k,
                                       std::size_t degree_cap) {
    const int m = h.degree(), kk = k.degree();
    const int n = static_cast<int>(checked_power(m, kk, degree_cap));
    std::vector<Perm> gens;
    for (const auto& hg : h.generators())
        gens.push_back(product_action_coordinate(hg, m, kk, 0));
    for (const auto& kg : k.generators())
        gens.push_back(product_action_coordinate_permutation(kg, m, kk));
    PermutationGroup out(n, std::move(gens));
    if (kk >= 2 && n <= 10000) {
        // classical product-action primitivity criterion, checked rather
        // than assumed (skipped for degrees where the check itself would
        // dominate the construction)
        const bool expected = is_primitive_group(h) &&
                              !is_prime_order(h.order()) && k.is_transitive();
        if (is_primitive_group(out) != expected)
            throw std::logic_error("product-action primitivity post-check failed");
    }
    return out;
}

PermutationGroup action_on_k_subsets(const PermutationGroup& g, int k,
                                     bool* faithful, std::size_t degree_cap) {
    const int n = g.degree();
    if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
    // all k-subsets in lexicographic order
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        subsets.push_back(cur);
        if (subsets.size() > degree_cap) throw std::invalid_argument("degree cap exceeded");
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        index.emplace(subsets[i], static_cast<int>(i));
    std::vector<Perm> gens;
    for (const auto& s : g.generators()) {
        std::vector<int> img(subsets.size());
        std::vector<int> moved(k);
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (int j = 0; j < k; ++j) moved[j] = s(subsets[i][j]);
            std::sort(moved.begin(), moved.end());
            img[i] = index.at(moved);
        }
        gens.push_back(perm_from_images(std::move(img)));
    }
    PermutationGroup out(static_cast<int>(subsets.size()), std::move(gens));
    if (faithful) *faithful = out.order() == g.order();
    return out;
}

PermutationGroup affine_group(int p, int k,
                              const std::vector<FpMatrix>& matrix_generators,
                              bool include_translations) {
    if (p < 2) throw std::invalid_argument("field characteristic must be prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("field characteristic must be prime");
    const int n = static_cast<int>(checked_power(p, k, 100000));
    for (const auto& a : matrix_generators) {
        if (a.p() != p || a.k() != k)
            throw std::invalid_argument("matrix field/dimension mismatch");
        if (!a.invertible()) throw std::invalid_argument("singular matrix");
    }
    std::vector<Perm> gens;
    for (const auto& a : matrix_generators) {
        std::vector<int> img(n);
        for (int x = 0; x < n; ++x)
            img[x] = vector_rank(p, a.apply(vector_unrank(p, k, x)));
        gens.push_back(perm_from_images(std::move(img)));
    }
    if (include_translations)
        for (int i = 0; i < k; ++i) {
            std::vector<int> img(n);
            for (int x = 0; x < n; ++x) {
                auto v = vector_unrank(p, k, x);
                v[i] = (v[i] + 1) % p;
                img[x] = vector_rank(p, v);
            }
            gens.push_back(perm_from_images(std::move(img)));
        }
    return PermutationGroup(n, std::move(gens));
}

std::optional<AffineMap> affine_from_perm(int p, int k, const Perm& g) {
    const int n = static_cast<int>(checked_power(p, k, 100000));
    if (g.degree() != n) throw std::invalid_argument("degree is not p^k");
    const std::vector<int> e = vector_unrank(p, k, g(0));  // image of the origin
    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    for (int c = 0; c < k; ++c) {
        std::vector<int> unit(k, 0);
        unit[c] = 1;
        const auto img = vector_unrank(p, k, g(vector_rank(p, unit)));
        for (int r = 0; r < k; ++r)
            entries[r * k + c] = ((img[r] - e[r]) % p + p) % p;
    }
    FpMatrix a(p, k, std::move(entries));
    if (!a.invertible()) return std::nullopt;
    AffineMap map{std::move(a), e};
    for (int x = 0; x < n; ++x)
        if (g(x) != vector_rank(p, map.apply(vector_unrank(p, k, x))))
            return std::nullopt;
    return map;
}

PermutationGroup diagonal_square(const PermutationGroup& t, bool* nonabelian,
                                 const Budget& budget) {
    NodeCounter counter(budget.elements, "diagonal point enumeration");
    std::vector<Perm> pts;
    t.for_each_element(
        [&](const Perm& e) {
            pts.push_back(e);
            return true;
        },
        &counter);
    std::unordered_map<Perm, int, PermHash> index;
    index.reserve(pts.size() * 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        index.emplace(pts[i], static_cast<int>(i));
    const int n = static_cast<int>(pts.size());
    std::vector<Perm> gens;
    for (const auto& tg : t.generators()) {
        const Perm ti = tg.inverse();
        std::vector<int> left(n), right(n);
        for (int x = 0; x < n; ++x) {
            left[x] = index.at(ti * pts[x]);
            right[x] = index.at(pts[x] * tg);
        }
        gens.push_back(perm_from_images(std::move(left)));
        gens.push_back(perm_from_images(std::move(right)));
    }
    if (nonabelian) {
        *nonabelian = false;
        const auto& tg = t.generators();
        for (std::size_t i = 0; i < tg.size() && !*nonabelian; ++i)
            for (std::size_t j = i + 1; j < tg.size(); ++j)
                if (!(tg[i] * tg[j] == tg[j] * tg[i])) {
                    *nonabelian = true;
                    break;
                }
    }
    return PermutationGroup(n, std::move(gens));
}

PermutationGroup symmetric_group(int n) {
    if (n < 1) throw std::invalid_argument("symmetric_group needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> swap01(n), cycle(n);
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        gens.push_back(perm_from_images(std::move(swap01)));
        if (n >= 3) gens.push_back(perm_from_images(std::move(cycle)));
    }
    return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group needs n >= 1");
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return PermutationGroup(n, {perm_from_images(std::move(cycle))});
}

PermutationGroup alternating_group(int n) {
    if (n < 1) throw std::invalid_argument("alternating_group needs n >= 1");
    if (n <= 2) return PermutationGroup(n, {});
    std::vector<Perm> gens{Perm::parse("(1,2,3)", n)};
    if (n >= 4) {
        // a 3-cycle plus an even long cycle: (1..n) for odd n, (2..n) for even
        std::vector<int> cycle(n);
        std::iota(cycle.begin(), cycle.end(), 0);
        const int start = (n % 2 == 1) ? 0 : 1;
        for (int i = start; i < n; ++i)
            cycle[i] = (i + 1 - start) % (n - start) + start;
        gens.push_back(perm_from_images(std::move(cycle)));
    }
    return PermutationGroup(n, std::move(gens));
}

PermutationGroup klein_four_regular() {
    return PermutationGroup(4, {Perm::parse("(1,2)(3,4)"),
                                Perm::parse("(1,3)(2,4)")});
}

namespace {

// The quadratic-residue subgroup of AGL(1,5): x -> 4x and x -> x+1 (4 is
// the non-trivial square mod 5), order 10.
PermutationGroup qr_agl15() {
    return PermutationGroup(5, {Perm(std::vector<int>{0, 4, 3, 2, 1}),
                                Perm(std::vector<int>{1, 2, 3, 4, 0})});
}

// D_3 as the affine maps x -> +-x + b on F_3.
PermutationGroup d3_affine() {
    return PermutationGroup(3, {Perm(std::vector<int>{0, 2, 1}),
                                Perm(std::vector<int>{1, 2, 0})});
}

// Matrix generators found once by the deterministic exhaustive searches
// below (see the regeneration tests) and frozen here.
const std::map<std::string, std::vector<FpMatrix>>& frozen_matrices() {
    static const std::map<std::string, std::vector<FpMatrix>> table = {
        {"affine_9_q8", {FpMatrix(3, 2, {0, 1, 2, 0}), FpMatrix(3, 2, {1, 1, 1, 2})}},
        {"affine_9_c4", {FpMatrix(3, 2, {0, 1, 2, 0})}},
        {"affine_25_d8", {FpMatrix(5, 2, {0, 1, 4, 0}), FpMatrix(5, 2, {0, 1, 1, 0})}},
        {"affine_25_d8x2",
         {FpMatrix(5, 2, {0, 1, 4, 0}), FpMatrix(5, 2, {0, 1, 1, 0}),
          FpMatrix(5, 2, {0, 2, 2, 0})}},
        {"affine_25_sl23", {FpMatrix(5, 2, {0, 1, 4, 0}), FpMatrix(5, 2, {1, 1, 2, 3})}},
        {"affine_25_dic3", {FpMatrix(5, 2, {0, 1, 4, 1}), FpMatrix(5, 2, {0, 2, 2, 0})}},
    };
    return table;
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "a6_on_pairs",    "s3_wr_c2_product", "qr_agl15_wr_s2",
        "dp_wr_c4_p3",    "diag_a5",          "affine_9_q8",
        "affine_9_c4",    "affine_25_d8",     "affine_25_d8x2",
        "affine_25_sl23", "affine_25_dic3",   "s3_wr_c2c2_product",
    };
    return names;
}

const std::vector<FpMatrix>& catalog_matrices(const std::string& name) {
    const auto& table = frozen_matrices();
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("no matrix data for catalog entry '" + name + "'");
    return it->second;
}

PermutationGroup catalog(const std::string& name) {
    if (name == "a6_on_pairs") return action_on_k_subsets(alternating_group(6), 2);
    if (name == "s3_wr_c2_product")
        return wreath_product_action(symmetric_group(3), cyclic_group(2));
    if (name == "qr_agl15_wr_s2")
        return wreath_product_action(qr_agl15(), symmetric_group(2));
    if (name == "dp_wr_c4_p3")
        return wreath_product_action(d3_affine(), cyclic_group(4));
    if (name == "diag_a5") return diagonal_square(alternating_group(5));
    if (name == "s3_wr_c2c2_product")
        return wreath_product_action(symmetric_group(3), klein_four_regular());
    const auto& table = frozen_matrices();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown catalog entry '" + name + "'");
    const int p = it->second.front().p();
    return affine_group(p, 2, it->second, true);
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> profile(
    std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> init) {
    return {init};
}

bool closure_matches(const std::vector<FpMatrix>& gens, std::size_t order,
                     const std::vector<std::pair<std::uint64_t, std::uint64_t>>& want,
                     std::vector<FpMatrix>* out = nullptr) {
    auto cl = matrix_group_closure(gens, order + 1);
    if (!cl || cl->size() != order || order_profile(*cl) != want) return false;
    if (out) *out = std::move(*cl);
    return true;
}

bool affine_primitive(const std::vector<FpMatrix>& gens) {
    return is_primitive_group(affine_group(gens.front().p(), 2, gens, true));
}

std::set<Partition> affine_spectrum(const std::vector<FpMatrix>& gens) {
    return affine_group(gens.front().p(), 2, gens, true).spectrum();
}

} // namespace

std::vector<FpMatrix> search_gl23_quaternion() {
    const auto q8 = profile({{1, 1}, {2, 1}, {4, 6}});
    const auto gl = all_invertible_matrices(3, 2);
    std::vector<FpMatrix> order4;
    for (const auto& m : gl)
        if (m.multiplicative_order() == 4) order4.push_back(m);
    for (std::size_t i = 0; i < order4.size(); ++i)
        for (std::size_t j = i + 1; j < order4.size(); ++j) {
            const std::vector<FpMatrix> gens{order4[i], order4[j]};
            if (!closure_matches(gens, 8, q8)) continue;
            if (!affine_primitive(gens)) continue;
            return gens;
        }
    throw std::logic_error("no quaternion subgroup found in GL(2,3)");
}

std::vector<FpMatrix> search_gl23_irreducible_c4() {
    for (const auto& m : all_invertible_matrices(3, 2)) {
        if (m.multiplicative_order() != 4 || is_reducible(char_poly(m))) continue;
        const std::vector<FpMatrix> gens{m};
        if (!affine_primitive(gens)) continue;
        return gens;
    }
    throw std::logic_error("no irreducible order-4 matrix found in GL(2,3)");
}

MatrixPairSearch search_gl25_d8_pair() {
    const auto d8 = profile({{1, 1}, {2, 5}, {4, 2}});
    const auto gl = all_invertible_matrices(5, 2);
    std::vector<FpMatrix> order2, order4;
    for (const auto& m : gl) {
        const auto o = m.multiplicative_order();
        if (o == 2) order2.push_back(m);
        if (o == 4) order4.push_back(m);
    }
    for (const auto& r : order4)
        for (const auto& s : order2) {
            const std::vector<FpMatrix> h{r, s};
            std::vector<FpMatrix> h_elems;
            if (!closure_matches(h, 8, d8, &h_elems)) continue;
            if (!affine_primitive(h)) continue;
            const auto spectrum_h = affine_spectrum(h);
            for (const auto& z : gl) {
                if (std::find(h_elems.begin(), h_elems.end(), z) != h_elems.end())
                    continue;
                const std::vector<FpMatrix> k{r, s, z};
                auto cl = matrix_group_closure(k, 17);
                if (!cl || cl->size() != 16) continue;
                if (!affine_primitive(k)) continue;
                if (affine_spectrum(k) != spectrum_h) continue;
                return {h, k};
            }
        }
    throw std::logic_error("no dihedral spectrum pair found in GL(2,5)");
}

MatrixPairSearch search_gl25_sl23_dic3_pair() {
    const auto sl23 = profile({{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
    const auto dic3 = profile({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
    const auto gl = all_invertible_matrices(5, 2);
    std::vector<FpMatrix> order3, order4, order6;
    for (const auto& m : gl) {
        const auto o = m.multiplicative_order();
        if (o == 3) order3.push_back(m);
        if (o == 4) order4.push_back(m);
        if (o == 6) order6.push_back(m);
    }
    for (const auto& a : order4)
        for (const auto& c : order3) {
            const std::vector<FpMatrix> h{a, c};
            if (!closure_matches(h, 24, sl23)) continue;
            if (!affine_primitive(h)) continue;
            const auto spectrum_h = affine_spectrum(h);
            for (const auto& x : order6)
                for (const auto& y : order4) {
                    const std::vector<FpMatrix> k{x, y};
                    if (!closure_matches(k, 12, dic3)) continue;
                    if (!affine_primitive(k)) continue;
                    if (affine_spectrum(k) != spectrum_h) continue;
                    return {h, k};
                }
        }
    throw std::logic_error("no SL(2,3)/dicyclic spectrum pair found in GL(2,5)");
}

} // namespace imprim
