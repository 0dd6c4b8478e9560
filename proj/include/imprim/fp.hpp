#ifndef IMPRIM_FP_HPP
#define IMPRIM_FP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace imprim {

// A k x k matrix over the prime field F_p, entries row-major and reduced
// mod p.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int p, int k, std::vector<int> entries);
    static FpMatrix identity(int p, int k);
    static FpMatrix diagonal(int p, const std::vector<int>& diag);
    // The left coordinate shift S: Se_i = e_{i-1} (indices mod k), so that
    // multiplying a diagonal matrix by S cycles the diagonal entries.
    static FpMatrix coordinate_shift(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int at(int r, int c) const { return e_[r * k_ + c]; }
    int& at(int r, int c) { return e_[r * k_ + c]; }
    const std::vector<int>& entries() const { return e_; }

    int det() const;
    bool invertible() const { return det() != 0; }
    FpMatrix inverse() const;  // throws on singular input
    std::uint64_t multiplicative_order() const;

    std::vector<int> apply(const std::vector<int>& x) const;  // A x
    std::string str() const;  // "[[a,b],[c,d]]"

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
    friend auto operator<=>(const FpMatrix& a, const FpMatrix& b) {
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.e_ <=> b.e_;
    }

private:
    int p_ = 0, k_ = 0;
    std::vector<int> e_;
};

// A monic-or-not polynomial over F_p, coefficients ascending (c[0] + c[1]x +
// ...), leading coefficient nonzero (the zero polynomial has no
// coefficients).
class FpPolynomial {
public:
    FpPolynomial() = default;
    FpPolynomial(int p, std::vector<int> coeffs);  // trims leading zeros
    static FpPolynomial x_power_minus(int p, int k, int d);  // x^k - d

    int p() const { return p_; }
    bool zero() const { return c_.empty(); }
    int degree() const;  // throws on the zero polynomial
    bool monic() const;
    const std::vector<int>& coeffs() const { return c_; }
    int eval(int x) const;
    std::string str() const;  // "x^2+2x+1" style

    friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
    friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;

    // Quotient and remainder by a monic divisor.
    std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& d) const;

private:
    int p_ = 0;
    std::vector<int> c_;
};

// Monic characteristic polynomial det(xI - A), by memoized cofactor
// expansion; supports k <= 8.
FpPolynomial char_poly(const FpMatrix& a);

// Nontrivial monic factorization test, exact for degree <= 8: a root search
// settles degrees 2-3; degrees 4-8 additionally trial-divide by every monic
// polynomial of degree 2..deg/2.  Requires a monic input of degree >= 1.
bool is_reducible(const FpPolynomial& f);

// An invertible affine map x -> Ax + e on F_p^k.
struct AffineMap {
    FpMatrix matrix;
    std::vector<int> translation;

    std::vector<int> apply(const std::vector<int>& x) const;
    std::string str() const;
};

// Vectors of F_p^k in row-major order: index = x_0 p^{k-1} + ... + x_{k-1}.
std::vector<int> vector_unrank(int p, int k, int index);
int vector_rank(int p, const std::vector<int>& x);

// Whether the affine map, as a permutation of F_p^k, has non-empty i-type:
// by the characteristic-polynomial criterion this is exactly reducibility
// of char_poly(A).
bool affine_element_is_imprimitive(const AffineMap& g);

// All invertible k x k matrices over F_p in lexicographic entry order.
std::vector<FpMatrix> all_invertible_matrices(int p, int k);

// Multiplicative closure of a generating set; stops past `cap` elements and
// returns nullopt.  Elements come back sorted.
std::optional<std::vector<FpMatrix>> matrix_group_closure(
    const std::vector<FpMatrix>& gens, std::size_t cap = 100000);

// Number of elements of each multiplicative order, as sorted (order, count)
// pairs: a cheap isomorphism-type fingerprint for small groups.
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile(
    const std::vector<FpMatrix>& elements);

} // namespace imprim

#endif
