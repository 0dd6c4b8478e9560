#ifndef IMPRIM_PERM_HPP
#define IMPRIM_PERM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "imprim/partition.hpp"

namespace imprim {

// A permutation of {0..degree-1}, stored as its image vector.  Text I/O is
// 1-based (cycle notation or bracketed image lists); everything internal is
// 0-based.  Products compose left to right: (a*b)(x) = b(a(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);

    // "(1,2,3)(4,5)" or "()" or "[2,3,1]" (image list).  When degree >= 0
    // the result is padded/validated to that degree; otherwise the degree is
    // the largest point mentioned (or the list length).
    static Perm parse(std::string_view text, int degree = -1);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm power(std::int64_t e) const;
    std::uint64_t order() const;

    // Non-trivial cycles, each starting at its smallest point, sorted by
    // that point.
    std::vector<std::vector<int>> cycles() const;
    // The full cycle type including fixed points: a partition of the degree.
    Partition cycle_type() const;

    std::string str() const;  // 1-based cycle notation, "()" for identity

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

// h^{-1} g h (so that x -> h(x) intertwines g with the result).
Perm conjugate(const Perm& g, const Perm& h);

std::uint64_t count_fixed_points(const Perm& g);

std::int64_t mobius(std::uint64_t n);

// Number of f-cycles of g, recovered from fixed-point counts of powers:
// f * c_f(g) = sum over e | f of mobius(f/e) * fix(g^e).
std::uint64_t cycle_count_from_power_fixes(const Perm& g, std::uint64_t f);

// Inverts a whole fixed-point profile {d -> fix(g^d), d | N} into cycle
// counts {f -> c_f, c_f > 0} over the same divisor lattice.  Throws
// std::invalid_argument("not a fixed-point profile") when some c_f comes out
// negative or non-integral.
std::map<std::uint64_t, std::uint64_t> cycle_counts_from_fixed_points(
    const std::map<std::uint64_t, std::uint64_t>& fixed);

struct PermHash {
    std::size_t operator()(const Perm& g) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : g.images()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace imprim

#endif
