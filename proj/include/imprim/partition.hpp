#ifndef IMPRIM_PARTITION_HPP
#define IMPRIM_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace imprim {

// A partition of a positive integer n: a multiset of positive parts, stored
// in non-increasing order.  The default-constructed partition is the empty
// partition of 0 (used only as a neutral value).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint64_t> parts);

    // Accepts "30,24,12", "[1, 5, 10]", with arbitrary whitespace; order of
    // parts in the input is irrelevant.  Throws parse_error on bad input or
    // non-positive parts.
    static Partition parse(std::string_view text);

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::uint64_t n() const { return n_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return parts_[i]; }

    std::string str() const;  // "30,24,12"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t n_ = 0;
};

// Cycle type of g^e given the cycle type of g: each part l contributes
// gcd(l,e) parts of size l/gcd(l,e).
Partition partition_power(const Partition& p, std::uint64_t e);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Divisors d with 1 < d < n, ascending (the candidate block counts/sizes).
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

std::uint64_t gcd_of_parts(const Partition& p);

// All partitions of n in lexicographically decreasing order of their
// non-increasing part vectors, starting from (n).  Intended for desk-scale n.
std::vector<Partition> all_partitions(std::uint64_t n);

} // namespace imprim

#endif
