#ifndef IMPRIM_BUDGET_HPP
#define IMPRIM_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace imprim {

// Raised when a search exceeds its resource budget.  Deciders never return a
// wrong answer under pressure: they either finish or throw this.
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised on malformed textual input (permutations, partitions, group files).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Resource limits for the potentially exponential searches.  Defaults are
// generous for desk-scale inputs; the CLI exposes overrides.
struct Budget {
    std::uint64_t nodes    = 10'000'000;  // backtracking / enumeration nodes
    std::uint64_t elements = 10'000'000;  // group elements streamed
    std::uint64_t subsets  = 1'000'000;   // generator subsets examined
};

// Shared countdown used by one logical query; throws when exhausted.
class NodeCounter {
public:
    NodeCounter(std::uint64_t limit, std::string label)
        : left_(limit), limit_(limit), label_(std::move(label)) {}

    void tick(std::uint64_t k = 1) {
        if (left_ < k)
            throw inconclusive_error(label_ + ": budget of " +
                                     std::to_string(limit_) + " exhausted");
        left_ -= k;
    }
    std::uint64_t used() const { return limit_ - left_; }
    std::uint64_t remaining() const { return left_; }

private:
    std::uint64_t left_;
    std::uint64_t limit_;
    std::string label_;
};

} // namespace imprim

#endif
