#include "imprim/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "imprim/budget.hpp"

namespace imprim {

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    for (auto p : parts_)
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

Partition Partition::parse(std::string_view text) {
    std::vector<std::uint64_t> parts;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool bracketed = false, closed = false;
    if (i < n && text[i] == '[') { bracketed = true; ++i; }
    for (;;) {
        skip_ws();
        if (i >= n) break;
        if (bracketed && text[i] == ']') { ++i; closed = true; break; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected a part", i);
        std::uint64_t v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            ++i;
        }
        if (v == 0) throw parse_error("parts must be positive", i);
        parts.push_back(v);
        skip_ws();
        if (i < n && text[i] == ',') { ++i; continue; }
        if (bracketed && i < n && text[i] == ']') { ++i; closed = true; break; }
        if (i < n) throw parse_error("expected ',' between parts", i);
    }
    if (bracketed && !closed) throw parse_error("unclosed '['", i);
    {
        std::size_t j = i;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j < n) throw parse_error("trailing characters after partition", j);
    }
    if (parts.empty()) throw parse_error("empty partition", i);
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition partition_power(const Partition& p, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("exponent must be positive");
    std::vector<std::uint64_t> parts;
    for (auto l : p.parts()) {
        std::uint64_t g = std::gcd(l, e);
        for (std::uint64_t i = 0; i < g; ++i) parts.push_back(l / g);
    }
    return Partition(std::move(parts));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto d : divisors(n))
        if (d > 1 && d < n) out.push_back(d);
    return out;
}

std::uint64_t gcd_of_parts(const Partition& p) {
    std::uint64_t g = 0;
    for (auto v : p.parts()) g = std::gcd(g, v);
    return g;
}

std::vector<Partition> all_partitions(std::uint64_t n) {
    std::vector<Partition> out;
    std::vector<std::uint64_t> cur;
    std::function<void(std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t remaining, std::uint64_t maxpart) {
            if (remaining == 0) {
                out.emplace_back(cur);
                return;
            }
            for (std::uint64_t p = std::min(remaining, maxpart); p >= 1; --p) {
                cur.push_back(p);
                rec(remaining - p, p);
                cur.pop_back();
            }
        };
    rec(n, n);
    return out;
}

} // namespace imprim
