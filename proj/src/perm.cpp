#include "imprim/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "imprim/budget.hpp"

namespace imprim {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= degree() || seen[x])
            throw std::invalid_argument("image vector is not a permutation");
        seen[x] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (img_[x] != x) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
    return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("degree mismatch in product");
    std::vector<int> img(a.img_.size());
    for (int x = 0; x < a.degree(); ++x) img[x] = b.img_[a.img_[x]];
    return Perm(std::move(img));
}

Perm Perm::power(std::int64_t e) const {
    Perm base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e)
                            : static_cast<std::uint64_t>(e);
    Perm acc = identity(degree());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::uint64_t Perm::order() const {
    const Partition type = cycle_type();
    std::uint64_t o = 1;
    for (auto l : type.parts()) o = std::lcm(o, l);
    return o;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x] || img_[x] == x) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            seen[y] = true;
            cyc.push_back(y);
            y = img_[y];
        } while (y != x);
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Perm::cycle_type() const {
    if (degree() == 0) throw std::invalid_argument("cycle type of empty permutation");
    std::vector<std::uint64_t> parts;
    std::vector<bool> seen(img_.size(), false);
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        int y = x;
        do {
            seen[y] = true;
            ++len;
            y = img_[y];
        } while (y != x);
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

std::string Perm::str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c[i] + 1);
        }
        out += ')';
    }
    return out;
}

Perm Perm::parse(std::string_view text, int degree) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_point = [&]() -> int {
        skip_ws();
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected a point", i);
        long v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000) throw parse_error("point out of range", i);
            ++i;
        }
        if (v < 1) throw parse_error("points are 1-based", i);
        return static_cast<int>(v - 1);
    };

    skip_ws();
    if (i < n && text[i] == '[') {
        ++i;
        std::vector<int> img;
        skip_ws();
        if (i < n && text[i] == ']') ++i;
        else
            for (;;) {
                img.push_back(read_point());
                skip_ws();
                if (i < n && text[i] == ',') { ++i; continue; }
                if (i < n && text[i] == ']') { ++i; break; }
                throw parse_error("expected ',' or ']'", i);
            }
        skip_ws();
        if (i < n) throw parse_error("trailing characters after permutation", i);
        if (degree >= 0) {
            if (static_cast<int>(img.size()) > degree)
                throw parse_error("image list longer than degree", 0);
            for (int x = static_cast<int>(img.size()); x < degree; ++x) img.push_back(x);
        }
        std::vector<bool> seen(img.size(), false);
        for (int x : img) {
            if (x >= static_cast<int>(img.size()) || seen[x])
                throw parse_error("image list is not a permutation", 0);
            seen[x] = true;
        }
        return Perm(std::move(img));
    }

    // cycle notation
    std::vector<std::pair<int, int>> maps;  // (from, to)
    std::vector<bool> used;
    int maxpt = -1;
    auto mark = [&](int p) {
        if (p >= static_cast<int>(used.size())) used.resize(p + 1, false);
        if (used[p]) throw parse_error("point repeated across cycles", i);
        used[p] = true;
        maxpt = std::max(maxpt, p);
    };
    bool any = false;
    for (;;) {
        skip_ws();
        if (i >= n) break;
        if (text[i] != '(') throw parse_error("expected '('", i);
        ++i;
        any = true;
        skip_ws();
        if (i < n && text[i] == ')') { ++i; continue; }  // "()" empty cycle
        std::vector<int> cyc;
        for (;;) {
            cyc.push_back(read_point());
            mark(cyc.back());
            skip_ws();
            if (i < n && text[i] == ',') { ++i; continue; }
            if (i < n && text[i] == ')') { ++i; break; }
            if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) continue;
            throw parse_error("expected ',' or ')'", i);
        }
        for (std::size_t j = 0; j < cyc.size(); ++j)
            maps.emplace_back(cyc[j], cyc[(j + 1) % cyc.size()]);
    }
    if (!any) throw parse_error("empty permutation text", i);
    int deg = degree >= 0 ? degree : maxpt + 1;
    if (deg < maxpt + 1) throw parse_error("point exceeds stated degree", 0);
    if (deg == 0) deg = 1;
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 0);
    for (auto [from, to] : maps) img[from] = to;
    return Perm(std::move(img));
}

Perm conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }

std::uint64_t count_fixed_points(const Perm& g) {
    std::uint64_t c = 0;
    for (int x = 0; x < g.degree(); ++x)
        if (g(x) == x) ++c;
    return c;
}

std::int64_t mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius(0)");
    std::int64_t mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t cycle_count_from_power_fixes(const Perm& g, std::uint64_t f) {
    if (f == 0) throw std::invalid_argument("cycle length must be positive");
    std::int64_t acc = 0;
    for (auto e : divisors(f))
        acc += mobius(f / e) *
               static_cast<std::int64_t>(count_fixed_points(g.power(static_cast<std::int64_t>(e))));
    if (acc < 0 || acc % static_cast<std::int64_t>(f) != 0)
        throw std::logic_error("fixed-point inversion gave a non-integral count");
    return static_cast<std::uint64_t>(acc) / f;
}

std::map<std::uint64_t, std::uint64_t> cycle_counts_from_fixed_points(
    const std::map<std::uint64_t, std::uint64_t>& fixed) {
    if (fixed.empty() || fixed.count(1) == 0)
        throw std::invalid_argument("not a fixed-point profile");
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto [f, unused] : fixed) {
        std::int64_t acc = 0;
        for (auto e : divisors(f)) {
            auto it = fixed.find(e);
            if (it == fixed.end())
                throw std::invalid_argument("not a fixed-point profile");
            acc += mobius(f / e) * static_cast<std::int64_t>(it->second);
        }
        if (acc < 0 || acc % static_cast<std::int64_t>(f) != 0)
            throw std::invalid_argument("not a fixed-point profile");
        if (acc > 0) counts.emplace(f, static_cast<std::uint64_t>(acc) / f);
    }
    return counts;
}

} // namespace imprim
