#include "imprim/fp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace imprim {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod_reduce(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

int mod_inverse(int a, int p) {
    int t = 0, t2 = 1, r = p, r2 = a % p;
    while (r2 != 0) {
        int q = r / r2;
        t -= q * t2;
        std::swap(t, t2);
        r -= q * r2;
        std::swap(r, r2);
    }
    if (r != 1) throw std::invalid_argument("not invertible mod p");
    return t < 0 ? t + p : t;
}

} // namespace

FpMatrix::FpMatrix(int p, int k, std::vector<int> entries)
    : p_(p), k_(k), e_(std::move(entries)) {
    if (!is_prime(p_)) throw std::invalid_argument("matrix modulus must be prime");
    if (k_ < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (e_.size() != static_cast<std::size_t>(k_) * k_)
        throw std::invalid_argument("entry count does not match dimension");
    for (int& v : e_) v = mod_reduce(v, p_);
}

FpMatrix FpMatrix::identity(int p, int k) {
    std::vector<int> e(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) e[i * k + i] = 1;
    return FpMatrix(p, k, std::move(e));
}

FpMatrix FpMatrix::diagonal(int p, const std::vector<int>& diag) {
    const int k = static_cast<int>(diag.size());
    FpMatrix m = identity(p, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = mod_reduce(diag[i], p);
    return m;
}

FpMatrix FpMatrix::coordinate_shift(int p, int k) {
    std::vector<int> e(static_cast<std::size_t>(k) * k, 0);
    for (int c = 0; c < k; ++c) e[((c - 1 + k) % k) * k + c] = 1;
    return FpMatrix(p, k, std::move(e));
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.k_ != b.k_)
        throw std::invalid_argument("matrix shape/modulus mismatch");
    const int k = a.k_;
    std::vector<int> e(static_cast<std::size_t>(k) * k, 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            long long acc = 0;
            for (int t = 0; t < k; ++t)
                acc += static_cast<long long>(a.at(r, t)) * b.at(t, c);
            e[r * k + c] = mod_reduce(acc, a.p_);
        }
    return FpMatrix(a.p_, k, std::move(e));
}

int FpMatrix::det() const {
    std::vector<int> m = e_;
    const int k = k_;
    long long d = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (m[r * k + col] != 0) { pivot = r; break; }
        if (pivot == -1) return 0;
        if (pivot != col) {
            for (int c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
            d = -d;
        }
        const int pv = m[col * k + col];
        d = mod_reduce(d * pv, p_);
        const int inv = mod_inverse(pv, p_);
        for (int r = col + 1; r < k; ++r) {
            const int f = mod_reduce(static_cast<long long>(m[r * k + col]) * inv, p_);
            if (f == 0) continue;
            for (int c = col; c < k; ++c)
                m[r * k + c] = mod_reduce(
                    m[r * k + c] - static_cast<long long>(f) * m[col * k + c], p_);
        }
    }
    return mod_reduce(d, p_);
}

FpMatrix FpMatrix::inverse() const {
    const int k = k_;
    std::vector<int> m = e_;
    FpMatrix out = identity(p_, k);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (m[r * k + col] != 0) { pivot = r; break; }
        if (pivot == -1) throw std::invalid_argument("singular matrix");
        if (pivot != col)
            for (int c = 0; c < k; ++c) {
                std::swap(m[pivot * k + c], m[col * k + c]);
                std::swap(out.at(pivot, c), out.at(col, c));
            }
        const int inv = mod_inverse(m[col * k + col], p_);
        for (int c = 0; c < k; ++c) {
            m[col * k + c] = mod_reduce(static_cast<long long>(m[col * k + c]) * inv, p_);
            out.at(col, c) = mod_reduce(static_cast<long long>(out.at(col, c)) * inv, p_);
        }
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            const int f = m[r * k + col];
            if (f == 0) continue;
            for (int c = 0; c < k; ++c) {
                m[r * k + c] = mod_reduce(
                    m[r * k + c] - static_cast<long long>(f) * m[col * k + c], p_);
                out.at(r, c) = mod_reduce(
                    out.at(r, c) - static_cast<long long>(f) * out.at(col, c), p_);
            }
        }
    }
    return out;
}

std::uint64_t FpMatrix::multiplicative_order() const {
    if (!invertible())
        throw std::invalid_argument("singular matrix has no multiplicative order");
    const FpMatrix id = identity(p_, k_);
    FpMatrix acc = *this;
    std::uint64_t o = 1;
    while (!(acc == id)) {
        acc = acc * *this;
        if (++o > 10'000'000ull)
            throw std::logic_error("runaway multiplicative order");
    }
    return o;
}

std::vector<int> FpMatrix::apply(const std::vector<int>& x) const {
    if (x.size() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("vector length mismatch");
    std::vector<int> y(k_, 0);
    for (int r = 0; r < k_; ++r) {
        long long acc = 0;
        for (int c = 0; c < k_; ++c)
            acc += static_cast<long long>(at(r, c)) * x[c];
        y[r] = mod_reduce(acc, p_);
    }
    return y;
}

std::string FpMatrix::str() const {
    std::string out = "[";
    for (int r = 0; r < k_; ++r) {
        if (r) out += ',';
        out += '[';
        for (int c = 0; c < k_; ++c) {
            if (c) out += ',';
            out += std::to_string(at(r, c));
        }
        out += ']';
    }
    return out + "]";
}

FpPolynomial::FpPolynomial(int p, std::vector<int> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p_)) throw std::invalid_argument("polynomial modulus must be prime");
    for (int& v : c_) v = mod_reduce(v, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPolynomial FpPolynomial::x_power_minus(int p, int k, int d) {
    std::vector<int> c(k + 1, 0);
    c[0] = mod_reduce(-static_cast<long long>(d), p);
    c[k] = 1;
    return FpPolynomial(p, std::move(c));
}

int FpPolynomial::degree() const {
    if (zero()) throw std::logic_error("degree of the zero polynomial");
    return static_cast<int>(c_.size()) - 1;
}

bool FpPolynomial::monic() const { return !zero() && c_.back() == 1; }

int FpPolynomial::eval(int x) const {
    long long acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = mod_reduce(acc * x + c_[i], p_);
    return static_cast<int>(acc);
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
    std::vector<int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return FpPolynomial(a.p_, std::move(c));
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
    std::vector<int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return FpPolynomial(a.p_, std::move(c));
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("modulus mismatch");
    if (a.zero() || b.zero()) return FpPolynomial(a.p_, {});
    std::vector<int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = mod_reduce(
                c[i + j] + static_cast<long long>(a.c_[i]) * b.c_[j], a.p_);
    return FpPolynomial(a.p_, std::move(c));
}

std::pair<FpPolynomial, FpPolynomial> FpPolynomial::divmod(
    const FpPolynomial& d) const {
    if (p_ != d.p_) throw std::invalid_argument("modulus mismatch");
    if (!d.monic()) throw std::invalid_argument("division needs a monic divisor");
    std::vector<int> rem = c_;
    const int dd = d.degree();
    std::vector<int> quo(
        static_cast<int>(c_.size()) > dd ? c_.size() - dd : 0, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const int f = rem[i];
        if (f == 0) continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = mod_reduce(
                rem[i - dd + j] - static_cast<long long>(f) * d.c_[j], p_);
    }
    return {FpPolynomial(p_, std::move(quo)), FpPolynomial(p_, std::move(rem))};
}

std::string FpPolynomial::str() const {
    if (zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

FpPolynomial char_poly(const FpMatrix& a) {
    const int k = a.k();
    if (k > 8) throw std::invalid_argument("char_poly supports dimension <= 8");
    const int p = a.p();
    // Entries of xI - A as degree <= 1 polynomials; memoized expansion along
    // consumed rows, keyed by the set of still-available columns.
    std::vector<FpPolynomial> m(static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            m[r * k + c] = FpPolynomial(p, {mod_reduce(-a.at(r, c), p), r == c ? 1 : 0});
    std::unordered_map<unsigned, FpPolynomial> memo;
    const FpPolynomial one(p, {1});
    auto det = [&](auto&& self, unsigned cols) -> const FpPolynomial& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        if (cols == 0) return memo.emplace(cols, one).first->second;
        const int row = k - __builtin_popcount(cols);
        FpPolynomial acc(p, {});
        int sign = 1;
        for (int c = 0; c < k; ++c) {
            if (!(cols & (1u << c))) continue;
            const FpPolynomial term = m[row * k + c] * self(self, cols & ~(1u << c));
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    return det(det, (1u << k) - 1);
}

bool is_reducible(const FpPolynomial& f) {
    if (f.zero() || f.degree() < 1 || !f.monic())
        throw std::invalid_argument("reducibility needs a monic polynomial of degree >= 1");
    const int deg = f.degree();
    if (deg > 8) throw std::invalid_argument("unsupported degree (> 8)");
    if (deg == 1) return false;
    const int p = f.p();
    for (int x = 0; x < p; ++x)
        if (f.eval(x) == 0) return true;
    if (deg <= 3) return false;
    // No linear factor: scan monic divisors of degree 2..deg/2.
    for (int d = 2; d <= deg / 2; ++d) {
        std::vector<int> c(d + 1, 0);
        c[d] = 1;
        for (;;) {
            if (f.divmod(FpPolynomial(p, c)).second.zero()) return true;
            int i = 0;
            while (i < d && ++c[i] == p) c[i++] = 0;
            if (i == d) break;
        }
    }
    return false;
}

std::vector<int> AffineMap::apply(const std::vector<int>& x) const {
    std::vector<int> y = matrix.apply(x);
    for (int i = 0; i < matrix.k(); ++i)
        y[i] = mod_reduce(y[i] + translation[i], matrix.p());
    return y;
}

std::string AffineMap::str() const {
    std::string out = "x -> " + matrix.str() + " x + [";
    for (std::size_t i = 0; i < translation.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(translation[i]);
    }
    return out + "]";
}

std::vector<int> vector_unrank(int p, int k, int index) {
    std::vector<int> x(k);
    for (int i = k - 1; i >= 0; --i) {
        x[i] = index % p;
        index /= p;
    }
    if (index != 0) throw std::invalid_argument("vector index out of range");
    return x;
}

int vector_rank(int p, const std::vector<int>& x) {
    long long idx = 0;
    for (int v : x) {
        if (v < 0 || v >= p) throw std::invalid_argument("vector entry out of range");
        idx = idx * p + v;
    }
    return static_cast<int>(idx);
}

bool affine_element_is_imprimitive(const AffineMap& g) {
    return is_reducible(char_poly(g.matrix));
}

std::vector<FpMatrix> all_invertible_matrices(int p, int k) {
    double total = 1;
    for (int i = 0; i < k * k; ++i) total *= p;
    if (total > 2e7) throw std::invalid_argument("matrix space too large to enumerate");
    std::vector<FpMatrix> out;
    std::vector<int> e(static_cast<std::size_t>(k) * k, 0);
    for (;;) {
        FpMatrix m(p, k, e);
        if (m.invertible()) out.push_back(std::move(m));
        int i = static_cast<int>(e.size()) - 1;
        while (i >= 0 && ++e[i] == p) e[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::optional<std::vector<FpMatrix>> matrix_group_closure(
    const std::vector<FpMatrix>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens)
        if (!g.invertible()) throw std::invalid_argument("singular generator");
    std::vector<FpMatrix> elems{FpMatrix::identity(gens[0].p(), gens[0].k())};
    std::vector<FpMatrix> frontier = elems;
    auto known = [&](const FpMatrix& m) {
        return std::find(elems.begin(), elems.end(), m) != elems.end();
    };
    while (!frontier.empty()) {
        std::vector<FpMatrix> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                FpMatrix m = e * g;
                if (known(m)) continue;
                if (elems.size() >= cap) return std::nullopt;
                elems.push_back(m);
                next.push_back(std::move(m));
            }
        frontier = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile(
    const std::vector<FpMatrix>& elements) {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (const auto& m : elements) ++counts[m.multiplicative_order()];
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out(counts.begin(),
                                                             counts.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace imprim
