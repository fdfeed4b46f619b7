#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "irratio/errors.hpp"
#include "irratio/numtheory.hpp"

namespace irratio {

// Arithmetic in GF(p^k). Elements are stored as a single code in [0, p^k):
// the base-p digit expansion of the code gives the coefficient vector of the
// representative polynomial, constant term first. Fields are interned, so a
// (p, k) pair always maps to the same context object and element codes are
// comparable across the whole process.

class FieldCtx;

namespace detail {

// Dense polynomial helpers over Z/p, coefficients constant-term-first.

inline void poly_trim(std::vector<uint32_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<uint32_t> poly_mul_p(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    std::vector<uint32_t> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = uint32_t(acc[i] % p);
    poly_trim(out);
    return out;
}

// Remainder of a modulo monic divisor m.
inline std::vector<uint32_t> poly_rem_p(std::vector<uint32_t> a,
                                        const std::vector<uint32_t>& m, uint32_t p) {
    poly_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = uint64_t(lead) * m[i] % p;
                uint64_t cur = a[shift + i];
                a[shift + i] = uint32_t((cur + p - sub) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

inline bool poly_is_zero(const std::vector<uint32_t>& f) { return f.empty(); }

/// Trial-division irreducibility scan: no monic factor of degree <= deg(f)/2.
inline bool poly_irreducible_p(const std::vector<uint32_t>& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = c;
            for (size_t i = 0; i < d; ++i) { g[i] = uint32_t(t % p); t /= p; }
            g[d] = 1;
            if (poly_is_zero(poly_rem_p(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace detail

class FieldCtx {
public:
    static constexpr uint64_t kMaxFieldSize = 1u << 20;

    /// Interned field access; the returned reference lives for the process.
    static const FieldCtx& get(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; }

    /// Monic irreducible modulus, constant term first, degree k (length k+1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const { return neg_table_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw InvalidArgument("field inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[(uint64_t(log_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1)];
    }

    /// a^(p^i), the i-th Frobenius iterate.
    uint32_t frobenius(uint32_t a, uint32_t i) const {
        if (i >= k_) throw InvalidArgument("frobenius iterate out of range");
        uint64_t e = 1;
        for (uint32_t j = 0; j < i; ++j) e *= p_;
        return pow(a, e);
    }

    /// Multiplicative order of a nonzero element.
    uint32_t element_order(uint32_t a) const {
        if (a == 0) throw InvalidArgument("order of zero");
        uint32_t l = log_[a];
        return uint32_t((q_ - 1) / std::gcd<uint64_t>(q_ - 1, l));
    }

    /// Least-code generator of the multiplicative group.
    uint32_t primitive_element() const { return exp_[1]; }

    /// Relative trace to the index-2 subfield: a + a^(p^(k/2)). Requires k even.
    uint32_t trace_to_halfway_subfield(uint32_t a) const {
        if (k_ % 2 != 0) throw InvalidArgument("relative trace needs even extension degree");
        return add(a, frobenius(a, k_ / 2));
    }

    /// Membership in the index-2 subfield F_{p^{k/2}}.
    bool in_halfway_subfield(uint32_t a) const {
        if (k_ % 2 != 0) throw InvalidArgument("subfield test needs even extension degree");
        return frobenius(a, k_ / 2) == a;
    }

    bool in_prime_subfield(uint32_t a) const { return a < p_; }

    std::vector<uint32_t> digits(uint32_t code) const {
        std::vector<uint32_t> d(k_);
        for (uint32_t i = 0; i < k_; ++i) { d[i] = code % p_; code /= p_; }
        return d;
    }
    uint32_t from_digits(const std::vector<uint32_t>& d) const {
        uint64_t code = 0, w = 1;
        for (uint32_t i = 0; i < k_ && i < d.size(); ++i) { code += uint64_t(d[i] % p_) * w; w *= p_; }
        return uint32_t(code);
    }

    /// Term-notation printing, e.g. "1+x^2" in GF(8); "0" for zero.
    std::string to_string(uint32_t code) const {
        if (code == 0) return "0";
        std::ostringstream os;
        bool first = true;
        auto d = digits(code);
        for (uint32_t i = 0; i < k_; ++i) {
            if (d[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) { os << d[i]; continue; }
            if (d[i] != 1) os << d[i] << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

    std::string name() const {
        return "gf(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
    }

private:
    FieldCtx(uint32_t p, uint32_t k);

    uint32_t add_digits(uint32_t a, uint32_t b) const {
        uint64_t code = 0, w = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            code += uint64_t((a % p_ + b % p_) % p_) * w;
            a /= p_; b /= p_; w *= p_;
        }
        return uint32_t(code);
    }

    uint32_t p_, k_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_, log_, neg_table_, add_table_;
};

/// An element of an interned field: a context pointer plus its code.
struct FieldElement {
    const FieldCtx* ctx = nullptr;
    uint32_t code = 0;

    FieldElement() = default;
    FieldElement(const FieldCtx& c, uint32_t v) : ctx(&c), code(v) {}

    bool is_zero() const { return code == 0; }
    bool is_one() const { return code == 1; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.ctx == b.ctx && a.code == b.code;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b); return {*a.ctx, a.ctx->add(a.code, b.code)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b); return {*a.ctx, a.ctx->sub(a.code, b.code)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b); return {*a.ctx, a.ctx->mul(a.code, b.code)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        a.check(b); return {*a.ctx, a.ctx->div(a.code, b.code)};
    }
    FieldElement operator-() const { return {*ctx, ctx->neg(code)}; }

    FieldElement pow(uint64_t e) const { return {*ctx, ctx->pow(code, e)}; }
    FieldElement frobenius(uint32_t i) const { return {*ctx, ctx->frobenius(code, i)}; }

    std::string str() const { return ctx->to_string(code); }

private:
    void check(const FieldElement& o) const {
        if (ctx != o.ctx) throw InvalidArgument("field context mismatch");
    }
};

inline FieldCtx::FieldCtx(uint32_t p, uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime: " + std::to_string(p));
    if (k < 1 || k > 16) throw InvalidArgument("extension degree out of range [1,16]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw InvalidArgument("field size exceeds 2^20 cap");
    }
    q_ = uint32_t(q);

    // Lowest-lexicographic monic irreducible modulus: candidates are scanned
    // by interpreting the non-leading coefficients (a_{k-1},...,a_0) as a
    // base-p number in increasing order.
    for (uint64_t c = 0;; ++c) {
        if (c >= q) throw Error("no irreducible modulus found");  // unreachable
        std::vector<uint32_t> f(k + 1, 0);
        uint64_t t = c;
        for (uint32_t i = 0; i < k; ++i) { f[i] = uint32_t(t % p); t /= p; }
        f[k] = 1;
        if (detail::poly_irreducible_p(f, p)) { modulus_ = f; break; }
    }

    neg_table_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
        uint64_t code = 0, w = 1, x = a;
        for (uint32_t i = 0; i < k_; ++i) { code += uint64_t((p_ - x % p_) % p_) * w; x /= p_; w *= p_; }
        neg_table_[a] = uint32_t(code);
    }
    if (p_ != 2 && q_ <= 512) {
        add_table_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) add_table_[size_t(a) * q_ + b] = add_digits(a, b);
    }

    // Multiplication via discrete-log tables against the least-code primitive
    // element; table construction itself uses plain polynomial arithmetic.
    auto poly_of = [&](uint32_t code) {
        std::vector<uint32_t> f = digits(code);
        detail::poly_trim(f);
        return f;
    };
    auto code_of = [&](const std::vector<uint32_t>& f) { return from_digits(f); };
    auto raw_mul = [&](uint32_t a, uint32_t b) {
        return code_of(detail::poly_rem_p(detail::poly_mul_p(poly_of(a), poly_of(b), p_), modulus_, p_));
    };
    auto raw_pow = [&](uint32_t a, uint64_t e) {
        uint32_t acc = 1;
        while (e) {
            if (e & 1) acc = raw_mul(acc, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return acc;
    };
    auto ord_factors = factorize(q_ - 1);
    uint32_t gen = 0;
    for (uint32_t g = 2; g < q_; ++g) {
        bool primitive = true;
        for (const auto& pp : ord_factors)
            if (raw_pow(g, (q_ - 1) / pp.prime) == 1) { primitive = false; break; }
        if (primitive) { gen = g; break; }
    }
    if (q_ == 2) gen = 1;
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    uint32_t acc = 1;
    for (uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = raw_mul(acc, gen);
    }
    if (acc != 1) throw Error("primitive element search failed");  // unreachable
}

inline const FieldCtx& FieldCtx::get(uint32_t p, uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, k))).first;
    return *it->second;
}

inline const FieldCtx& make_field(uint32_t p, uint32_t k) { return FieldCtx::get(p, k); }

/// Multiplicative element of exact order n; requires n | q - 1.
inline FieldElement element_of_order(const FieldCtx& F, uint64_t n) {
    if (n == 0 || (F.q() - 1) % n != 0)
        throw InvalidArgument("requested order does not divide q-1");
    if (n == 1) return {F, 1};
    return {F, F.pow(F.primitive_element(), (F.q() - 1) / n)};
}

/// Solves y^q + y = c in F_{q^2} where q = 2^(k/2); characteristic 2, k even.
/// Returns the least-code solution. Throws InvalidArgument if unsolvable.
inline FieldElement solve_artin_schreier(const FieldCtx& F, FieldElement c) {
    if (F.p() != 2 || F.k() % 2 != 0)
        throw InvalidArgument("artin-schreier solver needs F_{q^2} with q = 2^m");
    if (c.ctx != &F) throw InvalidArgument("field context mismatch");
    uint32_t k = F.k();
    uint32_t half = k / 2;
    // L(y) = y^q + y is F_2-linear; build its matrix on the power basis.
    std::vector<uint32_t> cols(k);
    for (uint32_t j = 0; j < k; ++j) {
        uint32_t e = 1u << j;
        cols[j] = F.add(F.frobenius(e, half), e);
    }
    // Gaussian elimination on [L | c] over F_2, rows indexed by basis coordinate.
    std::vector<uint64_t> rows(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
        uint64_t r = 0;
        for (uint32_t j = 0; j < k; ++j)
            if ((cols[j] >> i) & 1u) r |= uint64_t(1) << j;
        if ((c.code >> i) & 1u) r |= uint64_t(1) << k;
        rows[i] = r;
    }
    std::vector<int> pivot_of_col(k, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < k && rank < k; ++col) {
        uint32_t sel = rank;
        while (sel < k && !((rows[sel] >> col) & 1)) ++sel;
        if (sel == k) continue;
        std::swap(rows[rank], rows[sel]);
        for (uint32_t r = 0; r < k; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        pivot_of_col[col] = int(rank);
        ++rank;
    }
    for (uint32_t r = rank; r < k; ++r)
        if ((rows[r] >> k) & 1)
            throw InvalidArgument("artin-schreier equation has no solution (nonzero relative trace)");
    uint32_t particular = 0;
    for (uint32_t col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0 && ((rows[pivot_of_col[col]] >> k) & 1))
            particular |= 1u << col;
    // Kernel = F_q embedded in F_{q^2}; minimize over particular + kernel.
    std::vector<uint32_t> kernel_basis;
    for (uint32_t col = 0; col < k; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        uint32_t v = 1u << col;
        for (uint32_t c2 = 0; c2 < k; ++c2)
            if (pivot_of_col[c2] >= 0 && ((rows[pivot_of_col[c2]] >> col) & 1)) v |= 1u << c2;
        kernel_basis.push_back(v);
    }
    uint32_t best = particular;
    for (uint32_t mask = 1; mask < (1u << kernel_basis.size()); ++mask) {
        uint32_t y = particular;
        for (size_t i = 0; i < kernel_basis.size(); ++i)
            if ((mask >> i) & 1) y ^= kernel_basis[i];
        best = std::min(best, y);
    }
    return {F, best};
}

/// Monic minimal polynomial of a over the prime field, as mod-p coefficients
/// (constant term first, leading 1 last).
inline std::vector<uint32_t> minimal_polynomial(FieldElement a) {
    const FieldCtx& F = *a.ctx;
    std::vector<uint32_t> conj;
    uint32_t x = a.code;
    do {
        conj.push_back(x);
        x = F.frobenius(x, 1);
    } while (x != a.code);
    // Product of (X - c) over the conjugates, computed in the big field.
    std::vector<uint32_t> poly{1};
    for (uint32_t c : conj) {
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], poly[i]);
            next[i] = F.add(next[i], F.mul(F.neg(c), poly[i]));
        }
        poly = next;
    }
    std::vector<uint32_t> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!F.in_prime_subfield(poly[i]))
            throw Error("minimal polynomial coefficient escaped the prime field");  // unreachable
        out[i] = poly[i];
    }
    return out;
}

/// Minimal polynomial over the index-2 subfield F_{p^{k/2}}; coefficients are
/// returned as elements of the big field, each verified to lie in the subfield.
inline std::vector<FieldElement> minimal_polynomial_over_subfield(FieldElement a) {
    const FieldCtx& F = *a.ctx;
    if (F.k() % 2 != 0) throw InvalidArgument("subfield minimal polynomial needs even degree");
    uint32_t half = F.k() / 2;
    std::vector<uint32_t> conj;
    uint32_t x = a.code;
    do {
        conj.push_back(x);
        x = F.frobenius(x, half);
    } while (x != a.code);
    std::vector<uint32_t> poly{1};
    for (uint32_t c : conj) {
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], poly[i]);
            next[i] = F.add(next[i], F.mul(F.neg(c), poly[i]));
        }
        poly = next;
    }
    std::vector<FieldElement> out;
    for (uint32_t code : poly) {
        if (!F.in_halfway_subfield(code))
            throw Error("minimal polynomial coefficient escaped the subfield");  // unreachable
        out.emplace_back(F, code);
    }
    return out;
}

/// Row-major companion matrix codes for a monic polynomial over F (degree r >= 1):
/// last column holds the negated low coefficients, subdiagonal holds ones.
inline std::vector<uint32_t> companion_matrix_codes(const FieldCtx& F,
                                                    const std::vector<uint32_t>& monic_poly) {
    if (monic_poly.size() < 2 || monic_poly.back() != 1)
        throw InvalidArgument("companion matrix requires a monic polynomial of degree >= 1");
    size_t r = monic_poly.size() - 1;
    std::vector<uint32_t> m(r * r, 0);
    for (size_t i = 0; i + 1 < r; ++i) m[(i + 1) * r + i] = 1;
    for (size_t i = 0; i < r; ++i) m[i * r + (r - 1)] = F.neg(monic_poly[i] % F.q());
    return m;
}

/// Comma-separated coefficient serialization, constant term first.
inline std::string poly_to_string(const std::vector<uint32_t>& poly) {
    std::string s;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly[i]);
    }
    return s;
}

}  // namespace irratio
