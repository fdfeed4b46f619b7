#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "irratio/element.hpp"

namespace irratio {

// A GroupLaw supplies identity / multiply / invert for one element shape.
// Groups mix shapes only through tuple laws, which is what lets semidirect,
// wreath and central products compose arbitrary catalog groups.

class GroupLaw {
public:
    virtual ~GroupLaw() = default;
    virtual Element identity() const = 0;
    virtual Element multiply(const Element& a, const Element& b) const = 0;
    virtual Element inverse(const Element& a) const = 0;
    virtual std::string describe() const = 0;
    virtual void check_element(const Element& e) const = 0;

    uint32_t tag() const { return tag_; }

protected:
    static uint64_t mix(uint64_t h, uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h * 0xff51afd7ed558ccdull;
    }
    uint32_t tag_ = 0;
};

using LawPtr = std::shared_ptr<const GroupLaw>;

class PermLaw final : public GroupLaw {
public:
    explicit PermLaw(uint32_t n) : n_(n) { tag_ = uint32_t(mix(1, n)); }
    uint32_t points() const { return n_; }

    Element identity() const override { return perm_identity(n_); }
    Element multiply(const Element& a, const Element& b) const override { return perm_compose(a, b); }
    Element inverse(const Element& a) const override { return perm_inverse(a); }
    std::string describe() const override { return "perm(" + std::to_string(n_) + ")"; }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Perm || e.perm.size() != n_)
            throw InvalidArgument("element is not a permutation on " + std::to_string(n_) + " points");
    }

private:
    uint32_t n_;
};

/// Matrix group law; `scalars` lists the central scalar codes identified by a
/// projective quotient ({1} for a plain matrix group). Elements are kept in
/// canonical scalar form after every operation.
class MatLaw final : public GroupLaw {
public:
    MatLaw(const FieldCtx& F, uint32_t dim, std::vector<uint32_t> scalars = {1})
        : F_(&F), dim_(dim), scalars_(std::move(scalars)) {
        if (scalars_.empty()) scalars_ = {1};
        uint64_t h = mix(2, (uint64_t(F.p()) << 32) | F.k());
        h = mix(h, dim);
        for (uint32_t s : scalars_) h = mix(h, s);
        tag_ = uint32_t(h);
    }

    const FieldCtx& field() const { return *F_; }
    uint32_t dim() const { return dim_; }
    const std::vector<uint32_t>& scalars() const { return scalars_; }
    bool projective() const { return scalars_.size() > 1; }

    Element canonicalize(const Element& m) const { return canonical_projective(m, scalars_); }

    Element identity() const override { return canonicalize(mat_identity(*F_, dim_)); }
    Element multiply(const Element& a, const Element& b) const override {
        return canonicalize(mat_multiply(a, b));
    }
    Element inverse(const Element& a) const override { return canonicalize(mat_inverse(a)); }
    std::string describe() const override {
        return (projective() ? "pmat(" : "mat(") + std::to_string(dim_) + "," + F_->name() + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Mat || e.field != F_ || e.dim != dim_)
            throw InvalidArgument("element is not a " + describe() + " matrix");
    }

private:
    const FieldCtx* F_;
    uint32_t dim_;
    std::vector<uint32_t> scalars_;
};

/// Componentwise addition modulo per-coordinate moduli: direct sums of cyclic
/// groups (cyclic, abelian, elementary abelian).
class ModVecLaw final : public GroupLaw {
public:
    explicit ModVecLaw(std::vector<uint32_t> moduli) : moduli_(std::move(moduli)) {
        uint64_t h = mix(3, moduli_.size());
        for (uint32_t m : moduli_) {
            if (m == 0) throw InvalidArgument("zero modulus");
            h = mix(h, m);
        }
        tag_ = uint32_t(h);
    }

    const std::vector<uint32_t>& moduli() const { return moduli_; }

    /// True when every modulus equals the same prime p (an F_p vector group).
    bool elementary_abelian(uint32_t* p_out = nullptr) const {
        if (moduli_.empty()) return false;
        uint32_t p = moduli_[0];
        for (uint32_t m : moduli_)
            if (m != p) return false;
        if (!is_prime(p)) return false;
        if (p_out) *p_out = p;
        return true;
    }

    Element identity() const override {
        return Element::make_vec(std::vector<uint32_t>(moduli_.size(), 0), tag_);
    }
    Element multiply(const Element& a, const Element& b) const override {
        std::vector<uint32_t> c(moduli_.size());
        for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (a.data[i] + b.data[i]) % moduli_[i];
        return Element::make_vec(std::move(c), tag_);
    }
    Element inverse(const Element& a) const override {
        std::vector<uint32_t> c(moduli_.size());
        for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (moduli_[i] - a.data[i]) % moduli_[i];
        return Element::make_vec(std::move(c), tag_);
    }
    std::string describe() const override {
        std::string s = "zvec(";
        for (size_t i = 0; i < moduli_.size(); ++i) s += (i ? "," : "") + std::to_string(moduli_[i]);
        return s + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Vec || e.data.size() != moduli_.size())
            throw InvalidArgument("element does not match " + describe());
        for (size_t i = 0; i < moduli_.size(); ++i)
            if (e.data[i] >= moduli_[i]) throw InvalidArgument("coordinate out of range");
    }

private:
    std::vector<uint32_t> moduli_;
};

/// Extraspecial group of order p^(1+2n) and exponent p (p odd): coordinates
/// (u | c) with u in F_p^(2n), c in F_p, product twisted by half the standard
/// symplectic form pairing u_i with u_{n+i}.
class ExtraspecialLaw final : public GroupLaw {
public:
    ExtraspecialLaw(uint32_t p, uint32_t n) : p_(p), n_(n), half_((p + 1) / 2) {
        if (p == 2 || !is_prime(p)) throw InvalidArgument("extraspecial law needs an odd prime");
        tag_ = uint32_t(mix(mix(4, p), n));
    }

    uint32_t p() const { return p_; }
    uint32_t width() const { return n_; }

    uint32_t symplectic(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) const {
        uint64_t acc = 0;
        for (uint32_t i = 0; i < n_; ++i)
            acc += uint64_t(u[i]) * v[n_ + i] + uint64_t(u[n_ + i]) * (p_ - v[i] % p_);
        return uint32_t(acc % p_);
    }

    Element identity() const override {
        return Element::make_vec(std::vector<uint32_t>(2 * n_ + 1, 0), tag_);
    }
    Element multiply(const Element& a, const Element& b) const override {
        std::vector<uint32_t> c(2 * n_ + 1);
        for (uint32_t i = 0; i < 2 * n_; ++i) c[i] = (a.data[i] + b.data[i]) % p_;
        c[2 * n_] = uint32_t((uint64_t(a.data[2 * n_]) + b.data[2 * n_] +
                              uint64_t(half_) * symplectic(a.data, b.data)) % p_);
        return Element::make_vec(std::move(c), tag_);
    }
    Element inverse(const Element& a) const override {
        std::vector<uint32_t> c(2 * n_ + 1);
        for (uint32_t i = 0; i <= 2 * n_; ++i) c[i] = (p_ - a.data[i]) % p_;
        return Element::make_vec(std::move(c), tag_);
    }
    std::string describe() const override {
        return "extraspecial(" + std::to_string(p_) + "," + std::to_string(n_) + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Vec || e.data.size() != 2 * n_ + 1)
            throw InvalidArgument("element does not match " + describe());
    }

private:
    uint32_t p_, n_, half_;
};

/// Sylow 2-subgroup of Sz(q), q = 2^(2f+1), on pairs (a,b) over F_q with the
/// twisted product (a,b)(c,d) = (a+c, b+d+a*c^theta), theta: x -> x^(2^(f+1)).
class SuzukiTwistLaw final : public GroupLaw {
public:
    SuzukiTwistLaw(const FieldCtx& F, uint64_t theta_exp) : F_(&F), theta_(theta_exp) {
        tag_ = uint32_t(mix(mix(5, F.q()), theta_exp));
    }

    const FieldCtx& field() const { return *F_; }
    uint32_t theta(uint32_t x) const { return F_->pow(x, theta_); }

    Element identity() const override { return Element::make_vec({0, 0}, tag_); }
    Element multiply(const Element& a, const Element& b) const override {
        uint32_t first = F_->add(a.data[0], b.data[0]);
        uint32_t second = F_->add(F_->add(a.data[1], b.data[1]), F_->mul(a.data[0], theta(b.data[0])));
        return Element::make_vec({first, second}, tag_);
    }
    Element inverse(const Element& a) const override {
        // (a,b)^-1 = (a, b + a^(1+theta)) in characteristic 2.
        uint32_t second = F_->add(a.data[1], F_->mul(a.data[0], theta(a.data[0])));
        return Element::make_vec({a.data[0], second}, tag_);
    }
    std::string describe() const override { return "sz2(" + std::to_string(F_->q()) + ")"; }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Vec || e.data.size() != 2 || e.data[0] >= F_->q() || e.data[1] >= F_->q())
            throw InvalidArgument("element does not match " + describe());
    }

private:
    const FieldCtx* F_;
    uint64_t theta_;
};

/// Minimal non-abelian p-group on Z_{p^r} x Z_{p^s} x Z_p with the cocycle
/// product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+b*a' mod p).
class MinNonabPLaw final : public GroupLaw {
public:
    MinNonabPLaw(uint32_t p, uint32_t r, uint32_t s) : p_(p) {
        if (!is_prime(p)) throw InvalidArgument("p must be prime");
        pr_ = 1; for (uint32_t i = 0; i < r; ++i) pr_ *= p;
        ps_ = 1; for (uint32_t i = 0; i < s; ++i) ps_ *= p;
        tag_ = uint32_t(mix(mix(mix(6, p), r), s));
    }

    Element identity() const override { return Element::make_vec({0, 0, 0}, tag_); }
    Element multiply(const Element& a, const Element& b) const override {
        uint32_t c = uint32_t((uint64_t(a.data[2]) + b.data[2] +
                               uint64_t(a.data[1] % p_) * (b.data[0] % p_)) % p_);
        return Element::make_vec({(a.data[0] + b.data[0]) % pr_, (a.data[1] + b.data[1]) % ps_, c},
                                 tag_);
    }
    Element inverse(const Element& a) const override {
        uint32_t x = (pr_ - a.data[0]) % pr_;
        uint32_t y = (ps_ - a.data[1]) % ps_;
        uint32_t c = uint32_t((uint64_t(p_) - a.data[2] % p_ +
                               uint64_t(a.data[1] % p_) * (a.data[0] % p_)) % p_);
        return Element::make_vec({x, y, c}, tag_);
    }
    std::string describe() const override {
        return "minnonab_p(" + std::to_string(p_) + ";" + std::to_string(pr_) + "," +
               std::to_string(ps_) + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Vec || e.data.size() != 3 || e.data[0] >= pr_ || e.data[1] >= ps_ ||
            e.data[2] >= p_)
            throw InvalidArgument("element does not match " + describe());
    }

private:
    uint32_t p_, pr_, ps_;
};

/// C_n x| C_m with the generator of C_m acting by x -> x^k; requires k^m = 1 (mod n).
class MetacyclicLaw final : public GroupLaw {
public:
    MetacyclicLaw(uint32_t n, uint32_t m, uint32_t k) : n_(n), m_(m), k_(k % n) {
        if (n == 0 || m == 0) throw InvalidArgument("metacyclic parameters must be positive");
        if (std::gcd(k_, n_) != 1u) throw InvalidArgument("metacyclic action k must be a unit mod n");
        kpow_.resize(m_);
        uint64_t acc = 1 % n_;
        for (uint32_t i = 0; i < m_; ++i) { kpow_[i] = uint32_t(acc); acc = acc * k_ % n_; }
        if (acc != 1 % n_) throw InvalidArgument("metacyclic requires k^m = 1 (mod n)");
        tag_ = uint32_t(mix(mix(mix(7, n), m), k));
    }

    Element identity() const override { return Element::make_vec({0, 0}, tag_); }
    Element multiply(const Element& a, const Element& b) const override {
        uint32_t x = uint32_t((a.data[0] + uint64_t(b.data[0]) * kpow_[a.data[1]]) % n_);
        return Element::make_vec({x, (a.data[1] + b.data[1]) % m_}, tag_);
    }
    Element inverse(const Element& a) const override {
        uint32_t y = (m_ - a.data[1]) % m_;
        uint32_t x = uint32_t(uint64_t(n_ - a.data[0]) % n_ * kpow_[y] % n_);
        return Element::make_vec({x, y}, tag_);
    }
    std::string describe() const override {
        return "metacyclic(" + std::to_string(n_) + "," + std::to_string(m_) + "," +
               std::to_string(k_) + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Vec || e.data.size() != 2 || e.data[0] >= n_ || e.data[1] >= m_)
            throw InvalidArgument("element does not match " + describe());
    }

private:
    uint32_t n_, m_, k_;
    std::vector<uint32_t> kpow_;
};

class DirectLaw final : public GroupLaw {
public:
    DirectLaw(LawPtr a, LawPtr b) : a_(std::move(a)), b_(std::move(b)) {
        tag_ = uint32_t(mix(mix(8, a_->tag()), b_->tag()));
    }

    Element identity() const override {
        return Element::make_tuple({a_->identity(), b_->identity()}, tag_);
    }
    Element multiply(const Element& x, const Element& y) const override {
        return Element::make_tuple({a_->multiply(x.children[0], y.children[0]),
                                    b_->multiply(x.children[1], y.children[1])},
                                   tag_);
    }
    Element inverse(const Element& x) const override {
        return Element::make_tuple({a_->inverse(x.children[0]), b_->inverse(x.children[1])}, tag_);
    }
    std::string describe() const override {
        return "direct(" + a_->describe() + "," + b_->describe() + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Tuple || e.children.size() != 2)
            throw InvalidArgument("element does not match " + describe());
        a_->check_element(e.children[0]);
        b_->check_element(e.children[1]);
    }

private:
    LawPtr a_, b_;
};

/// Interface through which a semidirect-product law applies a verified action;
/// implemented over ActionMap once groups exist (actions.hpp).
struct ActionApplier {
    virtual ~ActionApplier() = default;
    /// phi(h)(a) for h in the acting group, a in the target group.
    virtual Element apply(const Element& h, const Element& a) const = 0;
    virtual uint64_t structure_hash() const = 0;
};

class SemidirectLaw final : public GroupLaw {
public:
    SemidirectLaw(LawPtr normal, LawPtr acting, std::shared_ptr<const ActionApplier> action)
        : a_(std::move(normal)), h_(std::move(acting)), act_(std::move(action)) {
        tag_ = uint32_t(mix(mix(mix(9, a_->tag()), h_->tag()), act_->structure_hash()));
    }

    Element identity() const override {
        return Element::make_tuple({a_->identity(), h_->identity()}, tag_);
    }
    Element multiply(const Element& x, const Element& y) const override {
        return Element::make_tuple({a_->multiply(x.children[0], act_->apply(x.children[1], y.children[0])),
                                    h_->multiply(x.children[1], y.children[1])},
                                   tag_);
    }
    Element inverse(const Element& x) const override {
        Element hi = h_->inverse(x.children[1]);
        return Element::make_tuple({act_->apply(hi, a_->inverse(x.children[0])), hi}, tag_);
    }
    std::string describe() const override {
        return "semidirect(" + a_->describe() + "," + h_->describe() + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Tuple || e.children.size() != 2)
            throw InvalidArgument("element does not match " + describe());
        a_->check_element(e.children[0]);
        h_->check_element(e.children[1]);
    }

private:
    LawPtr a_, h_;
    std::shared_ptr<const ActionApplier> act_;
};

/// A wr H for H a permutation group on n points: tuples (a_0..a_{n-1}, h) with
/// (f,h)(f',h') = (g, hh'), g_i = f_i * f'_{h^-1(i)}.
class WreathLaw final : public GroupLaw {
public:
    WreathLaw(LawPtr base, uint32_t n) : a_(std::move(base)), n_(n) {
        tag_ = uint32_t(mix(mix(10, a_->tag()), n));
    }

    uint32_t points() const { return n_; }

    Element identity() const override {
        std::vector<Element> parts(n_ + 1, a_->identity());
        parts[n_] = perm_identity(n_);
        return Element::make_tuple(std::move(parts), tag_);
    }
    Element multiply(const Element& x, const Element& y) const override {
        const Element& h = x.children[n_];
        std::vector<Element> parts;
        parts.reserve(n_ + 1);
        Element hinv = perm_inverse(h);
        for (uint32_t i = 0; i < n_; ++i)
            parts.push_back(a_->multiply(x.children[i], y.children[hinv.perm[i]]));
        parts.push_back(perm_compose(h, y.children[n_]));
        return Element::make_tuple(std::move(parts), tag_);
    }
    Element inverse(const Element& x) const override {
        const Element& h = x.children[n_];
        // (f,h)^-1 = (g, h^-1) with g_i = f_{h(i)}^-1.
        std::vector<Element> parts;
        parts.reserve(n_ + 1);
        for (uint32_t i = 0; i < n_; ++i) parts.push_back(a_->inverse(x.children[h.perm[i]]));
        parts.push_back(perm_inverse(h));
        return Element::make_tuple(std::move(parts), tag_);
    }
    std::string describe() const override {
        return "wreath(" + a_->describe() + "," + std::to_string(n_) + ")";
    }
    void check_element(const Element& e) const override {
        if (e.kind != Kind::Tuple || e.children.size() != n_ + 1)
            throw InvalidArgument("element does not match " + describe());
        for (uint32_t i = 0; i < n_; ++i) a_->check_element(e.children[i]);
        if (e.children[n_].kind != Kind::Perm || e.children[n_].perm.size() != n_)
            throw InvalidArgument("wreath top component must be a permutation on " +
                                  std::to_string(n_) + " points");
    }

private:
    LawPtr a_;
    uint32_t n_;
};

}  // namespace irratio
