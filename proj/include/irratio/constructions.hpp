#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "irratio/actions.hpp"
#include "irratio/group.hpp"
#include "irratio/j1_data.hpp"
#include "irratio/products.hpp"

namespace irratio {

// Named catalog of concrete group families, each built from field/kernel
// primitives. Constructor names double as the CLI grammar's nonterminals.

inline Group cyclic(uint32_t n, uint64_t budget = kDefaultBudget) {
    if (n == 0) throw InvalidArgument("cyclic group order must be positive");
    auto law = std::make_shared<ModVecLaw>(std::vector<uint32_t>{n});
    std::vector<Element> gens{Element::make_vec({n > 1 ? 1u : 0u}, law->tag())};
    return Group(std::move(law), std::move(gens), "cyclic(" + std::to_string(n) + ")", budget);
}

inline Group abelian(std::vector<uint32_t> invariants, uint64_t budget = kDefaultBudget) {
    if (invariants.empty()) throw InvalidArgument("abelian group needs at least one invariant");
    std::string spec = "abelian(";
    for (size_t i = 0; i < invariants.size(); ++i)
        spec += (i ? "," : "") + std::to_string(invariants[i]);
    spec += ")";
    auto law = std::make_shared<ModVecLaw>(invariants);
    std::vector<Element> gens;
    for (size_t i = 0; i < invariants.size(); ++i) {
        std::vector<uint32_t> v(invariants.size(), 0);
        if (invariants[i] > 1) v[i] = 1;
        gens.push_back(Element::make_vec(std::move(v), law->tag()));
    }
    return Group(std::move(law), std::move(gens), std::move(spec), budget);
}

inline Group elementary_abelian(uint32_t p, uint32_t d, uint64_t budget = kDefaultBudget) {
    if (!is_prime(p)) throw InvalidArgument("elementary abelian group needs a prime");
    if (d == 0) throw InvalidArgument("elementary abelian rank must be positive");
    Group g = abelian(std::vector<uint32_t>(d, p), budget);
    return Group(g.law_ptr(), g.generators(),
                 "elemab(" + std::to_string(p) + "," + std::to_string(d) + ")", budget);
}

/// C_n acting on n points by the full cycle; the standard wreath-product top.
inline Group cyclic_perm(uint32_t n, uint64_t budget = kDefaultBudget) {
    if (n == 0) throw InvalidArgument("cyclic_perm needs at least one point");
    std::vector<uint16_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = uint16_t((i + 1) % n);
    return Group(std::make_shared<PermLaw>(n), {Element::make_perm(std::move(img))},
                 "cyclic_perm(" + std::to_string(n) + ")", budget);
}

inline Group symmetric(uint32_t n, uint64_t budget = kDefaultBudget) {
    if (n == 0) throw InvalidArgument("symmetric group needs at least one point");
    auto law = std::make_shared<PermLaw>(n);
    std::vector<Element> gens;
    if (n >= 2) gens.push_back(perm_from_cycles(n, {{1, 2}}));
    if (n >= 3) {
        std::vector<uint32_t> cyc(n);
        for (uint32_t i = 0; i < n; ++i) cyc[i] = i + 1;
        gens.push_back(perm_from_cycles(n, {cyc}));
    }
    return Group(std::move(law), std::move(gens), "symmetric(" + std::to_string(n) + ")", budget);
}

inline Group alternating(uint32_t n, uint64_t budget = kDefaultBudget) {
    if (n == 0) throw InvalidArgument("alternating group needs at least one point");
    auto law = std::make_shared<PermLaw>(n);
    std::vector<Element> gens;
    if (n >= 3) {
        gens.push_back(perm_from_cycles(n, {{1, 2, 3}}));
        std::vector<uint32_t> cyc;
        if (n % 2 == 1) {
            for (uint32_t i = 1; i <= n; ++i) cyc.push_back(i);
        } else {
            for (uint32_t i = 2; i <= n; ++i) cyc.push_back(i);
        }
        if (cyc.size() >= 3) gens.push_back(perm_from_cycles(n, {cyc}));
    }
    return Group(std::move(law), std::move(gens), "alternating(" + std::to_string(n) + ")", budget);
}

/// Dihedral group of the given order (so dihedral(8) = D_8 on 4 points).
inline Group dihedral(uint32_t order, uint64_t budget = kDefaultBudget) {
    if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral order must be even and >= 2");
    uint32_t m = order / 2;
    if (m == 1)
        return Group(std::make_shared<PermLaw>(2), {perm_from_cycles(2, {{1, 2}})},
                     "dihedral(2)", budget);
    if (m == 2)
        return Group(std::make_shared<PermLaw>(4),
                     {perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{3, 4}})},
                     "dihedral(4)", budget);
    std::vector<uint16_t> rot(m), refl(m);
    for (uint32_t i = 0; i < m; ++i) {
        rot[i] = uint16_t((i + 1) % m);
        refl[i] = uint16_t((m - i) % m);
    }
    return Group(std::make_shared<PermLaw>(m),
                 {Element::make_perm(std::move(rot)), Element::make_perm(std::move(refl))},
                 "dihedral(" + std::to_string(order) + ")", budget);
}

/// Generalized quaternion group of the given order 4m (m >= 2), realized as
/// 2x2 matrices over the smallest prime field containing a 2m-th root of unity.
inline Group quaternion(uint32_t order, uint64_t budget = kDefaultBudget) {
    if (order < 8 || order % 4 != 0) throw InvalidArgument("quaternion order must be 4m, m >= 2");
    uint32_t m = order / 4;
    uint64_t P = smallest_prime_in_class(1, 2 * m);
    const FieldCtx& F = make_field(uint32_t(P), 1);
    FieldElement zeta = element_of_order(F, 2 * m);
    auto law = std::make_shared<MatLaw>(F, 2);
    Element x = Element::make_mat(F, 2, {zeta.code, 0, 0, F.inv(zeta.code)});
    Element y = Element::make_mat(F, 2, {0, F.neg(1), 1, 0});
    return Group(std::move(law), {x, y}, "quaternion(" + std::to_string(order) + ")", budget);
}

enum class ClassicalFamily { GL, SL, PSL, SU, PSU, Sp, PSp };

inline std::string classical_name(ClassicalFamily f) {
    switch (f) {
        case ClassicalFamily::GL: return "gl";
        case ClassicalFamily::SL: return "sl";
        case ClassicalFamily::PSL: return "psl";
        case ClassicalFamily::SU: return "su";
        case ClassicalFamily::PSU: return "psu";
        case ClassicalFamily::Sp: return "sp";
        case ClassicalFamily::PSp: return "psp";
    }
    return "?";
}

namespace detail {

inline const FieldCtx& field_for_prime_power(uint32_t q) {
    auto f = factorize(q);
    if (f.size() != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return make_field(uint32_t(f[0].prime), f[0].exponent);
}

/// F_p-basis of F_q on the power basis (codes 1, p, p^2, ...).
inline std::vector<uint32_t> fp_basis(const FieldCtx& F) {
    std::vector<uint32_t> out;
    uint64_t w = 1;
    for (uint32_t i = 0; i < F.k(); ++i) { out.push_back(uint32_t(w)); w *= F.p(); }
    return out;
}

/// Scalar codes s with s^n = 1 (the centre of SL(n,q) etc.).
inline std::vector<uint32_t> nth_root_scalars(const FieldCtx& F, uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t s = 1; s < F.q(); ++s)
        if (F.pow(s, n) == 1) out.push_back(s);
    return out;
}

inline std::vector<Element> sl_transvections(const FieldCtx& F, uint32_t n) {
    std::vector<Element> gens;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (uint32_t b : fp_basis(F)) {
                Element t = mat_identity(F, n);
                t.data[i * n + j] = b;
                gens.push_back(std::move(t));
            }
        }
    }
    return gens;
}

/// Symplectic transvections x -> x + c*<x,v>*v for the form pairing
/// e_i = coordinate i with f_i = coordinate w+i.
inline std::vector<Element> sp_transvections(const FieldCtx& F, uint32_t dim) {
    uint32_t w = dim / 2;
    auto form = [&](const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) {
        uint32_t acc = 0;
        for (uint32_t i = 0; i < w; ++i)
            acc = F.add(acc, F.sub(F.mul(u[i], v[w + i]), F.mul(u[w + i], v[i])));
        return acc;
    };
    std::vector<std::vector<uint32_t>> dirs;
    for (uint32_t i = 0; i < dim; ++i) {
        std::vector<uint32_t> e(dim, 0);
        e[i] = 1;
        dirs.push_back(e);
    }
    for (uint32_t i = 0; i < dim; ++i) {
        for (uint32_t j = i + 1; j < dim; ++j) {
            std::vector<uint32_t> e(dim, 0);
            e[i] = 1;
            e[j] = 1;
            dirs.push_back(e);
        }
    }
    std::vector<Element> gens;
    for (const auto& v : dirs) {
        for (uint32_t c : fp_basis(F)) {
            Element t = mat_identity(F, dim);
            // column k of t = e_k + c*<e_k,v>*v
            for (uint32_t k = 0; k < dim; ++k) {
                std::vector<uint32_t> ek(dim, 0);
                ek[k] = 1;
                uint32_t s = F.mul(c, form(ek, v));
                if (s == 0) continue;
                for (uint32_t r = 0; r < dim; ++r)
                    t.data[r * dim + k] = F.add(t.data[r * dim + k], F.mul(s, v[r]));
            }
            gens.push_back(std::move(t));
        }
    }
    return gens;
}

/// Lower unitriangular member of SU(3,q) w.r.t. the antidiagonal Hermitian
/// form: rows (1,0,0), (x,1,0), (y,-x^q,1) with y + y^q = -x^(1+q).
inline Element su3_lower(const FieldCtx& F2, uint32_t x, uint32_t y) {
    uint32_t half = F2.k() / 2;
    return Element::make_mat(F2, 3,
                             {1, 0, 0, x, 1, 0, y, F2.neg(F2.frobenius(x, half)), 1});
}

/// Least y with y + y^q = c (an F_p-linear equation; q^2 is small here).
inline uint32_t su3_solve_trace(const FieldCtx& F2, uint32_t c) {
    uint32_t half = F2.k() / 2;
    for (uint32_t y = 0; y < F2.q(); ++y)
        if (F2.add(y, F2.frobenius(y, half)) == c) return y;
    throw Error("relative trace is not surjective");  // unreachable
}

inline std::vector<Element> su3_unipotent_generators(const FieldCtx& F2) {
    uint32_t half = F2.k() / 2;
    std::vector<Element> gens;
    for (uint32_t x : fp_basis(F2)) {
        uint32_t target = F2.neg(F2.mul(x, F2.frobenius(x, half)));  // -x^(1+q)
        gens.push_back(su3_lower(F2, x, su3_solve_trace(F2, target)));
    }
    // Trace-zero directions give the centre of the unipotent group.
    std::vector<uint32_t> kernel;
    for (uint32_t y = 1; y < F2.q() && kernel.size() < half; ++y)
        if (F2.add(y, F2.frobenius(y, half)) == 0) kernel.push_back(y);
    for (uint32_t y : kernel) gens.push_back(su3_lower(F2, 0, y));
    return gens;
}

inline Element antidiag_ones(const FieldCtx& F, uint32_t n) {
    std::vector<uint32_t> m(size_t(n) * n, 0);
    for (uint32_t i = 0; i < n; ++i) m[i * n + (n - 1 - i)] = 1;
    return Element::make_mat(F, n, std::move(m));
}

}  // namespace detail

/// Classical matrix groups with standard generators: transvection families for
/// SL/Sp, the two opposite unipotent families for SU(3,q) (antidiagonal
/// Hermitian form), projectivized with the appropriate central scalar set for
/// the P-variants.
inline Group classical(ClassicalFamily fam, uint32_t n, uint32_t q,
                       uint64_t budget = kDefaultBudget) {
    std::string spec = classical_name(fam) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    switch (fam) {
        case ClassicalFamily::SL:
        case ClassicalFamily::GL:
        case ClassicalFamily::PSL: {
            if (n < 2) throw InvalidArgument("unsupported dimension for " + spec);
            const FieldCtx& F = detail::field_for_prime_power(q);
            std::vector<Element> gens = detail::sl_transvections(F, n);
            std::vector<uint32_t> scalars{1};
            if (fam == ClassicalFamily::GL && q > 2) {
                Element d = mat_identity(F, n);
                d.data[0] = F.primitive_element();
                gens.push_back(std::move(d));
            }
            if (fam == ClassicalFamily::PSL) scalars = detail::nth_root_scalars(F, n);
            auto law = std::make_shared<MatLaw>(F, n, scalars);
            for (Element& g : gens) g = law->canonicalize(g);
            return Group(std::move(law), std::move(gens), spec, budget);
        }
        case ClassicalFamily::Sp:
        case ClassicalFamily::PSp: {
            if (n < 2 || n % 2 != 0) throw InvalidArgument("symplectic dimension must be even");
            const FieldCtx& F = detail::field_for_prime_power(q);
            std::vector<Element> gens = detail::sp_transvections(F, n);
            std::vector<uint32_t> scalars{1};
            if (fam == ClassicalFamily::PSp) scalars = detail::nth_root_scalars(F, 2);
            auto law = std::make_shared<MatLaw>(F, n, scalars);
            for (Element& g : gens) g = law->canonicalize(g);
            return Group(std::move(law), std::move(gens), spec, budget);
        }
        case ClassicalFamily::SU:
        case ClassicalFamily::PSU: {
            if (n != 3) throw InvalidArgument("unitary groups are built for dimension 3 only");
            auto f = factorize(q);
            if (f.size() != 1) throw InvalidArgument(std::to_string(q) + " is not a prime power");
            const FieldCtx& F2 = make_field(uint32_t(f[0].prime), 2 * f[0].exponent);
            std::vector<Element> gens = detail::su3_unipotent_generators(F2);
            Element w = detail::antidiag_ones(F2, 3);
            size_t lower_count = gens.size();
            for (size_t i = 0; i < lower_count; ++i)
                gens.push_back(mat_multiply(mat_multiply(w, gens[i]), w));
            std::vector<uint32_t> scalars{1};
            if (fam == ClassicalFamily::PSU) {
                // centre of SU(3,q): scalars with s^3 = 1 and s^(q+1) = 1
                std::vector<uint32_t> out;
                for (uint32_t s = 1; s < F2.q(); ++s)
                    if (F2.pow(s, 3) == 1 && F2.pow(s, q + 1) == 1) out.push_back(s);
                scalars = out;
            }
            auto law = std::make_shared<MatLaw>(F2, 3, scalars);
            for (Element& g : gens) g = law->canonicalize(g);
            return Group(std::move(law), std::move(gens), spec, budget);
        }
    }
    throw InvalidArgument("unsupported classical family");
}

/// Suzuki group Sz(q), q = 2^(2f+1), as 4x4 matrices over F_q: the lower
/// unitriangular family S(a,b), the torus element for a primitive scalar, and
/// the antidiagonal involution.
inline Element suzuki_sab(const FieldCtx& F, uint64_t theta, uint32_t a, uint32_t b) {
    uint32_t at = F.pow(a, theta);                    // a^theta
    uint32_t a1t = F.mul(a, at);                      // a^(1+theta)
    uint32_t a2t = F.mul(a, a1t);                     // a^(2+theta)
    uint32_t bt = F.pow(b, theta);                    // b^theta
    uint32_t r31 = F.add(a1t, b);
    uint32_t r41 = F.add(F.add(a2t, F.mul(a, b)), bt);
    return Element::make_mat(F, 4,
                             {1, 0, 0, 0,
                              a, 1, 0, 0,
                              r31, at, 1, 0,
                              r41, b, a, 1});
}

inline Group suzuki(uint32_t q, uint64_t budget = kDefaultBudget) {
    auto f = factorize(q);
    if (f.size() != 1 || f[0].prime != 2 || f[0].exponent < 3 || f[0].exponent % 2 == 0)
        throw InvalidArgument("suzuki groups need q = 2^(2f+1), f >= 1");
    uint32_t e = f[0].exponent;            // 2f+1
    uint32_t fpar = (e - 1) / 2;
    uint64_t theta = uint64_t(1) << (fpar + 1);
    const FieldCtx& F = make_field(2, e);
    std::vector<Element> gens;
    for (uint32_t b : detail::fp_basis(F)) {
        gens.push_back(suzuki_sab(F, theta, b, 0));
        gens.push_back(suzuki_sab(F, theta, 0, b));
    }
    uint32_t lam = F.primitive_element();
    uint64_t half = uint64_t(1) << fpar;  // 2^f
    uint32_t d1 = F.pow(lam, 1 + half);
    uint32_t d2 = F.pow(lam, half);
    gens.push_back(Element::make_mat(
        F, 4, {d1, 0, 0, 0, 0, d2, 0, 0, 0, 0, F.inv(d2), 0, 0, 0, 0, F.inv(d1)}));
    gens.push_back(detail::antidiag_ones(F, 4));
    return Group(std::make_shared<MatLaw>(F, 4), std::move(gens),
                 "sz(" + std::to_string(q) + ")", budget);
}

/// Sylow 2-subgroup of Sz(q) on coordinate pairs with the twisted product.
inline Group suzuki_2group(uint32_t q, uint64_t budget = kDefaultBudget) {
    auto f = factorize(q);
    if (f.size() != 1 || f[0].prime != 2 || f[0].exponent < 3 || f[0].exponent % 2 == 0)
        throw InvalidArgument("suzuki 2-groups need q = 2^(2f+1), f >= 1");
    uint32_t e = f[0].exponent;
    uint64_t theta = uint64_t(1) << ((e - 1) / 2 + 1);
    const FieldCtx& F = make_field(2, e);
    auto law = std::make_shared<SuzukiTwistLaw>(F, theta);
    std::vector<Element> gens;
    for (uint32_t b : detail::fp_basis(F)) {
        gens.push_back(Element::make_vec({b, 0}, law->tag()));
        gens.push_back(Element::make_vec({0, b}, law->tag()));
    }
    return Group(std::move(law), std::move(gens), "sz2(" + std::to_string(q) + ")", budget);
}

/// Full unipotent subgroup of SU(3,q) for even q: matrices M(x,y) over F_{q^2}
/// with y + y^q = x^(1+q); a group of order q^3.
inline Group psu3_unipotent_even(uint32_t q, uint64_t budget = kDefaultBudget) {
    auto f = factorize(q);
    if (f.size() != 1 || f[0].prime != 2 || f[0].exponent < 2)
        throw InvalidArgument("psu3_unipotent_even needs q = 2^m, m >= 2");
    const FieldCtx& F2 = make_field(2, 2 * f[0].exponent);
    std::vector<Element> gens = detail::su3_unipotent_generators(F2);
    return Group(std::make_shared<MatLaw>(F2, 3), std::move(gens),
                 "psu3u(" + std::to_string(q) + ")", budget);
}

/// M(x,y) as an element of psu3_unipotent_even's parent matrix space.
inline Element psu3_m(uint32_t q, uint32_t x_code, uint32_t y_code) {
    auto f = factorize(q);
    const FieldCtx& F2 = make_field(2, 2 * f[0].exponent);
    uint32_t half = F2.k() / 2;
    if (F2.add(y_code, F2.frobenius(y_code, half)) != F2.mul(x_code, F2.frobenius(x_code, half)))
        throw InvalidArgument("M(x,y) needs y + y^q = x^(1+q)");
    return detail::su3_lower(F2, x_code, y_code);
}

/// Janko's sporadic group J1 as a permutation group on 266 points from two
/// embedded generators; the data asset is gated by the order-175560 check.
inline Group j1(uint64_t budget = kDefaultBudget) {
    std::vector<uint16_t> a(j1data::kGenA, j1data::kGenA + 266);
    std::vector<uint16_t> b(j1data::kGenB, j1data::kGenB + 266);
    Group g(std::make_shared<PermLaw>(266),
            {Element::make_perm(std::move(a)), Element::make_perm(std::move(b))}, "j1()", budget);
    if (g.order() != 175560) throw Error("embedded J1 data failed the order gate");
    return g;
}

/// C_2^n x| C_m for odd m, n = ord_m(2): the complement embeds in a Singer
/// cycle of GL(n,2) via the companion matrix of the minimal polynomial of an
/// order-m field element; a Frobenius group.
inline Group singer_frobenius(uint32_t m, uint64_t budget = kDefaultBudget) {
    if (m < 3 || m % 2 == 0) throw InvalidArgument("singer_frobenius needs odd m >= 3");
    uint32_t n = uint32_t(multiplicative_order(2, m));
    const FieldCtx& F = make_field(2, n);
    auto mp = minimal_polynomial(element_of_order(F, m));
    const FieldCtx& F2 = make_field(2, 1);
    Element comp = Element::make_mat(F2, n, companion_matrix_codes(F2, mp));
    Group V = elementary_abelian(2, n, budget);
    Group K = cyclic(m, budget);
    ActionMap act(K, V, {Automorphism::from_matrix(V, comp)});
    return semidirect_product(V, K, act, "singer_frobenius(" + std::to_string(m) + ")");
}

/// Extraspecial group of order p^(1+2n) and exponent p, p odd.
inline Group extraspecial_group(uint32_t p, uint32_t n, uint64_t budget = kDefaultBudget) {
    if (n == 0) throw InvalidArgument("extraspecial width must be positive");
    auto law = std::make_shared<ExtraspecialLaw>(p, n);
    std::vector<Element> gens;
    for (uint32_t i = 0; i < 2 * n; ++i) {
        std::vector<uint32_t> v(2 * n + 1, 0);
        v[i] = 1;
        gens.push_back(Element::make_vec(std::move(v), law->tag()));
    }
    return Group(std::move(law), std::move(gens),
                 "extraspecial(" + std::to_string(p) + "," + std::to_string(n) + ")", budget);
}

/// Winter's construction: a permutation group G on n points acts faithfully on
/// the extraspecial group p^(1+2n) via M -> M + M (a symplectic action fixing
/// the centre coordinate pointwise); returns extraspecial x| G.
inline Group winter_extension(const Group& G, uint32_t p, uint64_t budget = kDefaultBudget) {
    auto* pl = dynamic_cast<const PermLaw*>(&G.law());
    if (!pl) throw InvalidArgument("winter_extension needs a permutation group");
    uint32_t n = pl->points();
    Group V = extraspecial_group(p, n, budget);
    const FieldCtx& Fp = make_field(p, 1);
    std::vector<Automorphism> images;
    for (const Element& g : G.generators()) {
        std::vector<uint32_t> mat(size_t(2 * n) * (2 * n), 0);
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t i = g.perm[j];  // column j maps e_j -> e_{g(j)} in both blocks
            mat[size_t(i) * 2 * n + j] = 1;
            mat[size_t(n + i) * 2 * n + (n + j)] = 1;
        }
        images.push_back(Automorphism::from_matrix(V, Element::make_mat(Fp, 2 * n, std::move(mat))));
    }
    ActionMap act(G, V, images);
    if (!act.faithful()) throw InvalidArgument("winter_extension action is not faithful");
    return semidirect_product(V, G, act,
                              "winter(" + G.spec() + "," + std::to_string(p) + ")");
}

/// Minimal non-abelian p-group <x,y | x^(p^r) = y^(p^s) = [x,y]^p = 1, [x,y]
/// central> via the explicit cocycle product; the presentation's relations are
/// verified post-construction.
inline Group minimal_nonabelian_p(uint32_t p, uint32_t r, uint32_t s,
                                  uint64_t budget = kDefaultBudget) {
    if (r < s || s < 1) throw InvalidArgument("minimal_nonabelian_p needs r >= s >= 1");
    auto law = std::make_shared<MinNonabPLaw>(p, r, s);
    Element x = Element::make_vec({1, 0, 0}, law->tag());
    Element y = Element::make_vec({0, 1, 0}, law->tag());
    Group G(law, {x, y},
            "minnonab_p(" + std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(s) +
                ")",
            budget);
    uint64_t pr = 1, ps = 1;
    for (uint32_t i = 0; i < r; ++i) pr *= p;
    for (uint32_t i = 0; i < s; ++i) ps *= p;
    Element c = G.commutator(x, y);
    if (G.pow(x, int64_t(pr)) != G.id() || G.pow(y, int64_t(ps)) != G.id() ||
        G.pow(c, p) != G.id() || G.commutator(x, c) != G.id() || G.commutator(y, c) != G.id())
        throw Error("minimal_nonabelian_p relations failed");  // unreachable
    return G;
}

/// C_q^r x| C_(p^s) for distinct primes with r = ord_p(q) >= 2: the generator
/// acts by the companion matrix of an irreducible degree-r divisor of
/// (X^p - 1)/(X - 1) over F_q.
inline Group minimal_nonabelian_qp(uint32_t q, uint32_t p, uint32_t s,
                                   uint64_t budget = kDefaultBudget) {
    if (!is_prime(q) || !is_prime(p) || p == q)
        throw InvalidArgument("minimal_nonabelian_qp needs distinct primes");
    if (s < 1) throw InvalidArgument("minimal_nonabelian_qp needs s >= 1");
    uint32_t r = uint32_t(multiplicative_order(q, p));
    if (r < 2)
        throw InvalidArgument("minimal_nonabelian_qp: ord_p(q) = 1 is the metacyclic case, excluded");
    const FieldCtx& Fqr = make_field(q, r);
    auto mp = minimal_polynomial(element_of_order(Fqr, p));
    const FieldCtx& Fq = make_field(q, 1);
    Element comp = Element::make_mat(Fq, r, companion_matrix_codes(Fq, mp));
    Group V = elementary_abelian(q, r, budget);
    uint64_t pziel = 1;
    for (uint32_t i = 0; i < s; ++i) pziel *= p;
    Group H = cyclic(uint32_t(pziel), budget);
    ActionMap act(H, V, {Automorphism::from_matrix(V, comp)});
    return semidirect_product(V, H, act,
                              "minnonab_qp(" + std::to_string(q) + "," + std::to_string(p) + "," +
                                  std::to_string(s) + ")");
}

inline Group metacyclic_group(uint32_t n, uint32_t m, uint32_t k,
                              uint64_t budget = kDefaultBudget) {
    auto law = std::make_shared<MetacyclicLaw>(n, m, k);
    Element x = Element::make_vec({n > 1 ? 1u : 0u, 0}, law->tag());
    Element y = Element::make_vec({0, m > 1 ? 1u : 0u}, law->tag());
    return Group(law, {x, y},
                 "metacyclic(" + std::to_string(n) + "," + std::to_string(m) + "," +
                     std::to_string(k) + ")",
                 budget);
}

/// V x| G for V the regular F_p G-module: G permutes the p^|G| coordinates by
/// the (left-)regular action. Requires the paper's congruence p = 2 (mod |G|),
/// p odd; refuses |G| > 7 (use matrix_module_extension beyond that).
inline Group regular_module_extension(const Group& G, uint32_t p,
                                      uint64_t budget = kDefaultBudget) {
    uint64_t n = G.order();
    if (n > 7) throw InvalidArgument("regular module refused for |G| > 7; supply a matrix module");
    if (!is_prime(p) || p == 2) throw InvalidArgument("regular_module_extension needs an odd prime");
    if (p % n != 2 % n) throw InvalidArgument("regular_module_extension needs p = 2 (mod |G|)");
    if (n % p == 0) throw InvalidArgument("p must not divide |G|");
    if (std::gcd<uint64_t>(p - 1, n) != 1)
        throw Error("congruence should force gcd(p-1,|G|) = 1");  // unreachable
    const FieldCtx& Fp = make_field(p, 1);
    Group V = elementary_abelian(p, uint32_t(n), budget);
    std::vector<Automorphism> images;
    for (const Element& g : G.generators()) {
        std::vector<uint32_t> mat(n * n, 0);
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t i = G.index_of(G.mul(g, G.element(j)));
            mat[size_t(i) * n + j] = 1;
        }
        images.push_back(
            Automorphism::from_matrix(V, Element::make_mat(Fp, uint32_t(n), std::move(mat))));
    }
    ActionMap act(G, V, images);
    if (!act.faithful()) throw Error("regular action must be faithful");  // unreachable
    return semidirect_product(V, G, act, "regmod(" + G.spec() + "," + std::to_string(p) + ")");
}

/// F_p^d x| G for an explicit faithful matrix representation of G's generators.
inline Group matrix_module_extension(const Group& G, uint32_t p,
                                     const std::vector<Element>& generator_matrices,
                                     uint64_t budget = kDefaultBudget) {
    if (generator_matrices.empty()) throw InvalidArgument("matrix module needs generator images");
    uint32_t d = generator_matrices[0].dim;
    Group V = elementary_abelian(p, d, budget);
    std::vector<Automorphism> images;
    for (const Element& m : generator_matrices)
        images.push_back(Automorphism::from_matrix(V, m));
    ActionMap act(G, V, images);
    if (!act.faithful())
        throw InvalidArgument("matrix_module_extension requires a faithful representation");
    return semidirect_product(V, G, act, "matmod(" + G.spec() + "," + std::to_string(p) + ")");
}

}  // namespace irratio
