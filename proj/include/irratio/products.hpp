#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "irratio/actions.hpp"
#include "irratio/group.hpp"

namespace irratio {

inline Group direct_product(const Group& A, const Group& B, std::string spec = "") {
    auto law = std::make_shared<DirectLaw>(A.law_ptr(), B.law_ptr());
    std::vector<Element> gens;
    for (const Element& g : A.generators())
        gens.push_back(Element::make_tuple({g, B.id()}, law->tag()));
    for (const Element& g : B.generators())
        gens.push_back(Element::make_tuple({A.id(), g}, law->tag()));
    if (spec.empty()) spec = "direct(" + A.spec() + "," + B.spec() + ")";
    return Group(std::move(law), std::move(gens), std::move(spec),
                 std::max(A.budget(), B.budget()));
}

namespace detail {

struct ActionMapApplier final : ActionApplier {
    ActionMap map;
    explicit ActionMapApplier(ActionMap m) : map(std::move(m)) {}
    Element apply(const Element& h, const Element& a) const override { return map.apply(h, a); }
    uint64_t structure_hash() const override { return map.structure_hash(); }
};

}  // namespace detail

/// A x| H for a verified action of H on A: pairs (a,h) with
/// (a,h)(a',h') = (a * h(a'), hh').
inline Group semidirect_product(const Group& A, const Group& H, const ActionMap& act,
                                std::string spec = "") {
    if (!same_group(act.target(), A) || !same_group(act.acting(), H))
        throw InvalidArgument("action map does not connect the given groups");
    auto applier = std::make_shared<detail::ActionMapApplier>(act);
    auto law = std::make_shared<SemidirectLaw>(A.law_ptr(), H.law_ptr(), applier);
    std::vector<Element> gens;
    for (const Element& g : A.generators())
        gens.push_back(Element::make_tuple({g, H.id()}, law->tag()));
    for (const Element& g : H.generators())
        gens.push_back(Element::make_tuple({A.id(), g}, law->tag()));
    if (spec.empty()) spec = "semidirect(" + A.spec() + "," + H.spec() + ")";
    return Group(std::move(law), std::move(gens), std::move(spec),
                 std::max(A.budget(), H.budget()));
}

/// A wr H for H a permutation group on n points: base A^n with H permuting
/// coordinates. Base generators are installed in every coordinate so the
/// construction is correct for intransitive H as well.
inline Group wreath_product(const Group& A, const Group& H, std::string spec = "") {
    auto* pl = dynamic_cast<const PermLaw*>(&H.law());
    if (!pl) throw InvalidArgument("wreath product needs a permutation group on top");
    uint32_t n = pl->points();
    auto law = std::make_shared<WreathLaw>(A.law_ptr(), n);
    std::vector<Element> gens;
    for (uint32_t i = 0; i < n; ++i) {
        for (const Element& g : A.generators()) {
            std::vector<Element> parts(n + 1, A.id());
            parts[i] = g;
            parts[n] = perm_identity(n);
            gens.push_back(Element::make_tuple(std::move(parts), law->tag()));
        }
    }
    for (const Element& h : H.generators()) {
        std::vector<Element> parts(n + 1, A.id());
        parts[n] = h;
        gens.push_back(Element::make_tuple(std::move(parts), law->tag()));
    }
    if (spec.empty()) spec = "wreath(" + A.spec() + "," + H.spec() + ")";
    return Group(std::move(law), std::move(gens), std::move(spec),
                 std::max(A.budget(), H.budget()));
}

/// Indices of Z(G) = elements commuting with every generator.
inline std::vector<uint32_t> center_indices(const Group& G) {
    const ElementTable& tab = G.elements();
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < tab.size(); ++i) {
        bool central = true;
        for (const Element& g : G.generators()) {
            if (G.mul(tab.elems[i], g) != G.mul(g, tab.elems[i])) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(i);
    }
    return out;
}

/// Left-coset permutation representation of G/N; N must be normal (verified
/// over every element of N against every generator of G).
inline Group quotient_group(const Group& G, const Subgroup& N, std::string spec = "") {
    if (!same_group(N.parent(), G)) throw InvalidArgument("subgroup belongs to a different group");
    for (const Element& g : G.generators())
        for (uint32_t i : N.indices())
            if (!N.contains(G.conj(g, G.element(i))))
                throw InvalidArgument("quotient requires a normal subgroup");

    // Enumerate cosets: representative list with membership test r^-1 x in N.
    std::vector<uint32_t> reps{G.elements().identity};
    std::vector<Element> rep_inv{G.id()};
    auto coset_of = [&](const Element& x) -> int64_t {
        for (size_t c = 0; c < reps.size(); ++c)
            if (N.contains(G.mul(rep_inv[c], x))) return int64_t(c);
        return -1;
    };
    const std::vector<Element>& gens = G.generators();
    for (size_t c = 0; c < reps.size(); ++c) {
        for (const Element& g : gens) {
            Element z = G.mul(g, G.element(reps[c]));
            if (coset_of(z) < 0) {
                reps.push_back(G.index_of(z));
                rep_inv.push_back(G.inv(z));
            }
        }
    }
    uint32_t m = uint32_t(reps.size());
    if (uint64_t(m) * N.order() != G.order())
        throw Error("coset count mismatch in quotient");  // unreachable

    auto law = std::make_shared<PermLaw>(m);
    std::vector<Element> qgens;
    auto perm_of = [&](const Element& g) {
        std::vector<uint16_t> img(m);
        for (uint32_t c = 0; c < m; ++c) {
            int64_t t = coset_of(G.mul(g, G.element(reps[c])));
            img[c] = uint16_t(t);
        }
        return Element::make_perm(std::move(img));
    };
    for (const Element& g : gens) qgens.push_back(perm_of(g));
    // The coset map must be a homomorphism on generators.
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j)
            if (perm_compose(qgens[i], qgens[j]) != perm_of(G.mul(gens[i], gens[j])))
                throw Error("quotient map is not a homomorphism");  // unreachable
    if (spec.empty()) spec = "quotient(" + G.spec() + ")";
    return Group(std::move(law), std::move(qgens), std::move(spec), G.budget());
}

/// Central product: (A x B) / {(z, iso(z)^-1)} for an isomorphism between
/// designated central subgroups. `iso` must cover all of Z_A.
inline Group central_product(const Group& A, const Group& B, const Subgroup& Z_A,
                             const Subgroup& Z_B,
                             const std::vector<std::pair<Element, Element>>& iso,
                             std::string spec = "") {
    if (!same_group(Z_A.parent(), A) || !same_group(Z_B.parent(), B))
        throw InvalidArgument("designated subgroups belong to the wrong groups");
    if (Z_A.order() != Z_B.order() || iso.size() != Z_A.order())
        throw InvalidArgument("central identification must be a complete bijection");
    // Centrality of both designated subgroups.
    for (uint32_t i : Z_A.indices())
        for (const Element& g : A.generators())
            if (A.mul(A.element(i), g) != A.mul(g, A.element(i)))
                throw InvalidArgument("designated subgroup is not central in the left factor");
    for (uint32_t i : Z_B.indices())
        for (const Element& g : B.generators())
            if (B.mul(B.element(i), g) != B.mul(g, B.element(i)))
                throw InvalidArgument("designated subgroup is not central in the right factor");
    // iso is a bijective homomorphism Z_A -> Z_B.
    std::unordered_map<const Element*, const Element*, ElementPtrHash, ElementPtrEq> map;
    for (const auto& [za, zb] : iso) {
        if (!Z_A.contains(za) || !Z_B.contains(zb))
            throw InvalidArgument("iso pair outside the designated subgroups");
        map.emplace(&za, &zb);
    }
    if (map.size() != Z_A.order()) throw InvalidArgument("iso is not defined on all of Z_A");
    auto iso_of = [&](const Element& z) -> const Element& {
        auto it = map.find(&z);
        if (it == map.end()) throw InvalidArgument("iso misses an element of Z_A");
        return *it->second;
    };
    {
        std::unordered_map<const Element*, int, ElementPtrHash, ElementPtrEq> seen;
        for (const auto& [za, zb] : iso) seen.emplace(&zb, 1);
        if (seen.size() != Z_B.order()) throw InvalidArgument("iso is not a bijection onto Z_B");
    }
    for (const auto& [z1, w1] : iso)
        for (const auto& [z2, w2] : iso)
            if (iso_of(A.mul(z1, z2)) != B.mul(w1, w2))
                throw InvalidArgument("iso is not a homomorphism");

    Group D = direct_product(A, B);
    std::vector<uint32_t> n_indices;
    for (const auto& [za, zb] : iso) {
        Element pair = Element::make_tuple({za, B.inv(zb)}, D.law().tag());
        n_indices.push_back(D.index_of(pair));
    }
    std::sort(n_indices.begin(), n_indices.end());
    Subgroup N = subgroup_from_indices(D, std::move(n_indices), "central identification");
    if (spec.empty()) spec = "central(" + A.spec() + "," + B.spec() + ")";
    return quotient_group(D, N, std::move(spec));
}

/// Convenience form used by the CLI grammar: identifies the unique central
/// subgroups of order z (which must exist and be cyclic in both factors) along
/// canonical generators.
inline Group central_product_canonical(const Group& A, const Group& B, uint32_t z,
                                       std::string spec = "") {
    auto designated = [&](const Group& G) {
        std::vector<uint32_t> torsion;
        for (uint32_t i : center_indices(G))
            if (G.pow(G.element(i), z) == G.id()) torsion.push_back(i);
        if (torsion.size() != z)
            throw InvalidArgument("central subgroup of order " + std::to_string(z) +
                                  " is not unique in " + G.spec());
        Element gen = G.id();
        bool found = false;
        for (uint32_t i : torsion) {
            if (G.element_order(G.element(i)) == z) {
                if (!found || G.element(i) < gen) { gen = G.element(i); found = true; }
            }
        }
        if (!found)
            throw InvalidArgument("central z-torsion of " + G.spec() + " is not cyclic");
        return std::make_pair(subgroup_from_indices(G, torsion, "central torsion"), gen);
    };
    auto [ZA, ga] = designated(A);
    auto [ZB, gb] = designated(B);
    std::vector<std::pair<Element, Element>> iso;
    Element xa = A.id(), xb = B.id();
    for (uint32_t j = 0; j < z; ++j) {
        iso.emplace_back(xa, xb);
        xa = A.mul(xa, ga);
        xb = B.mul(xb, gb);
    }
    return central_product(A, B, ZA, ZB, iso, std::move(spec));
}

}  // namespace irratio
