#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "irratio/group.hpp"
#include "irratio/products.hpp"

namespace irratio {

/// Conjugacy partition with BFS parent edges kept for conjugator
/// reconstruction. Representatives are the structurally least class members,
/// so reports are stable under generator reordering.
struct ConjClasses {
    std::vector<uint32_t> class_of;    // element index -> class id
    std::vector<uint32_t> reps;        // class id -> element index
    std::vector<uint32_t> seeds;       // class id -> BFS seed element index
    std::vector<uint64_t> sizes;
    std::vector<uint32_t> parent;      // element index -> parent element index
    std::vector<int32_t> parent_gen;   // element index -> conjugating generator (-1 at seed)
    std::vector<Element> gens;         // conjugating generator list used by the BFS

    uint32_t count() const { return uint32_t(reps.size()); }
};

inline const ConjClasses& conjugacy_classes(const Group& G) {
    if (auto cached = G.cached_classes()) return *static_cast<const ConjClasses*>(cached.get());

    const ElementTable& tab = G.elements();
    auto cc = std::make_shared<ConjClasses>();
    cc->gens = G.small_generating_set();
    std::vector<Element> gen_inv;
    for (const Element& g : cc->gens) gen_inv.push_back(G.inv(g));

    uint32_t n = uint32_t(tab.size());
    cc->class_of.assign(n, UINT32_MAX);
    cc->parent.assign(n, 0);
    cc->parent_gen.assign(n, -1);
    std::vector<uint32_t> queue;
    for (uint32_t seed = 0; seed < n; ++seed) {
        if (cc->class_of[seed] != UINT32_MAX) continue;
        uint32_t cls = cc->count();
        cc->seeds.push_back(seed);
        cc->class_of[seed] = cls;
        cc->parent[seed] = seed;
        queue.assign(1, seed);
        uint32_t least = seed;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t xi = queue[qi];
            for (size_t gi = 0; gi < cc->gens.size(); ++gi) {
                Element y = G.mul(G.mul(cc->gens[gi], tab.elems[xi]), gen_inv[gi]);
                uint32_t yi = G.index_of(y);
                if (cc->class_of[yi] != UINT32_MAX) continue;
                cc->class_of[yi] = cls;
                cc->parent[yi] = xi;
                cc->parent_gen[yi] = int32_t(gi);
                if (tab.elems[yi] < tab.elems[least]) least = yi;
                queue.push_back(yi);
            }
        }
        cc->reps.push_back(least);
        cc->sizes.push_back(queue.size());
    }
    G.store_classes(cc);
    return *static_cast<const ConjClasses*>(G.cached_classes().get());
}

/// w with element(idx) = w * seed * w^-1, read off the class BFS parents:
/// when y was discovered as g * x * g^-1, w(y) = g * w(x).
inline Element conjugator_from_seed(const Group& G, const ConjClasses& cc, uint32_t idx) {
    Element w = G.id();
    while (cc.parent_gen[idx] >= 0) {
        w = G.mul(w, cc.gens[size_t(cc.parent_gen[idx])]);
        idx = cc.parent[idx];
    }
    return w;
}

/// g with g * element(from) * g^-1 = element(to); both in the same class.
inline Element conjugator(const Group& G, const ConjClasses& cc, uint32_t from, uint32_t to) {
    if (cc.class_of[from] != cc.class_of[to]) throw InvalidArgument("elements are not conjugate");
    Element wt = conjugator_from_seed(G, cc, to);
    Element wf = conjugator_from_seed(G, cc, from);
    return G.mul(wt, G.inv(wf));
}

inline Subgroup centralizer(const Group& G, const Element& x) {
    const ElementTable& tab = G.elements();
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (G.mul(tab.elems[i], x) == G.mul(x, tab.elems[i])) idx.push_back(i);
    return subgroup_from_indices(G, std::move(idx), "centralizer");
}

/// Powers of x as a parent-index set.
inline std::vector<uint32_t> cyclic_power_indices(const Group& G, const Element& x) {
    std::vector<uint32_t> out;
    Element acc = G.id();
    do {
        out.push_back(G.index_of(acc));
        acc = G.mul(acc, x);
    } while (!(acc == G.id()));
    std::sort(out.begin(), out.end());
    return out;
}

inline Subgroup normalizer_cyclic(const Group& G, const Element& x) {
    const ElementTable& tab = G.elements();
    std::vector<bool> in_cyc(tab.size(), false);
    for (uint32_t i : cyclic_power_indices(G, x)) in_cyc[i] = true;
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < tab.size(); ++i) {
        Element y = G.conj(tab.elems[i], x);
        if (in_cyc[G.index_of(y)]) idx.push_back(i);
    }
    return subgroup_from_indices(G, std::move(idx), "cyclic normalizer");
}

/// Sylow p-subgroup by the normalizer-growth loop; returns the trivial
/// subgroup when p does not divide |G|.
inline Subgroup sylow(const Group& G, uint32_t p) {
    if (!is_prime(p)) throw InvalidArgument("sylow needs a prime");
    uint64_t target = p_part(G.order(), p);
    if (target == 1) return trivial_subgroup(G);
    const ElementTable& tab = G.elements();

    auto p_element_part = [&](const Element& g) {
        uint64_t n = G.element_order(g);
        uint64_t pp = p_part(n, p);
        return G.pow(g, int64_t(n / pp));  // p-part of g, order pp
    };
    Element seed = G.id();
    for (uint32_t i = 0; i < tab.size(); ++i) {
        if (G.element_order(tab.elems[i]) % p == 0) {
            seed = p_element_part(tab.elems[i]);
            break;
        }
    }
    Subgroup P = generated_subgroup(G, {seed});
    while (P.order() < target) {
        bool grown = false;
        for (uint32_t i = 0; i < tab.size() && !grown; ++i) {
            const Element& g = tab.elems[i];
            if (G.element_order(g) % p != 0) continue;
            if (!P.conjugate_stays_inside(g)) continue;  // g must normalize P
            Element y = p_element_part(g);
            if (P.contains(y)) continue;
            std::vector<Element> gens = P.generators();
            gens.push_back(y);
            P = generated_subgroup(G, gens);
            grown = true;
        }
        if (!grown) throw Error("sylow normalizer growth stalled");  // unreachable
    }
    return P;
}

/// O_p(G): intersection of the conjugates of one Sylow p-subgroup, folded in
/// over a transversal of its normalizer with a normality early exit.
inline Subgroup p_core(const Group& G, uint32_t p) {
    Subgroup P = sylow(G, p);
    if (P.is_trivial()) return P;
    const ElementTable& tab = G.elements();

    std::vector<bool> inter(tab.size(), false);
    for (uint32_t i : P.indices()) inter[i] = true;
    auto is_normal_set = [&](const std::vector<bool>& member) {
        for (const Element& g : G.generators())
            for (uint32_t i = 0; i < tab.size(); ++i)
                if (member[i] && !member[G.index_of(G.conj(g, tab.elems[i]))]) return false;
        return true;
    };

    std::vector<bool> coset_seen(tab.size(), false);
    // Mark N_G(P) itself (the transversal member t = id is already folded in).
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (P.conjugate_stays_inside(tab.elems[i])) coset_seen[i] = true;
    std::vector<uint32_t> normalizer_idx;
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (coset_seen[i]) normalizer_idx.push_back(i);

    if (!is_normal_set(inter)) {
        for (uint32_t t = 0; t < tab.size(); ++t) {
            if (coset_seen[t]) continue;
            const Element& te = tab.elems[t];
            for (uint32_t ni : normalizer_idx) coset_seen[G.index_of(G.mul(te, tab.elems[ni]))] = true;
            Element tinv = G.inv(te);
            for (uint32_t i = 0; i < tab.size(); ++i) {
                if (!inter[i]) continue;
                if (!P.contains(G.mul(G.mul(tinv, tab.elems[i]), te))) inter[i] = false;
            }
            if (is_normal_set(inter)) break;
        }
    }
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (inter[i]) idx.push_back(i);
    return subgroup_from_indices(G, std::move(idx), "p-core");
}

inline Subgroup center(const Group& G) {
    return subgroup_from_indices(G, center_indices(G), "center");
}

/// Derived subgroup: normal closure of the generator commutators.
inline Subgroup derived_subgroup(const Group& G) {
    std::vector<Element> comms;
    for (const Element& a : G.generators())
        for (const Element& b : G.generators()) {
            Element c = G.commutator(a, b);
            if (!(c == G.id())) comms.push_back(c);
        }
    if (comms.empty()) return trivial_subgroup(G);
    return normal_closure(G, comms);
}

inline std::vector<uint64_t> derived_series_orders(const Group& G) {
    std::vector<uint64_t> orders{G.order()};
    Group cur = G;
    for (;;) {
        Subgroup d = derived_subgroup(cur);
        if (d.order() == orders.back()) break;  // stabilized (perfect or trivial)
        orders.push_back(d.order());
        if (d.order() == 1) break;
        cur = d.as_group(cur.spec() + "'");
    }
    return orders;
}

inline bool is_solvable(const Group& G) { return derived_series_orders(G).back() == 1; }

inline uint32_t derived_length(const Group& G) {
    auto orders = derived_series_orders(G);
    if (orders.back() != 1) throw InvalidArgument("derived length of a non-solvable group");
    return uint32_t(orders.size() - 1);
}

inline bool is_abelian(const Group& G) {
    for (const Element& a : G.generators())
        for (const Element& b : G.generators())
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

inline bool is_nilpotent(const Group& G) {
    auto primes = prime_divisors(G.order());
    if (primes.size() <= 1) return true;  // p-groups and the trivial group
    for (uint64_t p : primes)
        if (!sylow(G, uint32_t(p)).is_normal()) return false;
    return true;
}

inline uint64_t exponent(const Group& G) {
    uint64_t e = 1;
    if (G.cached_classes()) {
        const ConjClasses& cc = conjugacy_classes(G);
        for (uint32_t r : cc.reps) e = std::lcm(e, G.element_order(G.element(r)));
        return e;
    }
    const ElementTable& tab = G.elements();
    for (const Element& x : tab.elems) e = std::lcm(e, G.element_order(x));
    return e;
}

/// F(G): the subgroup generated by all p-cores.
inline Subgroup fitting_subgroup(const Group& G) {
    std::vector<Element> gens;
    for (uint64_t p : prime_divisors(G.order())) {
        Subgroup op = p_core(G, uint32_t(p));
        for (const Element& g : op.generators())
            if (!(g == G.id())) gens.push_back(g);
    }
    if (gens.empty()) return trivial_subgroup(G);
    return generated_subgroup(G, gens);
}

/// Iterations of G -> G/F(G) until trivial; requires a solvable input.
inline uint32_t fitting_length(const Group& G) {
    if (!is_solvable(G)) throw InvalidArgument("fitting length needs a solvable group");
    uint32_t len = 0;
    Group cur = G;
    while (cur.order() > 1) {
        Subgroup f = fitting_subgroup(cur);
        if (f.is_trivial()) throw Error("trivial Fitting radical in a solvable group");  // unreachable
        cur = quotient_group(cur, f);
        ++len;
    }
    return len;
}

/// Frattini subgroup of a p-group by the Burnside basis theorem: generated by
/// all commutators and all p-th powers. Brute force over pairs; capped.
inline Subgroup frattini_pgroup(const Group& P) {
    auto primes = prime_divisors(P.order());
    if (primes.size() != 1) throw InvalidArgument("frattini_pgroup needs a p-group");
    uint32_t p = uint32_t(primes[0]);
    const ElementTable& tab = P.elements();
    if (tab.size() > 4096) throw InvalidArgument("frattini brute force capped at order 4096");
    std::unordered_set<uint32_t> gen_idx;
    for (uint32_t i = 0; i < tab.size(); ++i) {
        gen_idx.insert(P.index_of(P.pow(tab.elems[i], p)));
        for (uint32_t j = 0; j < tab.size(); ++j)
            gen_idx.insert(P.index_of(P.commutator(tab.elems[i], tab.elems[j])));
    }
    std::vector<Element> gens;
    for (uint32_t i : gen_idx)
        if (i != tab.identity) gens.push_back(tab.elems[i]);
    if (gens.empty()) return trivial_subgroup(P);
    return generated_subgroup(P, gens);
}

/// Minimal number of generators d of a p-group: |P/Phi(P)| = p^d.
inline uint32_t min_generators(const Group& P) {
    auto primes = prime_divisors(P.order());
    if (P.order() == 1) return 0;
    uint32_t p = uint32_t(primes[0]);
    uint64_t quotient = P.order() / frattini_pgroup(P).order();
    uint32_t d = 0;
    while (quotient > 1) { quotient /= p; ++d; }
    return d;
}

/// Omega(P) for a 2-group: the subgroup generated by the involutions.
inline Subgroup omega1(const Group& P) {
    std::vector<Element> invs;
    for (const Element& x : P.elements().elems)
        if (!(x == P.id()) && P.mul(x, x) == P.id()) invs.push_back(x);
    if (invs.empty()) return trivial_subgroup(P);
    return generated_subgroup(P, invs);
}

/// Subgroup generated by all involutions of G.
inline Subgroup involution_subgroup(const Group& G) { return omega1(G); }

inline uint64_t count_involutions(const Group& G) {
    uint64_t n = 0;
    for (const Element& x : G.elements().elems)
        if (!(x == G.id()) && G.mul(x, x) == G.id()) ++n;
    return n;
}

/// Number of conjugacy classes of involutions.
inline uint32_t involution_class_count(const Group& G) {
    const ConjClasses& cc = conjugacy_classes(G);
    uint32_t s = 0;
    for (uint32_t r : cc.reps)
        if (G.element_order(G.element(r)) == 2) ++s;
    return s;
}

struct FrobeniusCheck {
    bool is_frobenius = false;
    std::string reason;
    Subgroup kernel;
};

/// Tests K for malnormality (K cap K^g = 1 outside K) and certifies the
/// kernel: the complement of the union of conjugates of K\{1}, plus the
/// identity, must be a subgroup of order |G|/|K|.
inline FrobeniusCheck is_frobenius_with_complement(const Group& G, const Subgroup& K) {
    if (K.order() <= 1 || K.is_whole_parent())
        throw InvalidArgument("frobenius complement must be proper and nontrivial");
    const ElementTable& tab = G.elements();
    std::vector<bool> covered(tab.size(), false);
    FrobeniusCheck out;
    for (uint32_t gi = 0; gi < tab.size(); ++gi) {
        const Element& g = tab.elems[gi];
        bool g_in_K = K.contains_index(gi);
        for (uint32_t ki : K.indices()) {
            if (ki == tab.identity) continue;
            Element c = G.conj(g, tab.elems[ki]);
            uint32_t ci = G.index_of(c);
            covered[ci] = true;
            if (!g_in_K && K.contains_index(ci)) {
                out.reason = "complement meets a conjugate nontrivially";
                return out;
            }
        }
    }
    std::vector<uint32_t> kernel_idx;
    for (uint32_t i = 0; i < tab.size(); ++i)
        if (!covered[i]) kernel_idx.push_back(i);
    if (kernel_idx.size() != G.order() / K.order()) {
        out.reason = "kernel candidate has the wrong size";
        return out;
    }
    auto sg = try_subgroup_from_indices(G, std::move(kernel_idx));
    if (!sg) {
        out.reason = "kernel set is not a subgroup";
        return out;
    }
    out.is_frobenius = true;
    out.kernel = *sg;
    return out;
}

/// x is real iff x^-1 lies in the class of x.
inline bool is_real(const Group& G, const Element& x) {
    const ConjClasses& cc = conjugacy_classes(G);
    return cc.class_of[G.index_of(x)] == cc.class_of[G.index_of(G.inv(x))];
}

}  // namespace irratio
