#include <catch_amalgamated.hpp>

#include <random>

#include "irratio/constructions.hpp"
#include "irratio/products.hpp"

using namespace irratio;

namespace {

/// Sampled group-axiom check: associativity on random triples, inverses,
/// identity. Used as a property test across element kinds.
void check_axioms(const Group& G, uint64_t seed = 0) {
    const ElementTable& tab = G.elements();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> pick(0, uint32_t(tab.size() - 1));
    for (int t = 0; t < 60; ++t) {
        const Element& a = tab.elems[pick(rng)];
        const Element& b = tab.elems[pick(rng)];
        const Element& c = tab.elems[pick(rng)];
        REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
        REQUIRE(G.mul(a, G.inv(a)) == G.id());
        REQUIRE(G.mul(a, G.id()) == a);
        REQUIRE(tab.contains(G.inv(a)));
    }
}

}  // namespace

TEST_CASE("enumeration closes the generators and respects the budget") {
    SECTION("cyclic(6) has 6 elements") { REQUIRE(cyclic(6).order() == 6); }
    SECTION("PSL(2,7) closes to 168 elements, matching q(q^2-1)/gcd(2,q-1)") {
        Group g = classical(ClassicalFamily::PSL, 2, 7);
        REQUIRE(g.order() == 168);
        check_axioms(g);
    }
    SECTION("budget overruns fail loudly") {
        REQUIRE_THROWS_AS(cyclic(100, 50).order(), BudgetExceeded);
    }
    SECTION("the element set is generator-order independent") {
        Group a = symmetric(4);
        std::vector<Element> gens = a.generators();
        std::reverse(gens.begin(), gens.end());
        Group b(a.law_ptr(), gens, "symmetric(4)-shuffled");
        REQUIRE(a.order() == b.order());
        for (const Element& e : b.elements().elems) REQUIRE(a.contains(e));
    }
}

TEST_CASE("element orders") {
    Group sl33 = classical(ClassicalFamily::SL, 3, 3);
    const FieldCtx& F = make_field(3, 1);
    // the two witness matrices: s of order 4, t of order 2
    Element s = Element::make_mat(F, 3, {0, 2, 0, 1, 0, 0, 0, 0, 1});
    Element t = Element::make_mat(F, 3, {0, 1, 0, 1, 0, 0, 0, 0, 2});
    REQUIRE(sl33.contains(s));
    REQUIRE(sl33.contains(t));
    REQUIRE(sl33.element_order(s) == 4);
    REQUIRE(sl33.element_order(t) == 2);
    REQUIRE(sl33.element_order(sl33.id()) == 1);

    SECTION("<s,t> is a dihedral group of order 8") {
        Subgroup d = generated_subgroup(sl33, {s, t});
        REQUIRE(d.order() == 8);
        Group D = d.as_group("st-subgroup");
        // dihedral of order 8: non-abelian, exponent 4, two elements of order 4
        uint32_t order4 = 0;
        bool abelian = true;
        uint64_t expo = 1;
        for (const Element& x : D.elements().elems) {
            uint64_t n = D.element_order(x);
            expo = std::lcm(expo, n);
            if (n == 4) ++order4;
        }
        for (const Element& a : D.generators())
            for (const Element& b : D.generators())
                if (D.mul(a, b) != D.mul(b, a)) abelian = false;
        REQUIRE(expo == 4);
        REQUIRE(order4 == 2);
        REQUIRE_FALSE(abelian);
        // conjugation by t inverts s
        REQUIRE(sl33.conj(t, s) == sl33.inv(s));
    }
}

TEST_CASE("generated subgroups") {
    Group g = symmetric(4);
    SECTION("trivial and cyclic") {
        REQUIRE(generated_subgroup(g, {g.id()}).order() == 1);
        Element c = perm_from_cycles(4, {{1, 2, 3}});
        REQUIRE(generated_subgroup(g, {c}).order() == 3);
    }
    SECTION("subgroup-from-set certificates") {
        Element c = perm_from_cycles(4, {{1, 2}, {3, 4}});
        Element d = perm_from_cycles(4, {{1, 3}, {2, 4}});
        Subgroup v = generated_subgroup(g, {c, d});
        REQUIRE(v.order() == 4);
        auto again = try_subgroup_from_indices(g, v.indices());
        REQUIRE(again.has_value());
        REQUIRE(again->order() == 4);
        // a non-closed set is rejected
        std::vector<uint32_t> bad{g.elements().identity, g.index_of(perm_from_cycles(4, {{1, 2, 3}}))};
        REQUIRE_FALSE(try_subgroup_from_indices(g, bad).has_value());
    }
}

TEST_CASE("direct products") {
    Group a = minimal_nonabelian_qp(5, 3, 1);  // C_5^2 x| C_3, order 75
    Group b = minimal_nonabelian_qp(3, 5, 1);  // C_3^4 x| C_5, order 405
    Group d = direct_product(a, b);
    REQUIRE(d.order() == 30375);
    SECTION("A x trivial is A-sized") {
        REQUIRE(direct_product(a, cyclic(1)).order() == a.order());
    }
    SECTION("Klein four") {
        Group k = direct_product(cyclic(2), cyclic(2));
        REQUIRE(k.order() == 4);
        for (const Element& x : k.elements().elems) REQUIRE(k.mul(x, x) == k.id());
    }
}

TEST_CASE("semidirect products") {
    SECTION("trivial action equals the direct product elementwise") {
        Group v = elementary_abelian(5, 2);
        Group h = cyclic(3);
        const FieldCtx& F5 = make_field(5, 1);
        ActionMap trivial(h, v, {Automorphism::from_matrix(v, mat_identity(F5, 2))});
        Group s = semidirect_product(v, h, trivial);
        Group d = direct_product(v, h);
        REQUIRE(s.order() == 75);
        for (const Element& e : s.elements().elems) REQUIRE(d.contains(e));
    }
    SECTION("C_5^2 x| C_3 via the companion matrix of X^2+X+1") {
        Group v = elementary_abelian(5, 2);
        Group h = cyclic(3);
        const FieldCtx& F5 = make_field(5, 1);
        Element comp = Element::make_mat(F5, 2, companion_matrix_codes(F5, {1, 1, 1}));
        ActionMap act(h, v, {Automorphism::from_matrix(v, comp)});
        Group s = semidirect_product(v, h, act);
        REQUIRE(s.order() == 75);
        check_axioms(s, 7);
    }
    SECTION("C_2^3 x| C_7 via a Singer generator is Frobenius-sized") {
        Group s = singer_frobenius(7);
        REQUIRE(s.order() == 56);
    }
    SECTION("invalid actions are rejected") {
        Group v = elementary_abelian(5, 2);
        Group h = cyclic(3);
        const FieldCtx& F5 = make_field(5, 1);
        // order-2 matrix cannot be an image of an order-3 generator
        Element flip = Element::make_mat(F5, 2, {0, 1, 1, 0});
        REQUIRE_THROWS_AS(ActionMap(h, v, {Automorphism::from_matrix(v, flip)}),
                          InvalidArgument);
        // singular matrix is not an automorphism
        Element sing = Element::make_mat(F5, 2, {1, 2, 2, 4});
        REQUIRE_THROWS_AS(Automorphism::from_matrix(v, sing), InvalidArgument);
    }
}

TEST_CASE("wreath products") {
    SECTION("A wr (trivial on 1 point) is A") {
        Group w = wreath_product(cyclic(4), cyclic_perm(1));
        REQUIRE(w.order() == 4);
    }
    SECTION("C_3 wr C_3 has order 81 and contains base and top copies") {
        Group w = wreath_product(cyclic(3), cyclic_perm(3));
        REQUIRE(w.order() == 81);
        check_axioms(w, 3);
        // base copy: (a, id, id; e), top copy: (0,0,0; h)
        const auto& gens = w.generators();
        for (const Element& g : gens) REQUIRE(w.contains(g));
        // A^n subgroup
        std::vector<Element> base(gens.begin(), gens.begin() + 3);
        REQUIRE(generated_subgroup(w, base).order() == 27);
    }
    SECTION("Q8 wr C2 has order 128") {
        REQUIRE(wreath_product(quaternion(8), cyclic_perm(2)).order() == 128);
    }
}

TEST_CASE("central products") {
    SECTION("C4 o C4 over the shared C2 has order 8") {
        REQUIRE(central_product_canonical(cyclic(4), cyclic(4), 2).order() == 8);
    }
    SECTION("D8 o C4 over the shared C2 has order 16") {
        REQUIRE(central_product_canonical(dihedral(8), cyclic(4), 2).order() == 16);
    }
    SECTION("identifying the trivial subgroup gives the direct product") {
        Group c = central_product_canonical(cyclic(4), cyclic(6), 1);
        REQUIRE(c.order() == 24);
    }
}

TEST_CASE("quotient groups") {
    Group g = dihedral(8);
    SECTION("G/G is trivial") {
        REQUIRE(quotient_group(g, whole_subgroup(g)).order() == 1);
    }
    SECTION("|G/N| * |N| = |G| and the quotient is a verified hom image") {
        Subgroup z = generated_subgroup(g, {g.pow(g.generators()[0], 2)});  // center of D8
        REQUIRE(z.order() == 2);
        Group q = quotient_group(g, z);
        REQUIRE(q.order() == 4);
    }
    SECTION("non-normal subgroups are rejected") {
        Group s4 = symmetric(4);
        Subgroup h = generated_subgroup(s4, {perm_from_cycles(4, {{1, 2}})});
        REQUIRE_THROWS_AS(quotient_group(s4, h), InvalidArgument);
    }
    SECTION("winter quotient by the module is C_3") {
        Group w = regular_module_extension(cyclic(3), 5);
        // V = the elementary abelian 5^3 part, generated by the first 3 generators
        std::vector<Element> vgens(w.generators().begin(), w.generators().begin() + 3);
        Subgroup v = generated_subgroup(w, vgens);
        REQUIRE(v.order() == 125);
        Group q = quotient_group(w, v);
        REQUIRE(q.order() == 3);
        REQUIRE(q.element_order(q.generators()[0]) <= 3);
    }
}

TEST_CASE("projective canonicalization") {
    Group psl = classical(ClassicalFamily::PSL, 2, 5);
    REQUIRE(psl.order() == 60);
    auto* law = dynamic_cast<const MatLaw*>(&psl.law());
    REQUIRE(law != nullptr);
    REQUIRE(law->scalars().size() == 2);  // +-1
    const FieldCtx& F = make_field(5, 1);
    SECTION("identity and -identity collapse") {
        Element id = mat_identity(F, 2);
        Element mid = Element::make_mat(F, 2, {4, 0, 0, 4});
        REQUIRE(law->canonicalize(id) == law->canonicalize(mid));
    }
    SECTION("canonicalization is idempotent and multiplication-compatible") {
        const ElementTable& tab = psl.elements();
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<uint32_t> pick(0, uint32_t(tab.size() - 1));
        for (int t = 0; t < 80; ++t) {
            const Element& a = tab.elems[pick(rng)];
            const Element& b = tab.elems[pick(rng)];
            REQUIRE(law->canonicalize(a) == a);
            Element raw = mat_multiply(a, b);
            REQUIRE(law->canonicalize(raw) == psl.mul(a, b));
        }
    }
    SECTION("SU(3,3) has a trivial scalar set (gcd(3,q+1) = 1)") {
        Group psu = classical(ClassicalFamily::PSU, 3, 3);
        auto* ulaw = dynamic_cast<const MatLaw*>(&psu.law());
        REQUIRE(ulaw->scalars().size() == 1);
    }
}

TEST_CASE("normal closures") {
    SECTION("identity closes to the trivial subgroup") {
        Group g = symmetric(4);
        REQUIRE(normal_closure(g, {g.id()}).order() == 1);
    }
    SECTION("one reflection in D8 closes to a subgroup of order 4") {
        Group d = dihedral(8);
        Element refl = d.generators()[1];
        REQUIRE(normal_closure(d, {refl}).order() == 4);
    }
    SECTION("a 3-cycle in A4 closes to the whole group") {
        Group a4 = alternating(4);
        Element c = perm_from_cycles(4, {{1, 2, 3}});
        REQUIRE(normal_closure(a4, {c}).order() == 12);
    }
}

TEST_CASE("permutation parsing and printing") {
    Element p = perm_from_cycles(5, {{1, 2, 3}, {4, 5}});
    REQUIRE(p.str() == "(1 2 3)(4 5)");
    REQUIRE(perm_identity(4).str() == "()");
    REQUIRE_THROWS_AS(perm_from_cycles(3, {{1, 4}}), InvalidArgument);
    REQUIRE_THROWS_AS(perm_from_cycles(3, {{1, 2}, {2, 3}}), InvalidArgument);
}
