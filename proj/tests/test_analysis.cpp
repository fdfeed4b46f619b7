#include <catch_amalgamated.hpp>

#include "irratio/analysis.hpp"
#include "irratio/constructions.hpp"

using namespace irratio;

TEST_CASE("conjugacy classes") {
    SECTION("abelian groups have singleton classes") {
        Group g = abelian({4, 3});
        const ConjClasses& cc = conjugacy_classes(g);
        REQUIRE(cc.count() == 12);
        for (uint64_t s : cc.sizes) REQUIRE(s == 1);
    }
    SECTION("symmetric(4) has 5 classes partitioning the group") {
        Group g = symmetric(4);
        const ConjClasses& cc = conjugacy_classes(g);
        REQUIRE(cc.count() == 5);
        uint64_t total = 0;
        for (uint64_t s : cc.sizes) total += s;
        REQUIRE(total == 24);
        // class of the identity is a singleton
        REQUIRE(cc.sizes[cc.class_of[g.elements().identity]] == 1);
        // sizes divide the group order
        for (uint64_t s : cc.sizes) REQUIRE(24 % s == 0);
    }
    SECTION("Sz(8) has 11 classes") {
        Group g = suzuki(8, 40000);
        REQUIRE(conjugacy_classes(g).count() == 11);
    }
    SECTION("conjugator reconstruction is sound on every class") {
        Group g = symmetric(4);
        const ConjClasses& cc = conjugacy_classes(g);
        const ElementTable& tab = g.elements();
        for (uint32_t i = 0; i < tab.size(); ++i) {
            uint32_t r = cc.reps[cc.class_of[i]];
            Element w = conjugator(g, cc, r, i);
            REQUIRE(g.conj(w, tab.elems[r]) == tab.elems[i]);
        }
    }
}

TEST_CASE("centralizers and cyclic normalizers") {
    SECTION("the identity centralizes everything") {
        Group g = symmetric(4);
        REQUIRE(centralizer(g, g.id()).order() == 24);
    }
    SECTION("order-4 rotation in D8 has centralizer C4, normalizer D8") {
        Group d = dihedral(8);
        Element r = d.generators()[0];
        REQUIRE(d.element_order(r) == 4);
        REQUIRE(centralizer(d, r).order() == 4);
        REQUIRE(normalizer_cyclic(d, r).order() == 8);
    }
    SECTION("in Q8 the centralizer of i is <i>") {
        Group q = quaternion(8);
        Element i = q.generators()[0];
        REQUIRE(q.element_order(i) == 4);
        REQUIRE(centralizer(q, i).order() == 4);
    }
    SECTION("involutions: normalizer equals centralizer") {
        Group g = symmetric(4);
        Element t = perm_from_cycles(4, {{1, 2}});
        REQUIRE(centralizer(g, t).indices() == normalizer_cyclic(g, t).indices());
    }
    SECTION("orbit-stabilizer on every class of several groups") {
        for (Group g : {symmetric(4), dihedral(16), minimal_nonabelian_qp(5, 3, 1),
                        classical(ClassicalFamily::PSL, 2, 7)}) {
            const ConjClasses& cc = conjugacy_classes(g);
            for (uint32_t c = 0; c < cc.count(); ++c) {
                Subgroup z = centralizer(g, g.element(cc.reps[c]));
                REQUIRE(z.order() * cc.sizes[c] == g.order());
                // centralizer is contained in the cyclic normalizer
                Subgroup n = normalizer_cyclic(g, g.element(cc.reps[c]));
                for (uint32_t i : z.indices()) REQUIRE(n.contains_index(i));
                uint64_t ord = g.element_order(g.element(cc.reps[c]));
                REQUIRE(euler_phi(ord) % (n.order() / z.order()) == 0);
            }
        }
    }
}

TEST_CASE("sylow subgroups") {
    SECTION("PSL(2,13) has elementary abelian Sylow 2 of order 4") {
        Group g = classical(ClassicalFamily::PSL, 2, 13);
        Subgroup p = sylow(g, 2);
        REQUIRE(p.order() == 4);
        Group P = p.as_group("syl2");
        for (const Element& x : P.elements().elems) REQUIRE(P.mul(x, x) == P.id());
    }
    SECTION("Sz(8) has Sylow 2 of order 64") {
        Group g = suzuki(8, 40000);
        REQUIRE(sylow(g, 2).order() == 64);
    }
    SECTION("A6 has dihedral Sylow 2 of order 8") {
        Group g = alternating(6);
        Subgroup p = sylow(g, 2);
        REQUIRE(p.order() == 8);
        Group P = p.as_group("syl2(a6)");
        REQUIRE_FALSE(is_abelian(P));
        REQUIRE(exponent(P) == 4);
        REQUIRE(count_involutions(P) == 5);  // dihedral, not quaternion
    }
    SECTION("p not dividing the order gives the trivial subgroup") {
        REQUIRE(sylow(symmetric(4), 7).order() == 1);
    }
    SECTION("sylow order is the exact p-part") {
        for (Group g : {symmetric(4), alternating(5), singer_frobenius(9)}) {
            for (uint64_t p : prime_divisors(g.order()))
                REQUIRE(sylow(g, uint32_t(p)).order() == p_part(g.order(), uint32_t(p)));
        }
    }
    SECTION("conjugates of a Sylow subgroup are Sylow subgroups") {
        Group g = symmetric(4);
        Subgroup p = sylow(g, 2);
        Element t = perm_from_cycles(4, {{1, 2, 3}});
        std::vector<Element> conj_gens;
        for (const Element& s : p.generators()) conj_gens.push_back(g.conj(t, s));
        REQUIRE(generated_subgroup(g, conj_gens).order() == 8);
    }
}

TEST_CASE("p-cores") {
    SECTION("a p-group is its own p-core") {
        Group d = dihedral(8);
        REQUIRE(p_core(d, 2).order() == 8);
    }
    SECTION("O_5(C_5^3 x| C_3) = C_5^3") {
        Group g = regular_module_extension(cyclic(3), 5);
        Subgroup o5 = p_core(g, 5);
        REQUIRE(o5.order() == 125);
        REQUIRE(o5.is_normal());
        REQUIRE(p_core(g, 3).order() == 1);
    }
    SECTION("O_2(S4) is the Klein four group") {
        Group g = symmetric(4);
        Subgroup o2 = p_core(g, 2);
        REQUIRE(o2.order() == 4);
        REQUIRE(o2.is_normal());
        Group v = o2.as_group("o2(s4)");
        for (const Element& x : v.elements().elems) REQUIRE(v.mul(x, x) == v.id());
    }
    SECTION("the p-core is contained in the located Sylow subgroup") {
        Group g = symmetric(4);
        Subgroup p = sylow(g, 2), o = p_core(g, 2);
        for (uint32_t i : o.indices()) REQUIRE(p.contains_index(i));
    }
}

TEST_CASE("center, derived series, solvability") {
    SECTION("center of extraspecial(5,1) has order 5") {
        REQUIRE(center(extraspecial_group(5, 1)).order() == 5);
    }
    SECTION("PSL(2,7) is not solvable (derived series stabilizes at the top)") {
        REQUIRE_FALSE(is_solvable(classical(ClassicalFamily::PSL, 2, 7)));
        REQUIRE_THROWS_AS(derived_length(classical(ClassicalFamily::PSL, 2, 7)), InvalidArgument);
    }
    SECTION("derived length of C_5^3 x| C_3 is 2") {
        REQUIRE(derived_length(regular_module_extension(cyclic(3), 5)) == 2);
    }
    SECTION("derived subgroup of S4 is A4") {
        REQUIRE(derived_subgroup(symmetric(4)).order() == 12);
    }
}

TEST_CASE("fitting subgroup and fitting length") {
    SECTION("nilpotent groups have F(G) = G and length 1") {
        Group d = dihedral(8);
        REQUIRE(fitting_subgroup(d).order() == 8);
        REQUIRE(fitting_length(d) == 1);
    }
    SECTION("F(C_5^3 x| C_3) = C_5^3 and the length is 2") {
        Group g = regular_module_extension(cyclic(3), 5);
        REQUIRE(fitting_subgroup(g).order() == 125);
        REQUIRE(fitting_length(g) == 2);
    }
    SECTION("fitting_length rejects non-solvable input") {
        REQUIRE_THROWS_AS(fitting_length(alternating(5)), InvalidArgument);
    }
}

TEST_CASE("nilpotency, exponent, abelianness") {
    REQUIRE(is_nilpotent(dihedral(8)));
    REQUIRE_FALSE(is_abelian(dihedral(8)));
    REQUIRE_FALSE(is_nilpotent(symmetric(3)));
    REQUIRE(exponent(suzuki_2group(8)) == 4);
    REQUIRE(exponent(extraspecial_group(3, 1)) == 3);
    REQUIRE(exponent(cyclic(12)) == 12);
}

TEST_CASE("frattini subgroup, generator rank, omega") {
    SECTION("elementary abelian: Phi trivial, d = rank, Omega = P") {
        Group e = elementary_abelian(2, 4);
        REQUIRE(frattini_pgroup(e).order() == 1);
        REQUIRE(min_generators(e) == 4);
        REQUIRE(omega1(e).order() == 16);
    }
    SECTION("suzuki 2-group of order 64: |Phi| = 8, d = 3, |Omega| = 8") {
        Group p = suzuki_2group(8);
        REQUIRE(frattini_pgroup(p).order() == 8);
        REQUIRE(min_generators(p) == 3);
        REQUIRE(omega1(p).order() == 8);
        REQUIRE(center(p).order() == 8);
    }
    SECTION("D8: Phi is the order-2 center, d = 2") {
        Group d = dihedral(8);
        Subgroup phi = frattini_pgroup(d);
        REQUIRE(phi.order() == 2);
        REQUIRE(center(d).indices() == phi.indices());
        REQUIRE(min_generators(d) == 2);
    }
    SECTION("non-p-groups are rejected") {
        REQUIRE_THROWS_AS(frattini_pgroup(symmetric(3)), InvalidArgument);
    }
}

TEST_CASE("involution subgroup") {
    SECTION("odd order gives the trivial subgroup") {
        REQUIRE(involution_subgroup(minimal_nonabelian_qp(5, 3, 1)).order() == 1);
    }
    SECTION("singer_frobenius(7): C_2^3, normal, elementary abelian") {
        Group g = singer_frobenius(7);
        Subgroup j = involution_subgroup(g);
        REQUIRE(j.order() == 8);
        REQUIRE(j.is_normal());
        Group J = j.as_group("inv(sf7)");
        for (const Element& x : J.elements().elems) REQUIRE(J.mul(x, x) == J.id());
    }
    SECTION("D8 is generated by its reflections") {
        REQUIRE(involution_subgroup(dihedral(8)).order() == 8);
    }
}

TEST_CASE("frobenius recognition") {
    SECTION("singer_frobenius(5) with complement C5: kernel C_2^4") {
        Group g = singer_frobenius(5);
        Subgroup k = generated_subgroup(g, {g.generators().back()});
        REQUIRE(k.order() == 5);
        FrobeniusCheck f = is_frobenius_with_complement(g, k);
        REQUIRE(f.is_frobenius);
        REQUIRE(f.kernel.order() == 16);
        REQUIRE(f.kernel.is_normal());
    }
    SECTION("D8 with a reflection subgroup is not Frobenius") {
        Group d = dihedral(8);
        Subgroup k = generated_subgroup(d, {d.generators()[1]});
        REQUIRE(k.order() == 2);
        REQUIRE_FALSE(is_frobenius_with_complement(d, k).is_frobenius);
    }
}

TEST_CASE("real elements") {
    SECTION("involutions are real") {
        Group g = symmetric(4);
        REQUIRE(is_real(g, perm_from_cycles(4, {{1, 2}})));
    }
    SECTION("3-cycles in S4 are real") {
        REQUIRE(is_real(symmetric(4), perm_from_cycles(4, {{1, 2, 3}})));
    }
    SECTION("order-4 elements of the suzuki 2-group are not real") {
        Group p = suzuki_2group(8);
        for (const Element& x : p.elements().elems)
            if (p.element_order(x) == 4) REQUIRE_FALSE(is_real(p, x));
    }
}
