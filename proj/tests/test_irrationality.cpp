#include <catch_amalgamated.hpp>

#include <random>

#include "irratio/constructions.hpp"
#include "irratio/irrationality.hpp"

using namespace irratio;

TEST_CASE("power orbits") {
    SECTION("central elements have B = {1} and full field degree") {
        Group g = cyclic(12);
        Element x = g.generators()[0];
        PowerOrbit po = power_orbit(g, x);
        REQUIRE(po.n == 12);
        REQUIRE(po.B == std::vector<uint32_t>{1});
        REQUIRE(po.field_degree == euler_phi(12));
    }
    SECTION("a 3-cycle in S3 has B = {1,2}: conjugate to its inverse") {
        Group g = symmetric(3);
        Element c = perm_from_cycles(3, {{1, 2, 3}});
        PowerOrbit po = power_orbit(g, c);
        REQUIRE(po.B == std::vector<uint32_t>{1, 2});
        REQUIRE(po.field_degree == 1);
    }
    SECTION("order-4 elements of the suzuki 2-group have B = {1}") {
        Group p = suzuki_2group(8);
        for (const Element& x : p.elements().elems) {
            if (p.element_order(x) != 4) continue;
            REQUIRE(power_orbit(p, x).B == std::vector<uint32_t>{1});
        }
    }
    SECTION("B is a subgroup: field_degree * |B| = phi(n) on all S4 classes") {
        Group g = symmetric(4);
        const ConjClasses& cc = conjugacy_classes(g);
        for (uint32_t r : cc.reps) {
            PowerOrbit po = power_orbit(g, g.element(r));
            REQUIRE(po.field_degree * po.B.size() == euler_phi(po.n));
        }
    }
}

TEST_CASE("pi-irrationality decisions") {
    SECTION("PSL(2,13) is 2-irrational") {
        REQUIRE(is_pi_irrational(classical(ClassicalFamily::PSL, 2, 13), {2}).irrational);
    }
    SECTION("PSL(2,17) is not 2-irrational, witnessed by a 2-element") {
        PiDecision d = is_pi_irrational(classical(ClassicalFamily::PSL, 2, 17), {2});
        REQUIRE_FALSE(d.irrational);
        REQUIRE(d.witness.has_value());
        Group g = classical(ClassicalFamily::PSL, 2, 17);
        uint64_t n = g.element_order(d.witness->x);
        REQUIRE((n == 4 || n == 8));
        verify_witness(g, *d.witness);
    }
    SECTION("pi not dividing the order is vacuously irrational") {
        REQUIRE(is_pi_irrational(symmetric(4), {7}).irrational);
    }
    SECTION("pi must be a set of primes") {
        REQUIRE_THROWS_AS(is_pi_irrational(symmetric(4), {}), InvalidArgument);
        REQUIRE_THROWS_AS(is_pi_irrational(symmetric(4), {4}), InvalidArgument);
    }
}

TEST_CASE("irrationality decisions") {
    SECTION("abelian groups are irrational") {
        REQUIRE(is_irrational(abelian({8, 9, 5})).irrational);
    }
    SECTION("D8 is not irrational: witness r^s = r^3") {
        Group d = dihedral(8);
        PiDecision dec = is_irrational(d);
        REQUIRE_FALSE(dec.irrational);
        REQUIRE(dec.witness.has_value());
        REQUIRE(d.element_order(dec.witness->x) == 4);
        REQUIRE(dec.witness->k == 3);
        verify_witness(d, *dec.witness);
    }
    SECTION("C_5^2 x| C_3 is irrational") {
        REQUIRE(is_irrational(minimal_nonabelian_qp(5, 3, 1)).irrational);
    }
    SECTION("C_3 wr C_3 is not irrational") {
        PiDecision dec = is_irrational(wreath_product(cyclic(3), cyclic_perm(3)));
        REQUIRE_FALSE(dec.irrational);
        verify_witness(wreath_product(cyclic(3), cyclic_perm(3)), *dec.witness);
    }
}

TEST_CASE("the N = C oracle agrees with the power-orbit criterion") {
    for (Group g : {symmetric(4), dihedral(8), quaternion(8), minimal_nonabelian_qp(5, 3, 1),
                    classical(ClassicalFamily::PSL, 2, 7), suzuki_2group(8),
                    metacyclic_group(7, 3, 2)}) {
        const ConjClasses& cc = conjugacy_classes(g);
        for (uint32_t r : cc.reps) {
            const Element& x = g.element(r);
            bool b_trivial = power_orbit(g, x).B.size() == 1;
            REQUIRE(crosscheck_nc(g, x) == b_trivial);
        }
    }
}

TEST_CASE("monotonicity: pi-irrational iff p-irrational for every p in pi") {
    for (Group g : {symmetric(4), alternating(5), singer_frobenius(7),
                    wreath_product(cyclic(3), cyclic_perm(3))}) {
        std::vector<uint32_t> pi = primes_of_order(g);
        bool whole = is_pi_irrational(g, pi).irrational;
        bool each = true;
        for (uint32_t p : pi)
            if (!is_pi_irrational(g, {p}).irrational) each = false;
        REQUIRE(whole == each);
    }
}

TEST_CASE("heredity: subgroups and direct products preserve irrationality") {
    Group g = minimal_nonabelian_qp(3, 5, 1);  // irrational, order 405
    REQUIRE(is_irrational(g).irrational);
    SECTION("sampled generated subgroups stay irrational") {
        std::mt19937_64 rng(5);
        const ElementTable& tab = g.elements();
        std::uniform_int_distribution<uint32_t> pick(0, uint32_t(tab.size() - 1));
        for (int t = 0; t < 6; ++t) {
            Subgroup h = generated_subgroup(g, {tab.elems[pick(rng)], tab.elems[pick(rng)]});
            REQUIRE(is_irrational(h.as_group("sample")).irrational);
        }
    }
    SECTION("direct products of irrational groups are irrational") {
        Group d = direct_product(minimal_nonabelian_qp(5, 3, 1), extraspecial_group(3, 1));
        REQUIRE(is_irrational(d).irrational);
    }
}

TEST_CASE("normal pi'-quotients preserve pi-irrationality") {
    // (C_5^2 x| C_3) x C_2^2 is {3,5}-irrational; the C_2^2 factor is a normal
    // {3,5}'-subgroup; the quotient must stay {3,5}-irrational.
    Group a = minimal_nonabelian_qp(5, 3, 1);
    Group g = direct_product(a, elementary_abelian(2, 2));
    std::vector<uint32_t> pi{3, 5};
    REQUIRE(is_pi_irrational(g, pi).irrational);
    std::vector<Element> ngens(g.generators().end() - 2, g.generators().end());
    Subgroup n = generated_subgroup(g, ngens);
    REQUIRE(n.order() == 4);
    REQUIRE(n.is_normal());
    Group q = quotient_group(g, n);
    REQUIRE(q.order() == 75);
    REQUIRE(is_pi_irrational(q, pi).irrational);
}

TEST_CASE("p-irrational groups have no real elements of order p (p odd)") {
    Group g = minimal_nonabelian_qp(3, 5, 1);  // 5-irrational
    REQUIRE(is_pi_irrational(g, {5}).irrational);
    for (const Element& x : g.elements().elems)
        if (g.element_order(x) == 5) REQUIRE_FALSE(is_real(g, x));
}

TEST_CASE("irrationality reports") {
    SECTION("cyclic(6): 6 rows, all B = {1}") {
        IrrationalityReport rep = irrationality_report(cyclic(6));
        REQUIRE(rep.rows.size() == 6);
        for (const auto& row : rep.rows)
            if (row.order > 1) REQUIRE(row.B == std::vector<uint32_t>{1});
        REQUIRE(rep.irrational);
    }
    SECTION("Sz(8): 2-element rows have B = {1}, some odd row does not") {
        Group g = suzuki(8, 40000);
        IrrationalityReport rep = irrationality_report(g);
        REQUIRE(rep.rows.size() == 11);
        bool odd_fused = false;
        for (const auto& row : rep.rows) {
            if (row.order == 2 || row.order == 4) REQUIRE(row.B == std::vector<uint32_t>{1});
            if (row.order % 2 == 1 && row.order > 1 && row.B.size() > 1) odd_fused = true;
        }
        REQUIRE(odd_fused);  // 2-irrational but not irrational
        for (auto [p, verdict] : rep.prime_verdicts)
            if (p == 2) REQUIRE(verdict);
        REQUIRE_FALSE(rep.irrational);
    }
    SECTION("symmetric(4): 3-cycles are real") {
        IrrationalityReport rep = irrationality_report(symmetric(4));
        for (const auto& row : rep.rows)
            if (row.order == 3) REQUIRE(row.real);
    }
}
