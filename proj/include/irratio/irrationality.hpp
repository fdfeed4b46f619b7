#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "irratio/analysis.hpp"

namespace irratio {

/// The power-conjugacy orbit of x: B = {k in (Z/n)^x : x^k is conjugate to x}.
/// [Q(x):Q] = phi(n)/|B|, so B = {1} exactly when the field of values of x is
/// the full cyclotomic field of its order.
struct PowerOrbit {
    Element x;
    uint64_t n = 1;
    std::vector<uint32_t> B;
    uint64_t field_degree = 1;
};

/// A counterexample to (pi-)irrationality: g x g^-1 = x^k with k != 1 mod |x|.
struct Witness {
    Element x;
    uint64_t k = 0;
    Element g;
};

inline void verify_witness(const Group& G, const Witness& w) {
    uint64_t n = G.element_order(w.x);
    if (w.k % n == 1 % n || std::gcd(w.k, n) != uint64_t(1))
        throw Error("witness power is not a distinct unit");
    if (G.conj(w.g, w.x) != G.pow(w.x, int64_t(w.k)))
        throw Error("witness conjugation identity failed");
}

inline PowerOrbit power_orbit(const Group& G, const Element& x) {
    const ConjClasses& cc = conjugacy_classes(G);
    PowerOrbit out;
    out.x = x;
    out.n = G.element_order(x);
    uint32_t n = uint32_t(out.n);
    uint32_t xi = G.index_of(x);
    uint32_t cls = cc.class_of[xi];
    if (n == 1) {
        out.B = {0};  // units mod 1
        out.field_degree = 1;
        return out;
    }
    if (cc.sizes[cls] == 1) {
        out.B = {1};  // central elements meet no distinct power
        out.field_degree = euler_phi(n);
        return out;
    }
    Element acc = x;
    out.B.push_back(1);
    for (uint32_t j = 2; j < n; ++j) {
        acc = G.mul(acc, x);
        if (std::gcd(j, n) != 1u) continue;
        if (cc.class_of[G.index_of(acc)] == cls) out.B.push_back(j);
    }
    // B must be a subgroup of the unit group.
    for (uint32_t a : out.B)
        for (uint32_t b : out.B) {
            uint32_t ab = uint32_t(uint64_t(a) * b % n);
            if (!std::binary_search(out.B.begin(), out.B.end(), ab))
                throw Error("power orbit is not closed under multiplication");  // unreachable
        }
    out.field_degree = euler_phi(n) / out.B.size();
    return out;
}

struct PiDecision {
    bool irrational = true;
    std::optional<Witness> witness;
};

/// pi-irrationality: every class representative whose order is a pi-number
/// meets no distinct power of itself. On failure the witness conjugator is
/// reconstructed from the class BFS parent chain.
inline PiDecision is_pi_irrational(const Group& G, const std::vector<uint32_t>& pi) {
    if (pi.empty()) throw InvalidArgument("pi must be a nonempty set of primes");
    for (uint32_t p : pi)
        if (!is_prime(p)) throw InvalidArgument("pi must consist of primes");
    const ConjClasses& cc = conjugacy_classes(G);
    PiDecision out;
    for (uint32_t cls = 0; cls < cc.count(); ++cls) {
        uint32_t ri = cc.reps[cls];
        const Element& x = G.element(ri);
        uint64_t n = G.element_order(x);
        if (n <= 2) continue;  // Aut(C_1), Aut(C_2) are trivial
        if (cc.sizes[cls] == 1) continue;  // central
        bool pi_number = true;
        for (uint64_t p : prime_divisors(n))
            if (std::find(pi.begin(), pi.end(), uint32_t(p)) == pi.end()) pi_number = false;
        if (!pi_number) continue;
        Element acc = x;
        for (uint32_t j = 2; j < n; ++j) {
            acc = G.mul(acc, x);
            if (std::gcd<uint64_t>(j, n) != 1) continue;
            uint32_t ai = G.index_of(acc);
            if (cc.class_of[ai] == cls) {
                Witness w;
                w.x = x;
                w.k = j;
                w.g = conjugator(G, cc, ri, ai);
                verify_witness(G, w);
                out.irrational = false;
                out.witness = w;
                return out;
            }
        }
    }
    return out;
}

inline std::vector<uint32_t> primes_of_order(const Group& G) {
    std::vector<uint32_t> pi;
    for (uint64_t p : prime_divisors(G.order())) pi.push_back(uint32_t(p));
    return pi;
}

inline PiDecision is_irrational(const Group& G) {
    if (G.order() == 1) return {};
    return is_pi_irrational(G, primes_of_order(G));
}

/// Independent oracle for the power-orbit criterion: C_G(x) = N_G(<x>) read
/// off a single scan. Agrees with (B = {1}) by the Aut(<x>)-embedding.
inline bool crosscheck_nc(const Group& G, const Element& x) {
    const ElementTable& tab = G.elements();
    std::vector<bool> in_cyc(tab.size(), false);
    for (uint32_t i : cyclic_power_indices(G, x)) in_cyc[i] = true;
    uint32_t xi = G.index_of(x);
    for (uint32_t i = 0; i < tab.size(); ++i) {
        Element y = G.conj(tab.elems[i], x);
        uint32_t yi = G.index_of(y);
        if (in_cyc[yi] && yi != xi) return false;  // normalizes but does not centralize
    }
    return true;
}

struct ReportRow {
    Element rep;
    uint64_t order = 1;
    uint64_t class_size = 1;
    std::vector<uint32_t> B;
    uint64_t field_degree = 1;
    bool real = false;
};

struct IrrationalityReport {
    std::vector<ReportRow> rows;
    std::vector<std::pair<uint32_t, bool>> prime_verdicts;  // p -> p-irrational
    bool irrational = true;
    std::optional<Witness> witness;
};

inline IrrationalityReport irrationality_report(const Group& G) {
    const ConjClasses& cc = conjugacy_classes(G);
    IrrationalityReport rep;
    for (uint32_t cls = 0; cls < cc.count(); ++cls) {
        const Element& x = G.element(cc.reps[cls]);
        PowerOrbit po = power_orbit(G, x);
        ReportRow row;
        row.rep = x;
        row.order = po.n;
        row.class_size = cc.sizes[cls];
        row.B = po.B;
        row.field_degree = po.field_degree;
        row.real = is_real(G, x);
        rep.rows.push_back(std::move(row));
    }
    for (uint32_t p : primes_of_order(G)) {
        bool ok = true;
        for (const ReportRow& row : rep.rows) {
            if (row.order == 1) continue;
            auto rp = prime_divisors(row.order);
            if (rp.size() == 1 && rp[0] == p && (row.B.size() != 1 || row.B[0] != 1)) ok = false;
        }
        rep.prime_verdicts.emplace_back(p, ok);
    }
    PiDecision d = is_irrational(G);
    rep.irrational = d.irrational;
    rep.witness = d.witness;
    return rep;
}

}  // namespace irratio
