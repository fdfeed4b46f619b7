#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "irratio/constructions.hpp"

namespace irratio {

// Group-spec mini-language. Grammar sketch:
//   spec  := name "(" [args] ")"
//   args  := arg ("," arg)*
//   arg   := int | poly | perm | spec
//   poly  := term ("+" term)* "@" int          e.g.  x^2+x+1@5
//   perm  := cycle+                            e.g.  (1 2 3)(4 5)
// Names are case-insensitive and match the catalog constructor names.

struct GroupSpecNode {
    enum class Kind : uint8_t { Call, Int, Poly, Perm };
    Kind kind = Kind::Call;
    std::string name;                           // Call
    int64_t int_value = 0;                      // Int
    std::vector<uint32_t> poly;                 // Poly: coefficients, constant first
    uint32_t poly_mod = 0;                      // Poly: the prime p after '@'
    std::vector<std::vector<uint32_t>> cycles;  // Perm
    std::vector<GroupSpecNode> args;            // Call

    std::string print() const {
        switch (kind) {
            case Kind::Int: return std::to_string(int_value);
            case Kind::Poly: {
                std::string s;
                bool first = true;
                for (size_t i = poly.size(); i-- > 0;) {
                    if (poly[i] == 0) continue;
                    if (!first) s += "+";
                    first = false;
                    if (i == 0) { s += std::to_string(poly[i]); continue; }
                    if (poly[i] != 1) s += std::to_string(poly[i]) + "*";
                    s += "x";
                    if (i > 1) s += "^" + std::to_string(i);
                }
                if (first) s = "0";
                return s + "@" + std::to_string(poly_mod);
            }
            case Kind::Perm: {
                std::string s;
                for (const auto& cyc : cycles) {
                    s += "(";
                    for (size_t i = 0; i < cyc.size(); ++i)
                        s += (i ? " " : "") + std::to_string(cyc[i]);
                    s += ")";
                }
                return s.empty() ? "()" : s;
            }
            case Kind::Call: {
                std::string s = name + "(";
                for (size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].print();
                return s + ")";
            }
        }
        return "";
    }
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    GroupSpecNode parse() {
        GroupSpecNode node = parse_arg(0);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after spec");
        if (node.kind != GroupSpecNode::Kind::Call) fail("top-level spec must be a constructor call");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int64_t parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("expected an integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        std::string s = text_.substr(start, pos_ - start);
        for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
        return s;
    }

    GroupSpecNode parse_perm() {
        GroupSpecNode node;
        node.kind = GroupSpecNode::Kind::Perm;
        while (peek() == '(') {
            ++pos_;
            std::vector<uint32_t> cyc;
            while (peek() != ')') {
                int64_t v = parse_int();
                if (v < 1) fail("cycle points are 1-based");
                cyc.push_back(uint32_t(v));
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;  // allow comma or space
            }
            expect(')');
            if (!cyc.empty()) node.cycles.push_back(std::move(cyc));
        }
        return node;
    }

    // An argument starting with a digit is an integer, or a polynomial if a
    // '@' / 'x' appears in the same term chain.
    GroupSpecNode parse_poly_or_int() {
        size_t save = pos_;
        // lookahead for 'x' or '@' before the next ',' or ')' at depth 0
        size_t i = pos_;
        bool is_poly = false;
        int depth = 0;
        for (; i < text_.size(); ++i) {
            char c = text_[i];
            if (c == '(') ++depth;
            if (c == ')') { if (depth == 0) break; --depth; }
            if (c == ',' && depth == 0) break;
            if (c == 'x' || c == 'X' || c == '@') { is_poly = true; break; }
        }
        if (!is_poly) {
            GroupSpecNode node;
            node.kind = GroupSpecNode::Kind::Int;
            node.int_value = parse_int();
            return node;
        }
        pos_ = save;
        GroupSpecNode node;
        node.kind = GroupSpecNode::Kind::Poly;
        std::vector<std::pair<uint32_t, uint32_t>> terms;  // (degree, coeff)
        for (;;) {
            uint32_t coeff = 1, deg = 0;
            skip_ws();
            bool saw_coeff = false;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coeff = uint32_t(parse_int());
                saw_coeff = true;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '*') { ++pos_; skip_ws(); }
            }
            if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
                ++pos_;
                deg = 1;
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    int64_t d = parse_int();
                    if (d < 0 || d > 64) fail("polynomial degree out of range");
                    deg = uint32_t(d);
                }
            } else if (!saw_coeff) {
                fail("expected a polynomial term");
            }
            terms.emplace_back(deg, coeff);
            if (peek() == '+') { ++pos_; continue; }
            break;
        }
        expect('@');
        int64_t p = parse_int();
        if (p < 2) fail("polynomial modulus must be at least 2");
        node.poly_mod = uint32_t(p);
        uint32_t maxdeg = 0;
        for (auto [d, c] : terms) maxdeg = std::max(maxdeg, d);
        node.poly.assign(maxdeg + 1, 0);
        for (auto [d, c] : terms) node.poly[d] = (node.poly[d] + c) % node.poly_mod;
        return node;
    }

    GroupSpecNode parse_arg(uint32_t depth) {
        if (depth > 8) fail("spec nesting deeper than 8");
        char c = peek();
        if (c == '(') return parse_perm();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return parse_poly_or_int();
        if (c == 'x' || c == 'X') {
            // could be a bare polynomial like x^2+x+1@5 or a name starting with x
            size_t save = pos_;
            std::string nm = parse_name();
            if (peek() == '(') {
                GroupSpecNode node;
                node.kind = GroupSpecNode::Kind::Call;
                node.name = nm;
                parse_call_args(node, depth);
                return node;
            }
            pos_ = save;
            return parse_poly_or_int();
        }
        GroupSpecNode node;
        node.kind = GroupSpecNode::Kind::Call;
        node.name = parse_name();
        if (peek() == '(') parse_call_args(node, depth);
        else fail("constructor call needs parentheses");
        return node;
    }

    void parse_call_args(GroupSpecNode& node, uint32_t depth) {
        expect('(');
        if (peek() == ')') { ++pos_; return; }
        for (;;) {
            node.args.push_back(parse_arg(depth + 1));
            char c = peek();
            if (c == ',') { ++pos_; continue; }
            if (c == ')') { ++pos_; return; }
            fail("expected ',' or ')'");
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace detail

inline GroupSpecNode parse_group_spec(const std::string& text) {
    return detail::SpecParser(text).parse();
}

namespace detail {

inline int64_t want_int(const GroupSpecNode& n, const std::string& ctx) {
    if (n.kind != GroupSpecNode::Kind::Int) throw InvalidArgument(ctx + ": expected an integer");
    return n.int_value;
}
inline uint32_t want_uint(const GroupSpecNode& n, const std::string& ctx) {
    int64_t v = want_int(n, ctx);
    if (v < 0) throw InvalidArgument(ctx + ": expected a nonnegative integer");
    return uint32_t(v);
}
inline void want_argc(const GroupSpecNode& n, size_t lo, size_t hi) {
    if (n.args.size() < lo || n.args.size() > hi)
        throw InvalidArgument(n.name + ": wrong number of arguments");
}

}  // namespace detail

Group build_group(const GroupSpecNode& node, uint64_t budget);

namespace detail {

/// companion(poly@p) as an action-matrix literal.
inline Element build_companion(const GroupSpecNode& n) {
    want_argc(n, 1, 1);
    const GroupSpecNode& p = n.args[0];
    if (p.kind != GroupSpecNode::Kind::Poly)
        throw InvalidArgument("companion: expected a polynomial literal like x^2+x+1@5");
    auto f = factorize(p.poly_mod);
    if (f.size() != 1 || f[0].exponent != 1)
        throw InvalidArgument("companion: modulus must be prime");
    const FieldCtx& F = make_field(p.poly_mod, 1);
    std::vector<uint32_t> poly = p.poly;
    if (poly.size() < 2 || poly.back() != 1)
        throw InvalidArgument("companion: polynomial must be monic of degree >= 1");
    return Element::make_mat(F, uint32_t(poly.size() - 1), companion_matrix_codes(F, poly));
}

inline std::vector<Automorphism> build_action_images(const GroupSpecNode& action, const Group& A,
                                                     const Group& H) {
    if (action.kind == GroupSpecNode::Kind::Call && action.name == "companion") {
        if (H.generators().size() != 1)
            throw InvalidArgument("companion action needs a single-generator acting group");
        return {Automorphism::from_matrix(A, build_companion(action))};
    }
    throw InvalidArgument("unsupported action literal (use companion(poly@p))");
}

}  // namespace detail

/// Builds the group named by a parsed spec node. Constructor names mirror the
/// catalog; long aliases are accepted.
inline Group build_group(const GroupSpecNode& node, uint64_t budget = kDefaultBudget) {
    using detail::want_argc;
    using detail::want_uint;
    if (node.kind != GroupSpecNode::Kind::Call) throw InvalidArgument("expected a constructor call");
    const std::string& n = node.name;

    auto sub = [&](size_t i) { return build_group(node.args[i], budget); };

    if (n == "cyclic") { want_argc(node, 1, 1); return cyclic(want_uint(node.args[0], n), budget); }
    if (n == "abelian") {
        want_argc(node, 1, 16);
        std::vector<uint32_t> inv;
        for (const auto& a : node.args) inv.push_back(want_uint(a, n));
        return abelian(inv, budget);
    }
    if (n == "elemab" || n == "elementary_abelian") {
        want_argc(node, 2, 2);
        return elementary_abelian(want_uint(node.args[0], n), want_uint(node.args[1], n), budget);
    }
    if (n == "dihedral") { want_argc(node, 1, 1); return dihedral(want_uint(node.args[0], n), budget); }
    if (n == "quaternion") { want_argc(node, 1, 1); return quaternion(want_uint(node.args[0], n), budget); }
    if (n == "symmetric") { want_argc(node, 1, 1); return symmetric(want_uint(node.args[0], n), budget); }
    if (n == "alternating") { want_argc(node, 1, 1); return alternating(want_uint(node.args[0], n), budget); }
    if (n == "cyclic_perm") { want_argc(node, 1, 1); return cyclic_perm(want_uint(node.args[0], n), budget); }

    static const std::vector<std::pair<std::string, ClassicalFamily>> kFams = {
        {"gl", ClassicalFamily::GL},   {"sl", ClassicalFamily::SL},
        {"psl", ClassicalFamily::PSL}, {"su", ClassicalFamily::SU},
        {"psu", ClassicalFamily::PSU}, {"sp", ClassicalFamily::Sp},
        {"psp", ClassicalFamily::PSp}};
    for (const auto& [nm, fam] : kFams) {
        if (n == nm) {
            want_argc(node, 2, 2);
            return classical(fam, want_uint(node.args[0], n), want_uint(node.args[1], n), budget);
        }
    }

    if (n == "sz" || n == "suzuki") { want_argc(node, 1, 1); return suzuki(want_uint(node.args[0], n), budget); }
    if (n == "sz2" || n == "suzuki_2group") {
        want_argc(node, 1, 1);
        return suzuki_2group(want_uint(node.args[0], n), budget);
    }
    if (n == "psu3u" || n == "psu3_unipotent_even") {
        want_argc(node, 1, 1);
        return psu3_unipotent_even(want_uint(node.args[0], n), budget);
    }
    if (n == "j1") { want_argc(node, 0, 0); return j1(budget); }
    if (n == "singer_frobenius") {
        want_argc(node, 1, 1);
        return singer_frobenius(want_uint(node.args[0], n), budget);
    }
    if (n == "extraspecial") {
        want_argc(node, 2, 2);
        return extraspecial_group(want_uint(node.args[0], n), want_uint(node.args[1], n), budget);
    }
    if (n == "winter" || n == "winter_extension") {
        want_argc(node, 2, 2);
        return winter_extension(sub(0), want_uint(node.args[1], n), budget);
    }
    if (n == "minnonab_p" || n == "minimal_nonabelian_p") {
        want_argc(node, 3, 3);
        return minimal_nonabelian_p(want_uint(node.args[0], n), want_uint(node.args[1], n),
                                    want_uint(node.args[2], n), budget);
    }
    if (n == "minnonab_qp" || n == "minimal_nonabelian_qp") {
        want_argc(node, 3, 3);
        return minimal_nonabelian_qp(want_uint(node.args[0], n), want_uint(node.args[1], n),
                                     want_uint(node.args[2], n), budget);
    }
    if (n == "metacyclic") {
        want_argc(node, 3, 3);
        return metacyclic_group(want_uint(node.args[0], n), want_uint(node.args[1], n),
                                want_uint(node.args[2], n), budget);
    }
    if (n == "regmod" || n == "regular_module_extension") {
        want_argc(node, 2, 2);
        return regular_module_extension(sub(0), want_uint(node.args[1], n), budget);
    }
    if (n == "matmod" || n == "matrix_module_extension") {
        // matmod(G, p, companion(poly@p), ...): one matrix per generator of G
        want_argc(node, 3, 18);
        Group g = sub(0);
        uint32_t p = want_uint(node.args[1], n);
        std::vector<Element> mats;
        for (size_t i = 2; i < node.args.size(); ++i) {
            if (node.args[i].kind != GroupSpecNode::Kind::Call || node.args[i].name != "companion")
                throw InvalidArgument("matmod: expected companion(poly@p) literals");
            mats.push_back(detail::build_companion(node.args[i]));
        }
        return matrix_module_extension(g, p, mats, budget);
    }
    if (n == "direct" || n == "direct_product") {
        want_argc(node, 2, 2);
        return direct_product(sub(0), sub(1), node.print());
    }
    if (n == "semidirect" || n == "semidirect_product") {
        want_argc(node, 3, 3);
        Group a = sub(0), h = sub(1);
        ActionMap act(h, a, detail::build_action_images(node.args[2], a, h));
        return semidirect_product(a, h, act, node.print());
    }
    if (n == "wreath" || n == "wreath_product") {
        want_argc(node, 2, 2);
        return wreath_product(sub(0), sub(1), node.print());
    }
    if (n == "central" || n == "central_product") {
        want_argc(node, 3, 3);
        return central_product_canonical(sub(0), sub(1), want_uint(node.args[2], n), node.print());
    }
    if (n == "permgrp") {
        // permgrp(n, perm, ...)
        want_argc(node, 2, 17);
        uint32_t pts = want_uint(node.args[0], n);
        std::vector<Element> gens;
        for (size_t i = 1; i < node.args.size(); ++i) {
            if (node.args[i].kind != GroupSpecNode::Kind::Perm)
                throw InvalidArgument("permgrp: expected permutation literals");
            gens.push_back(perm_from_cycles(pts, node.args[i].cycles));
        }
        return Group(std::make_shared<PermLaw>(pts), std::move(gens), node.print(), budget);
    }
    throw InvalidArgument("unknown constructor '" + n + "'");
}

inline Group build_group(const std::string& text, uint64_t budget = kDefaultBudget) {
    return build_group(parse_group_spec(text), budget);
}

}  // namespace irratio
