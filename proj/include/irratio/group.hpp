#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "irratio/laws.hpp"

namespace irratio {

inline constexpr uint64_t kDefaultBudget = 500000;

/// BFS-ordered element set with an index for O(1) membership.
struct ElementTable {
    std::deque<Element> elems;
    std::unordered_map<const Element*, uint32_t, ElementPtrHash, ElementPtrEq> index;
    uint32_t identity = 0;

    uint64_t size() const { return elems.size(); }

    int64_t find(const Element& e) const {
        auto it = index.find(&e);
        return it == index.end() ? -1 : int64_t(it->second);
    }
    bool contains(const Element& e) const { return find(e) >= 0; }

    /// Inserts if absent; returns (index, inserted).
    std::pair<uint32_t, bool> insert(Element e) {
        auto it = index.find(&e);
        if (it != index.end()) return {it->second, false};
        elems.push_back(std::move(e));
        uint32_t idx = uint32_t(elems.size() - 1);
        index.emplace(&elems.back(), idx);
        return {idx, true};
    }
};

namespace detail {

struct GroupImpl {
    LawPtr law;
    std::vector<Element> generators;
    std::string spec;
    uint64_t budget = kDefaultBudget;

    mutable std::mutex mu;
    mutable std::shared_ptr<const ElementTable> table;
    mutable std::shared_ptr<const void> classes;      // ConjClasses, owned by analysis
    mutable std::shared_ptr<const std::vector<Element>> small_gens;
};

}  // namespace detail

class Subgroup;

/// A finite group: generator list over a multiplication law, with lazily
/// cached enumeration and conjugacy data. Copies share the caches.
class Group {
public:
    Group() = default;
    Group(LawPtr law, std::vector<Element> generators, std::string spec,
          uint64_t budget = kDefaultBudget)
        : impl_(std::make_shared<detail::GroupImpl>()) {
        if (!law) throw InvalidArgument("null group law");
        impl_->law = std::move(law);
        impl_->spec = std::move(spec);
        impl_->budget = budget;
        if (generators.empty()) generators.push_back(impl_->law->identity());
        for (const Element& g : generators) impl_->law->check_element(g);
        impl_->generators = std::move(generators);
    }

    bool valid() const { return impl_ != nullptr; }
    const GroupLaw& law() const { return *impl_->law; }
    LawPtr law_ptr() const { return impl_->law; }
    const std::vector<Element>& generators() const { return impl_->generators; }
    const std::string& spec() const { return impl_->spec; }
    uint64_t budget() const { return impl_->budget; }

    /// Same presentation under a different enumeration budget (fresh caches).
    Group with_budget(uint64_t budget) const {
        Group g(impl_->law, impl_->generators, impl_->spec, budget);
        return g;
    }

    Element id() const { return impl_->law->identity(); }
    Element mul(const Element& a, const Element& b) const { return impl_->law->multiply(a, b); }
    Element inv(const Element& a) const { return impl_->law->inverse(a); }
    /// g x g^-1.
    Element conj(const Element& g, const Element& x) const {
        return mul(mul(g, x), inv(g));
    }
    /// [a,b] = a^-1 b^-1 a b.
    Element commutator(const Element& a, const Element& b) const {
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }

    Element pow(const Element& x, int64_t e) const {
        Element base = e < 0 ? inv(x) : x;
        uint64_t n = e < 0 ? uint64_t(-e) : uint64_t(e);
        Element acc = id();
        while (n) {
            if (n & 1) acc = mul(acc, base);
            base = mul(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// Full element set by breadth-first closure of the generators. Throws
    /// BudgetExceeded if the group is larger than the budget.
    const ElementTable& elements() const {
        {
            std::lock_guard<std::mutex> lock(impl_->mu);
            if (impl_->table) return *impl_->table;
        }
        auto table = enumerate_closure(impl_->generators, impl_->budget);
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (!impl_->table) impl_->table = std::move(table);
        return *impl_->table;
    }

    uint64_t order() const { return elements().size(); }
    bool enumerated() const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        return impl_->table != nullptr;
    }

    bool contains(const Element& e) const { return elements().contains(e); }
    uint32_t index_of(const Element& e) const {
        int64_t i = elements().find(e);
        if (i < 0) throw InvalidArgument("element not in group " + spec());
        return uint32_t(i);
    }
    const Element& element(uint32_t idx) const { return elements().elems[idx]; }

    /// Least n >= 1 with x^n = id; uses the divisors of |G| once enumerated.
    uint64_t element_order(const Element& x) const {
        if (enumerated()) {
            for (uint64_t d : divisors(order()))
                if (pow(x, int64_t(d)) == id()) return d;
            throw InvalidArgument("element order does not divide group order");
        }
        Element acc = x;
        for (uint64_t n = 1; n <= impl_->budget; ++n) {
            if (acc == id()) return n;
            acc = mul(acc, x);
        }
        throw BudgetExceeded("element order exceeds budget");
    }

    /// A short generating list found greedily over the BFS order; used to keep
    /// conjugation scans cheap. Cached.
    const std::vector<Element>& small_generating_set() const;

    // Cache plumbing shared with the analysis layer.
    std::shared_ptr<const void> cached_classes() const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        return impl_->classes;
    }
    void store_classes(std::shared_ptr<const void> c) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (!impl_->classes) impl_->classes = std::move(c);
    }

    friend bool same_group(const Group& a, const Group& b) { return a.impl_ == b.impl_; }

    /// Group with a pre-computed element table (used for subgroups).
    static Group with_table(LawPtr law, std::vector<Element> generators, std::string spec,
                            uint64_t budget, std::shared_ptr<const ElementTable> table) {
        Group g(std::move(law), std::move(generators), std::move(spec), budget);
        g.impl_->table = std::move(table);
        return g;
    }

private:
    std::shared_ptr<const ElementTable> enumerate_closure(const std::vector<Element>& gens,
                                                          uint64_t budget) const {
        auto table = std::make_shared<ElementTable>();
        table->insert(impl_->law->identity());
        table->identity = 0;
        for (size_t i = 0; i < table->elems.size(); ++i) {
            for (const Element& g : gens) {
                Element y = impl_->law->multiply(table->elems[i], g);
                auto [idx, inserted] = table->insert(std::move(y));
                (void)idx;
                if (inserted && table->elems.size() > budget)
                    throw BudgetExceeded("group " + impl_->spec + " exceeds element budget " +
                                         std::to_string(budget));
            }
        }
        return table;
    }

    std::shared_ptr<detail::GroupImpl> impl_;
};

/// Subset of a parent group, closed under the law, with a generator certificate.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(Group parent, std::vector<uint32_t> sorted_indices, std::vector<Element> generators)
        : parent_(std::move(parent)),
          indices_(std::move(sorted_indices)),
          generators_(std::move(generators)) {
        member_.assign(parent_.order(), false);
        for (uint32_t i : indices_) member_[i] = true;
    }

    const Group& parent() const { return parent_; }
    uint64_t order() const { return indices_.size(); }
    const std::vector<uint32_t>& indices() const { return indices_; }
    const std::vector<Element>& generators() const { return generators_; }

    bool contains_index(uint32_t idx) const { return idx < member_.size() && member_[idx]; }
    bool contains(const Element& e) const {
        int64_t i = parent_.elements().find(e);
        return i >= 0 && member_[size_t(i)];
    }
    const Element& element(size_t i) const { return parent_.element(indices_[i]); }

    bool is_trivial() const { return order() == 1; }
    bool is_whole_parent() const { return order() == parent_.order(); }

    /// All conjugates of the subgroup's generators by `g` stay inside.
    bool conjugate_stays_inside(const Element& g) const {
        for (const Element& s : generators_)
            if (!contains(parent_.conj(g, s))) return false;
        return true;
    }

    /// Normality in the parent: every generator of G conjugates every element
    /// of the subgroup back into it.
    bool is_normal() const {
        for (const Element& g : parent_.generators())
            for (uint32_t i : indices_)
                if (!contains(parent_.conj(g, parent_.element(i)))) return false;
        return true;
    }

    /// View as a standalone group sharing the parent's law; the element table
    /// is pre-filled so no re-enumeration happens.
    Group as_group(std::string spec) const {
        auto table = std::make_shared<ElementTable>();
        for (uint32_t i : indices_) table->insert(parent_.element(i));
        int64_t idp = table->find(parent_.id());
        if (idp < 0) throw InvalidArgument("subgroup misses the identity");
        table->identity = uint32_t(idp);
        std::vector<Element> gens = generators_;
        if (gens.empty()) gens.push_back(parent_.id());
        return Group::with_table(parent_.law_ptr(), std::move(gens), std::move(spec),
                                 parent_.budget(), std::move(table));
    }

private:
    Group parent_;
    std::vector<uint32_t> indices_;
    std::vector<bool> member_;
    std::vector<Element> generators_;
};

namespace detail {

/// Closure of `gens` inside the enumerated parent, as sorted parent indices.
inline std::vector<uint32_t> closure_indices(const Group& G, const std::vector<Element>& gens) {
    const ElementTable& tab = G.elements();
    std::vector<uint32_t> gen_idx;
    gen_idx.reserve(gens.size());
    for (const Element& g : gens) gen_idx.push_back(G.index_of(g));
    std::vector<bool> seen(tab.size(), false);
    std::vector<uint32_t> bfs{tab.identity};
    seen[tab.identity] = true;
    for (size_t i = 0; i < bfs.size(); ++i) {
        for (uint32_t gi : gen_idx) {
            Element y = G.mul(tab.elems[bfs[i]], tab.elems[gi]);
            uint32_t yi = G.index_of(y);
            if (!seen[yi]) {
                seen[yi] = true;
                bfs.push_back(yi);
            }
        }
    }
    std::sort(bfs.begin(), bfs.end());
    return bfs;
}

}  // namespace detail

/// Subgroup generated by S (elements of G); certificate = S.
inline Subgroup generated_subgroup(const Group& G, const std::vector<Element>& S) {
    for (const Element& s : S) G.law().check_element(s);
    std::vector<Element> gens = S;
    if (gens.empty()) gens.push_back(G.id());
    std::vector<uint32_t> closed = detail::closure_indices(G, gens);
    return Subgroup(G, std::move(closed), std::move(gens));
}

/// Certifies that a set of parent indices forms a subgroup by greedily growing
/// a generator list whose closure reproduces the set exactly. Returns nullopt
/// if the set is not closed.
inline std::optional<Subgroup> try_subgroup_from_indices(const Group& G,
                                                         std::vector<uint32_t> sorted) {
    const ElementTable& tab = G.elements();
    std::vector<bool> target(tab.size(), false);
    for (uint32_t i : sorted) target[i] = true;
    if (sorted.empty() || !target[tab.identity]) return std::nullopt;

    std::vector<Element> cert;
    std::vector<uint32_t> closed;
    for (;;) {
        closed = detail::closure_indices(G, cert);
        for (uint32_t i : closed)
            if (!target[i]) return std::nullopt;  // closure escaped the set
        if (closed.size() == sorted.size()) break;
        std::vector<bool> have(tab.size(), false);
        for (uint32_t i : closed) have[i] = true;
        uint32_t pick = UINT32_MAX;
        for (uint32_t i : sorted)
            if (!have[i]) { pick = i; break; }
        if (pick == UINT32_MAX) return std::nullopt;
        cert.push_back(tab.elems[pick]);
    }
    return Subgroup(G, std::move(closed), std::move(cert));
}

inline Subgroup subgroup_from_indices(const Group& G, std::vector<uint32_t> sorted,
                                      const std::string& what) {
    auto sg = try_subgroup_from_indices(G, std::move(sorted));
    if (!sg) throw InvalidArgument(what + ": element set is not a subgroup");
    return *sg;
}

inline Subgroup trivial_subgroup(const Group& G) {
    return Subgroup(G, {G.elements().identity}, {G.id()});
}

inline Subgroup whole_subgroup(const Group& G) {
    std::vector<uint32_t> all(G.order());
    for (uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subgroup(G, std::move(all), G.generators());
}

/// Smallest normal subgroup of G containing S.
inline Subgroup normal_closure(const Group& G, const std::vector<Element>& S) {
    std::vector<Element> gens = S;
    const std::vector<Element>& ggens = G.generators();
    for (;;) {
        std::vector<uint32_t> closed = detail::closure_indices(G, gens);
        if (closed.size() > G.order() / 2 && closed.size() < G.order())
            // A proper subgroup has index >= 2; passing half forces the whole group.
            return whole_subgroup(G);
        std::vector<bool> member(G.order(), false);
        for (uint32_t j : closed) member[j] = true;
        bool stable = true;
        for (uint32_t i : closed) {
            if (!stable) break;
            for (const Element& g : ggens) {
                Element c = G.conj(g, G.element(i));
                if (!member[G.index_of(c)]) {
                    gens.push_back(c);
                    stable = false;
                    break;
                }
            }
        }
        if (stable) return Subgroup(G, std::move(closed), std::move(gens));
    }
}

inline const std::vector<Element>& Group::small_generating_set() const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->small_gens) return *impl_->small_gens;
    }
    const ElementTable& tab = elements();
    auto gens = std::make_shared<std::vector<Element>>();
    std::vector<uint32_t> closed = detail::closure_indices(*this, *gens);
    while (closed.size() < tab.size()) {
        std::vector<bool> have(tab.size(), false);
        for (uint32_t i : closed) have[i] = true;
        for (uint32_t i = 0; i < tab.size(); ++i) {
            if (!have[i]) {
                gens->push_back(tab.elems[i]);
                break;
            }
        }
        closed = detail::closure_indices(*this, *gens);
    }
    if (gens->empty()) gens->push_back(id());
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->small_gens) impl_->small_gens = std::move(gens);
    return *impl_->small_gens;
}

}  // namespace irratio
