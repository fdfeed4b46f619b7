#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irratio/group.hpp"

namespace irratio {

// Verified automorphisms of a concrete group. Verification is eager and
// complete at construction:
//   - explicit element-permutation images are checked as bijective
//     homomorphisms over all pairs (guarded by a size cap),
//   - a matrix on an elementary abelian vector group is an automorphism
//     exactly when invertible,
//   - a matrix on a twisted vector law (Suzuki 2-group coordinates) is checked
//     against the law over all pairs,
//   - a matrix on extraspecial coordinates (acting on u, fixing the centre
//     coordinate) is an automorphism exactly when it preserves the symplectic
//     form, which is checked on basis pairs,
//   - an automorphism of a direct product applies componentwise automorphisms.

class Automorphism {
public:
    enum class Mode : uint8_t { PermImages, LinearModVec, LinearTwisted, LinearExtraspecial, Product };

    static constexpr uint64_t kPairCheckCap = 1u << 22;

    /// Explicit images over A's element indices; full pairwise verification.
    static Automorphism from_perm_images(const Group& A, std::vector<uint32_t> images) {
        const ElementTable& tab = A.elements();
        if (images.size() != tab.size()) throw InvalidArgument("image table size mismatch");
        if (tab.size() * tab.size() > kPairCheckCap)
            throw InvalidArgument("group too large for elementwise automorphism verification");
        std::vector<bool> hit(tab.size(), false);
        for (uint32_t v : images) {
            if (v >= tab.size() || hit[v]) throw InvalidArgument("automorphism images are not a bijection");
            hit[v] = true;
        }
        if (images[tab.identity] != tab.identity)
            throw InvalidArgument("automorphism must fix the identity");
        for (uint32_t i = 0; i < tab.size(); ++i) {
            for (uint32_t j = 0; j < tab.size(); ++j) {
                uint32_t ij = A.index_of(A.mul(tab.elems[i], tab.elems[j]));
                uint32_t fifj = A.index_of(A.mul(tab.elems[images[i]], tab.elems[images[j]]));
                if (images[ij] != fifj)
                    throw InvalidArgument("automorphism images do not respect multiplication");
            }
        }
        Automorphism f;
        f.mode_ = Mode::PermImages;
        f.target_ = A;
        f.images_ = std::move(images);
        return f;
    }

    /// Matrix action on a Vec-law group; dispatches on the law kind.
    static Automorphism from_matrix(const Group& A, Element mat) {
        if (mat.kind != Kind::Mat) throw InvalidArgument("matrix automorphism needs a Mat element");
        if (!mat_is_invertible(mat)) throw InvalidArgument("action matrix is singular");
        Automorphism f;
        f.target_ = A;
        f.matrix_ = std::move(mat);

        if (auto* mv = dynamic_cast<const ModVecLaw*>(&A.law())) {
            uint32_t p = 0;
            if (!mv->elementary_abelian(&p))
                throw InvalidArgument("matrix action needs an elementary abelian vector group");
            if (f.matrix_.field->q() != p || f.matrix_.dim != mv->moduli().size())
                throw InvalidArgument("action matrix shape does not match the vector group");
            f.mode_ = Mode::LinearModVec;
            return f;  // invertible linear map on F_p^d is an automorphism
        }
        if (auto* tw = dynamic_cast<const SuzukiTwistLaw*>(&A.law())) {
            if (f.matrix_.field != &tw->field() || f.matrix_.dim != 2)
                throw InvalidArgument("action matrix shape does not match the twisted pair group");
            f.mode_ = Mode::LinearTwisted;
            const ElementTable& tab = A.elements();
            if (tab.size() * tab.size() > kPairCheckCap)
                throw InvalidArgument("twisted group too large for pairwise verification");
            for (const Element& x : tab.elems)
                for (const Element& y : tab.elems)
                    if (f.apply(A.mul(x, y)) != A.mul(f.apply(x), f.apply(y)))
                        throw InvalidArgument("matrix does not respect the twisted product");
            return f;
        }
        if (auto* ex = dynamic_cast<const ExtraspecialLaw*>(&A.law())) {
            uint32_t p = ex->p(), w = ex->width();
            if (f.matrix_.field->q() != p || f.matrix_.dim != 2 * w)
                throw InvalidArgument("action matrix shape does not match the extraspecial group");
            // Automorphism (fixing the centre coordinate) iff symplectic.
            const FieldCtx& F = *f.matrix_.field;
            uint32_t d = 2 * w;
            auto form = [&](uint32_t i, uint32_t j) -> uint32_t {
                if (j == i + w && i < w) return 1;
                if (i == j + w && j < w) return F.neg(1);
                return 0;
            };
            for (uint32_t i = 0; i < d; ++i) {
                for (uint32_t j = 0; j < d; ++j) {
                    uint32_t acc = 0;  // <M e_i, M e_j>
                    for (uint32_t r = 0; r < w; ++r) {
                        uint32_t a = f.matrix_.data[r * d + i];
                        uint32_t b = f.matrix_.data[(r + w) * d + j];
                        uint32_t c = f.matrix_.data[(r + w) * d + i];
                        uint32_t e = f.matrix_.data[r * d + j];
                        acc = F.add(acc, F.sub(F.mul(a, b), F.mul(c, e)));
                    }
                    if (acc != form(i, j))
                        throw InvalidArgument("action matrix does not preserve the symplectic form");
                }
            }
            f.mode_ = Mode::LinearExtraspecial;
            return f;
        }
        throw InvalidArgument("matrix action unsupported on law " + A.law().describe());
    }

    /// Componentwise automorphism of a direct product (Tuple of two parts).
    static Automorphism product(const Group& A, Automorphism left, Automorphism right) {
        if (!dynamic_cast<const DirectLaw*>(&A.law()))
            throw InvalidArgument("product automorphism needs a direct-product group");
        Automorphism f;
        f.mode_ = Mode::Product;
        f.target_ = A;
        f.parts_.push_back(std::move(left));
        f.parts_.push_back(std::move(right));
        return f;
    }

    static Automorphism identity_like(const Automorphism& proto) {
        Automorphism f;
        f.mode_ = proto.mode_;
        f.target_ = proto.target_;
        switch (proto.mode_) {
            case Mode::PermImages: {
                f.images_.resize(proto.images_.size());
                for (uint32_t i = 0; i < f.images_.size(); ++i) f.images_[i] = i;
                break;
            }
            case Mode::LinearModVec:
            case Mode::LinearTwisted:
            case Mode::LinearExtraspecial:
                f.matrix_ = mat_identity(*proto.matrix_.field, proto.matrix_.dim);
                break;
            case Mode::Product:
                for (const auto& p : proto.parts_) f.parts_.push_back(identity_like(p));
                break;
        }
        return f;
    }

    const Group& target() const { return target_; }

    Element apply(const Element& a) const {
        switch (mode_) {
            case Mode::PermImages:
                return target_.element(images_[target_.index_of(a)]);
            case Mode::LinearModVec:
            case Mode::LinearTwisted: {
                const FieldCtx& F = *matrix_.field;
                uint32_t d = matrix_.dim;
                std::vector<uint32_t> out(d, 0);
                for (uint32_t i = 0; i < d; ++i) {
                    uint32_t acc = 0;
                    for (uint32_t j = 0; j < d; ++j)
                        acc = F.add(acc, F.mul(matrix_.data[i * d + j], a.data[j]));
                    out[i] = acc;
                }
                return Element::make_vec(std::move(out), a.law_tag);
            }
            case Mode::LinearExtraspecial: {
                const FieldCtx& F = *matrix_.field;
                uint32_t d = matrix_.dim;
                std::vector<uint32_t> out(d + 1, 0);
                for (uint32_t i = 0; i < d; ++i) {
                    uint32_t acc = 0;
                    for (uint32_t j = 0; j < d; ++j)
                        acc = F.add(acc, F.mul(matrix_.data[i * d + j], a.data[j]));
                    out[i] = acc;
                }
                out[d] = a.data[d];
                return Element::make_vec(std::move(out), a.law_tag);
            }
            case Mode::Product:
                return Element::make_tuple(
                    {parts_[0].apply(a.children[0]), parts_[1].apply(a.children[1])}, a.law_tag);
        }
        throw Error("unreachable automorphism mode");
    }

    /// this o other (apply `other` first).
    Automorphism compose(const Automorphism& other) const {
        if (mode_ != other.mode_) throw InvalidArgument("cannot compose mixed automorphism modes");
        Automorphism f;
        f.mode_ = mode_;
        f.target_ = target_;
        switch (mode_) {
            case Mode::PermImages:
                f.images_.resize(images_.size());
                for (uint32_t i = 0; i < images_.size(); ++i) f.images_[i] = images_[other.images_[i]];
                break;
            case Mode::LinearModVec:
            case Mode::LinearTwisted:
            case Mode::LinearExtraspecial:
                f.matrix_ = mat_multiply(matrix_, other.matrix_);
                break;
            case Mode::Product:
                f.parts_.push_back(parts_[0].compose(other.parts_[0]));
                f.parts_.push_back(parts_[1].compose(other.parts_[1]));
                break;
        }
        return f;
    }

    /// Two homomorphisms agreeing on generators agree everywhere.
    bool same_map_as(const Automorphism& other) const {
        for (const Element& g : target_.generators())
            if (apply(g) != other.apply(g)) return false;
        return true;
    }

    bool is_identity() const {
        for (const Element& g : target_.generators())
            if (apply(g) != g) return false;
        return true;
    }

    uint64_t content_hash() const {
        uint64_t h = uint64_t(mode_) + 0xabcd;
        auto mixv = [&h](uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        };
        switch (mode_) {
            case Mode::PermImages:
                for (uint32_t v : images_) mixv(v);
                break;
            case Mode::LinearModVec:
            case Mode::LinearTwisted:
            case Mode::LinearExtraspecial:
                mixv(matrix_.dim);
                for (uint32_t v : matrix_.data) mixv(v);
                break;
            case Mode::Product:
                for (const auto& p : parts_) mixv(p.content_hash());
                break;
        }
        return h;
    }

private:
    Mode mode_ = Mode::PermImages;
    Group target_;
    std::vector<uint32_t> images_;
    Element matrix_;
    std::vector<Automorphism> parts_;
};

/// A verified homomorphism H -> Aut(A): generator images are extended to the
/// whole of H and the extension is checked for consistency on all pairs.
class ActionMap {
public:
    ActionMap() = default;

    ActionMap(Group H, Group A, std::vector<Automorphism> generator_images)
        : H_(std::move(H)), A_(std::move(A)) {
        const auto& gens = H_.generators();
        if (generator_images.size() != gens.size())
            throw InvalidArgument("one automorphism per generator of the acting group required");
        const ElementTable& tab = H_.elements();
        table_.resize(tab.size());
        std::vector<bool> have(tab.size(), false);
        Automorphism ident =
            generator_images.empty() ? Automorphism() : Automorphism::identity_like(generator_images[0]);
        if (generator_images.empty()) throw InvalidArgument("acting group needs at least one generator");
        table_[tab.identity] = ident;
        have[tab.identity] = true;
        std::vector<uint32_t> queue{tab.identity};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t hi = queue[qi];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                uint32_t yi = H_.index_of(H_.mul(tab.elems[hi], gens[gi]));
                if (have[yi]) continue;
                table_[yi] = table_[hi].compose(generator_images[gi]);
                have[yi] = true;
                queue.push_back(yi);
            }
        }
        // Homomorphism property over the whole enumerated acting group.
        if (tab.size() * tab.size() > kHomCheckCap)
            throw InvalidArgument("acting group too large for total homomorphism verification");
        for (uint32_t i = 0; i < tab.size(); ++i) {
            for (uint32_t j = 0; j < tab.size(); ++j) {
                uint32_t ij = H_.index_of(H_.mul(tab.elems[i], tab.elems[j]));
                if (!table_[ij].same_map_as(table_[i].compose(table_[j])))
                    throw InvalidArgument(
                        "generator images do not extend to a homomorphism into Aut(A)");
            }
        }
        uint64_t h = 0x51ac;
        for (const Element& g : gens) h ^= g.hash() * 0x9e3779b97f4a7c15ull;
        for (const auto& f : table_) h = (h << 1 | h >> 63) ^ f.content_hash();
        hash_ = h;
    }

    static constexpr uint64_t kHomCheckCap = 1u << 20;

    const Group& acting() const { return H_; }
    const Group& target() const { return A_; }

    const Automorphism& image_of(const Element& h) const { return table_[H_.index_of(h)]; }
    Element apply(const Element& h, const Element& a) const { return image_of(h).apply(a); }

    /// No nontrivial acting element fixes a nontrivial target element.
    bool fixed_point_free() const {
        const ElementTable& ht = H_.elements();
        const ElementTable& at = A_.elements();
        for (uint32_t i = 0; i < ht.size(); ++i) {
            if (i == ht.identity) continue;
            for (uint32_t j = 0; j < at.size(); ++j) {
                if (j == at.identity) continue;
                if (table_[i].apply(at.elems[j]) == at.elems[j]) return false;
            }
        }
        return true;
    }

    /// Only the identity of H acts as the identity automorphism.
    bool faithful() const {
        const ElementTable& ht = H_.elements();
        for (uint32_t i = 0; i < ht.size(); ++i) {
            if (i == ht.identity) continue;
            if (table_[i].is_identity()) return false;
        }
        return true;
    }

    uint64_t structure_hash() const { return hash_; }

private:
    Group H_, A_;
    std::vector<Automorphism> table_;
    uint64_t hash_ = 0;
};

/// All automorphisms of a small group as element-index image tables, found by
/// scanning generator images and extending along the BFS word structure.
inline std::vector<Automorphism> all_automorphisms_small(const Group& A) {
    const ElementTable& tab = A.elements();
    if (tab.size() > 64) throw InvalidArgument("automorphism-group scan capped at order 64");
    const std::vector<Element>& gens = A.small_generating_set();

    // BFS parents so each element has one expression as parent * generator.
    std::vector<int64_t> parent(tab.size(), -1), via(tab.size(), -1);
    std::vector<uint32_t> order_of(tab.size());
    std::vector<uint32_t> bfs{tab.identity};
    std::vector<bool> seen(tab.size(), false);
    seen[tab.identity] = true;
    for (size_t i = 0; i < bfs.size(); ++i) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            uint32_t yi = A.index_of(A.mul(tab.elems[bfs[i]], gens[gi]));
            if (!seen[yi]) {
                seen[yi] = true;
                parent[yi] = bfs[i];
                via[yi] = int64_t(gi);
                bfs.push_back(yi);
            }
        }
    }
    for (uint32_t i = 0; i < tab.size(); ++i) order_of[i] = uint32_t(A.element_order(tab.elems[i]));

    std::vector<Automorphism> out;
    std::vector<uint32_t> gen_idx;
    for (const Element& g : gens) gen_idx.push_back(A.index_of(g));
    std::vector<uint32_t> choice(gens.size(), 0);
    for (;;) {
        bool plausible = true;
        for (size_t gi = 0; gi < gens.size() && plausible; ++gi)
            plausible = order_of[choice[gi]] == order_of[gen_idx[gi]];
        if (plausible) {
            std::vector<uint32_t> images(tab.size(), UINT32_MAX);
            images[tab.identity] = tab.identity;
            bool ok = true;
            for (uint32_t idx : bfs) {
                if (idx == tab.identity) continue;
                uint32_t pi = images[uint32_t(parent[idx])];
                uint32_t gimg = choice[size_t(via[idx])];
                images[idx] = A.index_of(A.mul(tab.elems[pi], tab.elems[gimg]));
            }
            std::vector<bool> hit(tab.size(), false);
            for (uint32_t v : images) {
                if (v == UINT32_MAX || hit[v]) { ok = false; break; }
                hit[v] = true;
            }
            if (ok) {
                try {
                    out.push_back(Automorphism::from_perm_images(A, images));
                } catch (const InvalidArgument&) {
                    // candidate image assignment is not a homomorphism
                }
            }
        }
        size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < tab.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
    }
    return out;
}

}  // namespace irratio
