#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "irratio/errors.hpp"
#include "irratio/fields.hpp"

namespace irratio {

// A group element is a tagged value: a permutation, a matrix over an interned
// finite field (optionally projective, i.e. stored in canonical scalar form),
// a flat coordinate vector whose multiplication rule lives in the owning
// group's law, or a tuple of child elements for product constructions.
//
// Equality and hashing use the canonical serialized form only (images,
// canonicalized matrix entries plus field identity, coordinates, recursive
// tuple). The law tag carried by Vec/Tuple elements is diagnostic metadata.

enum class Kind : uint8_t { Perm, Mat, Vec, Tuple };

class Element {
public:
    Kind kind = Kind::Vec;
    std::vector<uint16_t> perm;       // Perm: images on {0..n-1}
    std::vector<uint32_t> data;       // Mat: row-major codes; Vec: coordinates
    std::vector<Element> children;    // Tuple
    const FieldCtx* field = nullptr;  // Mat
    uint32_t dim = 0;                 // Mat
    uint32_t law_tag = 0;             // Vec/Tuple diagnostics, not part of equality

    static Element make_perm(std::vector<uint16_t> images) {
        Element e;
        e.kind = Kind::Perm;
        e.perm = std::move(images);
        return e;
    }
    static Element make_mat(const FieldCtx& F, uint32_t d, std::vector<uint32_t> entries) {
        if (entries.size() != size_t(d) * d) throw InvalidArgument("matrix entry count mismatch");
        Element e;
        e.kind = Kind::Mat;
        e.field = &F;
        e.dim = d;
        e.data = std::move(entries);
        return e;
    }
    static Element make_vec(std::vector<uint32_t> coords, uint32_t tag = 0) {
        Element e;
        e.kind = Kind::Vec;
        e.data = std::move(coords);
        e.law_tag = tag;
        return e;
    }
    static Element make_tuple(std::vector<Element> parts, uint32_t tag = 0) {
        Element e;
        e.kind = Kind::Tuple;
        e.children = std::move(parts);
        e.law_tag = tag;
        return e;
    }

    uint64_t hash() const {
        if (hash_cache_ == 0) hash_cache_ = compute_hash() | 1;
        return hash_cache_;
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.kind != b.kind) return false;
        if (a.hash() != b.hash()) return false;
        switch (a.kind) {
            case Kind::Perm: return a.perm == b.perm;
            case Kind::Mat:  return a.field == b.field && a.dim == b.dim && a.data == b.data;
            case Kind::Vec:  return a.data == b.data;
            case Kind::Tuple: return a.children == b.children;
        }
        return false;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Deterministic total order on the canonical form; used for canonical
    /// class representatives and projective canonicalization.
    friend bool operator<(const Element& a, const Element& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        switch (a.kind) {
            case Kind::Perm: return a.perm < b.perm;
            case Kind::Mat:
                if (a.field != b.field) return a.field < b.field;
                if (a.dim != b.dim) return a.dim < b.dim;
                return a.data < b.data;
            case Kind::Vec: return a.data < b.data;
            case Kind::Tuple: return a.children < b.children;
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        print(os);
        return os.str();
    }

    void print(std::ostream& os) const {
        switch (kind) {
            case Kind::Perm: print_cycles(os); break;
            case Kind::Mat: {
                os << "[";
                for (uint32_t i = 0; i < dim; ++i) {
                    os << (i ? ",[" : "[");
                    for (uint32_t j = 0; j < dim; ++j)
                        os << (j ? "," : "") << field->to_string(data[i * dim + j]);
                    os << "]";
                }
                os << "]@" << field->name();
                break;
            }
            case Kind::Vec: {
                os << "(";
                for (size_t i = 0; i < data.size(); ++i) os << (i ? "," : "") << data[i];
                os << ")";
                break;
            }
            case Kind::Tuple: {
                os << "(";
                for (size_t i = 0; i < children.size(); ++i) {
                    if (i) os << "; ";
                    children[i].print(os);
                }
                os << ")";
                break;
            }
        }
    }

private:
    mutable uint64_t hash_cache_ = 0;

    static uint64_t mix(uint64_t h, uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return h;
    }

    uint64_t compute_hash() const {
        uint64_t h = uint64_t(kind) + 0x517cc1b727220a95ull;
        switch (kind) {
            case Kind::Perm:
                for (uint16_t v : perm) h = mix(h, v);
                break;
            case Kind::Mat:
                h = mix(h, uint64_t(field->p()) << 32 | field->k());
                h = mix(h, dim);
                for (uint32_t v : data) h = mix(h, v);
                break;
            case Kind::Vec:
                for (uint32_t v : data) h = mix(h, v);
                break;
            case Kind::Tuple:
                for (const Element& c : children) h = mix(h, c.hash());
                break;
        }
        return h;
    }

    void print_cycles(std::ostream& os) const {
        size_t n = perm.size();
        std::vector<bool> seen(n, false);
        bool any = false;
        for (size_t i = 0; i < n; ++i) {
            if (seen[i] || perm[i] == i) continue;
            any = true;
            os << "(";
            size_t j = i;
            bool first = true;
            do {
                os << (first ? "" : " ") << (j + 1);
                first = false;
                seen[j] = true;
                j = perm[j];
            } while (j != i);
            os << ")";
        }
        if (!any) os << "()";
    }
};

struct ElementHash {
    size_t operator()(const Element& e) const { return size_t(e.hash()); }
};
struct ElementPtrHash {
    size_t operator()(const Element* e) const { return size_t(e->hash()); }
};
struct ElementPtrEq {
    bool operator()(const Element* a, const Element* b) const { return *a == *b; }
};

// Permutation primitives.

inline Element perm_identity(uint32_t n) {
    std::vector<uint16_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = uint16_t(i);
    return Element::make_perm(std::move(img));
}

/// (a*b)(x) = a(b(x)): apply b first, then a.
inline Element perm_compose(const Element& a, const Element& b) {
    std::vector<uint16_t> img(a.perm.size());
    for (size_t i = 0; i < img.size(); ++i) img[i] = a.perm[b.perm[i]];
    return Element::make_perm(std::move(img));
}

inline Element perm_inverse(const Element& a) {
    std::vector<uint16_t> img(a.perm.size());
    for (size_t i = 0; i < img.size(); ++i) img[a.perm[i]] = uint16_t(i);
    return Element::make_perm(std::move(img));
}

/// Builds an n-point permutation from 1-based disjoint cycles.
inline Element perm_from_cycles(uint32_t n, const std::vector<std::vector<uint32_t>>& cycles) {
    std::vector<uint16_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = uint16_t(i);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            uint32_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n || to < 1 || to > n)
                throw InvalidArgument("cycle point out of range 1.." + std::to_string(n));
            img[from - 1] = uint16_t(to - 1);
        }
    }
    // Bijectivity check (overlapping cycles would break it).
    std::vector<bool> hit(n, false);
    for (uint16_t v : img) {
        if (hit[v]) throw InvalidArgument("cycles do not define a bijection");
        hit[v] = true;
    }
    return Element::make_perm(std::move(img));
}

// Matrix primitives over a field context.

inline Element mat_identity(const FieldCtx& F, uint32_t d) {
    std::vector<uint32_t> m(size_t(d) * d, 0);
    for (uint32_t i = 0; i < d; ++i) m[i * d + i] = 1;
    return Element::make_mat(F, d, std::move(m));
}

inline Element mat_multiply(const Element& a, const Element& b) {
    const FieldCtx& F = *a.field;
    uint32_t d = a.dim;
    std::vector<uint32_t> m(size_t(d) * d, 0);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t k = 0; k < d; ++k) {
            uint32_t aik = a.data[i * d + k];
            if (aik == 0) continue;
            for (uint32_t j = 0; j < d; ++j) {
                uint32_t bkj = b.data[k * d + j];
                if (bkj == 0) continue;
                m[i * d + j] = F.add(m[i * d + j], F.mul(aik, bkj));
            }
        }
    }
    return Element::make_mat(F, d, std::move(m));
}

/// Gauss-Jordan inverse; throws on singular input.
inline Element mat_inverse(const Element& a) {
    const FieldCtx& F = *a.field;
    uint32_t d = a.dim;
    std::vector<uint32_t> m = a.data;
    std::vector<uint32_t> inv(size_t(d) * d, 0);
    for (uint32_t i = 0; i < d; ++i) inv[i * d + i] = 1;
    for (uint32_t col = 0; col < d; ++col) {
        uint32_t piv = col;
        while (piv < d && m[piv * d + col] == 0) ++piv;
        if (piv == d) throw InvalidArgument("singular matrix");
        if (piv != col) {
            for (uint32_t j = 0; j < d; ++j) {
                std::swap(m[piv * d + j], m[col * d + j]);
                std::swap(inv[piv * d + j], inv[col * d + j]);
            }
        }
        uint32_t s = F.inv(m[col * d + col]);
        for (uint32_t j = 0; j < d; ++j) {
            m[col * d + j] = F.mul(m[col * d + j], s);
            inv[col * d + j] = F.mul(inv[col * d + j], s);
        }
        for (uint32_t r = 0; r < d; ++r) {
            if (r == col) continue;
            uint32_t f = m[r * d + col];
            if (f == 0) continue;
            for (uint32_t j = 0; j < d; ++j) {
                m[r * d + j] = F.sub(m[r * d + j], F.mul(f, m[col * d + j]));
                inv[r * d + j] = F.sub(inv[r * d + j], F.mul(f, inv[col * d + j]));
            }
        }
    }
    return Element::make_mat(F, d, std::move(inv));
}

inline bool mat_is_invertible(const Element& a) {
    try {
        mat_inverse(a);
        return true;
    } catch (const InvalidArgument&) {
        return false;
    }
}

/// Least entry sequence among {s*m : s in scalars} under row-major code order.
inline Element canonical_projective(const Element& m, const std::vector<uint32_t>& scalars) {
    if (scalars.size() <= 1) return m;
    const FieldCtx& F = *m.field;
    const std::vector<uint32_t>* best = &m.data;
    std::vector<uint32_t> candidate;
    std::vector<uint32_t> best_store;
    for (uint32_t s : scalars) {
        if (s == 1) continue;
        candidate.resize(m.data.size());
        for (size_t i = 0; i < m.data.size(); ++i) candidate[i] = F.mul(s, m.data[i]);
        if (candidate < *best) {
            best_store = candidate;
            best = &best_store;
        }
    }
    if (best == &m.data) return m;
    return Element::make_mat(F, m.dim, std::move(best_store));
}

}  // namespace irratio
