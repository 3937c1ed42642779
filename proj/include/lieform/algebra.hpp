// Structure-constant tables for finite-dimensional algebras over GF(2),
// axiom validation, integer gradings, and subspace-closure utilities.
//
// A table stores the product of every ordered basis pair, so bilinear
// extension is branch-free; validation enforces the symmetry the kind
// requires. In characteristic 2 a Lie bracket is symmetric and vanishes
// on the diagonal, and the Jacobi identity carries no signs.

#pragma once

#include "lieform/gf2.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lieform {

using gf2::BitMatrix;
using gf2::BitVector;
using gf2::Subspace;

enum class AlgebraKind { Lie, AssocCommUnital };

/// Linear map between coordinate spaces, stored column-wise as the images
/// of the source basis vectors.
class LinearMap {
public:
    LinearMap() = default;

    LinearMap(std::size_t source_dim, std::size_t target_dim)
        : source_(source_dim), target_(target_dim), images_(source_dim, BitVector(target_dim)) {}

    static LinearMap from_images(std::vector<BitVector> images, std::size_t target_dim) {
        for (const auto& v : images)
            if (v.size() != target_dim) throw std::invalid_argument("LinearMap: image length mismatch");
        LinearMap m;
        m.source_ = images.size();
        m.target_ = target_dim;
        m.images_ = std::move(images);
        return m;
    }

    static LinearMap identity(std::size_t n) {
        LinearMap m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.images_[i].set(i);
        return m;
    }

    static LinearMap zero(std::size_t n) { return LinearMap(n, n); }

    [[nodiscard]] std::size_t source_dim() const { return source_; }
    [[nodiscard]] std::size_t target_dim() const { return target_; }

    [[nodiscard]] const BitVector& image(std::size_t j) const { return images_.at(j); }
    void set_image(std::size_t j, BitVector v) {
        if (v.size() != target_) throw std::invalid_argument("LinearMap: image length mismatch");
        images_.at(j) = std::move(v);
    }

    [[nodiscard]] BitVector apply(const BitVector& x) const {
        if (x.size() != source_) throw std::invalid_argument("LinearMap apply: length mismatch");
        BitVector out(target_);
        x.for_each_set([&](std::size_t j) { out ^= images_[j]; });
        return out;
    }

    /// this ∘ g
    [[nodiscard]] LinearMap compose(const LinearMap& g) const {
        if (g.target_ != source_) throw std::invalid_argument("LinearMap compose: shape mismatch");
        std::vector<BitVector> images;
        images.reserve(g.source_);
        for (std::size_t j = 0; j < g.source_; ++j) images.push_back(apply(g.images_[j]));
        return from_images(std::move(images), target_);
    }

    friend LinearMap operator+(LinearMap a, const LinearMap& b) {
        if (a.source_ != b.source_ || a.target_ != b.target_)
            throw std::invalid_argument("LinearMap sum: shape mismatch");
        for (std::size_t j = 0; j < a.source_; ++j) a.images_[j] ^= b.images_[j];
        return a;
    }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : images_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// Matrix with apply(x) = matrix() · x.
    [[nodiscard]] BitMatrix matrix() const {
        BitMatrix m(target_, source_);
        for (std::size_t j = 0; j < source_; ++j)
            images_[j].for_each_set([&](std::size_t i) { m.set(i, j); });
        return m;
    }

    /// Concatenated images, for housing map spaces inside gf2::Subspace.
    [[nodiscard]] BitVector vectorize() const {
        BitVector v(source_ * target_);
        for (std::size_t j = 0; j < source_; ++j)
            images_[j].for_each_set([&](std::size_t i) { v.set(j * target_ + i); });
        return v;
    }

    static LinearMap from_vectorized(const BitVector& v, std::size_t source_dim, std::size_t target_dim) {
        if (v.size() != source_dim * target_dim)
            throw std::invalid_argument("LinearMap: vectorized length mismatch");
        LinearMap m(source_dim, target_dim);
        v.for_each_set([&](std::size_t p) { m.images_[p / target_dim].set(p % target_dim); });
        return m;
    }

private:
    std::size_t source_ = 0, target_ = 0;
    std::vector<BitVector> images_;
};

/// Integer weights, one per basis element; depth and length are read off
/// the occupied weights only.
struct GradingInfo {
    std::vector<int> weights;

    [[nodiscard]] int depth() const {
        int d = 0;
        for (int w : weights)
            if (w < 0 && -w > d) d = -w;
        return d;
    }

    [[nodiscard]] int length() const {
        int l = 0;
        for (int w : weights)
            if (w > l) l = w;
        return l;
    }
};

struct ValidationIssue {
    enum class Kind {
        DiagonalNotZero,     // Lie: product(i,i) ≠ 0
        NotSymmetric,        // product(i,j) ≠ product(j,i)
        Jacobi,              // Jacobi fails at (i,j,k)
        Associativity,       // associativity fails at (i,j,k)
        UnitMissing,         // kind requires a unit index
        UnitNotIdentity,     // unit·b_i ≠ b_i
        GradingViolation,    // product leaves the expected weight component
    };

    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    [[nodiscard]] bool ok() const { return issues.empty(); }
};

/// Finite-dimensional algebra over GF(2) given by its structure constants.
class AlgebraTable {
public:
    AlgebraTable() = default;

    AlgebraTable(std::size_t dim, AlgebraKind kind)
        : dim_(dim), kind_(kind), prod_(dim * dim, BitVector(dim)) {
        labels_.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] AlgebraKind kind() const { return kind_; }

    [[nodiscard]] const BitVector& product(std::size_t i, std::size_t j) const {
        return prod_.at(i * dim_ + j);
    }

    /// Sets both (i,j) and (j,i); both kinds in scope have symmetric tables.
    void set_product(std::size_t i, std::size_t j, BitVector v) {
        if (v.size() != dim_) throw std::invalid_argument("AlgebraTable: product length mismatch");
        prod_.at(i * dim_ + j) = v;
        prod_.at(j * dim_ + i) = std::move(v);
    }

    /// Bilinear extension of the table to arbitrary coordinate vectors.
    [[nodiscard]] BitVector product(const BitVector& x, const BitVector& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("AlgebraTable product: length mismatch");
        BitVector out(dim_);
        x.for_each_set([&](std::size_t i) {
            y.for_each_set([&](std::size_t j) { out ^= prod_[i * dim_ + j]; });
        });
        return out;
    }

    [[nodiscard]] BitVector product_with_basis(const BitVector& x, std::size_t j) const {
        BitVector out(dim_);
        x.for_each_set([&](std::size_t i) { out ^= prod_[i * dim_ + j]; });
        return out;
    }

    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    void set_label(std::size_t i, std::string s) { labels_.at(i) = std::move(s); }
    void set_labels(std::vector<std::string> l) {
        if (l.size() != dim_) throw std::invalid_argument("AlgebraTable: label count mismatch");
        labels_ = std::move(l);
    }

    [[nodiscard]] bool has_weights() const { return weights_.has_value(); }
    [[nodiscard]] const std::vector<int>& weights() const {
        if (!weights_) throw std::invalid_argument("AlgebraTable: no grading defined");
        return *weights_;
    }
    [[nodiscard]] GradingInfo grading() const { return GradingInfo{weights()}; }
    void set_weights(std::vector<int> w) {
        if (w.size() != dim_) throw std::invalid_argument("AlgebraTable: weight count mismatch");
        weights_ = std::move(w);
    }
    void clear_weights() { weights_.reset(); }

    [[nodiscard]] std::optional<std::size_t> unit() const { return unit_; }
    void set_unit(std::size_t i) {
        if (i >= dim_) throw std::invalid_argument("AlgebraTable: unit index out of range");
        unit_ = i;
    }

    [[nodiscard]] const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string json_text) { provenance_ = std::move(json_text); }

    /// ad(x): y ↦ [x, y].
    [[nodiscard]] LinearMap ad(const BitVector& x) const {
        std::vector<BitVector> images;
        images.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j) images.push_back(product_with_basis(x, j));
        return LinearMap::from_images(std::move(images), dim_);
    }

    [[nodiscard]] LinearMap ad(std::size_t i) const { return ad(BitVector::unit(dim_, i)); }

    [[nodiscard]] bool is_derivation(const LinearMap& d) const {
        if (d.source_dim() != dim_ || d.target_dim() != dim_) return false;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i; j < dim_; ++j) {
                BitVector lhs = d.apply(product(i, j));
                BitVector rhs = product_with_basis(d.image(i), j) ^
                                product(BitVector::unit(dim_, i), d.image(j));
                if (!(lhs == rhs)) return false;
            }
        }
        return true;
    }

private:
    std::size_t dim_ = 0;
    AlgebraKind kind_ = AlgebraKind::Lie;
    std::vector<BitVector> prod_;  // dim × dim, row-major
    std::vector<std::string> labels_;
    std::optional<std::vector<int>> weights_;
    std::optional<std::size_t> unit_;
    std::string provenance_;  // JSON text of the construction call, may be empty
};

[[nodiscard]] inline BitVector bracket(const AlgebraTable& t, const BitVector& x, const BitVector& y) {
    return t.product(x, y);
}

/// Every violated axiom with an index witness; empty report means valid.
[[nodiscard]] inline ValidationReport validate(const AlgebraTable& t) {
    ValidationReport rep;
    const std::size_t n = t.dim();
    using K = ValidationIssue::Kind;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (!(t.product(i, j) == t.product(j, i)))
                rep.issues.push_back({K::NotSymmetric, i, j, 0, "product(i,j) != product(j,i)"});
            if (t.kind() == AlgebraKind::Lie && i == j && !t.product(i, i).is_zero())
                rep.issues.push_back({K::DiagonalNotZero, i, i, 0, "[b_i, b_i] != 0"});
        }

    if (t.kind() == AlgebraKind::Lie) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    BitVector s = t.product_with_basis(t.product(i, j), k);
                    s ^= t.product_with_basis(t.product(j, k), i);
                    s ^= t.product_with_basis(t.product(k, i), j);
                    if (!s.is_zero())
                        rep.issues.push_back({K::Jacobi, i, j, k, "Jacobi fails"});
                }
    } else {
        if (!t.unit()) {
            rep.issues.push_back({K::UnitMissing, 0, 0, 0, "unital kind without unit index"});
        } else {
            const std::size_t u = *t.unit();
            for (std::size_t i = 0; i < n; ++i)
                if (!(t.product(u, i) == BitVector::unit(n, i)))
                    rep.issues.push_back({K::UnitNotIdentity, u, i, 0, "unit does not act as identity"});
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    BitVector lhs = t.product_with_basis(t.product(i, j), k);
                    BitVector rhs = t.product(BitVector::unit(n, i), t.product(j, k));
                    if (!(lhs == rhs))
                        rep.issues.push_back({K::Associativity, i, j, k, "(ab)c != a(bc)"});
                }
    }

    if (t.has_weights()) {
        const auto& w = t.weights();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                bool bad = false;
                t.product(i, j).for_each_set([&](std::size_t k) {
                    if (w[k] != w[i] + w[j]) bad = true;
                });
                if (bad)
                    rep.issues.push_back({K::GradingViolation, i, j, 0,
                                          "product leaves weight component w_i + w_j"});
            }
    }
    return rep;
}

[[nodiscard]] inline Subspace weight_component(const AlgebraTable& t, int w) {
    const auto& weights = t.weights();
    std::vector<BitVector> gens;
    for (std::size_t i = 0; i < t.dim(); ++i)
        if (weights[i] == w) gens.push_back(BitVector::unit(t.dim(), i));
    return Subspace::span(t.dim(), std::move(gens));
}

struct ClosureOptions {
    bool bracket_with_ambient = false;  // close under products with the whole algebra
    bool bracket_within = false;        // close under products of pairs inside the span
    std::vector<LinearMap> unary;       // extra maps applied to the span each round
};

/// Least subspace containing seed and closed under the requested operations.
/// Dimension grows monotonically, so the fixpoint is reached in ≤ dim rounds.
[[nodiscard]] inline Subspace span_closure(const AlgebraTable& t, const Subspace& seed,
                                           const ClosureOptions& opts) {
    if (seed.ambient() != t.dim()) throw std::invalid_argument("span_closure: ambient mismatch");
    Subspace cur = seed;
    for (;;) {
        std::vector<BitVector> fresh;
        if (opts.bracket_with_ambient)
            for (const auto& b : cur.basis())
                for (std::size_t j = 0; j < t.dim(); ++j)
                    fresh.push_back(t.product_with_basis(b, j));
        if (opts.bracket_within)
            for (std::size_t p = 0; p < cur.dim(); ++p)
                for (std::size_t q = p + 1; q < cur.dim(); ++q)
                    fresh.push_back(t.product(cur.basis()[p], cur.basis()[q]));
        for (const auto& m : opts.unary)
            for (const auto& b : cur.basis()) fresh.push_back(m.apply(b));

        bool grew = false;
        for (auto& v : fresh) grew |= cur.grow(v);
        if (!grew) return cur;
    }
}

[[nodiscard]] inline Subspace ideal_closure(const AlgebraTable& t, const Subspace& seed) {
    return span_closure(t, seed, {.bracket_with_ambient = true});
}

[[nodiscard]] inline Subspace subalgebra_closure(const AlgebraTable& t, const Subspace& seed) {
    return span_closure(t, seed, {.bracket_within = true});
}

}  // namespace lieform
