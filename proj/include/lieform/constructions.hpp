// Builders for the algebra families in scope: divided powers, Zassenhaus
// algebras and their simple commutants, current algebras, and extensions
// of a current algebra by outer derivations of both tensor factors.
//
// Binomial parity is decided by Lucas: binom(i+j, j) is odd over GF(2)
// exactly when i and j have disjoint binary digits.

#pragma once

#include "lieform/algebra.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace lieform {

[[nodiscard]] inline bool binom_odd(unsigned long top_left, unsigned long top_right) {
    // binom(a+b, b) mod 2 with a = top_left, b = top_right
    return (top_left & top_right) == 0;
}

[[nodiscard]] inline std::string divided_power_label(std::size_t i) {
    if (i == 0) return "1";
    if (i == 1) return "x";
    return "x^(" + std::to_string(i) + ")";
}

/// Divided powers algebra of height n: dimension 2^n, basis x^(0)..x^(2^n-1),
/// x^(i)·x^(j) = x^(i+j) when the binomial is odd and i+j fits, else 0.
[[nodiscard]] inline AlgebraTable divided_powers(unsigned n) {
    if (n < 1) throw std::invalid_argument("divided_powers: n must be >= 1");
    const std::size_t dim = std::size_t(1) << n;
    AlgebraTable t(dim, AlgebraKind::AssocCommUnital);
    t.set_unit(0);
    for (std::size_t i = 0; i < dim; ++i) {
        t.set_label(i, divided_power_label(i));
        for (std::size_t j = i; j < dim; ++j) {
            BitVector v(dim);
            if (i + j < dim && binom_odd(i, j)) v.set(i + j);
            t.set_product(i, j, std::move(v));
        }
    }
    t.set_provenance(R"({"construct":"divided_powers","n":)" + std::to_string(n) + "}");
    return t;
}

/// The shift derivation x^(i) ↦ x^(i-1), x^(0) ↦ 0.
[[nodiscard]] inline LinearMap special_derivation(unsigned n) {
    if (n < 1) throw std::invalid_argument("special_derivation: n must be >= 1");
    const std::size_t dim = std::size_t(1) << n;
    LinearMap d(dim, dim);
    for (std::size_t i = 1; i < dim; ++i) d.set_image(i, BitVector::unit(dim, i - 1));
    return d;
}

namespace detail {

// Basis e_i at table index i+1, weight(e_i) = i; bracket
// [e_i, e_j] = e_{i+j} when binom(i+j+2, i+1) is odd and e_{i+j} exists.
inline AlgebraTable zassenhaus_family(unsigned n, long max_index, const char* construct) {
    if (n < 1) throw std::invalid_argument("zassenhaus: n must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(max_index + 2);  // indices -1..max_index
    AlgebraTable t(dim, AlgebraKind::Lie);
    std::vector<int> weights(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const long i = static_cast<long>(k) - 1;
        weights[k] = static_cast<int>(i);
        if (n == 2) {
            static const char* special[] = {"e", "h", "f", "g"};
            t.set_label(k, special[k]);
        } else {
            t.set_label(k, "e_" + std::to_string(i));
        }
    }
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = p + 1; q < dim; ++q) {
            const long i = static_cast<long>(p) - 1;
            const long j = static_cast<long>(q) - 1;
            BitVector v(dim);
            if (i + j >= -1 && i + j <= max_index &&
                binom_odd(static_cast<unsigned long>(i + 1), static_cast<unsigned long>(j + 1)))
                v.set(static_cast<std::size_t>(i + j + 1));
            t.set_product(p, q, std::move(v));
        }
    t.set_weights(std::move(weights));
    t.set_provenance(std::string(R"({"construct":")") + construct + R"(","n":)" +
                     std::to_string(n) + "}");
    return t;
}

}  // namespace detail

/// W1(n): dimension 2^n, basis e_{-1}..e_{2^n-2}.
[[nodiscard]] inline AlgebraTable zassenhaus(unsigned n) {
    return detail::zassenhaus_family(n, (long(1) << n) - 2, "zassenhaus");
}

/// W1'(n): the simple commutant, dimension 2^n - 1, basis e_{-1}..e_{2^n-3}.
[[nodiscard]] inline AlgebraTable zassenhaus_derived(unsigned n) {
    return detail::zassenhaus_family(n, (long(1) << n) - 3, "zassenhaus_derived");
}

/// The 3-dimensional simple algebra with [e,h] = e, [f,h] = f, [e,f] = h.
[[nodiscard]] inline AlgebraTable three_dim_simple() { return zassenhaus_derived(2); }

/// Ground field as a one-dimensional unital algebra.
[[nodiscard]] inline AlgebraTable ground_field() {
    AlgebraTable t(1, AlgebraKind::AssocCommUnital);
    t.set_unit(0);
    t.set_label(0, "1");
    t.set_product(0, 0, BitVector::unit(1, 0));
    t.set_provenance(R"({"construct":"ground_field"})");
    return t;
}

/// Basis index of x_s ⊗ a_p in a current algebra (S-index major).
[[nodiscard]] inline std::size_t tensor_index(std::size_t s, std::size_t p, std::size_t a_dim) {
    return s * a_dim + p;
}

/// Current Lie algebra L ⊗ A, [x⊗a, y⊗b] = [x,y] ⊗ ab, grading inherited
/// from L when present.
[[nodiscard]] inline AlgebraTable current_algebra(const AlgebraTable& L, const AlgebraTable& A) {
    if (L.kind() != AlgebraKind::Lie || A.kind() != AlgebraKind::AssocCommUnital)
        throw std::invalid_argument("current_algebra: expected a Lie and a commutative unital table");
    const std::size_t nl = L.dim(), na = A.dim(), dim = nl * na;
    AlgebraTable t(dim, AlgebraKind::Lie);
    for (std::size_t s = 0; s < nl; ++s)
        for (std::size_t p = 0; p < na; ++p)
            t.set_label(tensor_index(s, p, na), L.labels()[s] + "*" + A.labels()[p]);

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            const std::size_t si = i / na, pi = i % na;
            const std::size_t sj = j / na, pj = j % na;
            const BitVector& sb = L.product(si, sj);
            const BitVector& ab = A.product(pi, pj);
            BitVector v(dim);
            sb.for_each_set([&](std::size_t s) {
                ab.for_each_set([&](std::size_t p) { v.flip(tensor_index(s, p, na)); });
            });
            t.set_product(i, j, std::move(v));
        }

    if (L.has_weights()) {
        std::vector<int> w(dim);
        for (std::size_t s = 0; s < nl; ++s)
            for (std::size_t p = 0; p < na; ++p) w[tensor_index(s, p, na)] = L.weights()[s];
        t.set_weights(std::move(w));
    }
    return t;
}

/// Data of an extension S⊗A + 𝔇⊗U + 𝔈 where 𝔇 acts through the first
/// tensor factor and 𝔈 through the second.
struct ExtensionSpec {
    AlgebraTable S;                      // Lie, graded
    AlgebraTable A;                      // associative commutative unital
    std::vector<LinearMap> outer;        // 𝔇: derivations of S
    std::vector<int> outer_weights;      // one per 𝔇 element
    std::vector<std::string> outer_labels;
    Subspace U;                          // subspace of A, invariant under each 𝔈 map
    std::vector<LinearMap> coeff_ders;   // 𝔈: derivations of A
    std::vector<std::string> coeff_labels;
};

/// Extension table plus its index layout. Basis order: S⊗A (S-major),
/// then 𝔇⊗U (𝔇-major over the echelon basis of U), then 𝔈.
struct ExtendedAlgebra {
    AlgebraTable table;
    std::size_t s_dim = 0, a_dim = 0;
    std::vector<BitVector> u_basis;  // echelon basis of U, in A coordinates
    std::size_t n_outer = 0, n_coeff = 0;
    std::size_t du_offset = 0, e_offset = 0;

    [[nodiscard]] std::size_t sa(std::size_t s, std::size_t p) const { return s * a_dim + p; }
    [[nodiscard]] std::size_t du(std::size_t d, std::size_t r) const {
        return du_offset + d * u_basis.size() + r;
    }
    [[nodiscard]] std::size_t e(std::size_t k) const { return e_offset + k; }

    /// Element x ⊗ a of the S⊗A block, for arbitrary coordinate vectors.
    [[nodiscard]] BitVector embed(const BitVector& x, const BitVector& a) const {
        BitVector v(table.dim());
        x.for_each_set([&](std::size_t s) {
            a.for_each_set([&](std::size_t p) { v.flip(sa(s, p)); });
        });
        return v;
    }
};

namespace detail {

inline std::string vector_label(const BitVector& v, const std::vector<std::string>& labels) {
    std::string out;
    v.for_each_set([&](std::size_t i) {
        if (!out.empty()) out += "+";
        out += labels[i];
    });
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// Builds the homogeneous extension and Jacobi-validates the result.
/// Throws when a listed map fails Leibniz, U is not invariant, or the data
/// does not close into a Lie algebra.
[[nodiscard]] inline ExtendedAlgebra extend(const ExtensionSpec& spec) {
    const std::size_t ns = spec.S.dim(), na = spec.A.dim();
    if (!spec.S.has_weights()) throw std::invalid_argument("extend: S must be graded");
    if (spec.U.ambient() != na) throw std::invalid_argument("extend: U ambient mismatch");
    if (spec.outer.size() != spec.outer_weights.size())
        throw std::invalid_argument("extend: outer weight count mismatch");
    for (const auto& d : spec.outer)
        if (!spec.S.is_derivation(d)) throw std::invalid_argument("extend: outer map is not a derivation of S");
    for (const auto& e : spec.coeff_ders)
        if (!spec.A.is_derivation(e)) throw std::invalid_argument("extend: coefficient map is not a derivation of A");

    ExtendedAlgebra ext;
    ext.s_dim = ns;
    ext.a_dim = na;
    ext.u_basis = spec.U.basis();
    ext.n_outer = spec.outer.size();
    ext.n_coeff = spec.coeff_ders.size();
    ext.du_offset = ns * na;
    ext.e_offset = ext.du_offset + ext.n_outer * ext.u_basis.size();
    const std::size_t dim = ext.e_offset + ext.n_coeff;

    AlgebraTable t(dim, AlgebraKind::Lie);
    std::vector<int> weights(dim, 0);

    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t p = 0; p < na; ++p) {
            t.set_label(ext.sa(s, p), spec.S.labels()[s] + "*" + spec.A.labels()[p]);
            weights[ext.sa(s, p)] = spec.S.weights()[s];
        }
    for (std::size_t d = 0; d < ext.n_outer; ++d)
        for (std::size_t r = 0; r < ext.u_basis.size(); ++r) {
            const std::string dl = d < spec.outer_labels.size() ? spec.outer_labels[d]
                                                                : "D" + std::to_string(d);
            t.set_label(ext.du(d, r), dl + "*" + detail::vector_label(ext.u_basis[r], spec.A.labels()));
            weights[ext.du(d, r)] = spec.outer_weights[d];
        }
    for (std::size_t k = 0; k < ext.n_coeff; ++k)
        t.set_label(ext.e(k), k < spec.coeff_labels.size() ? spec.coeff_labels[k]
                                                           : "E" + std::to_string(k));

    auto tensor_into = [&](const BitVector& x, const BitVector& a) { return ext.embed(x, a); };

    // S⊗A with itself
    for (std::size_t i = 0; i < ns * na; ++i)
        for (std::size_t j = i + 1; j < ns * na; ++j) {
            const BitVector& sb = spec.S.product(i / na, j / na);
            const BitVector& ab = spec.A.product(i % na, j % na);
            t.set_product(i, j, tensor_into(sb, ab));
        }

    // S⊗A with 𝔇⊗U: [x⊗a, D⊗u] = D(x) ⊗ au
    for (std::size_t i = 0; i < ns * na; ++i)
        for (std::size_t d = 0; d < ext.n_outer; ++d)
            for (std::size_t r = 0; r < ext.u_basis.size(); ++r) {
                const BitVector dx = spec.outer[d].image(i / na);
                const BitVector au = spec.A.product_with_basis(ext.u_basis[r], i % na);
                t.set_product(i, ext.du(d, r), tensor_into(dx, au));
            }

    // S⊗A with 𝔈: [x⊗a, E] = x ⊗ E(a)
    for (std::size_t i = 0; i < ns * na; ++i)
        for (std::size_t k = 0; k < ext.n_coeff; ++k) {
            const BitVector ea = spec.coeff_ders[k].image(i % na);
            t.set_product(i, ext.e(k), tensor_into(BitVector::unit(ns, i / na), ea));
        }

    // 𝔇⊗U abelian; [D⊗u, E] = D ⊗ E(u), which must land back in U
    for (std::size_t d = 0; d < ext.n_outer; ++d)
        for (std::size_t r = 0; r < ext.u_basis.size(); ++r)
            for (std::size_t k = 0; k < ext.n_coeff; ++k) {
                const BitVector eu = spec.coeff_ders[k].apply(ext.u_basis[r]);
                auto coords = spec.U.coordinates_of(eu);
                if (!coords) throw std::invalid_argument("extend: U is not invariant under a coefficient derivation");
                BitVector v(dim);
                coords->for_each_set([&](std::size_t rr) { v.set(ext.du(d, rr)); });
                t.set_product(ext.du(d, r), ext.e(k), std::move(v));
            }

    // 𝔈 with itself: the commutator must resolve inside span(𝔈)
    if (ext.n_coeff > 1) {
        std::vector<BitVector> evec;
        for (const auto& e : spec.coeff_ders) evec.push_back(e.vectorize());
        Subspace espan = Subspace::span(na * na, evec);
        for (std::size_t k = 0; k < ext.n_coeff; ++k)
            for (std::size_t l = k + 1; l < ext.n_coeff; ++l) {
                LinearMap comm = spec.coeff_ders[k].compose(spec.coeff_ders[l]) +
                                 spec.coeff_ders[l].compose(spec.coeff_ders[k]);
                auto coords = espan.coordinates_of(comm.vectorize());
                if (!coords) throw std::invalid_argument("extend: coefficient derivations do not close");
                // coordinates are in echelon basis, not the listed maps; resolve by solving
                BitMatrix m(na * na, ext.n_coeff);
                for (std::size_t c = 0; c < ext.n_coeff; ++c)
                    evec[c].for_each_set([&](std::size_t rrow) { m.set(rrow, c); });
                auto x = gf2::solve(m, comm.vectorize());
                if (!x) throw std::invalid_argument("extend: coefficient derivations do not close");
                BitVector v(dim);
                x->for_each_set([&](std::size_t kk) { v.set(ext.e(kk)); });
                t.set_product(ext.e(k), ext.e(l), std::move(v));
            }
    }

    t.set_weights(std::move(weights));
    ext.table = std::move(t);

    auto report = validate(ext.table);
    if (!report.ok())
        throw std::invalid_argument("extend: resulting table is not a graded Lie algebra (" +
                                    report.issues.front().message + ")");
    return ext;
}

/// (ad f)^2 for the designated element f at basis index 2.
[[nodiscard]] inline LinearMap adf_squared(const AlgebraTable& S) {
    if (S.dim() < 3) throw std::invalid_argument("adf_squared: table too small");
    LinearMap adf = S.ad(std::size_t{2});
    return adf.compose(adf);
}

/// The extension family of interest: s⊗A + g⊗U + K·D with g = (ad f)^2
/// of weight 2 acting through the first factor and D through the second.
[[nodiscard]] inline ExtendedAlgebra standard_extension(const AlgebraTable& A, const LinearMap& D,
                                                        const Subspace& U) {
    ExtensionSpec spec{
        .S = three_dim_simple(),
        .A = A,
        .outer = {},
        .outer_weights = {},
        .outer_labels = {},
        .U = U,
        .coeff_ders = {D},
        .coeff_labels = {"partial"},
    };
    if (U.dim() > 0) {
        spec.outer = {adf_squared(spec.S)};
        spec.outer_weights = {2};
        spec.outer_labels = {"g"};
    }
    return extend(spec);
}

}  // namespace lieform
