// Dense bit-packed linear algebra over GF(2).
//
// Everything here is a value type: operations never mutate their inputs,
// workspaces are internal copies. Addition is XOR, multiplication is AND,
// and the canonical form of a subspace is the reduced row echelon basis,
// so subspace equality is bit-for-bit matrix equality.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieform::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

/// Vector over GF(2); bits beyond size() are kept zero.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t n) : len_(n), w_((n + word_bits - 1) / word_bits, 0) {}

    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i);
        return v;
    }

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) {
            if (b) v.set(i);
            ++i;
        }
        return v;
    }

    [[nodiscard]] std::size_t size() const { return len_; }

    [[nodiscard]] bool get(std::size_t i) const {
        check_index(i);
        return (w_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const Word mask = Word(1) << (i % word_bits);
        if (value)
            w_[i / word_bits] |= mask;
        else
            w_[i / word_bits] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        w_[i / word_bits] ^= Word(1) << (i % word_bits);
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    [[nodiscard]] bool is_zero() const {
        for (Word w : w_)
            if (w) return false;
        return true;
    }

    /// Index of the lowest set bit, or npos when zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    [[nodiscard]] std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * word_bits + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return npos;
    }

    [[nodiscard]] std::size_t popcount() const {
        std::size_t c = 0;
        for (Word w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Parity of the AND with another vector (the standard bilinear form).
    [[nodiscard]] bool dot(const BitVector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("BitVector dot: length mismatch");
        Word acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1u;
    }

    [[nodiscard]] std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for_each_set([&](std::size_t i) { s.push_back(i); });
        return s;
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            Word w = w_[k];
            while (w) {
                f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }

    /// "0110..." string, coordinate 0 first.
    [[nodiscard]] std::string to_string() const {
        std::string s(len_, '0');
        for_each_set([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector index out of range");
    }

    std::size_t len_ = 0;
    std::vector<Word> w_;
};

/// Row-major matrix over GF(2); all rows share length cols().
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.row_[i].set(i);
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
        for (const auto& r : rows)
            if (r.size() != cols) throw std::invalid_argument("BitMatrix: row length mismatch");
        BitMatrix m;
        m.rows_ = rows.size();
        m.cols_ = cols;
        m.row_ = std::move(rows);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] const BitVector& row(std::size_t i) const { return row_.at(i); }
    BitVector& row(std::size_t i) { return row_.at(i); }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return row_.at(i).get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { row_.at(i).set(j, v); }
    void flip(std::size_t i, std::size_t j) { row_.at(i).flip(j); }

    void append_row(BitVector r) {
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
        row_.push_back(std::move(r));
        ++rows_;
    }

    /// m · x with x of length cols(); result has length rows().
    [[nodiscard]] BitVector apply(const BitVector& x) const {
        if (x.size() != cols_) throw std::invalid_argument("BitMatrix apply: length mismatch");
        BitVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (row_[i].dot(x)) out.set(i);
        return out;
    }

    [[nodiscard]] BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            row_[i].for_each_set([&](std::size_t j) { t.row_[j].set(i); });
        return t;
    }

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix mul: shape mismatch");
        BitMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            a.row_[i].for_each_set([&](std::size_t k) { c.row_[i] ^= b.row_[k]; });
        return c;
    }

    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("BitMatrix xor: shape mismatch");
        for (std::size_t i = 0; i < a.rows_; ++i) a.row_[i] ^= b.row_[i];
        return a;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& r : row_)
            if (!r.is_zero()) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

namespace detail {

/// In-place reduction to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = BitVector::npos;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == BitVector::npos) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), BitVector(cols));
    return pivots;
}

}  // namespace detail

[[nodiscard]] inline std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return detail::rref(rows, m.cols()).size();
}

/// Subspace of GF(2)^ambient held as a reduced-row-echelon basis.
/// Two subspaces are equal iff their stored bases are identical.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        for (std::size_t i = 0; i < ambient; ++i) {
            s.basis_.push_back(BitVector::unit(ambient, i));
            s.pivots_.push_back(i);
        }
        return s;
    }

    static Subspace span(std::size_t ambient, std::vector<BitVector> generators) {
        for (const auto& g : generators)
            if (g.size() != ambient) throw std::invalid_argument("Subspace: generator length mismatch");
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = std::move(generators);
        s.pivots_ = detail::rref(s.basis_, ambient);
        return s;
    }

    static Subspace span(const BitMatrix& generators) {
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < generators.rows(); ++i) rows.push_back(generators.row(i));
        return span(generators.cols(), std::move(rows));
    }

    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<BitVector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] BitMatrix basis_matrix() const {
        return BitMatrix::from_rows(basis_, ambient_);
    }

    /// Residual of v after reduction against the echelon basis.
    [[nodiscard]] BitVector reduce(BitVector v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace reduce: length mismatch");
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (v.get(pivots_[r])) v ^= basis_[r];
        return v;
    }

    [[nodiscard]] bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    [[nodiscard]] bool contains(const Subspace& t) const {
        if (t.ambient_ != ambient_) throw std::invalid_argument("Subspace contains: ambient mismatch");
        for (const auto& b : t.basis_)
            if (!contains(b)) return false;
        return true;
    }

    /// Coordinates of v in the stored basis, if v lies in the subspace.
    [[nodiscard]] std::optional<BitVector> coordinates_of(const BitVector& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace coordinates: length mismatch");
        BitVector coords(basis_.size());
        BitVector rest = v;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if (rest.get(pivots_[r])) {
                coords.set(r);
                rest ^= basis_[r];
            }
        }
        if (!rest.is_zero()) return std::nullopt;
        return coords;
    }

    /// Adds v if independent; true when the dimension grew. The basis is
    /// re-normalized so the echelon invariant is preserved.
    bool grow(const BitVector& v) {
        BitVector r = reduce(v);
        if (r.is_zero()) return false;
        std::vector<BitVector> rows = basis_;
        rows.push_back(r);
        pivots_ = detail::rref(rows, ambient_);
        basis_ = std::move(rows);
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<BitVector> basis_;   // reduced row echelon, nonzero rows
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] inline Subspace nullspace(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    const auto pivots = detail::rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVector> kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(f)) v.set(pivots[r]);
        kernel.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), std::move(kernel));
}

/// Some x with m·x = b, or nullopt when the system is inconsistent.
[[nodiscard]] inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    // Eliminate on [m | b] packed as rows of length cols+1.
    const std::size_t n = m.cols();
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitVector r(n + 1);
        m.row(i).for_each_set([&](std::size_t j) { r.set(j); });
        if (b.get(i)) r.set(n);
        rows.push_back(std::move(r));
    }
    const auto pivots = detail::rref(rows, n + 1);
    BitVector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;  // row (0 … 0 | 1)
        if (rows[r].get(n)) x.set(pivots[r]);
    }
    return x;
}

[[nodiscard]] inline Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<BitVector> rows = s.basis();
    for (const auto& r : t.basis()) rows.push_back(r);
    return Subspace::span(s.ambient(), std::move(rows));
}

/// Zassenhaus: eliminate rows (u|u) for u in s and (w|0) for w in t;
/// rows with vanishing left half carry an intersection basis on the right.
[[nodiscard]] inline Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    const std::size_t n = s.ambient();
    std::vector<BitVector> rows;
    for (const auto& u : s.basis()) {
        BitVector r(2 * n);
        u.for_each_set([&](std::size_t j) {
            r.set(j);
            r.set(n + j);
        });
        rows.push_back(std::move(r));
    }
    for (const auto& w : t.basis()) {
        BitVector r(2 * n);
        w.for_each_set([&](std::size_t j) { r.set(j); });
        rows.push_back(std::move(r));
    }
    detail::rref(rows, 2 * n);
    std::vector<BitVector> inter;
    for (const auto& r : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = !r.get(j);
        if (!left_zero) continue;
        BitVector v(n);
        for (std::size_t j = 0; j < n; ++j)
            if (r.get(n + j)) v.set(j);
        if (!v.is_zero()) inter.push_back(std::move(v));
    }
    return Subspace::span(n, std::move(inter));
}

/// dim s − dim t for t ⊆ s; throws when t is not contained in s.
[[nodiscard]] inline std::size_t quotient_dim(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw std::invalid_argument("quotient_dim: ambient mismatch");
    if (!s.contains(t)) throw std::invalid_argument("quotient_dim: t is not a subspace of s");
    return s.dim() - t.dim();
}

}  // namespace lieform::gf2
