#pragma once

// Dense-bitset linear algebra over F2: rank, kernel, solve, quotient bases.
// Elimination uses column-major ascending pivoting throughout so that solve()
// and all basis outputs are deterministic.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static F2Vector from_support(std::size_t len, const std::vector<std::size_t>& support) {
        F2Vector v(len);
        for (auto i : support) v.flip(i);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool b) {
        check(i);
        uint64_t m = uint64_t(1) << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) {
        check(i);
        w_[i >> 6] ^= uint64_t(1) << (i & 63);
    }

    F2Vector& operator^=(const F2Vector& o) {
        if (o.len_ != len_) throw std::invalid_argument("F2Vector xor: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { a ^= b; return a; }

    bool operator==(const F2Vector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const F2Vector& o) const { return !(*this == o); }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    std::size_t weight() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }
    // parity of <this, other>
    bool dot(const F2Vector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("F2Vector dot: length mismatch");
        uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return __builtin_popcountll(acc) & 1;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s.push_back(i);
        return s;
    }

private:
    void check(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("F2Vector index " + std::to_string(i));
    }
    std::size_t len_ = 0;
    std::vector<uint64_t> w_;
};

// Row-bitset matrix. Sparse COO input is normalized on construction
// (duplicate coordinates cancel mod 2).
class F2Matrix {
public:
    static constexpr std::size_t kMaxNnz = std::size_t(1) << 20;

    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, F2Vector(cols)) {}

    static F2Matrix from_coo(std::size_t rows, std::size_t cols,
                             const std::vector<std::pair<std::size_t, std::size_t>>& nnz) {
        if (nnz.size() > kMaxNnz)
            throw std::invalid_argument("F2Matrix: nnz above 2^20, beyond supported scale");
        F2Matrix m(rows, cols);
        for (auto [r, c] : nnz) {
            if (r >= rows || c >= cols) throw std::out_of_range("F2Matrix coo entry out of range");
            m.data_[r].flip(c);
        }
        return m;
    }
    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].set(i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool b) { data_.at(r).set(c, b); }
    void flip(std::size_t r, std::size_t c) { data_.at(r).flip(c); }

    const F2Vector& row(std::size_t r) const { return data_.at(r); }
    F2Vector col(std::size_t c) const {
        F2Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.set(r, data_[r].get(c));
        return v;
    }

    F2Matrix transpose() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (data_[r].get(c)) t.data_[c].set(r, true);
        return t;
    }

    F2Vector mul(const F2Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix::mul: dimension mismatch");
        F2Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.set(r, data_[r].dot(v));
        return out;
    }
    F2Matrix mul(const F2Matrix& o) const {
        if (o.rows_ != cols_) throw std::invalid_argument("F2Matrix::mul: dimension mismatch");
        F2Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t k = 0; k < cols_; ++k)
                if (data_[r].get(k)) out.data_[r] ^= o.data_[k];
        }
        return out;
    }

    bool is_zero() const {
        for (auto& r : data_) if (r.any()) return false;
        return true;
    }
    std::size_t nnz() const {
        std::size_t c = 0;
        for (auto& r : data_) c += r.weight();
        return c;
    }
    std::size_t max_row_weight() const {
        std::size_t m = 0;
        for (auto& r : data_) m = std::max(m, r.weight());
        return m;
    }
    std::size_t max_col_weight() const {
        std::size_t m = 0;
        for (std::size_t c = 0; c < cols_; ++c) m = std::max(m, col(c).weight());
        return m;
    }
    std::vector<std::pair<std::size_t, std::size_t>> to_coo() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t r = 0; r < rows_; ++r)
            for (auto c : data_[r].support()) out.emplace_back(r, c);
        return out;
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F2Vector> data_;
};

namespace detail {

// Row echelon state: reduced rows plus their pivot columns, pivoting
// column-major ascending.
struct Echelon {
    std::vector<F2Vector> rows;
    std::vector<std::size_t> pivots;

    // Reduce v by the current rows; returns the remainder.
    F2Vector reduce(F2Vector v) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        return v;
    }
    // Try to insert v; returns true if it extended the span.
    bool insert(const F2Vector& v) {
        F2Vector r = reduce(v);
        std::size_t p = r.size();
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r.get(c)) { p = c; break; }
        if (p == r.size()) return false;
        // back-substitute to keep rows fully reduced
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(p)) rows[i] ^= r;
        rows.push_back(r);
        pivots.push_back(p);
        // keep pivot order ascending
        for (std::size_t i = rows.size(); i-- > 1;) {
            if (pivots[i] < pivots[i - 1]) {
                std::swap(pivots[i], pivots[i - 1]);
                std::swap(rows[i], rows[i - 1]);
            } else break;
        }
        return true;
    }
    bool contains(const F2Vector& v) const { return !reduce(v).any(); }
};

}  // namespace detail

inline std::size_t rank(const F2Matrix& m) {
    detail::Echelon e;
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.rows.size();
}

// Basis of { v : m v = 0 }. Vectors are independent and span ker(m).
inline std::vector<F2Vector> kernel_basis(const F2Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // eliminate on the transpose-augmented system: reduce columns
    std::vector<F2Vector> work(rows, F2Vector(cols));
    for (std::size_t r = 0; r < rows; ++r) work[r] = m.row(r);
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rk; r < rows; ++r)
            if (work[r].get(c)) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(work[rk], work[piv]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rk && work[r].get(c)) work[r] ^= work[rk];
        pivot_of_col[c] = rk;
        ++rk;
    }
    std::vector<F2Vector> ker;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != SIZE_MAX) continue;
        F2Vector v(cols);
        v.set(c, true);
        for (std::size_t cc = 0; cc < cols; ++cc) {
            if (pivot_of_col[cc] == SIZE_MAX) continue;
            if (work[pivot_of_col[cc]].get(c)) v.set(cc, true);
        }
        ker.push_back(v);
    }
    return ker;
}

// Deterministic solve of m x = b; nullopt if b is outside the column space.
inline std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length != rows");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<F2Vector> work(rows, F2Vector(cols));
    for (std::size_t r = 0; r < rows; ++r) work[r] = m.row(r);
    F2Vector rhs = b;
    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> pivot_row;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rk; r < rows; ++r)
            if (work[r].get(c)) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(work[rk], work[piv]);
        {
            bool t = rhs.get(rk); rhs.set(rk, rhs.get(piv)); rhs.set(piv, t);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rk && work[r].get(c)) {
                work[r] ^= work[rk];
                if (rhs.get(rk)) rhs.flip(r);
            }
        }
        pivot_col.push_back(c);
        pivot_row.push_back(rk);
        ++rk;
    }
    for (std::size_t r = rk; r < rows; ++r)
        if (rhs.get(r)) return std::nullopt;
    F2Vector x(cols);
    for (std::size_t i = 0; i < rk; ++i)
        if (rhs.get(pivot_row[i])) x.set(pivot_col[i], true);
    return x;
}

// Independent subset of the given vectors (in order), i.e. a basis of their span.
inline std::vector<F2Vector> span_basis(const std::vector<F2Vector>& vecs) {
    detail::Echelon e;
    std::vector<F2Vector> out;
    for (auto& v : vecs)
        if (e.insert(v)) out.push_back(v);
    return out;
}

inline bool in_span(const std::vector<F2Vector>& basis, const F2Vector& v) {
    detail::Echelon e;
    for (auto& b : basis) e.insert(b);
    return e.contains(v);
}

// Extend `subspace` to a basis of span(within); returns the coset representatives.
// Throws if subspace is not contained in span(within).
inline std::vector<F2Vector> quotient_basis(const std::vector<F2Vector>& subspace,
                                            const std::vector<F2Vector>& within) {
    detail::Echelon whole;
    for (auto& v : within) whole.insert(v);
    detail::Echelon sub;
    for (auto& v : subspace) {
        if (!whole.contains(v))
            throw std::invalid_argument("quotient_basis: subspace not contained in ambient span");
        sub.insert(v);
    }
    std::vector<F2Vector> reps;
    for (auto& v : within)
        if (sub.insert(v)) reps.push_back(v);
    return reps;
}

}  // namespace gf
