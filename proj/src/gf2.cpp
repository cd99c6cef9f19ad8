#include "quadchrom/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace quadchrom::gf2 {

bool Vector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t Vector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<std::size_t> Vector::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

Vector& Vector::operator^=(const Vector& other) {
    if (size_ != other.size_) throw std::invalid_argument("gf2: vector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::size_t Vector::and_popcount(const Vector& a, const Vector& b) {
    if (a.size_ != b.size_) throw std::invalid_argument("gf2: vector size mismatch");
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
        n += std::popcount(a.words_[i] & b.words_[i]);
    return n;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : data_[r].set_bits()) t.set(c, r, true);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("gf2: apply dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        y.set(r, Vector::and_popcount(data_[r], x) & 1);
    return y;
}

namespace {

struct Echelon {
    Matrix m;
    Vector rhs;             // eliminated alongside when solving
    bool with_rhs = false;
    // pivot_cols[i] is the column of the i-th pivot, pivot_rows[i] its row.
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_rows;
    std::vector<bool> row_used;
};

// Full reduction (RREF). Pivot rule: scan columns left to right, take the
// lowest-index row not yet used as a pivot.
Echelon reduce(const Matrix& in, const Vector* b) {
    Echelon e;
    e.m = in;
    e.row_used.assign(in.rows(), false);
    if (b) {
        e.rhs = *b;
        e.with_rhs = true;
    }
    for (std::size_t col = 0; col < in.cols(); ++col) {
        std::size_t pivot = in.rows();
        for (std::size_t r = 0; r < in.rows(); ++r) {
            if (!e.row_used[r] && e.m.get(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == in.rows()) continue;
        e.row_used[pivot] = true;
        e.pivot_cols.push_back(col);
        e.pivot_rows.push_back(pivot);
        for (std::size_t r = 0; r < in.rows(); ++r) {
            if (r != pivot && e.m.get(r, col)) {
                e.m.row(r) ^= e.m.row(pivot);
                if (e.with_rhs && e.rhs.get(pivot)) e.rhs.flip(r);
            }
        }
    }
    return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return reduce(m, nullptr).pivot_cols.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("gf2: solve dimension mismatch");
    Echelon e = reduce(m, &b);
    // Inconsistent iff some fully eliminated row still has a 1 on the right.
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!e.row_used[r] && e.rhs.get(r)) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        x.set(e.pivot_cols[i], e.rhs.get(e.pivot_rows[i]));
    return x;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    Echelon e = reduce(m, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.m.get(e.pivot_rows[i], free)) v.set(e.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace quadchrom::gf2
