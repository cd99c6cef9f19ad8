#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace quadchrom::gf2 {

/// Bit-packed vector over GF(2).
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool any() const;
    std::size_t popcount() const;
    std::vector<std::size_t> set_bits() const;

    Vector& operator^=(const Vector& other);
    friend Vector operator^(Vector lhs, const Vector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    bool operator==(const Vector&) const = default;

    /// |a AND b| mod 2 without materialising the intersection.
    static std::size_t and_popcount(const Vector& a, const Vector& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2), stored row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Vector(cols)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { data_[r].flip(c); }

    const Vector& row(std::size_t r) const { return data_[r]; }
    Vector& row(std::size_t r) { return data_[r]; }

    Matrix transposed() const;

    /// Matrix-vector product M x.
    Vector apply(const Vector& x) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Vector> data_;
};

/// Rank over GF(2); the input is copied, elimination uses the lowest
/// untouched row as pivot so results are reproducible bit for bit.
std::size_t rank(const Matrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent.
/// Free coordinates are set to zero, so the solution is canonical.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Canonical basis of the null space; size() == cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);

}  // namespace quadchrom::gf2
