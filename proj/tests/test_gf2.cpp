#include <random>

#include "doctest.h"
#include "quadchrom/gf2.hpp"

using namespace quadchrom;

namespace {

// Reference elimination on plain integer matrices, kept deliberately
// independent of the bit-packed implementation.
int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (static_cast<int>(i) != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

std::vector<std::vector<int>> to_naive(const gf2::Matrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

gf2::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
    gf2::Matrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
    CHECK(gf2::rank(gf2::Matrix(4, 7)) == 0);
    CHECK(gf2::rank(gf2::Matrix::identity(5)) == 5);
}

TEST_CASE("rank matches the reference elimination on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
        gf2::Matrix m = random_matrix(rng, rows, cols, 0.4);
        CHECK(gf2::rank(m) == static_cast<std::size_t>(naive_rank(to_naive(m))));
        CHECK(gf2::rank(m) == gf2::rank(m.transposed()));
    }
}

TEST_CASE("solve on the identity returns b, and b = 0 returns 0") {
    gf2::Matrix id = gf2::Matrix::identity(6);
    gf2::Vector b(6);
    b.set(1, true);
    b.set(4, true);
    auto x = gf2::solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    gf2::Vector zero(6);
    auto x0 = gf2::solve(id, zero);
    REQUIRE(x0.has_value());
    CHECK(!x0->any());
}

TEST_CASE("solve returns a valid solution exactly when the system is consistent") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t rows = 1 + rng() % 15, cols = 1 + rng() % 15;
        gf2::Matrix m = random_matrix(rng, rows, cols, 0.35);
        gf2::Vector b(rows);
        for (std::size_t r = 0; r < rows; ++r) b.set(r, rng() & 1);
        auto x = gf2::solve(m, b);
        // rank([M|b]) > rank(M) iff inconsistent
        gf2::Matrix aug(rows, cols + 1);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) aug.set(r, c, m.get(r, c));
            aug.set(r, cols, b.get(r));
        }
        bool consistent = gf2::rank(aug) == gf2::rank(m);
        CHECK(x.has_value() == consistent);
        if (x) CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("kernel basis size and membership") {
    CHECK(gf2::kernel_basis(gf2::Matrix::identity(4)).empty());
    CHECK(gf2::kernel_basis(gf2::Matrix(3, 3)).size() == 3);

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        gf2::Matrix m = random_matrix(rng, rows, cols, 0.4);
        auto basis = gf2::kernel_basis(m);
        CHECK(basis.size() == cols - gf2::rank(m));  // rank-nullity
        for (const auto& v : basis) CHECK(!m.apply(v).any());
        // Independence: stack as rows and check full rank.
        gf2::Matrix stacked(basis.size(), cols);
        for (std::size_t i = 0; i < basis.size(); ++i) stacked.row(i) = basis[i];
        CHECK(gf2::rank(stacked) == basis.size());
    }
}

TEST_CASE("results are reproducible across repeated runs") {
    std::mt19937 rng(99);
    gf2::Matrix m = random_matrix(rng, 18, 25, 0.3);
    gf2::Vector b(18);
    for (std::size_t r = 0; r < 18; ++r) b.set(r, rng() & 1);
    auto x1 = gf2::solve(m, b);
    auto x2 = gf2::solve(m, b);
    CHECK(x1 == x2);
    auto k1 = gf2::kernel_basis(m);
    auto k2 = gf2::kernel_basis(m);
    CHECK(k1 == k2);
}
