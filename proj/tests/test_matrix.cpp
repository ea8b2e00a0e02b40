#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hilbcm/matrix.hpp"

using namespace hilbcm;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(mat_rank(Matrix::identity(2)) == 2);
    CHECK(mat_rank(Matrix::zero(2, 2)) == 0);
    CHECK(mat_rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(mat_kernel(Matrix::identity(3)).empty());

    const auto k1 = mat_kernel(from_rows({{1, -1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] == k1[0][1]);
    CHECK(k1[0][0] != 0);

    const auto k2 = mat_kernel(from_rows({{1, 2}, {2, 4}}));
    REQUIRE(k2.size() == 1);
    // proportional to (-2, 1)
    CHECK(k2[0][0] * Rational(1) == k2[0][1] * Rational(-2));
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 12), entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        const std::size_t cols = static_cast<std::size_t>(dim(rng));
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 3 != 0) {
                    Rational q(entry(rng), static_cast<int>(1 + rng() % 4));
                    q.canonicalize();
                    m.at(r, c) = q;
                }
        const auto ker = mat_kernel(m);
        CHECK(mat_rank(m) + ker.size() == cols);
        for (const auto& v : ker) {
            const auto mv = m.apply(v);
            for (const auto& q : mv) CHECK(q == 0);
        }
    }
}

TEST_CASE("solve and inverse") {
    const Matrix m = from_rows({{2, 1}, {1, 1}});
    const auto sol = mat_solve(m, {3, 2});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK((*sol)[1] == 1);

    const auto inv = mat_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == Matrix::identity(2));

    CHECK(!mat_inverse(from_rows({{1, 2}, {2, 4}})).has_value());
    CHECK(!mat_solve(from_rows({{1, 1}, {1, 1}}), {0, 1}).has_value());
}

TEST_CASE("characteristic polynomial") {
    // companion matrix of x^2 - 5x + 6
    const Matrix m = from_rows({{0, -6}, {1, 5}});
    const auto p = char_poly(m);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 6);
    CHECK(p[1] == -5);
    CHECK(p[2] == 1);

    // Cayley-Hamilton on a random 4x4
    std::mt19937_64 rng(11);
    Matrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) a.at(r, c) = static_cast<int>(rng() % 7) - 3;
    const auto cp = char_poly(a);
    Matrix acc(4, 4);
    for (std::size_t k = 0; k < cp.size(); ++k) acc = acc + mat_pow(a, k) * cp[k];
    CHECK(acc.is_zero());
}

TEST_CASE("incremental span insert semantics") {
    IncrementalSpan s(2);
    auto r1 = s.insert({1, 0});
    CHECK(r1.was_new);
    CHECK(s.rank() == 1);

    auto r2 = s.insert({1, 0});
    CHECK(!r2.was_new);
    REQUIRE(r2.coords.has_value());
    REQUIRE(r2.coords->size() == 1);
    CHECK((*r2.coords)[0] == 1);

    auto r3 = s.insert({0, 1});
    CHECK(r3.was_new);
    auto r4 = s.insert({1, 1});
    CHECK(!r4.was_new);
    REQUIRE(r4.coords.has_value());
    CHECK((*r4.coords) == std::vector<Rational>{1, 1});
}

TEST_CASE("span rank matches stacked matrix rank") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 1 + rng() % 6;
        IncrementalSpan s(dim);
        std::vector<std::vector<Rational>> vs;
        for (int k = 0; k < 8; ++k) {
            std::vector<Rational> v(dim);
            for (auto& q : v) q = static_cast<int>(rng() % 5) - 2;
            vs.push_back(v);
            const auto before = s.rank();
            const auto res = s.insert(v);
            CHECK(s.rank() == before + (res.was_new ? 1 : 0));
            if (!res.was_new) {
                // coords reconstruct v over the accepted vectors
                REQUIRE(res.coords.has_value());
                std::vector<Rational> rec(dim, 0);
                for (std::size_t m = 0; m < res.coords->size(); ++m)
                    for (std::size_t i = 0; i < dim; ++i)
                        rec[i] += (*res.coords)[m] * s.accepted()[m][i];
                CHECK(rec == v);
            }
        }
        Matrix stacked(vs.size(), dim);
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = 0; c < dim; ++c) stacked.at(r, c) = vs[r][c];
        CHECK(s.rank() == mat_rank(stacked));
    }
}
