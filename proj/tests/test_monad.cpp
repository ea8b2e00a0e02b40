#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "hilbcm/errors.hpp"
#include "hilbcm/monad.hpp"

using namespace hilbcm;

namespace {

AdhmDatum p3_points_datum(const std::vector<std::vector<Rational>>& pts) {
    return datum_from_points(pts, 3);
}

std::vector<Rational> chart_point(const std::vector<Rational>& affine) {
    std::vector<Rational> z = affine;
    z.push_back(1);
    return z;
}

}  // namespace

TEST_CASE("shape bookkeeping across n and c") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t c = 1; c <= 8; ++c) {
            const auto s = MonadShape::expected(n, c, 1);
            CHECK(s.dims.at(1) == c);
            CHECK(s.dims.at(0) == n * c + 1);
            for (int i = -1; i >= 1 - static_cast<int>(n); --i)
                CHECK(s.dims.at(i) == binomial(n, static_cast<std::size_t>(1 - i)) * c);
            CHECK(s.dims.size() == n + 1);
        }
}

TEST_CASE("built monads carry the expected shape and pass the complex check") {
    std::mt19937_64 rng(71);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int t = 0; t < 4; ++t) {
            const std::size_t c = 1 + rng() % 3;
            const auto x = corpus::random_stable(rng, n, c);
            const auto m = build_monad(x);
            CHECK(m.shape.dims == MonadShape::expected(n, c, 1).dims);
            CHECK(m.alphas.size() == n);
            for (const auto& [deg, a] : m.alphas) {
                CHECK(a.cols == m.shape.dims.at(deg));
                CHECK(a.rows == m.shape.dims.at(deg + 1));
                CHECK(a.coeffs.size() == n + 1);
            }
            CHECK(check_complex(m).first);
        }
}

TEST_CASE("three-variable differentials match the published block pattern") {
    // c=1, B=(0,0,0), I=(1): alpha_0 = (-z_0, -z_1, -z_2, z_3)
    AdhmDatum x;
    x.n = 3;
    x.c = 1;
    x.B.assign(3, Matrix(1, 1));
    x.I = Matrix(1, 1);
    x.I.at(0, 0) = 1;
    const auto m = build_monad(x);

    const auto a0 = m.alphas.at(0).evaluate({Rational(1), 0, 0, 0});
    CHECK(a0.at(0, 0) == -1);
    CHECK(a0.at(0, 3) == 0);
    const auto a0w = m.alphas.at(0).evaluate({0, 0, 0, Rational(1)});
    CHECK(a0w.at(0, 3) == 1);

    std::map<int, std::size_t> dims{{-2, 1}, {-1, 3}, {0, 4}, {1, 1}};
    CHECK(m.shape.dims == dims);

    // alpha_{-2} column over generic z: (-L_2, L_1, -L_0) with L_j = B_j z_3 - z_j
    const std::vector<Rational> z{2, 3, 5, 7};
    // With B = 0: L_j = -z_j, so (-L_2, L_1, -L_0) = (z_2, -z_1, z_0).
    const auto am2 = m.alphas.at(-2).evaluate(z);
    CHECK(am2.at(0, 0) == z[2]);
    CHECK(am2.at(1, 0) == -z[1]);
    CHECK(am2.at(2, 0) == z[0]);

    // alpha_{-1} = [[L_1, L_2, 0], [-L_0, 0, L_2], [0, -L_0, -L_1], [0,0,0]]
    const auto am1 = m.alphas.at(-1).evaluate(z);
    CHECK(am1.at(0, 0) == -z[1]);
    CHECK(am1.at(0, 1) == -z[2]);
    CHECK(am1.at(0, 2) == 0);
    CHECK(am1.at(1, 0) == z[0]);
    CHECK(am1.at(1, 1) == 0);
    CHECK(am1.at(1, 2) == -z[2]);
    CHECK(am1.at(2, 0) == 0);
    CHECK(am1.at(2, 1) == z[0]);
    CHECK(am1.at(2, 2) == z[1]);
    for (std::size_t j = 0; j < 3; ++j) CHECK(am1.at(3, j) == 0);
}

TEST_CASE("complex check detects broken commutation") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 10; ++t) {
        const std::size_t c = 2 + rng() % 3;
        const auto x = corpus::random_stable(rng, 3, c);
        auto broken = x;
        // randomly perturb one entry of one B_i
        const std::size_t i = rng() % 3, r = rng() % c, s = rng() % c;
        broken.B[i].at(r, s) += Rational(1 + static_cast<int>(rng() % 3));
        if (is_commuting(broken).first) continue;  // degenerate draw (c=1-like)

        // rebuild the pseudo-monad with the same formulas: bypass the
        // commutation gate by patching coefficients directly
        auto m = build_monad(x);
        const auto a0_broken = alpha0_map(broken);
        m.alphas[0] = a0_broken;
        // also rebuild alpha_{-1} blocks from the broken B via the
        // clean datum's monad plus the delta in the z_3 coefficient
        auto& am1 = m.alphas.at(-1);
        // delta only affects coeffs[3] blocks that carry B_i
        const Matrix delta = broken.B[i] - x.B[i];
        // columns of alpha_{-1} indexed by pairs {j,k}; entries carry
        // +-B_j z_3: adjust every block equal to +-x.B[i]
        for (std::size_t br = 0; br + c <= am1.rows; br += c)
            for (std::size_t bc = 0; bc + c <= am1.cols; bc += c) {
                Matrix blk(c, c);
                for (std::size_t rr = 0; rr < c; ++rr)
                    for (std::size_t cc = 0; cc < c; ++cc)
                        blk.at(rr, cc) = m.alphas.at(-1).coeffs[3].at(br + rr, bc + cc);
                if (blk == x.B[i])
                    for (std::size_t rr = 0; rr < c; ++rr)
                        for (std::size_t cc = 0; cc < c; ++cc)
                            am1.coeffs[3].at(br + rr, bc + cc) += delta.at(rr, cc);
                else if (blk == -x.B[i])
                    for (std::size_t rr = 0; rr < c; ++rr)
                        for (std::size_t cc = 0; cc < c; ++cc)
                            am1.coeffs[3].at(br + rr, bc + cc) -= delta.at(rr, cc);
            }
        const auto [ok, violations] = check_complex(m);
        CHECK(!ok);
        CHECK(!violations.empty());
    }
}

TEST_CASE("degenerate all-zero complex passes trivially") {
    ExtendedMonad m;
    m.shape = MonadShape::expected(3, 2, 1);
    for (int deg = -2; deg <= 0; ++deg) {
        LinearFormMap a;
        a.rows = m.shape.dims.at(deg + 1);
        a.cols = m.shape.dims.at(deg);
        a.coeffs.assign(4, Matrix(a.rows, a.cols));
        m.alphas[deg] = a;
    }
    CHECK(check_complex(m).first);
}

TEST_CASE("fiber profiles on the points monad") {
    const auto x = p3_points_datum({{0, 0, 0}, {1, 2, 3}});
    const auto m = build_monad(x);

    SUBCASE("generic fiber off the subscheme") {
        const auto prof = fiber_profile(m, chart_point({5, 5, 5}));
        CHECK(prof.at(-2).cohomology_dim == 0);
        CHECK(prof.at(-1).cohomology_dim == 0);
        CHECK(prof.at(0).cohomology_dim == 1);
        CHECK(prof.at(0).rank == 2);
    }
    SUBCASE("fiber over subscheme points jumps") {
        for (const auto& p : {std::vector<Rational>{0, 0, 0}, std::vector<Rational>{1, 2, 3}}) {
            const auto prof = fiber_profile(m, chart_point(p));
            CHECK(prof.at(0).cohomology_dim >= 2);
        }
    }
    SUBCASE("hyperplane fiber") {
        const auto prof = fiber_profile(m, {1, 4, 9, 0});
        CHECK(prof.at(0).cohomology_dim == 1);
        CHECK(prof.at(-1).cohomology_dim == 0);
        CHECK(prof.at(-2).cohomology_dim == 0);
    }
    SUBCASE("zero vector rejected") {
        CHECK_THROWS_AS(fiber_profile(m, {0, 0, 0, 0}), PreconditionError);
    }
}

TEST_CASE("surjectivity certificates") {
    const auto stable = p3_points_datum({{0, 0, 0}, {1, 1, 1}});
    CHECK(check_surjectivity_certificate(stable, 10, 5));

    AdhmDatum unstable;
    unstable.n = 3;
    unstable.c = 2;
    unstable.B.assign(3, Matrix(2, 2));
    unstable.I = Matrix(2, 1);
    unstable.I.at(0, 0) = 1;
    CHECK(check_surjectivity_certificate(unstable, 10, 5));

    AdhmDatum scalar;
    scalar.n = 3;
    scalar.c = 1;
    scalar.B.assign(3, Matrix(1, 1));
    scalar.I = Matrix(1, 1);
    scalar.I.at(0, 0) = 1;
    CHECK(check_surjectivity_certificate(scalar, 5, 5));
}

TEST_CASE("builder rejects bad inputs") {
    AdhmDatum unstable;
    unstable.n = 2;
    unstable.c = 2;
    unstable.B.assign(2, Matrix(2, 2));
    unstable.I = Matrix(2, 1);
    unstable.I.at(0, 0) = 1;
    CHECK_THROWS_AS(build_monad(unstable), NotStableError);

    AdhmDatum noncomm;
    noncomm.n = 2;
    noncomm.c = 2;
    noncomm.B.assign(2, Matrix(2, 2));
    noncomm.B[0].at(0, 1) = 1;
    noncomm.B[1].at(1, 0) = 1;
    noncomm.I = Matrix(2, 1);
    noncomm.I.at(0, 0) = 1;
    CHECK_THROWS_AS(build_monad(noncomm), NotCommutingError);

    AdhmDatum n1;
    n1.n = 1;
    n1.c = 1;
    n1.B = {Matrix::diagonal({1})};
    n1.I = Matrix(1, 1);
    n1.I.at(0, 0) = 1;
    CHECK_THROWS_AS(build_monad(n1), PreconditionError);
}
