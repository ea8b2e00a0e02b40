#include "hilbcm/monad.hpp"

#include <algorithm>
#include <random>

#include "hilbcm/cycle.hpp"
#include "hilbcm/errors.hpp"

namespace hilbcm {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MonadShape MonadShape::expected(std::size_t n, std::size_t c, std::size_t r) {
    MonadShape s;
    s.n = n;
    s.c = c;
    s.r = r;
    s.dims[1] = c;
    s.dims[0] = n * c + r;
    for (int i = -1; i >= 1 - static_cast<int>(n); --i)
        s.dims[i] = binomial(n, static_cast<std::size_t>(1 - i)) * c;
    return s;
}

Matrix LinearFormMap::evaluate(const std::vector<Rational>& z) const {
    if (z.size() != coeffs.size()) throw PreconditionError("fiber coordinate arity mismatch");
    Matrix acc(rows, cols);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (z[k] != 0) acc = acc + coeffs[k] * z[k];
    return acc;
}

namespace {

// Sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Places the c x c block `b` at block position (bi, bj) of `m`.
void put_block(Matrix& m, std::size_t c, std::size_t bi, std::size_t bj, const Matrix& b) {
    for (std::size_t r = 0; r < c; ++r)
        for (std::size_t s = 0; s < c; ++s) m.at(bi * c + r, bj * c + s) = b.at(r, s);
}

}  // namespace

LinearFormMap alpha0_map(const AdhmDatum& x) {
    x.validate();
    LinearFormMap a;
    a.rows = x.c;
    a.cols = x.n * x.c + 1;
    a.coeffs.assign(x.n + 1, Matrix(a.rows, a.cols));
    for (std::size_t i = 0; i < x.n; ++i) {
        // Column block i carries B_i z_n - z_i.
        for (std::size_t r = 0; r < x.c; ++r) {
            a.coeffs[i].at(r, i * x.c + r) = -1;
            for (std::size_t s = 0; s < x.c; ++s)
                a.coeffs[x.n].at(r, i * x.c + s) = x.B[i].at(r, s);
        }
    }
    for (std::size_t r = 0; r < x.c; ++r) a.coeffs[x.n].at(r, x.n * x.c) = x.I.at(r, 0);
    return a;
}

ExtendedMonad build_monad(const AdhmDatum& x) {
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);
    if (x.n < 2) throw PreconditionError("build_monad: requires n >= 2");
    {
        const KrylovResult kr = krylov(x);
        if (kr.rank != x.c) throw NotStableError(kr.rank, x.c);
    }

    const std::size_t n = x.n, c = x.c;
    ExtendedMonad m;
    m.shape = MonadShape::expected(n, c, 1);

    // Deep differentials contract the factors L_j = B_j z_n - z_j along
    // the exterior algebra on n slots: the column indexed by a k-subset
    // S sends its t-th member j to the row S \ {j} with sign -(-1)^t for
    // k >= 2 and +1 for k = 1, reproducing the published 3-variable
    // matrices exactly.
    for (int deg = 1 - static_cast<int>(n); deg <= 0; ++deg) {
        const std::size_t k = static_cast<std::size_t>(1 - deg);  // source = Lambda^k
        const auto src = subsets(n, k);
        const auto dst = subsets(n, k - 1);
        auto dst_index = [&](const std::vector<std::size_t>& s) {
            return static_cast<std::size_t>(
                std::find(dst.begin(), dst.end(), s) - dst.begin());
        };

        LinearFormMap a;
        a.rows = m.shape.dims.at(deg + 1);
        a.cols = m.shape.dims.at(deg);
        a.coeffs.assign(n + 1, Matrix(a.rows, a.cols));

        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& s = src[col];
            for (std::size_t t = 0; t < s.size(); ++t) {
                const std::size_t j = s[t];
                std::vector<std::size_t> rest = s;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
                const std::size_t row = dst_index(rest);
                const int sign = (k == 1) ? 1 : ((t % 2 == 0) ? -1 : 1);
                // L_j = B_j z_n - z_j on this block.
                put_block(a.coeffs[n], c, row, col, x.B[j] * Rational(sign));
                put_block(a.coeffs[j], c, row, col, Matrix::identity(c) * Rational(-sign));
            }
        }
        if (deg == 0) {
            // The degree-0 source also has the W summand, appended after
            // the Lambda^1 blocks; its only entry is I z_n.
            for (std::size_t r = 0; r < c; ++r) a.coeffs[n].at(r, n * c) = x.I.at(r, 0);
        }
        // (For deg == -1 the zero rows into W come from the larger
        // target size; nothing to fill.)
        m.alphas[deg] = std::move(a);
    }
    return m;
}

std::pair<bool, std::vector<ComplexViolation>> check_complex(const ExtendedMonad& m) {
    std::vector<ComplexViolation> violations;
    for (auto it = m.alphas.begin(); it != m.alphas.end(); ++it) {
        auto next = std::next(it);
        if (next == m.alphas.end()) break;
        const LinearFormMap& lo = it->second;
        const LinearFormMap& hi = next->second;
        const std::size_t nz = lo.coeffs.size();
        for (std::size_t k = 0; k < nz; ++k)
            for (std::size_t l = k; l < nz; ++l) {
                const Matrix prod = (k == l)
                                        ? hi.coeffs[k] * lo.coeffs[k]
                                        : hi.coeffs[k] * lo.coeffs[l] + hi.coeffs[l] * lo.coeffs[k];
                if (!prod.is_zero()) violations.push_back({it->first, k, l});
            }
    }
    return {violations.empty(), violations};
}

std::map<int, FiberDegreeProfile> fiber_profile(const ExtendedMonad& m,
                                                const std::vector<Rational>& z) {
    bool all_zero = true;
    for (const auto& q : z)
        if (q != 0) all_zero = false;
    if (all_zero) throw PreconditionError("fiber_profile: zero coordinate vector");

    std::map<int, std::size_t> out_rank;
    std::map<int, std::size_t> ker_dim;
    for (const auto& [deg, a] : m.alphas) {
        const Matrix eval = a.evaluate(z);
        const std::size_t r = mat_rank(eval);
        out_rank[deg] = r;
        ker_dim[deg] = a.cols - r;
    }

    std::map<int, FiberDegreeProfile> profile;
    const int lowest = m.alphas.begin()->first;
    for (const auto& [deg, dim] : m.shape.dims) {
        FiberDegreeProfile p{};
        const auto it = out_rank.find(deg);
        p.rank = it == out_rank.end() ? 0 : it->second;
        const std::size_t kernel = it == out_rank.end() ? dim : ker_dim.at(deg);
        const std::size_t image_in = deg == lowest ? 0 : out_rank.at(deg - 1);
        p.cohomology_dim = kernel - image_in;
        profile[deg] = p;
    }
    return profile;
}

bool check_surjectivity_certificate(const AdhmDatum& x, std::size_t samples, std::uint64_t seed) {
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);
    const LinearFormMap a0 = alpha0_map(x);
    const bool stable = is_stable(x);

    if (stable) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coord(-9, 9);
        for (std::size_t s = 0; s < samples; ++s) {
            std::vector<Rational> z(x.n + 1);
            for (std::size_t i = 0; i < x.n; ++i) z[i] = coord(rng);
            int zn = 0;
            while (zn == 0) zn = coord(rng);
            z[x.n] = zn;
            if (mat_rank(a0.evaluate(z)) != x.c) return false;
        }
        return true;
    }

    // Unstable: look for a rank-deficient fiber over a joint eigenvalue.
    try {
        const ZeroCycle cyc = hilbert_chow_exact(x);
        for (const auto& pt : cyc.exact_points) {
            std::vector<Rational> z = pt.coords;
            z.push_back(1);
            if (mat_rank(a0.evaluate(z)) < x.c) return true;
        }
    } catch (const IrrationalEigenvalueError&) {
        return false;  // inconclusive without exact eigenvalues
    }
    return false;
}

}  // namespace hilbcm
