#include "hilbcm/cycle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>
#include <random>

#include "hilbcm/errors.hpp"

namespace hilbcm {

std::size_t ZeroCycle::total_multiplicity() const {
    std::size_t t = 0;
    if (exact)
        for (const auto& p : exact_points) t += p.multiplicity;
    else
        for (const auto& p : approx_points) t += p.multiplicity;
    return t;
}

std::vector<std::size_t> ZeroCycle::partition() const {
    std::vector<std::size_t> mults;
    if (exact)
        for (const auto& p : exact_points) mults.push_back(p.multiplicity);
    else
        for (const auto& p : approx_points) mults.push_back(p.multiplicity);
    std::sort(mults.rbegin(), mults.rend());
    return mults;
}

namespace {

void factor_into(mpz_class m, std::map<mpz_class, unsigned>& out);

// Pollard rho (Brent variant) for composites that survive trial division.
mpz_class pollard_rho(const mpz_class& n, gmp_randclass& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class m, std::map<mpz_class, unsigned>& out) {
    if (m < 0) m = -m;
    if (m <= 1) return;
    for (mpz_class p = 2; p * p <= m && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    }
    if (m == 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
        ++out[m];
        return;
    }
    static gmp_randclass rng(gmp_randinit_default);
    const mpz_class d = pollard_rho(m, rng);
    factor_into(d, out);
    factor_into(m / d, out);
}

std::vector<mpz_class> divisors(const mpz_class& m) {
    std::map<mpz_class, unsigned> factors;
    factor_into(m, factors);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // Clear denominators and strip trailing/leading zero structure.
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw PreconditionError("rational_roots: zero polynomial");
    mpz_class den_lcm = 1;
    for (const auto& q : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> ic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rational t = c[i] * Rational(den_lcm);
        ic[i] = t.get_num();
    }

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= ic.size()) return roots;  // constant after removing x^k

    const std::vector<mpz_class> num_divs = divisors(ic[low]);
    const std::vector<mpz_class> den_divs = divisors(ic.back());
    for (const mpz_class& p : num_divs)
        for (const mpz_class& q : den_divs) {
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval_poly(c, cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

ZeroCycle hilbert_chow_exact(const AdhmDatum& x) {
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);

    struct Piece {
        std::vector<Rational> prefix;
        Matrix basis;  // c x d, columns span the subspace
    };
    std::vector<Piece> pieces{{{}, Matrix::identity(x.c)}};

    for (std::size_t i = 0; i < x.n; ++i) {
        const std::vector<Rational> eigs = rational_roots(char_poly(x.B[i]));
        // Splitting check: generalized eigenspaces of the rational
        // eigenvalues must fill V.
        std::size_t filled = 0;
        std::vector<Matrix> powers;
        for (const Rational& lam : eigs) {
            const Matrix shifted = x.B[i] - Matrix::identity(x.c) * lam;
            const Matrix gen = mat_pow(shifted, x.c);
            filled += x.c - mat_rank(gen);
            powers.push_back(gen);
        }
        if (filled != x.c)
            throw IrrationalEigenvalueError(
                "characteristic polynomial of B_" + std::to_string(i) +
                " does not split over the rationals; use the approximate path");

        std::vector<Piece> next;
        for (const Piece& piece : pieces) {
            for (std::size_t e = 0; e < eigs.size(); ++e) {
                // Kernel of (B_i - lam)^c restricted to the subspace.
                const Matrix restricted = powers[e] * piece.basis;
                const auto ker = mat_kernel(restricted);
                if (ker.empty()) continue;
                Matrix sub(piece.basis.cols(), ker.size());
                for (std::size_t j = 0; j < ker.size(); ++j)
                    for (std::size_t r = 0; r < ker[j].size(); ++r) sub.at(r, j) = ker[j][r];
                Piece np;
                np.prefix = piece.prefix;
                np.prefix.push_back(eigs[e]);
                np.basis = piece.basis * sub;
                next.push_back(std::move(np));
            }
        }
        pieces = std::move(next);
    }

    ZeroCycle cyc;
    cyc.exact = true;
    for (const Piece& piece : pieces)
        cyc.exact_points.push_back({piece.prefix, piece.basis.cols()});
    std::sort(cyc.exact_points.begin(), cyc.exact_points.end(),
              [](const auto& a, const auto& b) { return a.coords < b.coords; });
    return cyc;
}

namespace {

double tuple_distance(const std::vector<std::complex<double>>& a,
                      const std::vector<std::complex<double>>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rational_to_double(m.at(i, j));
    return out;
}

std::size_t distinct_eig_count(const Eigen::VectorXcd& eigs, double tol) {
    std::vector<std::complex<double>> seen;
    for (Eigen::Index k = 0; k < eigs.size(); ++k) {
        bool fresh = true;
        for (const auto& s : seen)
            if (std::abs(eigs(k) - s) <= tol) fresh = false;
        if (fresh) seen.push_back(eigs(k));
    }
    return seen.size();
}

}  // namespace

ZeroCycle hilbert_chow_approx(const AdhmDatum& x, double tolerance, std::uint64_t seed) {
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);
    if (tolerance <= 0) throw PreconditionError("hilbert_chow_approx: tolerance must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(1, 20);
    std::vector<Eigen::MatrixXd> bs;
    for (const Matrix& b : x.B) bs.push_back(to_eigen(b));

    // Generic combination; re-draw gamma while two draws disagree on the
    // number of distinct eigenvalues.
    Eigen::MatrixXcd vectors;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 32)
            throw ClusteringAmbiguityError("eigenvalue structure unstable across draws");
        Eigen::MatrixXd l1 = Eigen::MatrixXd::Zero(x.c, x.c);
        Eigen::MatrixXd l2 = Eigen::MatrixXd::Zero(x.c, x.c);
        for (std::size_t i = 0; i < x.n; ++i) {
            l1 += coef(rng) * bs[i];
            l2 += coef(rng) * bs[i];
        }
        Eigen::EigenSolver<Eigen::MatrixXd> s1(l1), s2(l2);
        if (distinct_eig_count(s1.eigenvalues(), tolerance) !=
            distinct_eig_count(s2.eigenvalues(), tolerance))
            continue;
        vectors = s1.eigenvectors();
        break;
    }

    // Rayleigh quotients of each B_i on each eigenvector.
    std::vector<std::vector<std::complex<double>>> tuples(x.c);
    for (std::size_t k = 0; k < x.c; ++k) {
        const Eigen::VectorXcd v = vectors.col(k);
        const std::complex<double> nrm = v.dot(v);
        for (std::size_t i = 0; i < x.n; ++i)
            tuples[k].push_back(v.dot(bs[i] * v) / nrm);
    }

    // Single-linkage clustering at the user tolerance.
    std::vector<int> label(x.c, -1);
    int nclusters = 0;
    for (std::size_t k = 0; k < x.c; ++k) {
        if (label[k] >= 0) continue;
        label[k] = nclusters++;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t a = 0; a < x.c; ++a) {
                if (label[a] != label[k]) continue;
                for (std::size_t b = 0; b < x.c; ++b) {
                    if (label[b] >= 0) continue;
                    if (tuple_distance(tuples[a], tuples[b]) <= tolerance) {
                        label[b] = label[k];
                        grew = true;
                    }
                }
            }
        }
    }

    ZeroCycle cyc;
    cyc.exact = false;
    cyc.tolerance = tolerance;
    for (int cl = 0; cl < nclusters; ++cl) {
        std::vector<std::complex<double>> centroid(x.n, 0.0);
        std::size_t count = 0;
        for (std::size_t k = 0; k < x.c; ++k) {
            if (label[k] != cl) continue;
            for (std::size_t i = 0; i < x.n; ++i) centroid[i] += tuples[k][i];
            ++count;
        }
        for (auto& z : centroid) z /= static_cast<double>(count);
        cyc.approx_points.push_back({std::move(centroid), count});
    }

    // Ambiguity guard: clusters separated by less than twice the
    // tolerance admit a competing grouping.
    for (std::size_t a = 0; a < cyc.approx_points.size(); ++a)
        for (std::size_t b = a + 1; b < cyc.approx_points.size(); ++b)
            if (tuple_distance(cyc.approx_points[a].coords, cyc.approx_points[b].coords) <
                2.0 * tolerance)
                throw ClusteringAmbiguityError(
                    "two candidate clusterings within tolerance; refine the tolerance");
    return cyc;
}

bool cycle_trace_check(const AdhmDatum& x, const ZeroCycle& cyc, const std::vector<Poly>& probes) {
    for (const Poly& p : probes) {
        const Rational lhs = eval_poly_at_matrices(p, x.B).trace();
        if (cyc.exact) {
            Rational rhs = 0;
            for (const auto& pt : cyc.exact_points)
                rhs += p.eval_at_point(pt.coords) * Rational(static_cast<long>(pt.multiplicity));
            if (lhs != rhs) return false;
        } else {
            std::complex<double> rhs = 0;
            double max_coord = 1.0;
            for (const auto& pt : cyc.approx_points)
                for (const auto& z : pt.coords) max_coord = std::max(max_coord, std::abs(z));
            double norm_p = 0.0;
            for (const auto& [m, coefq] : p.terms())
                norm_p += std::abs(rational_to_double(coefq)) *
                          std::pow(max_coord, static_cast<double>(total_degree(m)));
            for (const auto& pt : cyc.approx_points) {
                std::complex<double> val = 0;
                for (const auto& [m, coefq] : p.terms()) {
                    std::complex<double> t = rational_to_double(coefq);
                    for (std::size_t i = 0; i < x.n; ++i)
                        for (unsigned k = 0; k < m[i]; ++k) t *= pt.coords[i];
                    val += t;
                }
                rhs += val * static_cast<double>(pt.multiplicity);
            }
            const double bound =
                static_cast<double>(x.c) * cyc.tolerance * (1.0 + norm_p) * 10.0;
            if (std::abs(rational_to_double(lhs) - rhs) > bound) return false;
        }
    }
    return true;
}

}  // namespace hilbcm
