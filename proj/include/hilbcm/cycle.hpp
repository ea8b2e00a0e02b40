#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "hilbcm/adhm.hpp"

namespace hilbcm {

// Support cycle of a commuting datum: points with multiplicities
// summing to c. Exact points are rational; approximate points come from
// the floating eigenvalue path and may be complex.
struct ZeroCycle {
    struct ExactPoint {
        std::vector<Rational> coords;
        std::size_t multiplicity;
    };
    struct ApproxPoint {
        std::vector<std::complex<double>> coords;
        std::size_t multiplicity;
    };

    bool exact = true;
    double tolerance = 0.0;  // approximate path only
    std::vector<ExactPoint> exact_points;
    std::vector<ApproxPoint> approx_points;

    std::size_t total_multiplicity() const;
    // Multiplicities sorted descending (the stratum label).
    std::vector<std::size_t> partition() const;
};

// Distinct rational roots of a polynomial with rational coefficients
// (degree ascending). Exposed for testing.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

// Joint eigenvalue tuples with generalized-eigenspace multiplicities.
// Requires every B_i's characteristic polynomial to split over the
// rationals; otherwise IrrationalEigenvalueError names the offender.
ZeroCycle hilbert_chow_exact(const AdhmDatum& x);

// Floating path: eigen-decompose a random integer combination of the
// B_i and read joint eigenvalues as Rayleigh quotients, clustered by
// single linkage at the given tolerance. Ambiguous clusterings raise
// ClusteringAmbiguityError rather than guessing.
ZeroCycle hilbert_chow_approx(const AdhmDatum& x, double tolerance, std::uint64_t seed = 0);

// Trace identity trace p(B) = sum nu_l p(p_l); exact equality on the
// exact path, a c*tolerance*|p|-scaled bound on the approximate path.
bool cycle_trace_check(const AdhmDatum& x, const ZeroCycle& cyc, const std::vector<Poly>& probes);

}  // namespace hilbcm
