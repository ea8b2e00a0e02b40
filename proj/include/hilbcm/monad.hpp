#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hilbcm/adhm.hpp"

namespace hilbcm {

// Graded dimension bookkeeping for the perfect extended monad of a
// rank-r ideal-type sheaf: dims[1] = c, dims[0] = n*c + r,
// dims[i] = binom(n, 1-i) * c for i < 0.
struct MonadShape {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t r = 1;
    std::map<int, std::size_t> dims;  // degrees 1-n .. 1

    static MonadShape expected(std::size_t n, std::size_t c, std::size_t r = 1);
};

// Map whose entries are linear forms in the homogeneous coordinates
// z_0..z_n, stored as n+1 constant coefficient matrices.
struct LinearFormMap {
    std::size_t rows = 0, cols = 0;
    std::vector<Matrix> coeffs;  // n+1 matrices, one per z_k

    Matrix evaluate(const std::vector<Rational>& z) const;
};

struct ExtendedMonad {
    MonadShape shape;
    // Keyed by source degree i in {1-n, ..., 0}; alphas[i] maps the
    // degree-i term (dims[i]) into the degree-(i+1) term (dims[i+1]).
    std::map<int, LinearFormMap> alphas;
};

struct ComplexViolation {
    int source_degree;     // the deeper of the two composed differentials
    std::size_t k, l;      // offending coordinate pair (k <= l)
};

std::size_t binomial(std::size_t n, std::size_t k);

// The degree-0 differential (B_0 z_n - z_0 | ... | B_{n-1} z_n - z_{n-1} | I z_n)
// alone; defined for any datum, stable or not.
LinearFormMap alpha0_map(const AdhmDatum& x);

// Builds the full perfect extended monad of a commuting stable datum,
// n >= 2. The output always passes check_complex.
ExtendedMonad build_monad(const AdhmDatum& x);

// Verifies the symmetric coefficient identities of consecutive
// differentials exactly.
std::pair<bool, std::vector<ComplexViolation>> check_complex(const ExtendedMonad& m);

struct FiberDegreeProfile {
    std::size_t rank;            // of the outgoing differential (0 at the top degree)
    std::size_t cohomology_dim;  // dim ker / im at this degree
};

// Evaluates every differential at a nonzero point z of P^n and returns
// the rank and cohomology dimension per degree.
std::map<int, FiberDegreeProfile> fiber_profile(const ExtendedMonad& m,
                                                const std::vector<Rational>& z);

// Samples random fibers with z_n != 0 and certifies that rank
// alpha_0(z) = c exactly when the datum is stable; for unstable data a
// rank-deficient fiber is searched among the joint-eigenvalue
// candidates. Returns false only when inconclusive.
bool check_surjectivity_certificate(const AdhmDatum& x, std::size_t samples, std::uint64_t seed);

}  // namespace hilbcm
