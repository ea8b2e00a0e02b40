#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hilbcm/matrix.hpp"
#include "hilbcm/poly.hpp"

namespace hilbcm {

// n commuting endomorphisms of a c-dimensional space plus a vector
// I : W -> V with dim W = 1. Commutation is not enforced at
// construction; see is_commuting.
struct AdhmDatum {
    std::size_t n = 0;  // number of operators / ambient variables
    std::size_t c = 0;  // dim V
    std::vector<Matrix> B;  // n square matrices of size c
    Matrix I;               // c x 1

    void validate() const;  // shape invariants; c >= 1
};

struct KrylovResult {
    std::size_t rank = 0;
    std::vector<Monomial> basis_monomials;  // one per accepted vector
    IncrementalSpan span{0};
};

struct EquivalenceWitness {
    Matrix g;  // invertible; g B_i^X g^{-1} = B_i^Y, g I^X = I^Y
};

// True iff all pairwise commutators vanish; otherwise one violating pair.
std::pair<bool, std::optional<std::pair<std::size_t, std::size_t>>> is_commuting(
    const AdhmDatum& x);

// Basis of the stabilizing subspace: smallest subspace invariant under
// every B_i and containing Im I. For commuting data the accepted
// monomials enumerate in `order`; otherwise a word-closure fallback runs.
KrylovResult krylov(const AdhmDatum& x, const MonomialOrder& order = MonomialOrder());

// Stability: the Krylov span is all of V. Rejects non-commuting input.
bool is_stable(const AdhmDatum& x);

// Phi_X(p) = p(B_0,...,B_{n-1}) I(1).
std::vector<Rational> apply_phi(const AdhmDatum& x, const Poly& p);

// Psi: reduced Groebner basis of ker Phi_X by the multiplication-matrix
// sweep. Requires a commuting stable datum; output colength is c and is
// canonical across a GL(V) orbit.
IdealPresentation datum_to_ideal(const AdhmDatum& x, const MonomialOrder& order = MonomialOrder());

// Psi': multiplication matrices on the standard-monomial basis.
AdhmDatum ideal_to_datum(const IdealPresentation& ideal);

// GL(V) action g.(B, I) = (g B g^-1, g I).
AdhmDatum act(const Matrix& g, const AdhmDatum& x);

// Witness when the two data lie in the same GL(V) orbit; verified by
// exact conjugation before it is returned.
std::optional<EquivalenceWitness> are_equivalent(const AdhmDatum& x, const AdhmDatum& y,
                                                 const MonomialOrder& order = MonomialOrder());

// Simultaneously diagonal datum of pairwise distinct points; stable.
AdhmDatum datum_from_points(const std::vector<std::vector<Rational>>& points, std::size_t n);

// Randomized probe for a nearby stable datum. Perturbs only along
// directions that keep commutation exact (polynomials in the B_i) and
// resamples I; every candidate is re-verified before acceptance.
// Deterministic under a fixed seed.
std::optional<AdhmDatum> stabilize_search(const AdhmDatum& x, std::size_t trials,
                                          std::uint64_t seed, const Rational& radius);

}  // namespace hilbcm
