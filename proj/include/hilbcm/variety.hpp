#pragma once

#include <string>
#include <vector>

#include "hilbcm/adhm.hpp"

namespace hilbcm {

// Affine subvariety Y = Z(f_1,...,f_k) of affine n-space, given by an
// explicit generator list. An empty list means Y is the whole space.
struct VarietyConstraint {
    std::size_t nvars = 0;
    std::vector<Poly> generators;

    void validate() const;  // arity agreement
};

// The matrices f_j(B_0,...,B_{n-1}); all zero iff the datum's operators
// satisfy every defining equation of Y.
std::vector<Matrix> variety_residuals(const AdhmDatum& x, const VarietyConstraint& y);

// Membership of a stable datum's subscheme in Hilb(Y): true iff every
// residual vanishes exactly. Equivalently, every generator reduces to
// zero modulo the datum's ideal.
bool is_in_hilb_variety(const AdhmDatum& x, const VarietyConstraint& y);

struct QuotientReport {
    bool contained = false;                 // Z_Y inside J?
    std::vector<Poly> generator_residues;   // normal_form of each f_j mod J
};

// Whether the subscheme of a zero-dimensional ideal J lies on Y, i.e.
// every generator of Y reduces to zero modulo J; when true the pair
// presents the ideal of the subscheme inside the coordinate ring of Y.
QuotientReport induced_quotient_ideal(const IdealPresentation& j, const VarietyConstraint& y);

// Variety file: one polynomial per line in the standard grammar,
// '#' starts a comment, blank lines ignored.
VarietyConstraint parse_variety(const std::string& text, std::size_t nvars);

}  // namespace hilbcm
