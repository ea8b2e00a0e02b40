#include "hilbcm/variety.hpp"

#include <sstream>

#include "hilbcm/errors.hpp"

namespace hilbcm {

void VarietyConstraint::validate() const {
    for (const auto& g : generators)
        if (g.nvars() != nvars)
            throw PreconditionError("variety generator arity mismatch");
}

std::vector<Matrix> variety_residuals(const AdhmDatum& x, const VarietyConstraint& y) {
    x.validate();
    y.validate();
    if (x.n != y.nvars) throw PreconditionError("datum/variety arity mismatch");
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);

    std::vector<Matrix> residuals;
    residuals.reserve(y.generators.size());
    for (const auto& f : y.generators) residuals.push_back(eval_poly_at_matrices(f, x.B));
    return residuals;
}

bool is_in_hilb_variety(const AdhmDatum& x, const VarietyConstraint& y) {
    const auto residuals = variety_residuals(x, y);
    if (!is_stable(x)) {
        const KrylovResult kr = krylov(x);
        throw NotStableError(kr.rank, x.c);
    }
    for (const auto& r : residuals)
        if (!r.is_zero()) return false;
    return true;
}

QuotientReport induced_quotient_ideal(const IdealPresentation& j, const VarietyConstraint& y) {
    y.validate();
    IdealPresentation basis = j.reduced_gb ? j : groebner(j.generators, j.order);
    if (!colength(basis)) throw PreconditionError("induced_quotient_ideal: ideal is not zero-dimensional");

    QuotientReport rep;
    rep.contained = true;
    for (const auto& f : y.generators) {
        Poly nf = normal_form(f, basis);
        if (!nf.is_zero()) rep.contained = false;
        rep.generator_residues.push_back(std::move(nf));
    }
    return rep;
}

VarietyConstraint parse_variety(const std::string& text, std::size_t nvars) {
    VarietyConstraint y;
    y.nvars = nvars;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        y.generators.push_back(parse_poly(line, nvars));
    }
    return y;
}

}  // namespace hilbcm
