#pragma once

#include <string>
#include <vector>

#include "hilbcm/adhm.hpp"
#include "hilbcm/cycle.hpp"
#include "hilbcm/monad.hpp"

namespace hilbcm {

// Datum document: JSON with fields n, c, B (list of nested arrays of
// rational strings), I (array of rational strings). Round-trips
// bit-exactly.
std::string datum_to_json(const AdhmDatum& x);
AdhmDatum datum_from_json(const std::string& text);

// Ideal file: one polynomial per line in the standard grammar, '#'
// comments and blank lines ignored. nvars = 0 infers the arity from the
// highest variable index present.
std::vector<Poly> parse_ideal_file(const std::string& text, std::size_t nvars = 0);
std::string ideal_to_text(const IdealPresentation& ideal);

// Monad dump: JSON listing n, c, dims, and each differential's
// coefficient matrices in row-major rational text; bit-exact round-trip.
std::string monad_to_json(const ExtendedMonad& m);
ExtendedMonad monad_from_json(const std::string& text);

// Cycle output: header line with c, n and the multiplicity partition,
// then one line per point (rational or decimal coordinates, then the
// multiplicity).
std::string cycle_to_text(const ZeroCycle& cyc, std::size_t n);
std::string cycle_to_json(const ZeroCycle& cyc, std::size_t n);

}  // namespace hilbcm
