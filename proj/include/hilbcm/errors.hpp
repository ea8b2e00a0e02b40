#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbcm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input could not be parsed; carries a character position.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// A domain precondition failed (wrong sizes, missing basis, bad ideal, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// An operation requiring a commuting tuple was given a non-commuting one.
struct NotCommutingError : Error {
    NotCommutingError(std::size_t i_, std::size_t j_)
        : Error("matrices B_" + std::to_string(i_) + " and B_" + std::to_string(j_) +
                " do not commute"),
          i(i_), j(j_) {}
    std::size_t i, j;
};

// An operation requiring a stable datum was given an unstable one.
struct NotStableError : Error {
    NotStableError(std::size_t rank_, std::size_t c_)
        : Error("datum is not stable: Krylov rank " + std::to_string(rank_) + " of " +
                std::to_string(c_)),
          rank(rank_), c(c_) {}
    std::size_t rank, c;
};

// Approximate eigenvalue clustering admits two candidate groupings.
struct ClusteringAmbiguityError : Error {
    using Error::Error;
};

// Exact Hilbert-Chow path hit a characteristic polynomial that does not
// split over the rationals.
struct IrrationalEigenvalueError : Error {
    using Error::Error;
};

}  // namespace hilbcm
