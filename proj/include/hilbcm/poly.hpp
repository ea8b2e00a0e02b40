#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbcm/matrix.hpp"
#include "hilbcm/rational.hpp"

namespace hilbcm {

// Exponent vector; length is the ambient variable count.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m);

enum class OrderKind { grevlex, lex, grlex };

// Total monomial order refining divisibility; an optional variable
// permutation reorders priority (perm[0] is the most significant slot).
class MonomialOrder {
public:
    explicit MonomialOrder(OrderKind kind = OrderKind::grevlex,
                           std::vector<std::size_t> perm = {})
        : kind_(kind), perm_(std::move(perm)) {}

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }

    // true when a < b.
    bool less(const Monomial& a, const Monomial& b) const;
    bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

    std::string name() const;
    static MonomialOrder from_name(const std::string& name);

private:
    OrderKind kind_;
    std::vector<std::size_t> perm_;
};

// Sparse multivariate polynomial. Terms are stored under plain
// lexicographic key order; monomial orders are applied on inspection.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly term(std::size_t nvars, const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const = default;

    unsigned degree() const;

    // Leading data with respect to an order; throws on the zero polynomial.
    Monomial leading_monomial(const MonomialOrder& ord) const;
    Rational leading_coeff(const MonomialOrder& ord) const;

    Rational coeff(const Monomial& m) const;
    Rational eval_at_point(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Monomial, Rational> terms_;
};

// Polynomial text grammar: variables x0..x{n-1}, integer or a/b
// coefficients, operators + - * ^, whitespace insensitive.
// Unknown identifiers are rejected with position info.
Poly parse_poly(const std::string& text, std::size_t nvars);

// Ideal with optional reduced Groebner basis data.
struct IdealPresentation {
    std::vector<Poly> generators;
    MonomialOrder order;
    std::optional<std::vector<Poly>> reduced_gb;
    // Monomials outside the leading-term ideal, increasing in `order`;
    // present only when the quotient is finite dimensional.
    std::optional<std::vector<Monomial>> std_monomials;

    std::size_t nvars() const { return generators.empty() ? 0 : generators[0].nvars(); }
};

// Buchberger with the classical pair-elimination criteria; the result
// carries the unique monic reduced basis and, for zero-dimensional
// ideals, the standard monomial basis of the quotient.
IdealPresentation groebner(const std::vector<Poly>& gens, const MonomialOrder& order);

// Remainder of multivariate division by the reduced basis.
Poly normal_form(const Poly& p, const IdealPresentation& ideal);

// dim of the quotient ring when finite, otherwise nullopt.
std::optional<std::size_t> colength(const IdealPresentation& ideal);

// p(B_0,...,B_{n-1}); caller guarantees the matrices commute.
Matrix eval_poly_at_matrices(const Poly& p, const std::vector<Matrix>& mats);

}  // namespace hilbcm
