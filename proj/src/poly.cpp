#include "hilbcm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hilbcm/errors.hpp"

namespace hilbcm {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

std::string monomial_to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    auto exp = [&](const Monomial& m, std::size_t slot) {
        return perm_.empty() ? m[slot] : m[perm_[slot]];
    };
    const std::size_t n = a.size();
    switch (kind_) {
        case OrderKind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (exp(a, i) != exp(b, i)) return exp(a, i) < exp(b, i);
            return false;
        case OrderKind::grlex: {
            const unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            for (std::size_t i = 0; i < n; ++i)
                if (exp(a, i) != exp(b, i)) return exp(a, i) < exp(b, i);
            return false;
        }
        case OrderKind::grevlex: {
            const unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            // a < b when the rightmost differing slot is larger in a.
            for (std::size_t i = n; i-- > 0;)
                if (exp(a, i) != exp(b, i)) return exp(a, i) > exp(b, i);
            return false;
        }
    }
    return false;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
    }
    return "?";
}

MonomialOrder MonomialOrder::from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder(OrderKind::grevlex);
    if (name == "lex") return MonomialOrder(OrderKind::lex);
    if (name == "grlex") return MonomialOrder(OrderKind::grlex);
    throw PreconditionError("unknown monomial order '" + name + "'");
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw PreconditionError("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    return term(nvars, m, Rational(1));
}

Poly Poly::term(std::size_t nvars, const Monomial& m, const Rational& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw PreconditionError("monomial arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(nvars_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

Poly Poly::operator-() const { return *this * Rational(-1); }

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Monomial Poly::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw PreconditionError("leading monomial of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return best->first;
}

Rational Poly::leading_coeff(const MonomialOrder& ord) const {
    return terms_.at(leading_monomial(ord));
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::eval_at_point(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw PreconditionError("evaluation point arity mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // Display highest degree first (grlex) for readability.
    MonomialOrder ord(OrderKind::grlex);
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](auto* a, auto* b) { return ord.less(b->first, a->first); });
    std::string s;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        const bool constant = total_degree(m) == 0;
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (constant) {
            s += rational_to_string(a);
        } else {
            if (a != 1) s += rational_to_string(a) + "*";
            s += monomial_to_string(m);
        }
    }
    return s;
}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t nvars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos != text.size())
            throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
        return p;
    }

    Poly expr() {
        Poly acc(nvars);
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos;
        }
        acc = acc + product() * Rational(sign);
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            acc = acc + product() * Rational(c == '-' ? -1 : 1);
        }
        return acc;
    }

    Poly product() {
        Poly acc = power();
        while (peek() == '*') {
            ++pos;
            acc = acc * power();
        }
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ParseError("expected exponent", pos);
            const unsigned long e = std::stoul(text.substr(start, pos - start));
            Poly acc = Poly::constant(nvars, 1);
            for (unsigned long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError("expected term", pos);
    }

    Poly number() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        mpz_class num(text.substr(start, pos - start));
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            skip_ws();
            const std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator", pos);
            mpz_class den(text.substr(dstart, pos - dstart));
            if (den == 0) throw ParseError("zero denominator", dstart);
            Rational q(num, den);
            q.canonicalize();
            return Poly::constant(nvars, q);
        }
        return Poly::constant(nvars, Rational(num));
    }

    Poly identifier() {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        const std::string name = text.substr(start, pos - start);
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) digits = false;
            if (digits) {
                const unsigned long idx = std::stoul(name.substr(1));
                if (idx >= nvars)
                    throw ParseError("variable '" + name + "' out of range for " +
                                         std::to_string(nvars) + " variables",
                                     start);
                return Poly::variable(nvars, idx);
            }
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, std::size_t nvars) {
    PolyParser parser{text, nvars};
    return parser.parse();
}

namespace {

// Division with remainder against a basis; remainder has no term
// divisible by any basis leading monomial.
Poly reduce(const Poly& p, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    Poly rem(p.nvars());
    Poly work = p;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial(ord);
        const Rational lc = work.terms().at(lm);
        bool reduced = false;
        for (const Poly& g : basis) {
            const Monomial glm = g.leading_monomial(ord);
            if (!monomial_divides(glm, lm)) continue;
            Monomial q(lm.size());
            for (std::size_t i = 0; i < lm.size(); ++i) q[i] = lm[i] - glm[i];
            const Rational f = lc / g.terms().at(glm);
            work = work - g * Poly::term(p.nvars(), q, f);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
    const Monomial lf = f.leading_monomial(ord);
    const Monomial lg = g.leading_monomial(ord);
    const Monomial l = monomial_lcm(lf, lg);
    Monomial qf(l.size()), qg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) {
        qf[i] = l[i] - lf[i];
        qg[i] = l[i] - lg[i];
    }
    return f * Poly::term(f.nvars(), qf, 1 / f.terms().at(lf)) -
           g * Poly::term(g.nvars(), qg, 1 / g.terms().at(lg));
}

bool coprime_leads(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Enumerates monomials under the staircase; nullopt when the quotient
// is infinite dimensional (some variable has no pure power among the
// leading terms).
std::optional<std::vector<Monomial>> staircase(const std::vector<Poly>& gb,
                                               const MonomialOrder& ord, std::size_t nvars) {
    std::vector<Monomial> leads;
    for (const Poly& g : gb) leads.push_back(g.leading_monomial(ord));

    // Unit ideal: empty quotient.
    for (const Monomial& lm : leads)
        if (total_degree(lm) == 0) return std::vector<Monomial>{};

    std::vector<unsigned> cap(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        bool found = false;
        for (const Monomial& lm : leads) {
            bool pure = lm[v] > 0;
            for (std::size_t u = 0; u < nvars && pure; ++u)
                if (u != v && lm[u] > 0) pure = false;
            if (pure) {
                cap[v] = std::max(cap[v], lm[v]);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }

    std::vector<Monomial> out;
    Monomial m(nvars, 0);
    while (true) {
        bool in_lt = false;
        for (const Monomial& lm : leads)
            if (monomial_divides(lm, m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) out.push_back(m);
        // Odometer bounded by the pure-power caps.
        std::size_t v = 0;
        while (v < nvars) {
            if (m[v] + 1 < cap[v]) {
                ++m[v];
                break;
            }
            m[v] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return out;
}

}  // namespace

IdealPresentation groebner(const std::vector<Poly>& gens, const MonomialOrder& order) {
    if (gens.empty()) throw PreconditionError("groebner: empty generator list");
    const std::size_t nvars = gens[0].nvars();
    for (const Poly& g : gens)
        if (g.nvars() != nvars) throw PreconditionError("groebner: mixed variable counts");

    std::vector<Poly> basis;
    for (const Poly& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) throw PreconditionError("groebner: all generators are zero");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        const auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial li = basis[i].leading_monomial(order);
        const Monomial lj = basis[j].leading_monomial(order);
        if (coprime_leads(li, lj)) continue;  // Buchberger's first criterion
        // Chain criterion: skip when some other basis lead divides the
        // lcm and both companion pairs were already handled.
        const Monomial l = monomial_lcm(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!monomial_divides(basis[k].leading_monomial(order), l)) continue;
            auto handled = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                for (const auto& pr : pairs)
                    if (pr.first == a && pr.second == b) return false;
                return true;
            };
            if (handled(i, k) && handled(j, k)) chained = true;
        }
        if (chained) continue;
        const Poly r = reduce(s_poly(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(r);
    }

    // Minimalize: drop members whose lead is divisible by another lead.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial li = basis[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial lj = basis[j].leading_monomial(order);
            if (monomial_divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce tails against the rest and normalize to monic.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = others.empty() ? minimal[i] : reduce(minimal[i], others, order);
        r = r * (1 / r.leading_coeff(order));
        reduced.push_back(r);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });

    IdealPresentation out;
    out.generators = gens;
    out.order = order;
    out.reduced_gb = reduced;
    out.std_monomials = staircase(reduced, order, nvars);
    return out;
}

Poly normal_form(const Poly& p, const IdealPresentation& ideal) {
    if (!ideal.reduced_gb) throw PreconditionError("normal_form: missing Groebner basis");
    return reduce(p, *ideal.reduced_gb, ideal.order);
}

std::optional<std::size_t> colength(const IdealPresentation& ideal) {
    if (!ideal.reduced_gb) throw PreconditionError("colength: missing Groebner basis");
    if (!ideal.std_monomials) return std::nullopt;
    return ideal.std_monomials->size();
}

Matrix eval_poly_at_matrices(const Poly& p, const std::vector<Matrix>& mats) {
    if (mats.size() != p.nvars()) throw PreconditionError("matrix count != variable count");
    const std::size_t c = mats.empty() ? 0 : mats[0].rows();
    for (const Matrix& m : mats)
        if (m.rows() != c || m.cols() != c)
            throw PreconditionError("evaluation matrices must be square of equal size");
    Matrix acc(c, c);
    for (const auto& [mono, coef] : p.terms()) {
        Matrix t = Matrix::identity(c) * coef;
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (mono[i] > 0) t = t * mat_pow(mats[i], mono[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace hilbcm
