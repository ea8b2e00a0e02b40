#include "hilbcm/rational.hpp"

#include <cctype>

#include "hilbcm/errors.hpp"

namespace hilbcm {

Rational parse_rational(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    const std::string body = text.substr(a, b - a);
    if (body.empty()) throw ParseError("empty rational literal", a);

    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    const std::size_t slash = body.find('/');
    if (slash == std::string::npos) {
        if (!valid(body)) throw ParseError("bad rational literal '" + body + "'", a);
        return Rational(mpz_class(body));
    }
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!valid(num) || !valid(den))
        throw ParseError("bad rational literal '" + body + "'", a);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + body + "'", a + slash + 1);
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace hilbcm
