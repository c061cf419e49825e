#include "quivq/rational.hpp"

#include <stdexcept>

namespace quivq {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    for (char ch : s) {
        if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("Rational::parse: bad character in '" + s + "'");
    }
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    if (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos)
        throw std::invalid_argument("Rational::parse: more than one '/' in '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw std::domain_error("Rational::to_long: " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace quivq
