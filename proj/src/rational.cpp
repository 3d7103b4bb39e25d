#include "exg/rational.hpp"

#include <cmath>

namespace exg {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational literal '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw InputError("non-finite value where a probability was expected");
    return Rational(x);
}

}  // namespace exg
