#include "zigzag/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace zigzag {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

// GMP reads a leading zero as an octal prefix; decimal digit strings must
// be normalized before constructing integers from them.
BigInt decimal_int(std::string digits) {
    std::string sign;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        if (digits[0] == '-') sign = "-";
        digits.erase(0, 1);
    }
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.empty())
        throw std::invalid_argument("malformed integer literal");
    return BigInt(sign + digits);
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = decimal_int(s.substr(0, slash));
        BigInt den = decimal_int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(decimal_int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(decimal_int(digits), den);
}

std::string rational_string(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace zigzag
