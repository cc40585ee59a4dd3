#include "zigzag/polynomial.hpp"

#include <stdexcept>

namespace zigzag {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t j = c_.size(); j-- > 0;) acc = acc * t + c_[j];
    return acc;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) v[j] += c_[j];
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[j] += o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) v[j] += c_[j];
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[j] -= o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rational& c) const {
    std::vector<Rational> v = c_;
    for (Rational& x : v) x *= c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::antiderivative() const {
    std::vector<Rational> v(c_.size() + 1, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) v[j + 1] = c_[j] / Rational(static_cast<int>(j) + 1);
    return RatPoly(std::move(v));
}

Rational RatPoly::integral_01() const {
    Rational acc = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) acc += c_[j] / Rational(static_cast<int>(j) + 1);
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) v[j - 1] = c_[j] * Rational(static_cast<int>(j));
    return RatPoly(std::move(v));
}

RatPoly RatPoly::reflected() const {
    // p(1−t): expand each (1−t)^j
    std::vector<Rational> v(c_.size(), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Rational coef = c_[j];
        BigInt binom = 1;
        for (std::size_t t = 0; t <= j; ++t) {
            Rational term = coef * Rational(binom, 1);
            if (t % 2) term = -term;
            v[t] += term;
            binom = binom * BigInt(static_cast<int>(j - t)) / BigInt(static_cast<int>(t) + 1);
        }
    }
    return RatPoly(std::move(v));
}

RatPoly convolve_ascending(const RatPoly& p, int m) {
    if (m < 0) throw std::invalid_argument("negative convolution order");
    const std::vector<Rational>& a = p.coeffs();
    std::vector<Rational> v(a.size() + static_cast<std::size_t>(m) + 1, Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        // ∫_0^y x^j (y−x)^m/m! dx = y^{j+m+1} · j!/(j+m+1)!
        BigInt den = 1;
        for (int t = 1; t <= m + 1; ++t) den *= static_cast<int>(j) + t;
        v[j + static_cast<std::size_t>(m) + 1] = a[j] / Rational(den, 1);
    }
    return RatPoly(std::move(v));
}

RatPoly convolve_descending(const RatPoly& p, int m) {
    // ∫_y^1 p(x)(x−y)^m/m! dx = (∫_0^z p(1−u)(z−u)^m/m! du) at z = 1−y
    return convolve_ascending(p.reflected(), m).reflected();
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breaks, std::vector<RatPoly> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
    if (breaks_.size() != pieces_.size() + 1 || breaks_.front() != 0 || breaks_.back() != 1)
        throw std::invalid_argument("piecewise polynomial must cover [0,1]");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("breakpoints must increase strictly");
}

PiecewisePoly PiecewisePoly::single(RatPoly p) {
    return PiecewisePoly({Rational(0), Rational(1)}, {std::move(p)});
}

const RatPoly& PiecewisePoly::piece_at(const Rational& t) const {
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (t <= breaks_[i + 1]) return pieces_[i];
    return pieces_.back();
}

Rational PiecewisePoly::eval(const Rational& t) const {
    if (t < 0 || t > 1) throw std::invalid_argument("evaluation outside [0,1]");
    return piece_at(t).eval(t);
}

}  // namespace zigzag
