#pragma once

#include <string>
#include <vector>

#include "zigzag/numeric.hpp"

namespace zigzag {

// Dense univariate polynomial with exact rational coefficients, c_[j]·t^j.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(int degree, const Rational& c);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }

    Rational eval(const Rational& t) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rational& c) const;

    RatPoly antiderivative() const;        // vanishing at 0
    Rational integral_01() const;          // ∫_0^1
    RatPoly derivative() const;
    RatPoly reflected() const;             // p(1−t)

private:
    void trim();
    std::vector<Rational> c_;
};

// ∫_0^y p(x)·(y−x)^m / m! dx, a polynomial in y.
RatPoly convolve_ascending(const RatPoly& p, int m);
// ∫_y^1 p(x)·(x−y)^m / m! dx.
RatPoly convolve_descending(const RatPoly& p, int m);

// Piecewise polynomial on [0,1]; breakpoints 0 = t_0 < … < t_m = 1 with one
// polynomial per piece. The external serialization used by the CLI.
class PiecewisePoly {
public:
    PiecewisePoly() : breaks_{Rational(0), Rational(1)}, pieces_{RatPoly()} {}
    PiecewisePoly(std::vector<Rational> breaks, std::vector<RatPoly> pieces);
    static PiecewisePoly single(RatPoly p);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<RatPoly>& pieces() const { return pieces_; }
    Rational eval(const Rational& t) const;
    const RatPoly& piece_at(const Rational& t) const;

private:
    std::vector<Rational> breaks_;
    std::vector<RatPoly> pieces_;
};

}  // namespace zigzag
