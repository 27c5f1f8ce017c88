#pragma once

#include "qcohom/polynomial.hpp"

namespace qcohom {

/// Quotient of polynomials in normalized form: the pair's content is removed
/// and the denominator's leading coefficient (canonical order) is positive.
/// Full gcd reduction is not performed; equality tests cross-multiply.
class RationalFunction {
  public:
    RationalFunction() = default;
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction zero(const VarsPtr& vars) {
        return RationalFunction(Polynomial::zero(vars));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    /// True when the denominator is a nonzero constant.
    bool isPolynomial() const { return den_.isConstant(); }
    /// Requires isPolynomial().
    Polynomial asPolynomial() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c);
    friend RationalFunction operator*(const Rational& c, const RationalFunction& a) { return a * c; }
    /// Divide by a nonzero polynomial over the same variables.
    RationalFunction dividedBy(const Polynomial& d) const;

    /// Equality as rational functions (cross-multiplication).
    bool equals(const RationalFunction& o) const;

    RationalFunction derivative(int v) const;

    std::string str() const;

  private:
    Polynomial num_, den_;

    void normalize();
};

/// Coefficient of v^{-1} in the Laurent expansion of f around v = 0.
///
/// The denominator, viewed in v, is factored as v^m * u(v) with u(0) != 0;
/// the truncated power-series inverse of u to order m-1 is multiplied by the
/// numerator and the v^{m-1} coefficient read off. The result contains no
/// occurrence of v.
RationalFunction residueAtZero(const RationalFunction& f, int v);

}  // namespace qcohom
