#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qcohom {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1. Thin wrapper over GMP's mpq_class.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n, long d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q", an integer, or an exact decimal such as "-0.75".
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool isZero() const { return q_ == 0; }
    bool isOne() const { return q_ == 1; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    Rational pow(unsigned k) const;

    double toDouble() const { return q_.get_d(); }

    /// "p/q" for non-integers, "p" for integers.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class q_;
};

Rational factorial(unsigned n);

}  // namespace qcohom
