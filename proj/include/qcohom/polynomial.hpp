#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcohom/rational.hpp"

namespace qcohom {

/// Ordered variable list. Variables are listed in ascending magnitude for the
/// canonical monomial order: t1 < t2 < ... < tr < w, with x-variables (when
/// present) below the t's.
using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

VarsPtr makeVars(std::vector<std::string> names);
/// (t1..tr) for the numeric residue pipeline.
VarsPtr thetaVars(int r);
/// (x1..xr, t1..tr) for the symbolic-xi pipeline.
VarsPtr thetaXiVars(int r);
/// (t1..tr, w) for the cohomology ring.
VarsPtr ringVars(int r);
/// (x1..xr) for chamber polynomials.
VarsPtr xiVars(int r);
/// (s1..sk) for elementary-symmetric decompositions.
VarsPtr sigmaVars(int k);

bool sameVars(const VarsPtr& a, const VarsPtr& b);

/// Exponent vector aligned with a variable list.
using Mono = std::vector<int>;

int totalDegree(const Mono& m);
bool monoDivides(const Mono& a, const Mono& b);  // a | b
Mono monoQuotient(const Mono& b, const Mono& a);
Mono monoLcm(const Mono& a, const Mono& b);

/// Graded reverse lexicographic, variables ordered by storage position
/// ascending in magnitude. Returns a > b.
bool grevlexGreater(const Mono& a, const Mono& b);
/// Lexicographic with the same magnitude convention (largest variable first).
bool lexGreater(const Mono& a, const Mono& b);

struct GrevlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return grevlexGreater(a, b); }
};

/// Sparse multivariate polynomial over Q in canonical form: no zero
/// coefficients, terms keyed by exponent vectors of fixed length.
class Polynomial {
  public:
    using TermMap = std::map<Mono, Rational, GrevlexDesc>;

    Polynomial() = default;  // zero polynomial over the empty variable list
    explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarsPtr vars, const Rational& c);
    static Polynomial one(VarsPtr vars) { return constant(std::move(vars), Rational(1)); }
    static Polynomial variable(VarsPtr vars, int idx);
    /// sum_i coeffs[i] * var_i + c
    static Polynomial linearForm(VarsPtr vars, const std::vector<Rational>& coeffs,
                                 const Rational& c = Rational(0));

    const VarsPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const TermMap& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Rational constantValue() const;

    void addTerm(const Mono& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial& operator/=(const Rational& c) { return *this *= c.inverse(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact k-th power; pow(p, 0) = 1.
    Polynomial pow(unsigned k) const;

    int degree() const;  // total degree; -1 for the zero polynomial
    int degreeIn(int v) const;
    bool usesVar(int v) const;
    bool isHomogeneous() const;

    /// Leading term under the canonical order. Polynomial must be nonzero.
    const Mono& leadingMono() const;
    const Rational& leadingCoeff() const;

    /// View as univariate in variable v: exponent of v -> coefficient
    /// polynomial (same variable list, v-exponent zeroed).
    std::map<int, Polynomial> coefficientsIn(int v) const;

    /// Substitute images[i] (over `target`) for variable i. Every variable
    /// must have an image.
    Polynomial substituteAll(const VarsPtr& target, const std::vector<Polynomial>& images) const;
    /// Substitute a single variable; other variables map to themselves.
    Polynomial substitute(int v, const Polynomial& image) const;

    /// Signed variable relabeling: variable i maps to sign[i] * var perm[i]
    /// of the same list.
    Polynomial applySignedPermutation(const std::vector<int>& perm,
                                      const std::vector<int>& signs) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    Polynomial derivative(int v) const;

    /// Positive rational c such that (1/c) * this has coprime integer
    /// coefficients. Zero polynomial has content 0.
    Rational content() const;

    /// Canonical text form: terms in descending monomial order.
    std::string str() const;
    static Polynomial parse(const VarsPtr& vars, const std::string& text);

  private:
    VarsPtr vars_;
    TermMap terms_;

    void requireSameVars(const Polynomial& o, const char* op) const;
};

}  // namespace qcohom
