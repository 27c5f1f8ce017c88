#include "qcohom/rational_function.hpp"

#include "qcohom/error.hpp"

namespace qcohom {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!sameVars(num_.vars(), den_.vars()))
        throw StructuralError("RationalFunction: variable lists differ");
    if (den_.isZero()) throw StructuralError("RationalFunction: zero denominator");
    normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.vars())) {}

void RationalFunction::normalize() {
    if (num_.isZero()) {
        den_ = Polynomial::one(den_.vars());
        return;
    }
    Rational cn = num_.content(), cd = den_.content();
    // Content of the pair: scale so both have coprime integer coefficients
    // jointly. gcd of two positive rationals p1/q1, p2/q2 is
    // gcd(p1,p2)/lcm(q1,q2).
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), cn.numerator().get_mpz_t(), cd.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), cn.denominator().get_mpz_t(), cd.denominator().get_mpz_t());
    Rational pairContent{mpq_class(g, l)};
    if (!pairContent.isOne()) {
        Rational inv = pairContent.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.leadingCoeff().sign() < 0) {
        num_ *= Rational(-1);
        den_ *= Rational(-1);
    }
}

Polynomial RationalFunction::asPolynomial() const {
    if (!den_.isConstant() || den_.isZero())
        throw StructuralError("RationalFunction: denominator is not a constant");
    Polynomial p = num_;
    p /= den_.constantValue();
    return p;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
    return RationalFunction(a.num_ * c, a.den_);
}

RationalFunction RationalFunction::dividedBy(const Polynomial& d) const {
    if (d.isZero()) throw StructuralError("RationalFunction: division by zero polynomial");
    return RationalFunction(num_, den_ * d);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::derivative(int v) const {
    return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::string RationalFunction::str() const {
    if (isPolynomial()) return asPolynomial().str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

/// Order of vanishing in v; the zero polynomial reports -1 (treated as +inf
/// by the caller).
int orderIn(const Polynomial& p, int v) {
    if (p.isZero()) return -1;
    int ord = -1;
    for (const auto& [m, c] : p.terms()) ord = (ord < 0) ? m[v] : std::min(ord, m[v]);
    return ord;
}

Polynomial shiftDown(const Polynomial& p, int v, int k) {
    Polynomial out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm[v] -= k;
        out.addTerm(mm, c);
    }
    return out;
}

}  // namespace

RationalFunction residueAtZero(const RationalFunction& f, int v) {
    if (v < 0 || v >= f.num().nvars())
        throw StructuralError("residueAtZero: variable index out of range");
    const VarsPtr& vars = f.num().vars();
    if (f.isZero()) return RationalFunction::zero(vars);

    // v-adic reduction: cancel common powers of v.
    Polynomial num = f.num(), den = f.den();
    int on = orderIn(num, v), od = orderIn(den, v);
    int cancel = std::min(on, od);
    if (cancel > 0) {
        num = shiftDown(num, v, cancel);
        den = shiftDown(den, v, cancel);
        od -= cancel;
    }

    // den = v^m * u with u(0) != 0.
    int m = od;
    if (m == 0) return RationalFunction::zero(vars);  // no pole at v = 0

    Polynomial u = shiftDown(den, v, m);
    auto uc = u.coefficientsIn(v);   // u_k, with u_0 != 0 by construction
    auto nc = num.coefficientsIn(v); // n_k

    const Polynomial& u0 = uc.at(0);

    // Truncated inverse of u to order m-1: u^{-1} = sum_k t_k / u0^{k+1} v^k
    // with t_0 = 1 and t_k = -sum_{j=1}^{k} u_j t_{k-j} u0^{j-1}.
    std::vector<Polynomial> t;
    t.push_back(Polynomial::one(vars));
    std::vector<Polynomial> u0pow;  // u0^i
    u0pow.push_back(Polynomial::one(vars));
    auto u0power = [&](int i) -> const Polynomial& {
        while (static_cast<int>(u0pow.size()) <= i) u0pow.push_back(u0pow.back() * u0);
        return u0pow[i];
    };
    for (int k = 1; k <= m - 1; ++k) {
        Polynomial acc(vars);
        for (int j = 1; j <= k; ++j) {
            auto it = uc.find(j);
            if (it == uc.end()) continue;
            acc += it->second * t[k - j] * u0power(j - 1);
        }
        t.push_back(-acc);
    }

    // Coefficient of v^{m-1} in num * u^{-1}, over the common denominator u0^m.
    Polynomial top(vars);
    for (int k = 0; k <= m - 1; ++k) {
        auto it = nc.find(m - 1 - k);
        if (it == nc.end()) continue;
        top += it->second * t[k] * u0power(m - 1 - k);
    }
    return RationalFunction(top, u0power(m));
}

}  // namespace qcohom
