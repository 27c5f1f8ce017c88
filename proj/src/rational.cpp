#include "qcohom/rational.hpp"

#include <ostream>

#include "qcohom/error.hpp"

namespace qcohom {

Rational::Rational(long n, long d) {
    if (d == 0) throw StructuralError("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw StructuralError("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (isZero()) throw StructuralError("Rational: inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned k) const {
    mpq_class base = q_, acc = 1;
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return Rational(acc);
}

Rational Rational::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw StructuralError("Rational: empty string");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (num.empty() || den.empty()) throw StructuralError("Rational: malformed '" + s + "'");
        try {
            mpq_class q{mpz_class(num), mpz_class(den)};
            if (q.get_den() == 0) throw StructuralError("Rational: zero denominator in '" + s + "'");
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw StructuralError("Rational: malformed '" + s + "'");
        }
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (!ip.empty() && ip[0] == '+') ip = ip.substr(1);
        if (fp.empty() && ip.empty()) throw StructuralError("Rational: malformed '" + s + "'");
        for (char c : ip + fp)
            if (!isdigit(static_cast<unsigned char>(c)))
                throw StructuralError("Rational: malformed '" + s + "'");
        mpz_class digits(ip + fp, 10);
        mpz_class den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        mpq_class q(digits, den);
        q.canonicalize();
        if (neg) q = -q;
        return Rational(q);
    }
    try {
        return Rational(mpq_class(mpz_class(t)));
    } catch (const std::invalid_argument&) {
        throw StructuralError("Rational: malformed '" + s + "'");
    }
}

std::string Rational::str() const {
    if (isInteger()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

}  // namespace qcohom
