#include "qcohom/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcohom/error.hpp"

namespace qcohom {

VarsPtr makeVars(std::vector<std::string> names) {
    return std::make_shared<const Vars>(std::move(names));
}

static VarsPtr numbered(const char* stem, int from, int to, std::vector<std::string> tail = {}) {
    std::vector<std::string> v;
    for (int i = from; i <= to; ++i) v.push_back(stem + std::to_string(i));
    for (auto& t : tail) v.push_back(std::move(t));
    return makeVars(std::move(v));
}

VarsPtr thetaVars(int r) { return numbered("t", 1, r); }
VarsPtr ringVars(int r) { return numbered("t", 1, r, {"w"}); }
VarsPtr xiVars(int r) { return numbered("x", 1, r); }
VarsPtr sigmaVars(int k) { return numbered("s", 1, k); }

VarsPtr thetaXiVars(int r) {
    std::vector<std::string> v;
    for (int i = 1; i <= r; ++i) v.push_back("x" + std::to_string(i));
    for (int i = 1; i <= r; ++i) v.push_back("t" + std::to_string(i));
    return makeVars(std::move(v));
}

bool sameVars(const VarsPtr& a, const VarsPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

int totalDegree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool monoDivides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono monoQuotient(const Mono& b, const Mono& a) {
    Mono q(b.size());
    for (size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Mono monoLcm(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool grevlexGreater(const Mono& a, const Mono& b) {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da > db;
    // Equal degree: the first (smallest-variable) differing exponent decides;
    // the smaller exponent there belongs to the larger monomial.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool lexGreater(const Mono& a, const Mono& b) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Polynomial Polynomial::constant(VarsPtr vars, const Rational& c) {
    Polynomial p(std::move(vars));
    if (!c.isZero()) p.terms_.emplace(Mono(p.nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(VarsPtr vars, int idx) {
    Polynomial p(std::move(vars));
    if (idx < 0 || idx >= p.nvars()) throw StructuralError("Polynomial: variable index out of range");
    Mono m(p.nvars(), 0);
    m[idx] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::linearForm(VarsPtr vars, const std::vector<Rational>& coeffs,
                                  const Rational& c) {
    Polynomial p(std::move(vars));
    if (static_cast<int>(coeffs.size()) != p.nvars())
        throw StructuralError("Polynomial: linear form coefficient count mismatch");
    for (int i = 0; i < p.nvars(); ++i) {
        if (coeffs[i].isZero()) continue;
        Mono m(p.nvars(), 0);
        m[i] = 1;
        p.terms_.emplace(std::move(m), coeffs[i]);
    }
    if (!c.isZero()) p.terms_.emplace(Mono(p.nvars(), 0), c);
    return p;
}

bool Polynomial::isConstant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && totalDegree(terms_.begin()->first) == 0;
}

Rational Polynomial::constantValue() const {
    if (terms_.empty()) return Rational(0);
    if (!isConstant()) throw StructuralError("Polynomial: not a constant");
    return terms_.begin()->second;
}

void Polynomial::addTerm(const Mono& m, const Rational& c) {
    if (c.isZero()) return;
    if (static_cast<int>(m.size()) != nvars())
        throw StructuralError("Polynomial: exponent vector length mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

void Polynomial::requireSameVars(const Polynomial& o, const char* op) const {
    if (!sameVars(vars_, o.vars_))
        throw StructuralError(std::string("Polynomial: variable lists differ in ") + op);
}

Polynomial Polynomial::operator-() const {
    Polynomial p(vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    requireSameVars(o, "+");
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    requireSameVars(o, "-");
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.requireSameVars(b, "*");
    Polynomial p(a.vars_);
    Mono m(a.nvars());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
            p.addTerm(m, ca * cb);
        }
    }
    return p;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return sameVars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial acc = one(vars_), base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return acc;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return totalDegree(terms_.begin()->first);  // leading term has maximal degree
}

int Polynomial::degreeIn(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool Polynomial::usesVar(int v) const {
    for (const auto& [m, c] : terms_)
        if (m[v] != 0) return true;
    return false;
}

bool Polynomial::isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = totalDegree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (totalDegree(m) != d) return false;
    return true;
}

const Mono& Polynomial::leadingMono() const {
    if (terms_.empty()) throw StructuralError("Polynomial: leading term of zero");
    return terms_.begin()->first;
}

const Rational& Polynomial::leadingCoeff() const {
    if (terms_.empty()) throw StructuralError("Polynomial: leading term of zero");
    return terms_.begin()->second;
}

std::map<int, Polynomial> Polynomial::coefficientsIn(int v) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        int e = m[v];
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, Polynomial(vars_)).first;
        Mono rest = m;
        rest[v] = 0;
        it->second.addTerm(rest, c);
    }
    return out;
}

Polynomial Polynomial::substituteAll(const VarsPtr& target,
                                     const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars())
        throw StructuralError("Polynomial: substitution image count mismatch");
    for (const auto& img : images)
        if (!sameVars(img.vars(), target))
            throw StructuralError("Polynomial: substitution image over wrong variables");
    // Cache powers of each image as needed.
    std::vector<std::vector<Polynomial>> powers(nvars());
    auto powerOf = [&](int v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::one(target));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (int v = 0; v < nvars(); ++v)
            if (m[v] > 0) term = term * powerOf(v, m[v]);
        out += term;
    }
    return out;
}

Polynomial Polynomial::substitute(int v, const Polynomial& image) const {
    std::vector<Polynomial> images;
    images.reserve(nvars());
    for (int i = 0; i < nvars(); ++i)
        images.push_back(i == v ? image : Polynomial::variable(vars_, i));
    return substituteAll(vars_, images);
}

Polynomial Polynomial::applySignedPermutation(const std::vector<int>& perm,
                                              const std::vector<int>& signs) const {
    if (static_cast<int>(perm.size()) != nvars() || static_cast<int>(signs.size()) != nvars())
        throw StructuralError("Polynomial: permutation size mismatch");
    Polynomial out(vars_);
    Mono im(nvars());
    for (const auto& [m, c] : terms_) {
        Rational cc = c;
        std::fill(im.begin(), im.end(), 0);
        for (int v = 0; v < nvars(); ++v) {
            im[perm[v]] = m[v];
            if (signs[v] < 0 && (m[v] & 1)) cc = -cc;
        }
        out.addTerm(im, cc);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw StructuralError("Polynomial: evaluation point size mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < nvars(); ++v)
            if (m[v] > 0) t *= point[v].pow(static_cast<unsigned>(m[v]));
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::derivative(int v) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Mono d = m;
        d[v] -= 1;
        out.addTerm(d, c * Rational(m[v]));
    }
    return out;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.numerator().get_mpz_t());
        num = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
        den = l;
    }
    return Rational(mpq_class(num, den));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool hasVars = totalDegree(m) > 0;
        if (!hasVars || !a.isOne()) {
            os << a.str();
            if (hasVars) os << "*";
        }
        bool firstVar = true;
        for (int v = 0; v < nvars(); ++v) {
            if (m[v] == 0) continue;
            if (!firstVar) os << "*";
            firstVar = false;
            os << (*vars_)[v];
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const VarsPtr& vars;
    const std::string& s;
    size_t pos = 0;

    void skipWs() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skipWs();
        return pos >= s.size();
    }
    char peek() {
        skipWs();
        return s[pos];
    }

    int varIndex(const std::string& name) {
        for (size_t i = 0; i < vars->size(); ++i)
            if ((*vars)[i] == name) return static_cast<int>(i);
        throw StructuralError("Polynomial parse: unknown variable '" + name + "'");
    }

    std::string readNumber() {
        skipWs();
        size_t start = pos;
        while (pos < s.size() &&
               (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' || s[pos] == '.'))
            ++pos;
        if (pos == start) throw StructuralError("Polynomial parse: expected number");
        return s.substr(start, pos - start);
    }

    std::string readName() {
        skipWs();
        size_t start = pos;
        while (pos < s.size() &&
               (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw StructuralError("Polynomial parse: expected variable name");
        return s.substr(start, pos - start);
    }

    // term := [number] ('*'? factor)* ; factor := name ['^' int]
    void parseTerm(Polynomial& out, int sign) {
        Rational coeff(sign);
        Mono m(vars->size(), 0);
        bool sawAnything = false;
        skipWs();
        if (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])))) {
            coeff *= Rational::parse(readNumber());
            sawAnything = true;
        }
        while (true) {
            skipWs();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skipWs();
            }
            if (pos >= s.size() || !(isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                break;
            int v = varIndex(readName());
            int e = 1;
            skipWs();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = std::stoi(readNumber());
            }
            m[v] += e;
            sawAnything = true;
        }
        if (!sawAnything) throw StructuralError("Polynomial parse: empty term");
        out.addTerm(m, coeff);
    }

    Polynomial run() {
        Polynomial out(vars);
        skipWs();
        if (pos < s.size() && s.compare(pos, 1, "0") == 0 && pos + 1 >= s.size()) return out;
        int sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        parseTerm(out, sign);
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw StructuralError("Polynomial parse: expected '+' or '-'");
            ++pos;
            parseTerm(out, c == '-' ? -1 : 1);
        }
        return out;
    }
};

}  // namespace

Polynomial Polynomial::parse(const VarsPtr& vars, const std::string& text) {
    Parser p{vars, text};
    return p.run();
}

}  // namespace qcohom
