#include "qcohom/kirwan.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "qcohom/error.hpp"

namespace qcohom {

Polynomial character(const WeightMatrix& A, int j, const VarsPtr& vars) {
    if (j < 1 || j > A.numFixedPoints())
        throw StructuralError("character: index out of range");
    Polynomial chi(vars);
    for (int i = 0; i < A.r; ++i) {
        Mono m(vars->size(), 0);
        m[i] = 1;
        chi.addTerm(m, Rational(A.columns[j - 1][i]));
    }
    return chi;
}

namespace {

Polynomial omegaPlusChi(const WeightMatrix& A, int j, const VarsPtr& vars) {
    Polynomial p = character(A, j, vars);
    Mono m(vars->size(), 0);
    m[A.r] = 1;  // w sits after t1..tr
    p.addTerm(m, Rational(1));
    return p;
}

}  // namespace

std::vector<KernelGenerator> kernelGenerators(const WeightMatrix& A) {
    VarsPtr vars = ringVars(A.r);
    std::vector<KernelGenerator> out;
    for (int circle = 1; circle <= A.r; ++circle) {
        for (int side : {+1, -1}) {
            KernelGenerator g;
            g.circle = circle;
            g.side = side;
            g.expanded = Polynomial::one(vars);
            for (int j = 1; j <= A.numFixedPoints(); ++j) {
                if (A.columns[j - 1][circle - 1] != side) continue;
                Polynomial f = omegaPlusChi(A, j, vars);
                g.expanded *= f;
                g.factors.push_back(std::move(f));
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

Polynomial fullRelation(const WeightMatrix& A) {
    VarsPtr vars = ringVars(A.r);
    Polynomial p = Polynomial::one(vars);
    for (int j = 1; j <= A.numFixedPoints(); ++j) p *= omegaPlusChi(A, j, vars);
    return p;
}

std::vector<Polynomial> chamberKernelGenerators(const WeightMatrix& A,
                                                const std::vector<Rational>& xi) {
    if (static_cast<int>(xi.size()) != A.r)
        throw StructuralError("chamberKernelGenerators: xi size mismatch");
    VarsPtr vars = ringVars(A.r);
    std::set<std::vector<int>> dirs;
    for (const auto& w : enumerateWalls(A)) dirs.insert(w.normal);

    std::vector<Polynomial> out;
    for (const auto& v : dirs) {
        Rational s(0);
        for (int k = 0; k < A.r; ++k) s += Rational(v[k]) * xi[k];
        std::vector<int> plus, minus;
        for (int j = 1; j <= A.numFixedPoints(); ++j) {
            long lv = 0;
            for (int k = 0; k < A.r; ++k) lv += static_cast<long>(v[k]) * A.columns[j - 1][k];
            Rational diff = Rational(lv) - s;
            if (diff.isZero())
                throw NotRegularError("chamberKernelGenerators: xi on a character hyperplane");
            (diff.sign() > 0 ? plus : minus).push_back(j);
        }
        for (const auto& side : {plus, minus}) {
            if (side.empty()) continue;
            Polynomial g = Polynomial::one(vars);
            for (int j : side) g *= omegaPlusChi(A, j, vars);
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Rational> canonicalRegularXi(int r) {
    std::vector<Rational> xi;
    long den = (1L << r) + 1;
    for (int i = 0; i < r; ++i) xi.push_back(Rational(1L << i, den));
    return xi;
}

namespace {

Polynomial mulMonoCoeff(const Polynomial& p, const Mono& m, const Rational& c) {
    Polynomial out(p.vars());
    Mono mm(m.size());
    for (const auto& [pm, pc] : p.terms()) {
        for (size_t i = 0; i < m.size(); ++i) mm[i] = pm[i] + m[i];
        out.addTerm(mm, pc * c);
    }
    return out;
}

struct PairKey {
    Mono lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (lcm != o.lcm) return grevlexGreater(o.lcm, lcm);  // smaller lcm first
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

}  // namespace

Polynomial normalForm(const Polynomial& p, const std::vector<Polynomial>& basis) {
    if (basis.empty()) return p;
    const VarsPtr& vars = p.vars();
    for (const auto& g : basis)
        if (!sameVars(g.vars(), vars))
            throw StructuralError("normalForm: basis over different variables");
    Polynomial result(vars), work = p;
    while (!work.isZero()) {
        const Mono& lt = work.leadingMono();
        const Rational lc = work.leadingCoeff();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.isZero() && monoDivides(g.leadingMono(), lt)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            work -= mulMonoCoeff(*reducer, monoQuotient(lt, reducer->leadingMono()),
                                 lc / reducer->leadingCoeff());
        } else {
            result.addTerm(lt, lc);
            Polynomial ltPoly(vars);
            ltPoly.addTerm(lt, lc);
            work -= ltPoly;
        }
    }
    return result;
}

std::vector<Polynomial> groebnerBasis(std::vector<Polynomial> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.isZero(); }),
               gens.end());
    if (gens.empty()) throw StructuralError("groebnerBasis: empty generator list");
    const VarsPtr vars = gens[0].vars();
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (!sameVars(g.vars(), vars))
            throw StructuralError("groebnerBasis: generators over different variables");
        g /= g.leadingCoeff();
        if (std::find(basis.begin(), basis.end(), g) == basis.end()) basis.push_back(std::move(g));
    }

    std::set<PairKey> queue;
    auto pushPairs = [&](int idx) {
        for (int k = 0; k < idx; ++k)
            queue.insert(PairKey{monoLcm(basis[k].leadingMono(), basis[idx].leadingMono()), k, idx});
    };
    for (int i = 1; i < static_cast<int>(basis.size()); ++i) pushPairs(i);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        const Polynomial &f = basis[pk.i], &g = basis[pk.j];
        // Buchberger's first criterion: coprime leading terms.
        {
            bool coprime = true;
            const Mono &a = f.leadingMono(), &b = g.leadingMono();
            for (size_t k = 0; k < a.size(); ++k)
                if (a[k] > 0 && b[k] > 0) { coprime = false; break; }
            if (coprime) continue;
        }
        Polynomial s = mulMonoCoeff(f, monoQuotient(pk.lcm, f.leadingMono()), Rational(1)) -
                       mulMonoCoeff(g, monoQuotient(pk.lcm, g.leadingMono()), Rational(1));
        Polynomial h = normalForm(s, basis);
        if (h.isZero()) continue;
        h /= h.leadingCoeff();
        basis.push_back(std::move(h));
        pushPairs(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: keep only elements whose leading term no kept element
    // divides. A divisor is never larger in the monomial order, so sorting by
    // ascending leading term makes the greedy pass correct.
    std::vector<int> byLt(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) byLt[i] = static_cast<int>(i);
    std::sort(byLt.begin(), byLt.end(), [&](int a, int b) {
        if (basis[a].leadingMono() != basis[b].leadingMono())
            return grevlexGreater(basis[b].leadingMono(), basis[a].leadingMono());
        return a < b;
    });
    std::vector<Polynomial> minimal;
    for (int idx : byLt) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (monoDivides(kept.leadingMono(), basis[idx].leadingMono())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[idx]);
    }
    // Full inter-reduction makes the basis reduced (unique for the ideal).
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        Polynomial g = normalForm(minimal[i], others);
        g /= g.leadingCoeff();
        reduced.push_back(std::move(g));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlexGreater(b.leadingMono(), a.leadingMono());
    });
    return reduced;
}

bool isZeroDimensional(const std::vector<Polynomial>& basis) {
    if (basis.empty()) return false;
    const int n = basis[0].nvars();
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : basis) {
            const Mono& lt = g.leadingMono();
            bool pure = lt[v] > 0;
            for (int k = 0; k < n && pure; ++k)
                if (k != v && lt[k] != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

void countStandard(const std::vector<const Mono*>& lts, Mono& current, int var, int remaining,
                   long& count) {
    if (var == static_cast<int>(current.size())) {
        if (remaining != 0) return;
        for (const auto* lt : lts)
            if (monoDivides(*lt, current)) return;
        ++count;
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current[var] = e;
        countStandard(lts, current, var + 1, remaining - e, count);
    }
    current[var] = 0;
}

}  // namespace

std::vector<long> poincareSeries(const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw StructuralError("poincareSeries: empty basis");
    if (!isZeroDimensional(basis))
        throw StructuralError("poincareSeries: infinite-dimensional quotient");
    const int n = basis[0].nvars();
    std::vector<const Mono*> lts;
    for (const auto& g : basis) lts.push_back(&g.leadingMono());
    std::vector<long> dims;
    for (int d = 0; d < 1000; ++d) {
        long count = 0;
        Mono current(n, 0);
        countStandard(lts, current, 0, d, count);
        if (count == 0) break;  // algebra generated in degree 1: later degrees vanish too
        dims.push_back(count);
    }
    return dims;
}

Polynomial elementarySymmetric(const VarsPtr& vars, int k) {
    const int n = static_cast<int>(vars->size());
    if (k < 0 || k > n) throw StructuralError("elementarySymmetric: k out of range");
    std::vector<Polynomial> e;
    for (int i = 0; i <= k; ++i)
        e.push_back(i == 0 ? Polynomial::one(vars) : Polynomial::zero(vars));
    for (int v = 0; v < n; ++v) {
        Polynomial xv = Polynomial::variable(vars, v);
        for (int i = std::min(k, v + 1); i >= 1; --i) e[i] += e[i - 1] * xv;
    }
    return e[k];
}

Polynomial symmetricExpand(const Polynomial& p) {
    const int k = p.nvars();
    VarsPtr svars = sigmaVars(k);
    if (p.isZero()) return Polynomial::zero(svars);

    for (int i = 0; i + 1 < k; ++i) {
        std::vector<int> perm(k), signs(k, 1);
        for (int v = 0; v < k; ++v) perm[v] = v;
        std::swap(perm[i], perm[i + 1]);
        if (p.applySignedPermutation(perm, signs) != p)
            throw NotSymmetricError("symmetricExpand: not symmetric under exchanging " +
                                    (*p.vars())[i] + " and " + (*p.vars())[i + 1]);
    }

    std::vector<Polynomial> e;  // e[1..k]
    e.push_back(Polynomial::one(p.vars()));
    for (int j = 1; j <= k; ++j) e.push_back(elementarySymmetric(p.vars(), j));

    Polynomial out(svars), work = p;
    while (!work.isZero()) {
        // Lex-leading term; for symmetric input its exponents are weakly
        // decreasing when read from the largest variable down.
        auto it = work.terms().begin();
        const Mono* best = &it->first;
        const Rational* bc = &it->second;
        for (; it != work.terms().end(); ++it)
            if (lexGreater(it->first, *best)) { best = &it->first; bc = &it->second; }
        Mono b(k);  // b[j] = exponent of the (j+1)-th largest variable
        for (int j = 0; j < k; ++j) b[j] = (*best)[k - 1 - j];
        for (int j = 0; j + 1 < k; ++j)
            if (b[j] < b[j + 1])
                throw NotSymmetricError("symmetricExpand: leading exponent not dominant");
        Mono smono(k, 0);
        Polynomial subtract = Polynomial::constant(p.vars(), *bc);
        Rational coeff = *bc;
        for (int j = 0; j < k; ++j) {
            int exp = b[j] - (j + 1 < k ? b[j + 1] : 0);
            smono[j] = exp;
            if (exp > 0) subtract *= e[j + 1].pow(static_cast<unsigned>(exp));
        }
        out.addTerm(smono, coeff);
        work -= subtract;
    }
    return out;
}

Polynomial sigmaSubstitute(const Polynomial& expr, const VarsPtr& alphabet) {
    const int k = expr.nvars();
    if (static_cast<int>(alphabet->size()) != k)
        throw StructuralError("sigmaSubstitute: alphabet size mismatch");
    std::vector<Polynomial> images;
    for (int j = 1; j <= k; ++j) images.push_back(elementarySymmetric(alphabet, j));
    return expr.substituteAll(alphabet, images);
}

Polynomial sigmaOfCharacters(const WeightMatrix& A, int k) {
    const int n = A.numFixedPoints();
    if (k < 0 || k > n) throw StructuralError("sigmaOfCharacters: k out of range");
    VarsPtr tvars = thetaVars(A.r);
    std::vector<Polynomial> e;
    for (int i = 0; i <= k; ++i)
        e.push_back(i == 0 ? Polynomial::one(tvars) : Polynomial::zero(tvars));
    for (int j = 1; j <= n; ++j) {
        std::vector<Rational> coeffs;
        for (int i = 0; i < A.r; ++i) coeffs.emplace_back(A.columns[j - 1][i]);
        Polynomial chi = Polynomial::linearForm(tvars, coeffs);
        for (int i = std::min(k, j); i >= 1; --i) e[i] += e[i - 1] * chi;
    }
    return e[k];
}

RingPresentation buildRingPresentation(const WeightMatrix& A) {
    return buildRingPresentation(A, canonicalRegularXi(A.r));
}

RingPresentation buildRingPresentation(const WeightMatrix& A, const std::vector<Rational>& xi) {
    RingPresentation rp;
    rp.r = A.r;
    rp.vars = ringVars(A.r);
    rp.generators = kernelGenerators(A);
    std::vector<Polynomial> coordGens;
    for (const auto& g : rp.generators) coordGens.push_back(g.expanded);
    rp.coordinateGroebner = groebnerBasis(coordGens);
    rp.kernelXi = xi;
    rp.chamberKernel = chamberKernelGenerators(A, xi);
    rp.groebner = groebnerBasis(rp.chamberKernel);
    rp.poincare = poincareSeries(rp.groebner);
    return rp;
}

}  // namespace qcohom
