#include "qcohom/residue_engine.hpp"

#include <map>
#include <mutex>

#include "qcohom/error.hpp"

namespace qcohom {

int quotientDim(int r) { return (1 << r) - (r + 1); }

EngineContext EngineContext::numericAt(int r, std::vector<Rational> xi) {
    if (static_cast<int>(xi.size()) != r)
        throw StructuralError("EngineContext: xi size mismatch");
    EngineContext ctx;
    ctx.r = r;
    ctx.symbolic = false;
    ctx.vars = thetaVars(r);
    ctx.thetaOffset = 0;
    ctx.xi = std::move(xi);
    return ctx;
}

EngineContext EngineContext::symbolicXi(int r) {
    EngineContext ctx;
    ctx.r = r;
    ctx.symbolic = true;
    ctx.vars = thetaXiVars(r);
    ctx.thetaOffset = r;
    return ctx;
}

Polynomial restrictClass(const ClassSpec& spec, const FixedPointData& fp,
                         const EngineContext& ctx) {
    const int r = ctx.r;
    if (spec.a < 0 || spec.b < 0 || spec.a + spec.b != quotientDim(r))
        throw DimensionError("restrictClass: a+b must equal 2^r-(r+1)");

    Polynomial omega(ctx.vars);  // sum_i (alpha_i - xi_i) theta_i
    for (int i = 0; i < r; ++i) {
        Mono m(ctx.vars->size(), 0);
        m[ctx.thetaIndex(i + 1)] = 1;
        if (ctx.symbolic) {
            omega.addTerm(m, Rational(fp.vertex[i]));
            Mono mx = m;
            mx[i] = 1;  // x_i * theta_i
            omega.addTerm(mx, Rational(-1));
        } else {
            omega.addTerm(m, Rational(fp.vertex[i]) - ctx.xi[i]);
        }
    }
    Polynomial eta(ctx.vars);  // -sum_i theta_i
    for (int i = 0; i < r; ++i) {
        Mono m(ctx.vars->size(), 0);
        m[ctx.thetaIndex(i + 1)] = 1;
        eta.addTerm(m, Rational(-1));
    }
    return eta.pow(static_cast<unsigned>(spec.a)) * omega.pow(static_cast<unsigned>(spec.b));
}

namespace {

Polynomial projectToXiVars(const Polynomial& p, const EngineContext& ctx) {
    VarsPtr xv = xiVars(ctx.r);
    Polynomial out(xv);
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < ctx.r; ++i)
            if (m[ctx.thetaIndex(i + 1)] != 0)
                throw StructuralError("pathContribution: theta variable survived the residues");
        Mono mm(ctx.r, 0);
        if (ctx.symbolic)
            for (int i = 0; i < ctx.r; ++i) mm[i] = m[i];
        out.addTerm(mm, c);
    }
    return out;
}

}  // namespace

Polynomial pathContribution(const DendritePath& path, const Polynomial& restricted,
                            const StageFactors& factors, const EngineContext& ctx) {
    const int r = ctx.r;
    if (static_cast<int>(path.steps.size()) != r ||
        static_cast<int>(factors.order.size()) != r)
        throw StructuralError("pathContribution: step/order size mismatch");
    for (int t = 0; t < r; ++t)
        if (path.steps[t].first != factors.order[t])
            throw StructuralError("pathContribution: stage factors built for another residue order");

    RationalFunction val(restricted);
    for (int t = 0; t < r; ++t) {
        const int v = ctx.thetaIndex(factors.order[t]);
        val = residueAtZero(val.dividedBy(factors.factors[t]), v);
        if (val.num().usesVar(v) || val.den().usesVar(v))
            throw StructuralError("pathContribution: residue variable survived its stage");
    }
    if (!val.isPolynomial())
        throw StructuralError("pathContribution: non-constant denominator after all residues");
    Polynomial out = val.asPolynomial();
    out *= Rational(path.sign * factors.orientation);
    return projectToXiVars(out, ctx);
}

namespace {

const std::vector<Wall>& cachedWalls(const WeightMatrix& A) {
    static std::mutex mu;
    static std::map<std::vector<std::vector<int>>, std::vector<Wall>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(A.columns);
    if (it == cache.end()) it = cache.emplace(A.columns, enumerateWalls(A)).first;
    return it->second;
}

PairingResult runPairing(const WeightMatrix& A, const ClassSpec& spec, const Cell& cell,
                         const std::vector<DendritePath>& paths, const EngineContext& ctx,
                         const std::string& name) {
    PairingResult res;
    res.r = A.r;
    res.spec = spec;
    res.cell = cell;
    res.chamber = name;
    res.value = Polynomial::zero(xiVars(A.r));
    const auto gamma = canonicalGamma(A.r);
    for (const auto& path : paths) {
        FixedPointData fp = fixedPointData(A, path.terminal, gamma);
        StageFactors sf = stageFactors(fp, cell.order, ctx.vars, ctx.thetaOffset);
        Polynomial restricted = restrictClass(spec, fp, ctx);
        Polynomial contrib = pathContribution(path, restricted, sf, ctx);
        res.value += contrib;
        res.contributions.emplace(path.terminal, std::move(contrib));
    }
    return res;
}

}  // namespace

PairingResult pairing(const WeightMatrix& A, const ClassSpec& spec,
                      const std::vector<Rational>& xi) {
    Chamber chamber = locateChamber(cachedWalls(A), xi);
    auto paths = buildDendrite(chamber, A, xi);
    Cell cell = cellFromXi(xi);
    EngineContext ctx = EngineContext::numericAt(A.r, xi);
    return runPairing(A, spec, cell, paths, ctx,
                      chamberName(A.r, chamber.apexAxis, chamber.apexSign));
}

PairingResult pairingSymbolic(const WeightMatrix& A, const ClassSpec& spec, const Cell& cell) {
    auto paths = dendriteForCell(cell, A);
    EngineContext ctx = EngineContext::symbolicXi(A.r);
    int apexSign = A.r == 1 ? 1 : cell.signs[0];
    return runPairing(A, spec, cell, paths, ctx, chamberName(A.r, cell.order[0], apexSign));
}

Rational integrateOverCell(const Cell& cell, const Polynomial& poly) {
    const int r = static_cast<int>(cell.order.size());
    if (poly.nvars() != r) throw StructuralError("integrateOverCell: polynomial arity mismatch");
    std::vector<std::string> lnames;
    for (int i = 1; i <= r; ++i) lnames.push_back("l" + std::to_string(i));
    VarsPtr lvars = makeVars(lnames);

    Rational total(0);
    for (int lastSign : {+1, -1}) {
        std::vector<int> signs = cell.signs;
        signs[r - 1] = lastSign;
        // x_{order[t]} = signs[t] * (l_t + l_{t+1} + ... + l_{r-1}) maps the
        // standard simplex onto the order simplex of this cell half.
        std::vector<Polynomial> images(r, Polynomial(lvars));
        for (int t = 0; t < r; ++t) {
            Polynomial img(lvars);
            for (int u = t; u < r; ++u) {
                Mono m(r, 0);
                m[u] = 1;
                img.addTerm(m, Rational(signs[t]));
            }
            images[cell.order[t] - 1] = std::move(img);
        }
        Polynomial composed = poly.substituteAll(lvars, images);
        for (const auto& [m, c] : composed.terms()) {
            Rational num(1);
            int degSum = 0;
            for (int e : m) {
                num *= factorial(static_cast<unsigned>(e));
                degSum += e;
            }
            total += c * num / factorial(static_cast<unsigned>(degSum + r));
        }
    }
    return total;
}

const Polynomial& DhResult::cellPoly(const Cell& cell) const {
    for (const auto& dc : cells)
        if (dc.cell == cell) return dc.poly;
    throw StructuralError("DhResult: cell not found");
}

Rational DhResult::evaluate(const std::vector<Rational>& xi) const {
    Cell cell = cellFromXi(xi);
    return cellPoly(cell).evaluate(xi);
}

DhResult dhDensity(const WeightMatrix& A, bool normalize) {
    DhResult out;
    out.r = A.r;
    out.scale = Rational(1);
    ClassSpec spec{0, quotientDim(A.r)};
    Rational total(0);
    for (const auto& cell : allCells(A.r)) {
        PairingResult pr = pairingSymbolic(A, spec, cell);
        total += integrateOverCell(cell, pr.value);
        out.cells.push_back(DhCell{cell, std::move(pr.value)});
    }
    out.rawIntegral = total;
    if (normalize) {
        if (total.isZero()) throw StructuralError("dhDensity: zero total integral");
        out.scale = total.inverse();
        for (auto& dc : out.cells) dc.poly *= out.scale;
        out.normalized = true;
    }
    return out;
}

}  // namespace qcohom
