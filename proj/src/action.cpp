#include "qcohom/action.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qcohom/error.hpp"

namespace qcohom {

WeightMatrix WeightMatrix::build(int r) {
    if (r < 1 || r > 6) throw ConfigError("WeightMatrix: r must be in 1..6");
    std::vector<std::vector<int>> cols;
    cols.reserve(1u << r);
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> c(r);
        for (int row = 0; row < r; ++row) c[row] = (mask >> row) & 1 ? -1 : 1;
        cols.push_back(std::move(c));
    }
    std::sort(cols.begin(), cols.end(), [r](const std::vector<int>& a, const std::vector<int>& b) {
        int na = static_cast<int>(std::count(a.begin(), a.end(), -1));
        int nb = static_cast<int>(std::count(b.begin(), b.end(), -1));
        if (na != nb) return na < nb;
        // Tie-break key: bit i set when row (r-i), 1-based, holds -1.
        long ka = 0, kb = 0;
        for (int row = 0; row < r; ++row) {
            if (a[row] == -1) ka |= 1L << (r - 1 - row);
            if (b[row] == -1) kb |= 1L << (r - 1 - row);
        }
        return ka < kb;
    });
    WeightMatrix A;
    A.r = r;
    A.columns = std::move(cols);
    return A;
}

WeightMatrix WeightMatrix::fromColumns(int r, std::vector<std::vector<int>> columns) {
    if (r < 1 || r > 6) throw ConfigError("WeightMatrix: r must be in 1..6");
    if (columns.size() != (1u << r))
        throw StructuralError("WeightMatrix: expected 2^r columns");
    std::set<std::vector<int>> seen;
    for (const auto& c : columns) {
        if (static_cast<int>(c.size()) != r)
            throw StructuralError("WeightMatrix: column length mismatch");
        for (int e : c)
            if (e != 1 && e != -1) throw StructuralError("WeightMatrix: entries must be +-1");
        if (!seen.insert(c).second)
            throw StructuralError("WeightMatrix: duplicate sign pattern");
    }
    WeightMatrix A;
    A.r = r;
    A.columns = std::move(columns);
    return A;
}

int WeightMatrix::columnIndex(const std::vector<int>& v) const {
    for (size_t j = 0; j < columns.size(); ++j)
        if (columns[j] == v) return static_cast<int>(j) + 1;
    throw StructuralError("WeightMatrix: vertex not found");
}

bool Weight::isZero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Weight Weight::negated() const {
    Weight w = *this;
    for (int& c : w.coeffs) c = -c;
    return w;
}

Polynomial Weight::toPolynomial(const VarsPtr& vars, int thetaOffset) const {
    Polynomial p(vars);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Mono m(vars->size(), 0);
        m[thetaOffset + i] = 1;
        p.addTerm(m, Rational(coeffs[i]));
    }
    return p;
}

std::string Weight::str(int) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        int c = coeffs[i];
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << "t" << (i + 1);
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Weight> isotropyWeights(const WeightMatrix& A, int j) {
    if (j < 1 || j > A.numFixedPoints())
        throw StructuralError("isotropyWeights: fixed-point index out of range");
    std::vector<Weight> out;
    out.reserve(A.numFixedPoints() - 1);
    const auto& aj = A.columns[j - 1];
    for (int l = 1; l <= A.numFixedPoints(); ++l) {
        if (l == j) continue;
        Weight w;
        w.coeffs.resize(A.r);
        for (int k = 0; k < A.r; ++k) w.coeffs[k] = A.columns[l - 1][k] - aj[k];
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<int> canonicalGamma(int r) {
    std::vector<int> g(r);
    for (int i = 0; i < r; ++i) g[i] = -(1 << (r - 1 - i));
    return g;
}

std::vector<PolarizedWeight> polarize(const std::vector<Weight>& weights,
                                      const std::vector<int>& gamma) {
    std::vector<PolarizedWeight> out;
    out.reserve(weights.size());
    for (const auto& w : weights) {
        if (w.coeffs.size() != gamma.size())
            throw StructuralError("polarize: weight/gamma length mismatch");
        long dot = 0;
        for (size_t i = 0; i < gamma.size(); ++i) dot += static_cast<long>(w.coeffs[i]) * gamma[i];
        if (dot == 0)
            throw NonGenericError("polarize: gamma orthogonal to weight " + w.str());
        if (dot < 0)
            out.push_back(PolarizedWeight{w.negated(), -1});
        else
            out.push_back(PolarizedWeight{w, +1});
    }
    return out;
}

FixedPointData fixedPointData(const WeightMatrix& A, int j, const std::vector<int>& gamma) {
    FixedPointData fp;
    fp.index = j;
    fp.vertex = A.columns.at(j - 1);
    fp.weights = isotropyWeights(A, j);
    fp.polarized = polarize(fp.weights, gamma);
    return fp;
}

std::vector<FixedPointData> fixedPointTable(const WeightMatrix& A, const std::vector<int>& gamma) {
    std::vector<FixedPointData> out;
    out.reserve(A.numFixedPoints());
    for (int j = 1; j <= A.numFixedPoints(); ++j) out.push_back(fixedPointData(A, j, gamma));
    return out;
}

StageFactors stageFactors(const FixedPointData& fp, const std::vector<int>& order,
                          const VarsPtr& vars, int thetaOffset) {
    const int r = static_cast<int>(fp.vertex.size());
    if (static_cast<int>(order.size()) != r)
        throw StructuralError("stageFactors: order must be a permutation of 1..r");
    {
        std::vector<bool> seen(r, false);
        for (int a : order) {
            if (a < 1 || a > r || seen[a - 1])
                throw StructuralError("stageFactors: order must be a permutation of 1..r");
            seen[a - 1] = true;
        }
    }
    if (fp.polarized.empty()) throw StructuralError("stageFactors: no polarized weights");

    StageFactors sf;
    sf.order = order;
    for (const auto& pw : fp.polarized) sf.orientation *= pw.epsilon;

    std::vector<const PolarizedWeight*> remaining;
    for (const auto& pw : fp.polarized) remaining.push_back(&pw);

    for (int t = 0; t < r; ++t) {
        const int axis = order[t] - 1;
        std::vector<const PolarizedWeight*> take, keep;
        for (const auto* pw : remaining)
            (pw->weight.coeffs[axis] != 0 ? take : keep).push_back(pw);
        if (take.empty())
            throw DegenerateStageError("stageFactors: stage " + std::to_string(t + 1) +
                                       " received no weights");
        Polynomial factor = Polynomial::one(vars);
        for (const auto* pw : take) {
            // Truncate to the axes processed so far (order[0..t]); by the
            // greedy assignment the earlier coefficients vanish, so the
            // truncated weight is coeff * theta_axis.
            Weight trunc;
            trunc.coeffs.assign(r, 0);
            for (int s = 0; s <= t; ++s)
                trunc.coeffs[order[s] - 1] = pw->weight.coeffs[order[s] - 1];
            if (trunc.isZero())
                throw DegenerateStageError("stageFactors: truncated weight vanished at stage " +
                                           std::to_string(t + 1));
            factor *= trunc.toPolynomial(vars, thetaOffset);
        }
        sf.factors.push_back(std::move(factor));
        remaining = std::move(keep);
    }
    if (!remaining.empty())
        throw DegenerateStageError("stageFactors: weights left unassigned after all stages");
    return sf;
}

Polynomial polarizedEulerClass(const FixedPointData& fp, const VarsPtr& vars, int thetaOffset) {
    Polynomial e = Polynomial::one(vars);
    for (const auto& pw : fp.polarized) e *= pw.weight.toPolynomial(vars, thetaOffset);
    return e;
}

}  // namespace qcohom
