#pragma once

#include <vector>

#include "qcohom/polynomial.hpp"

namespace qcohom {

/// The r x 2^r sign matrix defining the torus action. Columns are the weight
/// vectors alpha_j, one per fixed point, in canonical order: sorted by number
/// of -1 entries, ties by the integer whose bit i is set when row (r-i)
/// holds -1. For r = 2, 3 this is exactly the published column order.
struct WeightMatrix {
    int r = 0;
    std::vector<std::vector<int>> columns;  // 2^r columns of length r, entries +-1

    static WeightMatrix build(int r);
    /// Explicit column order (used for relabeling-invariance checks).
    static WeightMatrix fromColumns(int r, std::vector<std::vector<int>> columns);

    int numFixedPoints() const { return static_cast<int>(columns.size()); }
    /// 1-based index of a vertex; throws if absent.
    int columnIndex(const std::vector<int>& v) const;
};

/// Isotropy weight: integer coefficient vector of theta_1..theta_r.
struct Weight {
    std::vector<int> coeffs;

    bool isZero() const;
    friend bool operator==(const Weight& a, const Weight& b) { return a.coeffs == b.coeffs; }
    Weight negated() const;
    /// As a polynomial over `vars`, theta_i living at index thetaOffset+i-1.
    Polynomial toPolynomial(const VarsPtr& vars, int thetaOffset) const;
    std::string str(int thetaOffset = 0) const;
};

struct PolarizedWeight {
    Weight weight;
    int epsilon = 1;  // +-1
};

/// Fixed point p_j with its vertex and isotropy data.
struct FixedPointData {
    int index = 0;                          // 1-based
    std::vector<int> vertex;                // column j of A
    std::vector<Weight> weights;            // alpha_l - alpha_j over l != j, column order
    std::vector<PolarizedWeight> polarized; // same order, polarized against gamma
};

/// Weights alpha_l - alpha_j for l != j in column order. j is 1-based.
std::vector<Weight> isotropyWeights(const WeightMatrix& A, int j);

/// (-2^{r-1}, ..., -2, -1): generic for every weight of this action family.
std::vector<int> canonicalGamma(int r);

/// epsilon = -1 exactly when <w, gamma> < 0. Throws NonGenericError when some
/// pairing vanishes.
std::vector<PolarizedWeight> polarize(const std::vector<Weight>& weights,
                                      const std::vector<int>& gamma);

FixedPointData fixedPointData(const WeightMatrix& A, int j, const std::vector<int>& gamma);
std::vector<FixedPointData> fixedPointTable(const WeightMatrix& A, const std::vector<int>& gamma);

/// Stage Euler factors for one residue order. Stage t (0-based) takes every
/// polarized weight not yet assigned whose order[t]-coefficient is nonzero,
/// truncated to the axes already seen (order[0..t]); with the greedy
/// assignment each truncated weight is a monomial in the stage variable.
/// `orientation` is the product of all polarization signs; it accounts for
/// the orientation flips the polarization introduced and multiplies path
/// contributions downstream.
struct StageFactors {
    std::vector<int> order;          // 1-based axis indices, first residue first
    std::vector<Polynomial> factors; // over the engine variable list
    int orientation = 1;
};

StageFactors stageFactors(const FixedPointData& fp, const std::vector<int>& order,
                          const VarsPtr& vars, int thetaOffset);

/// Product of all polarized (untruncated) weights: the polarized equivariant
/// Euler class of the fixed point's normal bundle.
Polynomial polarizedEulerClass(const FixedPointData& fp, const VarsPtr& vars, int thetaOffset);

}  // namespace qcohom
