#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcohom/action.hpp"
#include "qcohom/polytope.hpp"
#include "qcohom/rational_function.hpp"

namespace qcohom {

/// Complex dimension of the quotient: 2^r - (r+1).
int quotientDim(int r);

/// Powers of the two degree-two classes: eta^a * omega^b with a+b = dim.
struct ClassSpec {
    int a = 0;
    int b = 0;
};

/// Working variables for one pairing computation. Numeric mode works in
/// (t1..tr) with xi substituted; symbolic mode in (x1..xr, t1..tr).
struct EngineContext {
    int r = 0;
    bool symbolic = false;
    VarsPtr vars;
    int thetaOffset = 0;
    std::vector<Rational> xi;  // numeric mode only

    static EngineContext numericAt(int r, std::vector<Rational> xi);
    static EngineContext symbolicXi(int r);

    int thetaIndex(int axis1) const { return thetaOffset + axis1 - 1; }
};

/// eta^a * omega^b restricted to a fixed point:
/// (-sum_i theta_i)^a * (sum_i (alpha_i - xi_i) theta_i)^b.
Polynomial restrictClass(const ClassSpec& spec, const FixedPointData& fp,
                         const EngineContext& ctx);

/// Iterated residue along one dendrite path:
/// sign * orientation * res_{v_r} ( ... res_{v_1} ( restricted / factor_1 ) ... / factor_r ).
/// Returns the value over (x1..xr); numeric results are constant polynomials.
Polynomial pathContribution(const DendritePath& path, const Polynomial& restricted,
                            const StageFactors& factors, const EngineContext& ctx);

struct PairingResult {
    int r = 0;
    ClassSpec spec;
    Cell cell;
    std::string chamber;
    Polynomial value;                       // over (x1..xr)
    std::map<int, Polynomial> contributions;  // fixed-point index -> value

    Rational valueRational() const { return value.constantValue(); }
};

/// Pairing at a regular rational point.
PairingResult pairing(const WeightMatrix& A, const ClassSpec& spec,
                      const std::vector<Rational>& xi);
/// Chamber polynomial for a cell, xi symbolic.
PairingResult pairingSymbolic(const WeightMatrix& A, const ClassSpec& spec, const Cell& cell);

struct DhCell {
    Cell cell;
    Polynomial poly;  // over (x1..xr)
};

struct DhResult {
    int r = 0;
    bool normalized = false;
    Rational rawIntegral;  // integral of the unnormalized piecewise polynomial
    Rational scale;        // applied factor (1 when unnormalized)
    std::vector<DhCell> cells;

    const Polynomial& cellPoly(const Cell& cell) const;
    Rational evaluate(const std::vector<Rational>& xi) const;
};

/// Per-cell Duistermaat-Heckman polynomials (pairing with a=0, b=dim);
/// normalization rescales by one global constant so the piecewise polynomial
/// integrates to 1 over the hypercube.
DhResult dhDensity(const WeightMatrix& A, bool normalize);

/// Exact integral of a polynomial over one cell of the hypercube, by
/// decomposition into two order simplices and the Dirichlet monomial formula.
Rational integrateOverCell(const Cell& cell, const Polynomial& poly);

}  // namespace qcohom
