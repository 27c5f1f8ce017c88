#pragma once

#include <string>
#include <vector>

#include "qcohom/action.hpp"
#include "qcohom/polytope.hpp"

namespace qcohom {

/// chi_j = sum_i a_{i,j} t_i over (t1..tr, w).
Polynomial character(const WeightMatrix& A, int j, const VarsPtr& vars);

/// One Tolman-Weitsman/Kalkman kernel generator for a coordinate circle.
struct KernelGenerator {
    int circle = 0;                  // 1-based
    int side = +1;                   // +-1
    std::vector<Polynomial> factors; // (w + chi_j) over the side's fixed points
    Polynomial expanded;
};

/// The 2r coordinate-circle generators: for circle i, side + collects all j
/// with a_{i,j} = +1. Ordered circle-major, + before -.
std::vector<KernelGenerator> kernelGenerators(const WeightMatrix& A);

/// prod_j (w + chi_j): the defining relation of the equivariant cohomology.
Polynomial fullRelation(const WeightMatrix& A);

/// Kernel generators over every wall-normal direction at a regular xi: for
/// each direction, the product of (w + chi_j) over the fixed points on each
/// side of the hyperplane through xi. The coordinate directions contribute
/// the kernelGenerators() products; the remaining directions are required
/// for the quotient to be finite-dimensional.
std::vector<Polynomial> chamberKernelGenerators(const WeightMatrix& A,
                                                const std::vector<Rational>& xi);

/// A regular point whose cell is the canonical one (apex axis r, all signs
/// positive): xi_i = 2^{i-1} / (2^r + 1).
std::vector<Rational> canonicalRegularXi(int r);

/// Reduced Groebner basis under the canonical grevlex order: monic, mutually
/// reduced, sorted by ascending leading term. Deterministic.
std::vector<Polynomial> groebnerBasis(std::vector<Polynomial> gens);

/// Complete multivariate division remainder; zero iff p lies in the ideal.
Polynomial normalForm(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Every variable appears as a pure power among the leading terms.
bool isZeroDimensional(const std::vector<Polynomial>& basis);

/// Dimensions of the graded quotient by polynomial degree (cohomological
/// degree 2d). Throws StructuralError for infinite-dimensional quotients.
std::vector<long> poincareSeries(const std::vector<Polynomial>& basis);

/// Elementary symmetric polynomial e_k of all variables of `vars`.
Polynomial elementarySymmetric(const VarsPtr& vars, int k);

/// Unique expression of a symmetric polynomial in the elementary symmetric
/// polynomials of its full variable alphabet; result over (s1..sk). Throws
/// NotSymmetricError naming a violating transposition.
Polynomial symmetricExpand(const Polynomial& p);

/// Substitute s_j -> e_j(alphabet); inverse of symmetricExpand.
Polynomial sigmaSubstitute(const Polynomial& expr, const VarsPtr& alphabet);

/// sigma_k of the 2^r characters, as a polynomial over (t1..tr).
Polynomial sigmaOfCharacters(const WeightMatrix& A, int k);

/// Presentation data for H*(M_xi). The published 2r generators are kept
/// verbatim; the Groebner basis and Poincare series are computed from the
/// full wall-normal kernel at `kernelXi` (the coordinate products alone cut
/// out an infinite-dimensional quotient).
struct RingPresentation {
    int r = 0;
    VarsPtr vars;
    std::vector<KernelGenerator> generators;
    std::vector<Polynomial> coordinateGroebner;
    std::vector<Rational> kernelXi;
    std::vector<Polynomial> chamberKernel;
    std::vector<Polynomial> groebner;
    std::vector<long> poincare;
};

RingPresentation buildRingPresentation(const WeightMatrix& A);
RingPresentation buildRingPresentation(const WeightMatrix& A, const std::vector<Rational>& xi);

}  // namespace qcohom
