#pragma once

#include <cstdint>
#include <vector>

#include "qcohom/action.hpp"
#include "qcohom/residue_engine.hpp"

namespace qcohom {

struct SampleConfig {
    int r = 1;
    long samples = 0;
    int bins = 20;
    std::uint64_t seed = 0;
    Rational excludeWallBand;  // in xi units; callers usually pass one cell width
    int threads = 1;
    long sampleCap = 200'000'000;
};

/// Counts over the uniform bins^r grid on [-1,1]^r. Cell index is
/// b_1 + bins*(b_2 + bins*(b_3 + ...)), axis 1 fastest.
struct Histogram {
    int r = 0;
    int bins = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> axisSums;  // sum of each xi coordinate (diagnostic)

    double cellVolume() const;
    long flatIndex(const std::vector<int>& b) const;
};

/// Draws z in C^{2^r} with independent standard complex Gaussian entries
/// (splitmix64 counter streams + Box-Muller), normalizes, computes
/// xi_i = sum_j a_ij |z_j|^2 and bins. Deterministic for a fixed seed,
/// independent of thread count.
Histogram sampleMarginals(const WeightMatrix& A, const SampleConfig& cfg);

struct CompareReport {
    long compared = 0;
    long excluded = 0;
    double linf = 0.0;
    double l2 = 0.0;  // sqrt( sum residual^2 * cellVolume ) over compared cells
    double threshold = 0.0;
    bool pass = false;
    std::vector<long> cellIndices;
    std::vector<double> residuals;  // empirical - exact at cell center
};

/// Residuals of the empirical density against a normalized piecewise
/// polynomial, over cells at Euclidean distance > band from every wall.
CompareReport compareDensity(const Histogram& h, const DhResult& dh, const WeightMatrix& A,
                             const Rational& band, double linfThreshold);

struct SliceReport {
    long compared = 0;
    double linf = 0.0;
    double l2 = 0.0;
    bool monotone = false;
    double threshold = 0.0;
    bool pass = false;
};

/// r=3 check along the slice xi_sliceAxis = 0: conditional 2D binning over
/// the central slab, compared against the band-averaged density conditional
/// on the slab, plus a qualitative monotonicity check along the apex axis.
SliceReport compareSliceConditional(const Histogram& h, const DhResult& dh,
                                    const WeightMatrix& A, int sliceAxis, double l2Threshold);

/// Kolmogorov-Smirnov style statistic between the binned marginal of an axis
/// and its mirror image (smoke test of the sign symmetry).
double axisFlipKs(const Histogram& h, int axis);

}  // namespace qcohom
