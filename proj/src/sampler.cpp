#include "qcohom/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qcohom/error.hpp"

namespace qcohom {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// splitmix64 stream; one independent stream per sample index.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += kGolden;
        return mix64(state);
    }
};

inline double uniformOpen(std::uint64_t z) {
    // (0, 1]: 53 top bits, shifted away from zero.
    return static_cast<double>((z >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

double Histogram::cellVolume() const {
    double w = 2.0 / bins;
    double v = 1.0;
    for (int i = 0; i < r; ++i) v *= w;
    return v;
}

long Histogram::flatIndex(const std::vector<int>& b) const {
    long idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * bins + b[i];
    return idx;
}

Histogram sampleMarginals(const WeightMatrix& A, const SampleConfig& cfg) {
    if (cfg.r != A.r) throw StructuralError("sampleMarginals: config r mismatch");
    if (cfg.samples <= 0) throw ConfigError("sampleMarginals: samples must be positive");
    if (cfg.samples > cfg.sampleCap)
        throw ConfigError("sampleMarginals: samples exceed configured cap");
    if (cfg.bins < 4) throw ConfigError("sampleMarginals: bins must be >= 4");
    if (cfg.excludeWallBand.sign() < 0)
        throw ConfigError("sampleMarginals: wall band must be nonnegative");

    const int r = A.r;
    const int n = A.numFixedPoints();
    Histogram h;
    h.r = r;
    h.bins = cfg.bins;
    h.samples = cfg.samples;
    h.seed = cfg.seed;
    long cells = 1;
    for (int i = 0; i < r; ++i) cells *= cfg.bins;
    h.counts.assign(cells, 0);
    h.axisSums.assign(r, 0.0);

    const int threads = std::max(1, cfg.threads);
    std::vector<std::vector<std::uint64_t>> shardCounts(threads,
                                                        std::vector<std::uint64_t>(cells, 0));
    std::vector<std::vector<double>> shardSums(threads, std::vector<double>(r, 0.0));

    auto worker = [&](int tid, long lo, long hi) {
        auto& counts = shardCounts[tid];
        auto& sums = shardSums[tid];
        std::vector<double> znorm(n);
        std::vector<int> bin(r);
        for (long k = lo; k < hi; ++k) {
            SplitMix64 g{mix64(cfg.seed ^ (static_cast<std::uint64_t>(k) + 1) * kGolden)};
            double total = 0.0;
            for (int j = 0; j < n; ++j) {
                double u1 = uniformOpen(g.next());
                double u2 = uniformOpen(g.next());
                double rad = std::sqrt(-2.0 * std::log(u1));
                double re = rad * std::cos(2.0 * M_PI * u2);
                double im = rad * std::sin(2.0 * M_PI * u2);
                znorm[j] = re * re + im * im;
                total += znorm[j];
            }
            for (int i = 0; i < r; ++i) {
                double xi = 0.0;
                for (int j = 0; j < n; ++j) xi += A.columns[j][i] * znorm[j];
                xi /= total;
                sums[i] += xi;
                int b = static_cast<int>((xi + 1.0) * 0.5 * cfg.bins);
                bin[i] = std::clamp(b, 0, cfg.bins - 1);
            }
            counts[h.flatIndex(bin)]++;
        }
    };

    if (threads == 1) {
        worker(0, 0, cfg.samples);
    } else {
        std::vector<std::thread> pool;
        long per = cfg.samples / threads;
        for (int t = 0; t < threads; ++t) {
            long lo = t * per;
            long hi = (t + 1 == threads) ? cfg.samples : lo + per;
            pool.emplace_back(worker, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < threads; ++t) {
        for (long c = 0; c < cells; ++c) h.counts[c] += shardCounts[t][c];
        for (int i = 0; i < r; ++i) h.axisSums[i] += shardSums[t][i];
    }
    return h;
}

namespace {

std::vector<Rational> cellCenter(const Histogram& h, long idx, std::vector<int>* binsOut) {
    std::vector<Rational> c(h.r);
    long rem = idx;
    for (int i = 0; i < h.r; ++i) {
        int b = static_cast<int>(rem % h.bins);
        rem /= h.bins;
        if (binsOut) (*binsOut)[i] = b;
        c[i] = Rational(2 * b + 1 - h.bins, h.bins);
    }
    return c;
}

bool nearSomeWall(const std::vector<Wall>& walls, const std::vector<Rational>& c,
                  const Rational& band) {
    Rational band2 = band * band;
    for (const auto& w : walls) {
        Rational dot(0), n2(0);
        for (size_t k = 0; k < c.size(); ++k) {
            dot += Rational(w.normal[k]) * c[k];
            n2 += Rational(w.normal[k] * w.normal[k]);
        }
        dot -= w.offset;
        if (dot * dot <= band2 * n2) return true;
    }
    return false;
}

}  // namespace

CompareReport compareDensity(const Histogram& h, const DhResult& dh, const WeightMatrix& A,
                             const Rational& band, double linfThreshold) {
    if (h.r != dh.r) throw StructuralError("compareDensity: histogram/density r mismatch");
    if (!dh.normalized) throw StructuralError("compareDensity: density must be normalized");
    if (h.samples < 10000) throw ConfigError("compareDensity: need at least 1e4 samples");

    auto walls = enumerateWalls(A);
    CompareReport rep;
    rep.threshold = linfThreshold;
    const double cellVol = h.cellVolume();
    double sq = 0.0;
    for (long idx = 0; idx < static_cast<long>(h.counts.size()); ++idx) {
        auto center = cellCenter(h, idx, nullptr);
        if (nearSomeWall(walls, center, band)) {
            rep.excluded++;
            continue;
        }
        double exact = dh.evaluate(center).toDouble();
        double emp = static_cast<double>(h.counts[idx]) / (static_cast<double>(h.samples) * cellVol);
        double res = emp - exact;
        rep.cellIndices.push_back(idx);
        rep.residuals.push_back(res);
        rep.compared++;
        rep.linf = std::max(rep.linf, std::abs(res));
        sq += res * res * cellVol;
    }
    rep.l2 = std::sqrt(sq);
    rep.pass = rep.linf <= linfThreshold;
    return rep;
}

SliceReport compareSliceConditional(const Histogram& h, const DhResult& dh,
                                    const WeightMatrix& A, int sliceAxis, double l2Threshold) {
    if (h.r != 3 || dh.r != 3 || A.r != 3)
        throw StructuralError("compareSliceConditional: r must be 3");
    if (!dh.normalized) throw StructuralError("compareSliceConditional: density must be normalized");
    if (h.bins % 2 != 0) throw ConfigError("compareSliceConditional: bins must be even");
    const int ax = sliceAxis - 1;
    const int o1 = (ax + 1) % 3, o2 = (ax + 2) % 3;
    const int B = h.bins;

    // Slab counts over the two off-axis coordinates (|xi_ax| < 2/B).
    std::vector<std::uint64_t> slab(static_cast<size_t>(B) * B, 0);
    std::uint64_t slabTotal = 0;
    std::vector<int> bin(3);
    for (long idx = 0; idx < static_cast<long>(h.counts.size()); ++idx) {
        long rem = idx;
        for (int i = 0; i < 3; ++i) {
            bin[i] = static_cast<int>(rem % B);
            rem /= B;
        }
        if (bin[ax] != B / 2 - 1 && bin[ax] != B / 2) continue;
        slab[bin[o1] + static_cast<size_t>(B) * bin[o2]] += h.counts[idx];
        slabTotal += h.counts[idx];
    }
    if (slabTotal == 0) throw ConfigError("compareSliceConditional: empty slab");
    const double cellArea = (2.0 / B) * (2.0 / B);

    // Band-averaged model on the slab: 64-point midpoint rule across the
    // slab thickness, exact density evaluations at rational nodes.
    const int nodes = 64;
    std::vector<double> model(static_cast<size_t>(B) * B, 0.0);
    double modelMass = 0.0;
    for (int b2 = 0; b2 < B; ++b2) {
        for (int b3 = 0; b3 < B; ++b3) {
            Rational c2(2 * b2 + 1 - B, B), c3(2 * b3 + 1 - B, B);
            double acc = 0.0;
            for (int kq = 0; kq < nodes; ++kq) {
                // Midpoints across the slab thickness (-2/B, 2/B); their
                // denominators avoid wall ties with regular cell centers.
                Rational s = Rational(2 * kq + 1 - nodes, nodes) * Rational(2, B);
                std::vector<Rational> pt(3);
                pt[ax] = s;
                pt[o1] = c2;
                pt[o2] = c3;
                // Centers on a wall (diagonal cells) only feed the model
                // normalization; nudge them off the wall.
                Rational delta(1, 1 << 21);
                for (int attempt = 0; attempt < 5; ++attempt) {
                    try {
                        acc += dh.evaluate(pt).toDouble();
                        break;
                    } catch (const NotRegularError&) {
                        pt[o1] = pt[o1] + delta;
                        delta = delta * Rational(3, 2);
                    }
                }
            }
            acc /= nodes;  // average density across the slab thickness
            model[b2 + static_cast<size_t>(B) * b3] = acc;
            modelMass += acc * cellArea;
        }
    }

    SliceReport rep;
    rep.threshold = l2Threshold;
    double sq = 0.0;
    double margin2 = 0.15, wallDist = 0.1;
    for (int b2 = 0; b2 < B; ++b2) {
        for (int b3 = 0; b3 < B; ++b3) {
            double c2 = (2.0 * b2 + 1 - B) / B, c3 = (2.0 * b3 + 1 - B) / B;
            double a2 = std::abs(c2), a3 = std::abs(c3);
            bool ok = std::min(a2, a3) > margin2;
            ok = ok && std::abs(a2 - a3) / std::sqrt(2.0) > wallDist;
            ok = ok && (1 - a2) > wallDist && (1 - a3) > wallDist;
            ok = ok && std::abs(a2 + a3 - 1) / std::sqrt(2.0) > wallDist;
            if (!ok) continue;
            double emp = static_cast<double>(slab[b2 + static_cast<size_t>(B) * b3]) /
                         (static_cast<double>(slabTotal) * cellArea);
            double mod = model[b2 + static_cast<size_t>(B) * b3] / modelMass;
            double res = emp - mod;
            rep.compared++;
            rep.linf = std::max(rep.linf, std::abs(res));
            sq += res * res * cellArea;
        }
    }
    rep.l2 = std::sqrt(sq);

    // Monotonicity along the apex direction: fold the two central columns of
    // the first off-axis coordinate and the +- pairs of the second; the
    // folded conditional density must not increase with |xi| beyond noise.
    rep.monotone = true;
    int half = B / 2;
    double prev = -1.0, prevSig = 0.0;
    for (int j = half; j < B; ++j) {
        std::uint64_t cnt = 0;
        for (int b2 : {half - 1, half})
            cnt += slab[b2 + static_cast<size_t>(B) * j] +
                   slab[b2 + static_cast<size_t>(B) * (B - 1 - j)];
        double dens = static_cast<double>(cnt) / (static_cast<double>(slabTotal) * cellArea * 4.0);
        double sig = std::sqrt(static_cast<double>(cnt) + 1.0) /
                     (static_cast<double>(slabTotal) * cellArea * 4.0);
        if (prev >= 0.0 && dens > prev + 4.0 * (sig + prevSig)) rep.monotone = false;
        prev = dens;
        prevSig = sig;
    }
    rep.pass = rep.monotone && rep.l2 <= l2Threshold;
    return rep;
}

double axisFlipKs(const Histogram& h, int axis) {
    const int ax = axis - 1;
    std::vector<double> marginal(h.bins, 0.0);
    std::vector<int> bin(h.r);
    for (long idx = 0; idx < static_cast<long>(h.counts.size()); ++idx) {
        long rem = idx;
        for (int i = 0; i < h.r; ++i) {
            bin[i] = static_cast<int>(rem % h.bins);
            rem /= h.bins;
        }
        marginal[bin[ax]] += static_cast<double>(h.counts[idx]);
    }
    double total = 0.0;
    for (double c : marginal) total += c;
    double cdf = 0.0, rcdf = 0.0, d = 0.0;
    for (int b = 0; b < h.bins; ++b) {
        cdf += marginal[b] / total;
        rcdf += marginal[h.bins - 1 - b] / total;
        d = std::max(d, std::abs(cdf - rcdf));
    }
    return d;
}

}  // namespace qcohom
