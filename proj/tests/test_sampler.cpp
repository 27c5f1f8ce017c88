#include <doctest.h>

#include <cmath>

#include "qcohom/error.hpp"
#include "qcohom/sampler.hpp"

using namespace qcohom;

namespace {

SampleConfig cfg(int r, long samples, int bins, std::uint64_t seed, int threads = 1) {
    SampleConfig c;
    c.r = r;
    c.samples = samples;
    c.bins = bins;
    c.seed = seed;
    c.threads = threads;
    c.excludeWallBand = Rational(2, bins);
    return c;
}

}  // namespace

TEST_CASE("histogram bookkeeping") {
    WeightMatrix A = WeightMatrix::build(2);
    Histogram h = sampleMarginals(A, cfg(2, 20000, 10, 7));
    CHECK(h.counts.size() == 100);
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == 20000);  // every sample lands in [-1,1]^r
    CHECK(h.cellVolume() == doctest::Approx(0.04));
}

TEST_CASE("determinism: same seed, any thread count") {
    WeightMatrix A = WeightMatrix::build(2);
    Histogram a = sampleMarginals(A, cfg(2, 30000, 8, 123, 1));
    Histogram b = sampleMarginals(A, cfg(2, 30000, 8, 123, 1));
    Histogram c = sampleMarginals(A, cfg(2, 30000, 8, 123, 3));
    CHECK(a.counts == b.counts);
    CHECK(a.counts == c.counts);
    Histogram d = sampleMarginals(A, cfg(2, 30000, 8, 124));
    CHECK(a.counts != d.counts);
}

TEST_CASE("configuration errors") {
    WeightMatrix A = WeightMatrix::build(1);
    CHECK_THROWS_AS(sampleMarginals(A, cfg(1, 0, 10, 1)), ConfigError);
    CHECK_THROWS_AS(sampleMarginals(A, cfg(1, 1000, 2, 1)), ConfigError);
    SampleConfig over = cfg(1, 1000, 10, 1);
    over.samples = over.sampleCap + 1;
    CHECK_THROWS_AS(sampleMarginals(A, over), ConfigError);
}

TEST_CASE("empirical axis means vanish within 4 standard errors") {
    for (int r : {1, 2, 3}) {
        WeightMatrix A = WeightMatrix::build(r);
        long n = 200000;
        Histogram h = sampleMarginals(A, cfg(r, n, 8, 99));
        for (int i = 0; i < r; ++i) {
            double mean = h.axisSums[i] / static_cast<double>(n);
            // Var(xi_i) <= 1, so 4 standard errors is 4/sqrt(n).
            CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("axis-flip symmetry smoke test") {
    WeightMatrix A = WeightMatrix::build(2);
    Histogram h = sampleMarginals(A, cfg(2, 200000, 20, 2024));
    for (int axis : {1, 2}) {
        double d = axisFlipKs(h, axis);
        CHECK(d < 2.0 * 1.36 * std::sqrt(2.0 / 200000.0));
    }
}

TEST_CASE("r=1 density approaches the uniform 1/2") {
    WeightMatrix A = WeightMatrix::build(1);
    DhResult dh = dhDensity(A, true);
    Histogram h = sampleMarginals(A, cfg(1, 200000, 20, 5));
    CompareReport rep = compareDensity(h, dh, A, Rational(0), 0.03);
    CHECK(rep.pass);
    CHECK(rep.compared + rep.excluded == 20);
}

TEST_CASE("comparison guards") {
    WeightMatrix A2 = WeightMatrix::build(2);
    WeightMatrix A1 = WeightMatrix::build(1);
    DhResult dh2 = dhDensity(A2, true);
    DhResult raw = dhDensity(A2, false);
    Histogram h1 = sampleMarginals(A1, cfg(1, 20000, 10, 3));
    CHECK_THROWS_AS(compareDensity(h1, dh2, A2, Rational(1, 10), 0.02), StructuralError);
    Histogram h2 = sampleMarginals(A2, cfg(2, 20000, 10, 3));
    CHECK_THROWS_AS(compareDensity(h2, raw, A2, Rational(1, 10), 0.02), StructuralError);
    SampleConfig tiny = cfg(2, 5000, 10, 3);
    Histogram ht = sampleMarginals(A2, tiny);
    CHECK_THROWS_AS(compareDensity(ht, dh2, A2, Rational(1, 10), 0.02), ConfigError);
}

TEST_CASE("self-comparison of the exact density has zero residuals") {
    // Synthetic histogram whose cell fractions equal the exact density at
    // the cell centers; residuals must vanish identically.
    WeightMatrix A = WeightMatrix::build(2);
    DhResult dh = dhDensity(A, true);
    Histogram h;
    h.r = 2;
    h.bins = 8;
    h.seed = 0;
    h.counts.assign(64, 0);
    h.axisSums.assign(2, 0.0);
    // counts = density(center) * samples * cellVolume, exactly an integer for
    // this sample count since the density values at centers are k/32.
    const long scale = 256L * 64;
    for (int b2 = 0; b2 < 8; ++b2)
        for (int b1 = 0; b1 < 8; ++b1) {
            std::vector<Rational> c = {Rational(2 * b1 + 1 - 8, 8), Rational(2 * b2 + 1 - 8, 8)};
            try {
                Rational cnt = dh.evaluate(c) * Rational(scale) * Rational(1, 16);
                REQUIRE(cnt.isInteger());
                h.counts[b1 + 8 * b2] = static_cast<std::uint64_t>(cnt.numerator().get_si());
            } catch (const NotRegularError&) {
                // center on a wall: the comparison excludes the cell anyway
            }
        }
    h.samples = scale;
    CompareReport rep = compareDensity(h, dh, A, Rational(1, 4), 0.0);
    CHECK(rep.linf == 0.0);
    CHECK(rep.l2 == 0.0);
    CHECK(rep.pass);
}

TEST_CASE("r=2 empirical density matches the exact one") {
    WeightMatrix A = WeightMatrix::build(2);
    DhResult dh = dhDensity(A, true);
    Histogram h = sampleMarginals(A, cfg(2, 400000, 20, 42));
    CompareReport rep = compareDensity(h, dh, A, Rational(1, 10), 0.04);
    CHECK(rep.pass);
    CHECK(rep.compared > 100);
}
