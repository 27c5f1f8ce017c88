// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include <json.hpp>

#include "qcohom/error.hpp"
#include "qcohom/kirwan.hpp"
#include "qcohom/residue_engine.hpp"
#include "qcohom/sampler.hpp"

using json = nlohmann::json;
using namespace qcohom;

namespace {

struct Runner {
    int failures = 0;

    void run(int id, const std::string& name, double budgetSeconds,
             const std::function<void()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool timeOk = secs < budgetSeconds;
        bool pass = error.empty() && timeOk;
        std::cout << "CRITERION " << std::setw(2) << id << " " << (pass ? "PASS" : "FAIL") << " ("
                  << std::fixed << std::setprecision(2) << secs << "s / budget " << budgetSeconds
                  << "s): " << name;
        if (!error.empty()) std::cout << " -- " << error;
        if (error.empty() && !timeOk) std::cout << " -- exceeded time budget";
        std::cout << "\n";
        if (!pass) ++failures;
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::vector<Rational> xiOf(std::initializer_list<const char*> parts) {
    std::vector<Rational> out;
    for (const char* p : parts) out.push_back(Rational::parse(p));
    return out;
}

Polynomial xp(int r, const std::string& s) { return Polynomial::parse(xiVars(r), s); }

std::string fixturePath(const std::string& name) {
    return std::string(QCOHOM_FIXTURES_DIR) + "/v1/" + name;
}

// ---------------------------------------------------------------------------
// Criterion 2 helper: an independent evaluation of the two upper-chamber
// iterated residues for r=2, a=0, b=1, using plain rational arithmetic only.
// The restriction at a vertex is (v1-xi1) t1 + (v2-xi2) t2; the stage factors
// are the monomials f1 t2^2 and f2 t1. Then
//   res_{t2}( ((v1-xi1) t1 + (v2-xi2) t2) / (f1 t2^2) ) = (v2-xi2)/f1,
//   res_{t1}( ((v2-xi2)/f1) / (f2 t1) )                 = (v2-xi2)/(f1 f2),
// multiplied by the path sign and the polarization orientation.
Rational independentUpperTerm(const Rational& v2MinusXi2, const Rational& f1, const Rational& f2,
                              int pathSign, int orientation) {
    return v2MinusXi2 / (f1 * f2) * Rational(pathSign * orientation);
}

}  // namespace

int main() {
    Runner R;

    // ------------------------------------------------------------------ 1
    R.run(1, "two-qubit DH shape: pairing = c (1 - max|xi|), one fixed c at 8 points", 1.0, [] {
        WeightMatrix A = WeightMatrix::build(2);
        std::vector<std::vector<Rational>> pts = {
            xiOf({"0", "3/4"}),  xiOf({"1/8", "1/2"}),    // upper
            xiOf({"3/4", "0"}),  xiOf({"1/2", "-1/8"}),   // right
            xiOf({"0", "-3/4"}), xiOf({"-1/8", "-1/2"}),  // lower
            xiOf({"-3/4", "0"}), xiOf({"-1/2", "1/8"}),   // left
        };
        const Rational c(-1, 4);
        for (const auto& p : pts) {
            Rational got = pairing(A, ClassSpec{0, 1}, p).valueRational();
            Rational maxAbs = p[0].abs() > p[1].abs() ? p[0].abs() : p[1].abs();
            require(got == c * (Rational(1) - maxAbs), "pairing mismatch at a test point");
        }
    });

    // ------------------------------------------------------------------ 2
    R.run(2, "hand-pinned exact value: pairing(r=2, a=0, b=1, (0,3/4)) = -1/16", 1.0, [] {
        // Independent re-derivation first. p1: restriction t1 + (1/4) t2,
        // factors [4 t2^2, -2 t1], path sign +1, no flips. p3: restriction
        // -t1 + (1/4) t2, factors [-4 t2^2, -2 t1], path sign -1, two flips.
        Rational c1 = independentUpperTerm(Rational(1, 4), Rational(4), Rational(-2), +1, +1);
        Rational c3 = independentUpperTerm(Rational(1, 4), Rational(-4), Rational(-2), -1, +1);
        require(c1 == Rational(-1, 32) && c3 == Rational(-1, 32),
                "independent residue evaluation disagrees with the derivation");
        require(c1 + c3 == Rational(-1, 16), "independent total is not -1/16");

        WeightMatrix A = WeightMatrix::build(2);
        PairingResult pr = pairing(A, ClassSpec{0, 1}, xiOf({"0", "3/4"}));
        require(pr.valueRational() == Rational(-1, 16), "engine value is not -1/16");
        require(pr.contributions.at(1).constantValue() == c1 &&
                    pr.contributions.at(3).constantValue() == c3,
                "engine path contributions disagree with the independent evaluation");
    });

    // ------------------------------------------------------------------ 3
    R.run(3, "three-qubit upper chamber: rational multiple of (1-x2)(x3-1)^3, same at 5 points",
          5.0, [] {
              WeightMatrix A = WeightMatrix::build(3);
              PairingResult pr = pairingSymbolic(A, ClassSpec{0, 4}, canonicalCell(3, 3, 1));
              Polynomial shape = xp(3, "1 - x2") * xp(3, "x3 - 1").pow(3);
              Rational mult = pr.value.leadingCoeff() / shape.leadingCoeff();
              require(shape * mult == pr.value, "not a rational multiple of the shape");
              require(mult == Rational(1, 16), "unexpected multiple");
              std::vector<std::vector<Rational>> pts = {
                  xiOf({"0", "1/5", "3/5"}), xiOf({"1/10", "1/4", "1/2"}),
                  xiOf({"-1/8", "1/4", "3/4"}), xiOf({"1/20", "1/10", "9/10"}),
                  xiOf({"1/16", "5/16", "9/16"})};
              for (const auto& p : pts) {
                  Rational num = pairing(A, ClassSpec{0, 4}, p).valueRational();
                  require(num == mult * shape.evaluate(p), "multiple varies across points");
              }
          });

    // ------------------------------------------------------------------ 4
    R.run(4, "three-qubit front chamber: proportional to (1-x3)(x1-1)^3, same constant", 5.0, [] {
        WeightMatrix A = WeightMatrix::build(3);
        PairingResult pr = pairingSymbolic(A, ClassSpec{0, 4}, canonicalCell(3, 1, 1));
        Polynomial shape = xp(3, "1 - x3") * xp(3, "x1 - 1").pow(3);
        require(shape * Rational(1, 16) == pr.value,
                "front chamber polynomial is not (1/16)(1-x3)(x1-1)^3");
    });

    // ------------------------------------------------------------------ 5
    R.run(5, "numeric spot value: pairing(r=3, a=0, b=4, (0,1/5,3/5)) = -2/625", 5.0, [] {
        WeightMatrix A = WeightMatrix::build(3);
        require(pairing(A, ClassSpec{0, 4}, xiOf({"0", "1/5", "3/5"})).valueRational() ==
                    Rational(-2, 625),
                "spot value mismatch");
    });

    // ------------------------------------------------------------------ 6
    R.run(6, "wall continuity and signed-permutation symmetry, r=1,2,3", 10.0, [] {
        for (int r : {1, 2, 3}) {
            WeightMatrix A = WeightMatrix::build(r);
            DhResult dh = dhDensity(A, false);
            VarsPtr xv = xiVars(r);
            // continuity across every adjacent cell pair
            for (const auto& cell : allCells(r)) {
                for (int t = 0; t + 1 < r; ++t) {
                    const int vi = cell.order[t] - 1, vj = cell.order[t + 1] - 1;
                    std::vector<std::pair<Cell, int>> nbs;
                    Cell sw = cell;
                    std::swap(sw.order[t], sw.order[t + 1]);
                    std::swap(sw.signs[t], sw.signs[t + 1]);
                    if (t + 1 < r - 1) {
                        nbs.emplace_back(sw, cell.signs[t] * cell.signs[t + 1]);
                    } else {
                        for (int cdir : {+1, -1}) {
                            Cell nb = sw;
                            nb.signs[t] = cdir;
                            nb.signs[t + 1] = 1;
                            nbs.emplace_back(nb, cdir * cell.signs[t]);
                        }
                    }
                    const Polynomial& p = dh.cellPoly(cell);
                    for (const auto& [nb, rel] : nbs) {
                        Polynomial image = Polynomial::variable(xv, vi) * Rational(rel);
                        require(p.substitute(vj, image) ==
                                    dh.cellPoly(nb).substitute(vj, image),
                                "wall continuity violated (r=" + std::to_string(r) + ")");
                    }
                }
            }
            // full signed-permutation group, exact polynomial identities
            std::vector<int> perm(r);
            std::iota(perm.begin(), perm.end(), 0);
            std::sort(perm.begin(), perm.end());
            do {
                for (int mask = 0; mask < (1 << r); ++mask) {
                    std::vector<int> eps(r);
                    for (int i = 0; i < r; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
                    for (const auto& cell : allCells(r)) {
                        Cell image;
                        image.order.resize(r);
                        image.signs.resize(r);
                        for (int t = 0; t < r; ++t) {
                            int a = cell.order[t] - 1;
                            image.order[t] = perm[a] + 1;
                            image.signs[t] = cell.signs[t] * eps[a];
                        }
                        image.signs[r - 1] = 1;
                        Polynomial transported =
                            dh.cellPoly(cell).applySignedPermutation(perm, eps);
                        require(transported == dh.cellPoly(image),
                                "signed-permutation symmetry violated (r=" + std::to_string(r) +
                                    ")");
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    });

    // ------------------------------------------------------------------ 7
    R.run(7, "kernel generators: published products, pair identities, normal form", 30.0, [] {
        for (int r : {2, 3}) {
            WeightMatrix A = WeightMatrix::build(r);
            auto gens = kernelGenerators(A);
            require(static_cast<int>(gens.size()) == 2 * r, "generator count");
            VarsPtr v = ringVars(r);
            for (const auto& g : gens) {
                require(static_cast<int>(g.factors.size()) == (1 << (r - 1)), "factor count");
                Polynomial prod = Polynomial::one(v);
                for (const auto& f : g.factors) prod *= f;
                require(prod == g.expanded, "expanded product mismatch");
            }
            if (r == 2) {
                require(gens[0].expanded == Polynomial::parse(v, "w + t1 + t2") *
                                                Polynomial::parse(v, "w + t1 - t2"),
                        "r=2 circle 1 side + display");
                require(gens[1].expanded == Polynomial::parse(v, "w - t1 + t2") *
                                                Polynomial::parse(v, "w - t1 - t2"),
                        "r=2 circle 1 side - display");
                require(gens[2].expanded == Polynomial::parse(v, "w + t1 + t2") *
                                                Polynomial::parse(v, "w - t1 + t2"),
                        "r=2 circle 2 side + display");
                require(gens[3].expanded == Polynomial::parse(v, "w + t1 - t2") *
                                                Polynomial::parse(v, "w - t1 - t2"),
                        "r=2 circle 2 side - display");
            } else {
                auto prod4 = [&](const char* a, const char* b, const char* c, const char* d) {
                    return Polynomial::parse(v, a) * Polynomial::parse(v, b) *
                           Polynomial::parse(v, c) * Polynomial::parse(v, d);
                };
                require(gens[0].expanded == prod4("w + t1 + t2 + t3", "w + t1 + t2 - t3",
                                                  "w + t1 - t2 + t3", "w + t1 - t2 - t3"),
                        "r=3 circle 1 side +");
                require(gens[1].expanded == prod4("w - t1 + t2 + t3", "w - t1 + t2 - t3",
                                                  "w - t1 - t2 + t3", "w - t1 - t2 - t3"),
                        "r=3 circle 1 side -");
                require(gens[2].expanded == prod4("w + t1 + t2 + t3", "w + t1 + t2 - t3",
                                                  "w - t1 + t2 + t3", "w - t1 + t2 - t3"),
                        "r=3 circle 2 side +");
                require(gens[3].expanded == prod4("w + t1 - t2 + t3", "w + t1 - t2 - t3",
                                                  "w - t1 - t2 + t3", "w - t1 - t2 - t3"),
                        "r=3 circle 2 side -");
                require(gens[4].expanded == prod4("w + t1 + t2 + t3", "w + t1 - t2 + t3",
                                                  "w - t1 + t2 + t3", "w - t1 - t2 + t3"),
                        "r=3 circle 3 side +");
                require(gens[5].expanded == prod4("w + t1 + t2 - t3", "w + t1 - t2 - t3",
                                                  "w - t1 + t2 - t3", "w - t1 - t2 - t3"),
                        "r=3 circle 3 side -");
            }
            Polynomial full = fullRelation(A);
            for (int circle = 0; circle < r; ++circle)
                require(gens[2 * circle].expanded * gens[2 * circle + 1].expanded == full,
                        "pair product is not the full relation");
            std::vector<Polynomial> coordGens;
            for (const auto& g : gens) coordGens.push_back(g.expanded);
            auto gb = groebnerBasis(coordGens);
            require(normalForm(full, gb).isZero(), "full relation not in the ideal");
        }
    });

    // ------------------------------------------------------------------ 8
    R.run(8, "Poincare series: r=1 [1]; r=2 [1,1]; r=3 palindromic golden", 60.0, [] {
        require(buildRingPresentation(WeightMatrix::build(1)).poincare == std::vector<long>{1},
                "r=1 series");
        require(buildRingPresentation(WeightMatrix::build(2)).poincare ==
                    std::vector<long>{1, 1},
                "r=2 series");
        RingPresentation rp3 = buildRingPresentation(WeightMatrix::build(3));
        require(rp3.poincare.front() == 1, "leading entry");
        auto rev = rp3.poincare;
        std::reverse(rev.begin(), rev.end());
        require(rev == rp3.poincare, "palindromicity");
        std::ifstream is(fixturePath("ring_r3.json"));
        require(is.good(), "missing fixture ring_r3.json");
        json golden = json::parse(is);
        require(rp3.poincare == golden["poincare"].get<std::vector<long>>(),
                "r=3 golden Poincare series");
    });

    // ------------------------------------------------------------------ 9
    R.run(9, "symmetric decomposition identities and 100 random round trips", 5.0, [] {
        require(sigmaOfCharacters(WeightMatrix::build(2), 1).isZero(), "sigma_1 r=2");
        require(sigmaOfCharacters(WeightMatrix::build(3), 1).isZero(), "sigma_1 r=3");
        Polynomial s2 = symmetricExpand(sigmaOfCharacters(WeightMatrix::build(2), 2));
        require(s2 == Polynomial::parse(sigmaVars(2), "-2*s1^2 + 4*s2"),
                "sigma_2 decomposition for r=2");
        std::mt19937_64 rng(20260809);
        std::uniform_int_distribution<int> ex(0, 2), co(-9, 9);
        VarsPtr sv = sigmaVars(3), tv = thetaVars(3);
        for (int rep = 0; rep < 100; ++rep) {
            Polynomial e(sv);
            for (int t = 0; t < 4; ++t) {
                Mono m(3);
                for (auto& x : m) x = ex(rng);
                int c = co(rng);
                if (c) e.addTerm(m, Rational(c));
            }
            Polynomial sym = sigmaSubstitute(e, tv);
            require(symmetricExpand(sym) == e, "round trip failed");
        }
    });

    // ------------------------------------------------------------------ 10
    R.run(10, "Monte Carlo oracle: r=1 uniform, r=2 density, r=3 slice; bit-identical reruns",
          60.0, [] {
              {
                  WeightMatrix A = WeightMatrix::build(1);
                  SampleConfig cfg{1, 1000000, 20, 42, Rational(0), 4};
                  Histogram h = sampleMarginals(A, cfg);
                  CompareReport rep = compareDensity(h, dhDensity(A, true), A, Rational(0), 0.01);
                  require(rep.pass, "r=1 Linf " + std::to_string(rep.linf) + " > 0.01");
              }
              {
                  WeightMatrix A = WeightMatrix::build(2);
                  SampleConfig cfg{2, 1000000, 20, 42, Rational(1, 10), 4};
                  Histogram h = sampleMarginals(A, cfg);
                  CompareReport rep =
                      compareDensity(h, dhDensity(A, true), A, Rational(1, 10), 0.02);
                  require(rep.pass, "r=2 Linf " + std::to_string(rep.linf) + " > 0.02");
                  SampleConfig cfg1 = cfg;
                  cfg1.threads = 1;
                  Histogram h2 = sampleMarginals(A, cfg);
                  Histogram h3 = sampleMarginals(A, cfg1);
                  require(h.counts == h2.counts && h.counts == h3.counts,
                          "rerun is not bit-identical");
              }
              {
                  WeightMatrix A = WeightMatrix::build(3);
                  SampleConfig cfg{3, 1000000, 20, 42, Rational(1, 10), 4};
                  Histogram h = sampleMarginals(A, cfg);
                  SliceReport rep = compareSliceConditional(h, dhDensity(A, true), A, 1, 0.05);
                  require(rep.monotone, "r=3 slice monotonicity failed");
                  require(rep.l2 <= 0.05, "r=3 slice L2 " + std::to_string(rep.l2) + " > 0.05");
              }
          });

    // ------------------------------------------------------------------ 11
    R.run(11, "documented discrepancy: mixed pairing differs from the published display", 5.0,
          [] {
              WeightMatrix A = WeightMatrix::build(3);
              PairingResult pr = pairingSymbolic(A, ClassSpec{1, 3}, canonicalCell(3, 3, 1));
              Polynomial expect =
                  xp(3, "1 - x3").pow(2) * xp(3, "4 - 3*x2 - x3") * Rational(1, 64);
              require(pr.value == expect, "mixed pairing changed");
              std::ifstream is(fixturePath("mixed_a1b3_r3.txt"));
              require(is.good(), "missing fixture mixed_a1b3_r3.txt");
              std::string line;
              std::getline(is, line);
              require(Polynomial::parse(xiVars(3), line) == pr.value,
                      "mixed pairing golden file mismatch");
              Polynomial published = xp(3, "x1 + x2 + x3") * xp(3, "x3 - 1").pow(3);
              Rational ratio = pr.value.leadingCoeff() / published.leadingCoeff();
              require(!(published * ratio == pr.value),
                      "unexpectedly matches the published display");
          });

    if (R.failures == 0)
        std::cout << "ALL CRITERIA PASSED\n";
    else
        std::cout << "FAILURES: " << R.failures << "\n";
    return R.failures == 0 ? 0 : 1;
}
