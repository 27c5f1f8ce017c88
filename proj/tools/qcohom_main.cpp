#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcohom/error.hpp"
#include "qcohom/kirwan.hpp"
#include "qcohom/polytope.hpp"
#include "qcohom/residue_engine.hpp"
#include "qcohom/sampler.hpp"

using json = nlohmann::json;
using namespace qcohom;

namespace {

std::vector<Rational> parseXi(const std::string& s, int r) {
    std::vector<Rational> xi;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) xi.push_back(Rational::parse(tok));
    if (static_cast<int>(xi.size()) != r)
        throw ConfigError("expected " + std::to_string(r) + " comma-separated xi components");
    return xi;
}

json xiToJson(const std::vector<Rational>& xi) {
    json a = json::array();
    for (const auto& c : xi) a.push_back(c.str());
    return a;
}

json cellToJson(const Cell& cell) {
    return json{{"order", cell.order}, {"signs", cell.signs}, {"label", cell.label()}};
}

void emit(const std::string& outFile, const std::string& text) {
    if (outFile.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(outFile);
        if (!os) throw ConfigError("cannot open output file " + outFile);
        os << text << "\n";
    }
}

std::string render(const json& j, const std::string& format) {
    if (format == "json") return j.dump();
    std::ostringstream os;
    os << j.dump(2);
    return os.str();
}

json dhToJson(const DhResult& dh) {
    json cells = json::array();
    for (const auto& dc : dh.cells) {
        json c = cellToJson(dc.cell);
        c["chamber"] = chamberName(dh.r, dc.cell.order[0], dh.r == 1 ? 1 : dc.cell.signs[0]);
        c["polynomial"] = dc.poly.str();
        cells.push_back(std::move(c));
    }
    json named = json::object();
    for (int axis = 1; axis <= dh.r; ++axis)
        for (int sign : {+1, -1}) {
            Cell cc = canonicalCell(dh.r, axis, sign);
            named[chamberName(dh.r, axis, sign)] = dh.cellPoly(cc).str();
        }
    return json{{"r", dh.r},
                {"normalized", dh.normalized},
                {"rawIntegral", dh.rawIntegral.str()},
                {"scale", dh.scale.str()},
                {"chambers", named},
                {"cells", cells}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomological pairings and Duistermaat-Heckman densities "
                 "for qubit torus quotients"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json", outFile;
    std::uint64_t globalSeed = 0;
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", outFile, "write output to a file");
    app.add_option("--seed", globalSeed, "default RNG seed");

    int r = 2;
    std::string xiStr, chamberStr;

    auto* cmdAction = app.add_subcommand("action", "weight matrix and fixed-point data");
    cmdAction->add_option("--qubits", r, "number of qubits")->required();
    bool dump = false;
    cmdAction->add_flag("--dump", dump, "emit the full fixed-point table");

    auto* cmdChamber = app.add_subcommand("chamber", "locate a regular value and its dendrite");
    cmdChamber->add_option("--qubits", r)->required();
    cmdChamber->add_option("--xi", xiStr, "comma-separated rationals")->required();

    auto* cmdRing = app.add_subcommand("ring", "cohomology ring presentation");
    cmdRing->add_option("--qubits", r)->required();
    bool sigma = false;
    cmdRing->add_flag("--sigma", sigma, "include the sigma-decomposition of the full relation");
    cmdRing->add_option("--xi", xiStr, "regular value for the chamber kernel");

    auto* cmdPair = app.add_subcommand("pair", "cohomological pairing at a regular value");
    int specA = 0, specB = 0;
    cmdPair->add_option("--qubits", r)->required();
    cmdPair->add_option("--a", specA, "power of eta")->required();
    cmdPair->add_option("--b", specB, "power of omega")->required();
    cmdPair->add_option("--xi", xiStr)->required();

    auto* cmdDh = app.add_subcommand("dh", "Duistermaat-Heckman chamber polynomials");
    cmdDh->add_option("--qubits", r)->required();
    bool normalize = false, all = false;
    cmdDh->add_flag("--normalize", normalize, "scale the piecewise polynomial to integrate to 1");
    cmdDh->add_flag("--all", all, "emit every cell (default)");
    cmdDh->add_option("--chamber", chamberStr, "named chamber only");

    auto* cmdOracle = app.add_subcommand("oracle", "Monte Carlo marginal sampler");
    long samples = 100000;
    int bins = 20, threads = 1;
    std::string compareWith, bandStr;
    std::uint64_t seed = 0;
    bool seedSet = false;
    cmdOracle->add_option("--qubits", r)->required();
    cmdOracle->add_option("--samples", samples)->required();
    cmdOracle->add_option("--bins", bins);
    cmdOracle->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& v) { seed = v; seedSet = true; });
    cmdOracle->add_option("--threads", threads);
    cmdOracle->add_option("--compare", compareWith,
                          "dh JSON file ('-' for stdin) to compare against");
    cmdOracle->add_option("--band", bandStr, "wall-exclusion band (rational, xi units)");
    double linfThreshold = 0.02;
    cmdOracle->add_option("--threshold", linfThreshold, "Linf pass threshold");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (*cmdAction) {
            WeightMatrix A = WeightMatrix::build(r);
            out["r"] = r;
            json cols = json::array();
            for (const auto& c : A.columns) cols.push_back(c);
            out["columns"] = cols;
            (void)dump;
            auto gamma = canonicalGamma(r);
            out["gamma"] = gamma;
            json fps = json::array();
            for (const auto& fp : fixedPointTable(A, gamma)) {
                json jf;
                jf["index"] = fp.index;
                jf["vertex"] = fp.vertex;
                json ws = json::array(), ps = json::array();
                for (const auto& w : fp.weights) ws.push_back(w.coeffs);
                for (const auto& pw : fp.polarized)
                    ps.push_back(json{{"weight", pw.weight.coeffs}, {"epsilon", pw.epsilon}});
                jf["weights"] = ws;
                jf["polarized"] = ps;
                fps.push_back(std::move(jf));
            }
            out["fixedPoints"] = fps;
        } else if (*cmdChamber) {
            WeightMatrix A = WeightMatrix::build(r);
            auto xi = parseXi(xiStr, r);
            auto walls = enumerateWalls(A);
            Chamber ch = locateChamber(walls, xi);
            auto paths = buildDendrite(ch, A, xi);
            out["r"] = r;
            out["xi"] = xiToJson(xi);
            out["chamber"] = chamberName(r, ch.apexAxis, ch.apexSign);
            out["apexAxis"] = ch.apexAxis;
            out["apexSign"] = ch.apexSign;
            out["walls"] = walls.size();
            out["signVector"] = ch.signVector;
            out["cell"] = cellToJson(cellFromXi(xi));
            json jp = json::array();
            for (const auto& p : paths) {
                json steps = json::array();
                for (const auto& [axis, dir] : p.steps)
                    steps.push_back(json{{"axis", axis}, {"dir", dir}});
                jp.push_back(json{{"steps", steps},
                                  {"terminal", "p" + std::to_string(p.terminal)},
                                  {"sign", p.sign}});
            }
            out["dendrite"] = jp;
        } else if (*cmdRing) {
            WeightMatrix A = WeightMatrix::build(r);
            RingPresentation rp = xiStr.empty()
                                      ? buildRingPresentation(A)
                                      : buildRingPresentation(A, parseXi(xiStr, r));
            out["r"] = r;
            out["variables"] = *rp.vars;
            json gens = json::array();
            for (const auto& g : rp.generators) {
                json jg;
                jg["circle"] = g.circle;
                jg["side"] = g.side > 0 ? "+" : "-";
                json fs = json::array();
                for (const auto& f : g.factors) fs.push_back(f.str());
                jg["factors"] = fs;
                jg["expanded"] = g.expanded.str();
                gens.push_back(std::move(jg));
            }
            out["generators"] = gens;
            json cg = json::array();
            for (const auto& g : rp.coordinateGroebner) cg.push_back(g.str());
            out["groebnerCoordinate"] = cg;
            out["kernelXi"] = xiToJson(rp.kernelXi);
            json ck = json::array();
            for (const auto& g : rp.chamberKernel) ck.push_back(g.str());
            out["chamberKernel"] = ck;
            json gb = json::array();
            for (const auto& g : rp.groebner) gb.push_back(g.str());
            out["groebner"] = gb;
            out["poincare"] = rp.poincare;
            if (sigma) {
                json js = json::array();
                for (int k = 1; k <= A.numFixedPoints(); ++k) {
                    Polynomial sk = sigmaOfCharacters(A, k);
                    json e;
                    e["k"] = k;
                    e["sigmaChi"] = sk.str();
                    e["inThetaSigmas"] = symmetricExpand(sk).str();
                    js.push_back(std::move(e));
                }
                out["sigmaDecomposition"] = js;
                out["fullRelation"] = fullRelation(A).str();
            }
        } else if (*cmdPair) {
            WeightMatrix A = WeightMatrix::build(r);
            auto xi = parseXi(xiStr, r);
            PairingResult pr = pairing(A, ClassSpec{specA, specB}, xi);
            out["r"] = r;
            out["a"] = specA;
            out["b"] = specB;
            out["xi"] = xiToJson(xi);
            out["chamber"] = pr.chamber;
            out["cell"] = cellToJson(pr.cell);
            json contrib = json::object();
            for (const auto& [j, v] : pr.contributions)
                contrib["p" + std::to_string(j)] = v.isConstant() ? v.constantValue().str() : v.str();
            out["contributions"] = contrib;
            out["total"] =
                pr.value.isConstant() ? pr.value.constantValue().str() : pr.value.str();
        } else if (*cmdDh) {
            WeightMatrix A = WeightMatrix::build(r);
            DhResult dh = dhDensity(A, normalize);
            if (!chamberStr.empty()) {
                int axis, sign;
                parseChamberName(r, chamberStr, axis, sign);
                Cell cell = canonicalCell(r, axis, sign);
                out["r"] = r;
                out["normalized"] = dh.normalized;
                out["chamber"] = chamberStr;
                out["cell"] = cellToJson(cell);
                out["polynomial"] = dh.cellPoly(cell).str();
            } else {
                (void)all;
                out = dhToJson(dh);
            }
        } else if (*cmdOracle) {
            WeightMatrix A = WeightMatrix::build(r);
            SampleConfig cfg;
            cfg.r = r;
            cfg.samples = samples;
            cfg.bins = bins;
            cfg.seed = seedSet ? seed : globalSeed;
            cfg.threads = threads;
            cfg.excludeWallBand = bandStr.empty() ? Rational(2, bins) : Rational::parse(bandStr);
            Histogram h = sampleMarginals(A, cfg);
            out["r"] = r;
            out["samples"] = h.samples;
            out["bins"] = h.bins;
            out["seed"] = h.seed;
            if (compareWith.empty()) {
                out["counts"] = h.counts;
            } else {
                json dj;
                if (compareWith == "-") {
                    dj = json::parse(std::cin);
                } else {
                    std::ifstream is(compareWith);
                    if (!is) throw ConfigError("cannot open " + compareWith);
                    dj = json::parse(is);
                }
                if (!dj.contains("normalized") || !dj["normalized"].get<bool>())
                    throw StructuralError("compare: density JSON must be normalized");
                DhResult dh;
                dh.r = dj["r"].get<int>();
                dh.normalized = true;
                dh.rawIntegral = Rational::parse(dj["rawIntegral"].get<std::string>());
                dh.scale = Rational::parse(dj["scale"].get<std::string>());
                VarsPtr xv = xiVars(dh.r);
                for (const auto& cj : dj["cells"]) {
                    DhCell dc;
                    dc.cell.order = cj["order"].get<std::vector<int>>();
                    dc.cell.signs = cj["signs"].get<std::vector<int>>();
                    dc.poly = Polynomial::parse(xv, cj["polynomial"].get<std::string>());
                    dh.cells.push_back(std::move(dc));
                }
                CompareReport rep = compareDensity(h, dh, A, cfg.excludeWallBand, linfThreshold);
                out["compared"] = rep.compared;
                out["excluded"] = rep.excluded;
                out["linf"] = rep.linf;
                out["l2"] = rep.l2;
                out["threshold"] = rep.threshold;
                out["pass"] = rep.pass;
                json res = json::array();
                for (size_t i = 0; i < rep.cellIndices.size(); ++i)
                    res.push_back(json{{"cell", rep.cellIndices[i]}, {"residual", rep.residuals[i]}});
                out["residuals"] = res;
            }
        }
        emit(outFile, render(out, format));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
