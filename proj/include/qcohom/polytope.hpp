#pragma once

#include <string>
#include <vector>

#include "qcohom/action.hpp"
#include "qcohom/rational.hpp"

namespace qcohom {

/// Codimension-one wall of the moment hypercube: the affine span of the
/// vertices in vertexSet has dimension r-1 (for r = 1 a wall is a single
/// vertex).
struct Wall {
    std::vector<int> normal;    // primitive integer vector
    Rational offset;
    std::vector<int> vertexSet; // 1-based column indices on the wall
};

std::vector<Wall> enumerateWalls(const WeightMatrix& A);

/// Regular chamber data for a point xi: the pyramid it belongs to (apex axis
/// and sign, 1-based) and the full sign vector over all walls.
struct Chamber {
    int apexAxis = 0;  // 1-based
    int apexSign = 0;  // +-1
    std::vector<int> signVector;
};

/// Throws NotRegularError when xi lies on a wall; ConfigError when xi is not
/// strictly inside the hypercube.
Chamber locateChamber(const std::vector<Wall>& walls, const std::vector<Rational>& xi);

/// Region on which the recursive dendrite is constant: axes ordered by
/// descending |xi| with the sign of each coordinate; the last sign is
/// irrelevant (the dendrite branches both ways) and normalized to +1.
struct Cell {
    std::vector<int> order;  // 1-based axes, apex first
    std::vector<int> signs;  // +-1, aligned with order

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.order == b.order && a.signs == b.signs;
    }
    std::string label() const;
};

/// Throws NotRegularError on argmax ties (xi on an interior wall).
Cell cellFromXi(const std::vector<Rational>& xi);

/// Representative cell of a named pyramid chamber: apex first with its sign,
/// remaining axes in descending index order, all with sign +1.
Cell canonicalCell(int r, int apexAxis, int apexSign);

/// Every (order, signs) cell with the last sign normalized to +1:
/// r! * 2^{r-1} cells.
std::vector<Cell> allCells(int r);

/// "upper"/"lower", "right"/"left", "front"/"back" for r <= 3; "x<i>+"/"x<i>-"
/// in general.
std::string chamberName(int r, int apexAxis, int apexSign);
/// Inverse of chamberName; also accepts the "x<i>+/-" form.
void parseChamberName(int r, const std::string& name, int& apexAxis, int& apexSign);

/// One root-to-vertex path of the dendrite.
struct DendritePath {
    std::vector<std::pair<int, int>> steps;  // (1-based axis, direction)
    int terminal = 0;                        // 1-based fixed-point index
    int sign = 1;                            // product of step directions
};

/// The two dendrite paths for a cell; terminal indices refer to A's columns.
std::vector<DendritePath> dendriteForCell(const Cell& cell, const WeightMatrix& A);

/// Dendrite for a located chamber at xi. Validates that the chamber matches
/// xi, rechecks regularity of every recursion stage, and verifies the first
/// ray meets no axis or two-axis wall before its facet.
std::vector<DendritePath> buildDendrite(const Chamber& chamber, const WeightMatrix& A,
                                        const std::vector<Rational>& xi);

}  // namespace qcohom
