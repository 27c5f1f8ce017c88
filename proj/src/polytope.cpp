#include "qcohom/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qcohom/error.hpp"

namespace qcohom {

namespace {

int vectorGcd(const std::vector<int>& v) {
    int g = 0;
    for (int c : v) g = std::gcd(g, std::abs(c));
    return g;
}

/// Canonical primitive representative up to sign: first nonzero entry positive.
std::vector<int> canonicalDirection(std::vector<int> v) {
    int g = vectorGcd(v);
    if (g > 1)
        for (int& c : v) c /= g;
    for (int c : v) {
        if (c != 0) {
            if (c < 0)
                for (int& e : v) e = -e;
            break;
        }
    }
    return v;
}

/// Affine dimension of a set of integer points, by exact rank of differences.
int affineDim(const std::vector<const std::vector<int>*>& pts) {
    if (pts.empty()) return -1;
    const int n = static_cast<int>(pts[0]->size());
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(n);
        for (int k = 0; k < n; ++k) row[k] = Rational((*pts[i])[k] - (*pts[0])[k]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][col].isZero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col].isZero()) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (int k = col; k < n; ++k) rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<Wall> enumerateWalls(const WeightMatrix& A) {
    const int n = A.numFixedPoints();
    std::set<std::vector<int>> dirs;
    for (int l = 0; l < n; ++l)
        for (int j = l + 1; j < n; ++j) {
            std::vector<int> d(A.r);
            for (int k = 0; k < A.r; ++k) d[k] = A.columns[l][k] - A.columns[j][k];
            dirs.insert(canonicalDirection(std::move(d)));
        }

    std::vector<Wall> walls;
    std::set<std::pair<std::vector<int>, Rational>> seen;
    for (const auto& v : dirs) {
        std::map<long, std::vector<int>> levels;  // level -> 1-based vertex indices
        for (int j = 0; j < n; ++j) {
            long lv = 0;
            for (int k = 0; k < A.r; ++k) lv += static_cast<long>(v[k]) * A.columns[j][k];
            levels[lv].push_back(j + 1);
        }
        for (const auto& [lv, js] : levels) {
            std::vector<const std::vector<int>*> pts;
            for (int j : js) pts.push_back(&A.columns[j - 1]);
            if (affineDim(pts) != A.r - 1) continue;
            if (!seen.insert({v, Rational(lv)}).second) continue;
            walls.push_back(Wall{v, Rational(lv), js});
        }
    }
    return walls;
}

Chamber locateChamber(const std::vector<Wall>& walls, const std::vector<Rational>& xi) {
    for (const auto& c : xi)
        if (c.abs() >= Rational(1))
            throw ConfigError("locateChamber: xi must lie strictly inside the hypercube");
    Chamber ch;
    ch.signVector.reserve(walls.size());
    for (const auto& w : walls) {
        Rational s(0);
        for (size_t k = 0; k < xi.size(); ++k) s += Rational(w.normal[k]) * xi[k];
        s -= w.offset;
        if (s.isZero()) {
            std::ostringstream os;
            os << "locateChamber: xi is not a regular value (on wall <";
            for (size_t k = 0; k < w.normal.size(); ++k)
                os << (k ? "," : "") << w.normal[k];
            os << ">, offset " << w.offset.str() << ")";
            throw NotRegularError(os.str());
        }
        ch.signVector.push_back(s.sign());
    }
    Cell cell = cellFromXi(xi);
    ch.apexAxis = cell.order[0];
    int s = xi[ch.apexAxis - 1].sign();  // cell signs normalize the last axis away for r=1
    ch.apexSign = s == 0 ? 1 : s;
    return ch;
}

std::string Cell::label() const {
    std::ostringstream os;
    for (size_t t = 0; t < order.size(); ++t) {
        if (t) os << ">";
        os << "x" << order[t] << (signs[t] > 0 ? "+" : "-");
    }
    return os.str();
}

Cell cellFromXi(const std::vector<Rational>& xi) {
    const int r = static_cast<int>(xi.size());
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return xi[a].abs() > xi[b].abs(); });
    for (int t = 0; t + 1 < r; ++t)
        if (xi[idx[t]].abs() == xi[idx[t + 1]].abs())
            throw NotRegularError("cellFromXi: |xi_" + std::to_string(idx[t] + 1) + "| = |xi_" +
                                  std::to_string(idx[t + 1] + 1) +
                                  "| (xi on an interior wall)");
    Cell cell;
    for (int t = 0; t < r; ++t) {
        cell.order.push_back(idx[t] + 1);
        int s = xi[idx[t]].sign();
        cell.signs.push_back(t + 1 == r ? 1 : (s == 0 ? 1 : s));
    }
    return cell;
}

Cell canonicalCell(int r, int apexAxis, int apexSign) {
    if (apexAxis < 1 || apexAxis > r || (apexSign != 1 && apexSign != -1))
        throw ConfigError("canonicalCell: bad apex");
    Cell cell;
    cell.order.push_back(apexAxis);
    cell.signs.push_back(r == 1 ? 1 : apexSign);
    for (int a = r; a >= 1; --a) {
        if (a == apexAxis) continue;
        cell.order.push_back(a);
        cell.signs.push_back(1);
    }
    return cell;
}

std::vector<Cell> allCells(int r) {
    std::vector<int> axes(r);
    std::iota(axes.begin(), axes.end(), 1);
    std::vector<Cell> out;
    std::sort(axes.begin(), axes.end());
    do {
        const int numSignBits = r > 0 ? r - 1 : 0;
        for (int mask = 0; mask < (1 << numSignBits); ++mask) {
            Cell c;
            c.order = axes;
            for (int t = 0; t < r; ++t)
                c.signs.push_back(t < numSignBits ? ((mask >> t) & 1 ? -1 : 1) : 1);
            out.push_back(std::move(c));
        }
    } while (std::next_permutation(axes.begin(), axes.end()));
    return out;
}

std::string chamberName(int r, int apexAxis, int apexSign) {
    if (r <= 3) {
        static const char* names2[][2] = {{"right", "left"}, {"upper", "lower"}};
        static const char* names3[][2] = {{"front", "back"}, {"right", "left"}, {"upper", "lower"}};
        int p = apexSign > 0 ? 0 : 1;
        if (r == 1) return apexSign > 0 ? "right" : "left";
        if (r == 2) return names2[apexAxis - 1][p];
        return names3[apexAxis - 1][p];
    }
    return "x" + std::to_string(apexAxis) + (apexSign > 0 ? "+" : "-");
}

void parseChamberName(int r, const std::string& name, int& apexAxis, int& apexSign) {
    for (int a = 1; a <= r; ++a)
        for (int s : {1, -1})
            if (chamberName(r, a, s) == name || name == "x" + std::to_string(a) + (s > 0 ? "+" : "-")) {
                apexAxis = a;
                apexSign = s;
                return;
            }
    throw ConfigError("unknown chamber name '" + name + "' for r=" + std::to_string(r));
}

std::vector<DendritePath> dendriteForCell(const Cell& cell, const WeightMatrix& A) {
    const int r = A.r;
    if (static_cast<int>(cell.order.size()) != r)
        throw StructuralError("dendriteForCell: cell size mismatch");
    std::vector<DendritePath> out;
    for (int last : {+1, -1}) {
        DendritePath p;
        std::vector<int> vertex(r, 0);
        for (int t = 0; t < r; ++t) {
            int dir = (t + 1 == r) ? last : cell.signs[t];
            p.steps.emplace_back(cell.order[t], dir);
            vertex[cell.order[t] - 1] = dir;
            p.sign *= dir;
        }
        p.terminal = A.columnIndex(vertex);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<DendritePath> buildDendrite(const Chamber& chamber, const WeightMatrix& A,
                                        const std::vector<Rational>& xi) {
    if (static_cast<int>(xi.size()) != A.r)
        throw StructuralError("buildDendrite: xi size mismatch");
    Cell cell = cellFromXi(xi);  // rechecks every recursion stage
    if (cell.order[0] != chamber.apexAxis ||
        (A.r > 1 && cell.signs[0] != chamber.apexSign))
        throw StructuralError("buildDendrite: chamber does not match xi");

    // First ray: from xi along the apex axis to the facet. Axis and
    // two-axis walls transverse to the ray must not be crossed strictly
    // inside the segment (they cannot be for a valid pyramid chamber; this
    // guards foreign data). Heavier walls (three or more nonzero normal
    // entries) are legitimately crossed and do not affect the recursion.
    const int apex = chamber.apexAxis - 1;
    std::vector<Rational> q = xi;
    q[apex] = Rational(A.r == 1 ? cell.signs[0] : chamber.apexSign);
    for (const auto& w : enumerateWalls(A)) {
        int nz = 0;
        for (int c : w.normal) nz += (c != 0);
        if (nz > 2 || w.normal[apex] == 0) continue;
        Rational a(0), b(0);
        for (int k = 0; k < A.r; ++k) {
            a += Rational(w.normal[k]) * xi[k];
            b += Rational(w.normal[k]) * q[k];
        }
        a -= w.offset;
        b -= w.offset;
        if (a.sign() * b.sign() < 0)
            throw NotRegularError("buildDendrite: first ray crosses an interior wall");
    }
    return dendriteForCell(cell, A);
}

}  // namespace qcohom
