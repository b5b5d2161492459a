#include "thilb/polyhedra.hpp"

#include <algorithm>
#include <stdexcept>

namespace thilb {

bool isRedundant(const std::vector<std::set<int>>& supports, const std::set<int>& candidate) {
    for (const auto& s : supports)
        if (std::includes(candidate.begin(), candidate.end(), s.begin(), s.end())) return true;
    return false;
}

namespace {

std::vector<Int> primitiveOrZero(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return primitive(v);
    return v;
}

}  // namespace

FMSystem fourierMotzkinStep(const FMSystem& sys, int spot) {
    FMSystem out;
    std::vector<int> pos, neg;
    for (size_t k = 0; k < sys.rows.size(); ++k) {
        const Int& lead = sys.rows[k][0];
        if (lead < 0)
            neg.push_back(int(k));
        else if (lead > 0)
            pos.push_back(int(k));
        else {
            out.rows.push_back(sys.rows[k]);
            out.supports.push_back(sys.supports[k]);
        }
    }
    auto tail = [](const std::vector<Int>& row) {
        return std::vector<Int>(row.begin() + 1, row.end());
    };
    for (int i : pos) {
        for (int j : neg) {
            std::set<int> vert = sys.supports[i];
            vert.insert(sys.supports[j].begin(), sys.supports[j].end());
            if (isRedundant(out.supports, vert)) continue;
            const auto& ri = sys.rows[i];
            const auto& rj = sys.rows[j];
            Int iCoeff = -rj[0], jCoeff = ri[0];
            std::vector<Int> a(ri.size());
            for (size_t t = 0; t < ri.size(); ++t) a[t] = iCoeff * ri[t] + jCoeff * rj[t];
            out.rows.push_back(primitiveOrZero(a));
            out.supports.push_back(std::move(vert));
        }
    }
    // implicit inequality -t_spot <= 0 combines with the positive rows
    for (int i : pos) {
        std::set<int> vert = sys.supports[i];
        vert.insert(spot);
        if (isRedundant(out.supports, vert)) continue;
        out.rows.push_back(sys.rows[i]);
        out.supports.push_back(std::move(vert));
    }
    for (auto& row : out.rows) row.erase(row.begin());
    return out;
}

namespace {

// Reduced row echelon form over Q; returns pivot column per row (rows compacted).
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

std::vector<Int> ratRowToInt(const std::vector<Rat>& row) {
    Int l = 1;
    for (const Rat& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> out(row.size());
    for (size_t j = 0; j < row.size(); ++j) {
        Rat v = row[j] * Rat(l);
        out[j] = v.get_num();
    }
    return out;
}

IntegerMatrix rowsToColumns(std::vector<std::vector<Int>> rows, int dim) {
    // primitive, deduplicated columns in first-seen order
    std::vector<std::vector<Int>> kept;
    for (auto& r : rows) {
        bool zero = true;
        for (const Int& x : r)
            if (x != 0) { zero = false; break; }
        if (zero) continue;
        auto p = primitive(r);
        if (std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(std::move(p));
    }
    IntegerMatrix m(dim, int(kept.size()));
    for (size_t j = 0; j < kept.size(); ++j)
        for (int i = 0; i < dim; ++i) m.at(i, int(j)) = kept[j][i];
    return m;
}

}  // namespace

DualPair polarCone(const IntegerMatrix& z, const IntegerMatrix& h) {
    if (h.cols() > 0 && z.rows() != h.rows())
        throw std::invalid_argument("polarCone: matrices must have the same number of rows");
    int d = z.rows();
    // Y = Z | H | -H, one generator per column
    std::vector<std::vector<Int>> gens;
    for (int j = 0; j < z.cols(); ++j) gens.push_back(z.col(j));
    for (int j = 0; j < h.cols(); ++j) gens.push_back(h.col(j));
    for (int j = 0; j < h.cols(); ++j) {
        auto c = h.col(j);
        for (Int& x : c) x = -x;
        gens.push_back(std::move(c));
    }
    int n = int(gens.size());

    // rows of [Y | -I] encode the equations (Y t - x)_i = 0
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(n + d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(gens[j][i]);
        m[i][n + i] = Rat(-1);
    }
    std::vector<int> pivots = rref(m);

    std::vector<bool> isPivot(n, false);
    FMSystem sys;
    std::vector<std::vector<Int>> eqRows;
    std::vector<int> freeVars;
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < n)
            isPivot[pivots[i]] = true;
        else {
            auto row = ratRowToInt(m[i]);
            eqRows.push_back(std::vector<Int>(row.begin() + n, row.end()));
        }
    }
    for (int j = 0; j < n; ++j)
        if (!isPivot[j]) freeVars.push_back(j);

    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= n) continue;
        auto row = ratRowToInt(m[i]);
        // keep free t columns and the x block; solving row = 0 for the pivot
        // turns t_pivot >= 0 into "rest <= 0"
        std::vector<Int> r;
        r.reserve(freeVars.size() + d);
        for (int j : freeVars) r.push_back(row[j]);
        for (int j = n; j < n + d; ++j) r.push_back(row[j]);
        sys.rows.push_back(primitiveOrZero(r));
        sys.supports.push_back({pivots[i]});
    }

    if (!sys.rows.empty())
        for (int v : freeVars) sys = fourierMotzkinStep(sys, v);

    DualPair out;
    out.inequalities = rowsToColumns(sys.rows, d);
    out.equations = rowsToColumns(eqRows, d);
    return out;
}

DualPair polarCone(const IntegerMatrix& z) {
    return polarCone(z, IntegerMatrix(z.rows(), 0));
}

}  // namespace thilb
