#include "thilb/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thilb {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) a_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::fromRows(const std::vector<std::vector<Int>>& rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows[0].size());
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntegerMatrix::row(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntegerMatrix::col(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntegerMatrix::swapRows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::addRow(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntegerMatrix::negateRow(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

std::vector<Int> matVec(const IntegerMatrix& m, const std::vector<Int>& v) {
    if (int(v.size()) != m.cols()) throw std::invalid_argument("matVec: size mismatch");
    std::vector<Int> r(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

namespace {

// Reduce m to row HNF in place, mirroring every row operation on u (if given).
void hnfInPlace(IntegerMatrix& m, IntegerMatrix* u) {
    int rows = m.rows(), cols = m.cols();
    int r = 0;  // next pivot row
    for (int c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r by gcd steps
        while (true) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (m.at(i, c) != 0 && (p < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(p, c).get_mpz_t()) < 0)) p = i;
            if (p < 0) break;
            m.swapRows(r, p);
            if (u) u->swapRows(r, p);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Int q = m.at(i, c) / m.at(r, c);  // truncated division is fine here
                m.addRow(i, r, -q);
                if (u) u->addRow(i, r, -q);
                if (m.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(r, c) == 0) continue;
        if (m.at(r, c) < 0) {
            m.negateRow(r);
            if (u) u->negateRow(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
            m.addRow(i, r, -q);
            if (u) u->addRow(i, r, -q);
        }
        ++r;
    }
}

std::vector<std::vector<Int>> nonzeroRows(const IntegerMatrix& m) {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        bool z = true;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) { z = false; break; }
        if (!z) rows.push_back(m.row(i));
    }
    return rows;
}

}  // namespace

IntegerMatrix hermiteNormalForm(const IntegerMatrix& m) {
    IntegerMatrix h = m;
    hnfInPlace(h, nullptr);
    return h;
}

int rankOf(const IntegerMatrix& m) {
    return int(nonzeroRows(hermiteNormalForm(m)).size());
}

bool sameRowLattice(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return nonzeroRows(hermiteNormalForm(a)) == nonzeroRows(hermiteNormalForm(b));
}

LatticeBasis kernelBasis(const IntegerMatrix& a) {
    IntegerMatrix m = a.transpose();  // n x d
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    hnfInPlace(m, &u);
    std::vector<std::vector<Int>> ker;
    for (int i = 0; i < m.rows(); ++i) {
        bool z = true;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) { z = false; break; }
        if (z) ker.push_back(u.row(i));
    }
    IntegerMatrix b = IntegerMatrix::fromRows(ker);
    if (b.rows() == 0) b = IntegerMatrix(0, a.cols());
    return LatticeBasis{b};
}

namespace {

// Exact Gram-Schmidt data over Q for the rows of b.
struct Gram {
    std::vector<std::vector<Rat>> star;  // orthogonalized rows
    std::vector<std::vector<Rat>> mu;    // mu[i][j], j < i
    std::vector<Rat> norm;               // |b*_i|^2

    void compute(const IntegerMatrix& b) {
        int k = b.rows(), n = b.cols();
        star.assign(k, std::vector<Rat>(n));
        mu.assign(k, std::vector<Rat>(k));
        norm.assign(k, 0);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n; ++j) star[i][j] = Rat(b.at(i, j));
            for (int j = 0; j < i; ++j) {
                Rat dot = 0;
                for (int t = 0; t < n; ++t) dot += Rat(b.at(i, t)) * star[j][t];
                mu[i][j] = norm[j] == 0 ? Rat(0) : dot / norm[j];
                for (int t = 0; t < n; ++t) star[i][t] -= mu[i][j] * star[j][t];
            }
            Rat s = 0;
            for (int t = 0; t < n; ++t) s += star[i][t] * star[i][t];
            norm[i] = s;
        }
    }
};

Int roundRat(const Rat& q) {
    // nearest integer, ties toward -inf are fine for size reduction
    Int num = q.get_num(), den = q.get_den();
    Int twice = 2 * num + den;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    return r;
}

}  // namespace

LatticeBasis lllReduce(const LatticeBasis& basis) {
    IntegerMatrix b = basis.basis;
    int k = b.rows();
    if (k <= 1) return LatticeBasis{b};
    Gram g;
    g.compute(b);
    const Rat delta(3, 4);
    int i = 1;
    while (i < k) {
        for (int j = i - 1; j >= 0; --j) {
            Int q = roundRat(g.mu[i][j]);
            if (q != 0) {
                b.addRow(i, j, -q);
                g.compute(b);
            }
        }
        // Lovasz condition: |b*_i|^2 >= (delta - mu^2) |b*_{i-1}|^2
        if (g.norm[i] >= (delta - g.mu[i][i - 1] * g.mu[i][i - 1]) * g.norm[i - 1]) {
            ++i;
        } else {
            b.swapRows(i, i - 1);
            g.compute(b);
            i = std::max(i - 1, 1);
        }
    }
    return LatticeBasis{b};
}

std::vector<Int> primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    std::vector<Int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

Int determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntegerMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

bool isUnimodular(const IntegerMatrix& input) {
    // Work on a lattice row basis so rank-deficient presentations (A(2,2) is a
    // rank-5 matrix printed with 6 rows) are handled; unimodular row operations
    // do not change the absolute values of the maximal minors.
    IntegerMatrix h = hermiteNormalForm(input);
    IntegerMatrix a = IntegerMatrix::fromRows(
        [&] {
            std::vector<std::vector<Int>> rows;
            for (int i = 0; i < h.rows(); ++i) {
                bool z = true;
                for (int j = 0; j < h.cols(); ++j)
                    if (h.at(i, j) != 0) { z = false; break; }
                if (!z) rows.push_back(h.row(i));
            }
            return rows;
        }());
    int d = a.rows(), n = a.cols();
    if (d == 0) throw std::invalid_argument("isUnimodular: zero matrix");
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    Int value = 0;
    while (true) {
        IntegerMatrix sub(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) sub.at(i, j) = a.at(i, idx[j]);
        Int det = determinant(sub);
        if (det != 0) {
            Int ad = abs(det);
            if (value == 0)
                value = ad;
            else if (ad != value)
                return false;
        }
        // next d-subset of columns
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

namespace {

IntegerMatrix parseBracketed(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    size_t i = text.find('[');
    if (i == std::string::npos) throw std::invalid_argument("matrix: expected '['");
    ++i;
    while (i < text.size()) {
        while (i < text.size() && (isspace(text[i]) || text[i] == ',')) ++i;
        if (i >= text.size() || text[i] == ']') break;
        if (text[i] != '[') throw std::invalid_argument("matrix: expected row '['");
        size_t end = text.find(']', i);
        if (end == std::string::npos) throw std::invalid_argument("matrix: unterminated row");
        std::string rowText = text.substr(i + 1, end - i - 1);
        for (char& ch : rowText)
            if (ch == ',') ch = ' ';
        std::istringstream is(rowText);
        std::vector<Int> row;
        std::string tok;
        while (is >> tok) row.emplace_back(tok);
        rows.push_back(std::move(row));
        i = end + 1;
    }
    if (rows.empty()) throw std::invalid_argument("matrix: no rows");
    size_t c = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != c) throw std::invalid_argument("matrix: ragged rows");
    return IntegerMatrix::fromRows(rows);
}

}  // namespace

IntegerMatrix parseMatrix(const std::string& text) {
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw std::invalid_argument("matrix: empty input");
    if (text[p] == '[') return parseBracketed(text);
    std::istringstream is(text);
    int rows, cols;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0) throw std::invalid_argument("matrix: bad header line");
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok))
                throw std::invalid_argument("matrix: missing entry at row " + std::to_string(i + 1));
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("matrix: bad integer '" + tok + "' at row " + std::to_string(i + 1));
            }
        }
    return m;
}

IntegerMatrix readMatrixFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseMatrix(ss.str());
}

std::string formatMatrix(const IntegerMatrix& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace thilb
