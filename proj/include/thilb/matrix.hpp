#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thilb {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of arbitrary-precision integers, row major.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(int n);
    static IntegerMatrix fromRows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;
    std::vector<Int> col(int j) const;
    IntegerMatrix transpose() const;

    bool operator==(const IntegerMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntegerMatrix& o) const { return !(*this == o); }

    void swapRows(int i, int j);
    // row i += c * row j
    void addRow(int i, int j, const Int& c);
    void negateRow(int i);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Rows span the integer kernel of some matrix A: A * b^T = 0 for each row b.
struct LatticeBasis {
    IntegerMatrix basis;  // one kernel vector per row
};

// matrix * column vector
std::vector<Int> matVec(const IntegerMatrix& m, const std::vector<Int>& v);

/// Row-style Hermite normal form: nonzero rows first with positive pivots in
/// strictly increasing columns, entries above each pivot reduced into
/// [0, pivot). Integer row space is preserved; zero rows trail.
IntegerMatrix hermiteNormalForm(const IntegerMatrix& m);

/// Rank over the rationals (= number of nonzero HNF rows).
int rankOf(const IntegerMatrix& m);

/// True when the nonzero rows of the two HNFs agree, i.e. the row lattices coincide.
bool sameRowLattice(const IntegerMatrix& a, const IntegerMatrix& b);

/// Z-basis of ker_Z(A) = { x : A x = 0 }, one basis vector per row.
/// Empty basis (0 rows) when A is injective.
LatticeBasis kernelBasis(const IntegerMatrix& a);

/// LLL reduction with delta = 3/4, exact rational Gram-Schmidt.
/// Spans the same lattice as the input; rows stay a basis.
LatticeBasis lllReduce(const LatticeBasis& b);

/// v divided by the gcd of its entries; rejects the zero vector.
std::vector<Int> primitive(const std::vector<Int>& v);

/// All nonzero maximal minors share one absolute value. Requires full row rank.
bool isUnimodular(const IntegerMatrix& a);

Int determinant(const IntegerMatrix& m);  // square input

// Text format: first line "rows cols", then one line of entries per row.
// parseMatrix also accepts an inline bracketed list of lists, e.g. [[1,2],[3,4]].
IntegerMatrix parseMatrix(const std::string& text);
IntegerMatrix readMatrixFile(const std::string& path);
std::string formatMatrix(const IntegerMatrix& m);

}  // namespace thilb
