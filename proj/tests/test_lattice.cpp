#include "doctest.h"
#include "thilb/matrix.hpp"

using namespace thilb;

namespace {

IntegerMatrix runningExample() {
    return IntegerMatrix{{1, 1, 1, 1, 1}, {0, 1, 2, 7, 8}};
}

// brute-force shortest nonzero vector (squared euclidean norm) in the row lattice
Int bruteForceShortest(const IntegerMatrix& b, long radius) {
    int k = b.rows(), n = b.cols();
    std::vector<long> c(k, -radius);
    Int best = -1;
    while (true) {
        std::vector<Int> v(n, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) v[j] += Int(c[i]) * b.at(i, j);
        Int norm = 0;
        bool zero = true;
        for (const Int& x : v) {
            norm += x * x;
            if (x != 0) zero = false;
        }
        if (!zero && (best < 0 || norm < best)) best = norm;
        int i = 0;
        while (i < k && c[i] == radius) c[i++] = -radius;
        if (i == k) break;
        ++c[i];
    }
    return best;
}

}  // namespace

TEST_CASE("kernelBasis of the running example") {
    IntegerMatrix a = runningExample();
    LatticeBasis b = kernelBasis(a);
    CHECK(b.basis.rows() == 3);
    CHECK(b.basis.cols() == 5);
    for (int i = 0; i < b.basis.rows(); ++i) {
        auto prod = matVec(a, b.basis.row(i));
        for (const Int& x : prod) CHECK(x == 0);
    }
    IntegerMatrix paper{{1, -2, 1, 0, 0}, {0, 5, -6, 1, 0}, {0, 6, -7, 0, 1}};
    CHECK(sameRowLattice(b.basis, paper));
}

TEST_CASE("kernelBasis of injective and 1-row maps") {
    CHECK(kernelBasis(IntegerMatrix::identity(2)).basis.rows() == 0);
    LatticeBasis b = kernelBasis(IntegerMatrix{{1, 1}});
    REQUIRE(b.basis.rows() == 1);
    std::vector<Int> row = b.basis.row(0);
    bool plus = row[0] == 1 && row[1] == -1;
    bool minus = row[0] == -1 && row[1] == 1;
    CHECK((plus || minus));
}

TEST_CASE("lllReduce preserves the lattice and matches the paper's reduced basis") {
    LatticeBasis b = kernelBasis(runningExample());
    LatticeBasis r = lllReduce(b);
    IntegerMatrix paper{{0, 1, -1, -1, 1}, {1, -1, 0, -1, 1}, {2, 0, -3, 2, -1}};
    CHECK(sameRowLattice(r.basis, b.basis));
    CHECK(sameRowLattice(r.basis, paper));
}

TEST_CASE("lllReduce fixes an identity-row basis") {
    IntegerMatrix id = IntegerMatrix::identity(3);
    LatticeBasis r = lllReduce(LatticeBasis{id});
    CHECK(r.basis == id);
}

TEST_CASE("lllReduce against brute-force short vectors") {
    IntegerMatrix b{{1, 0}, {4, 1}};
    LatticeBasis r = lllReduce(LatticeBasis{b});
    CHECK(sameRowLattice(r.basis, b));
    Int shortest = bruteForceShortest(b, 5);
    CHECK(shortest == 1);  // the lattice is Z^2
    // first reduced vector attains the minimum here (2-dim Gauss reduction)
    Int n0 = 0;
    for (int j = 0; j < 2; ++j) n0 += r.basis.at(0, j) * r.basis.at(0, j);
    CHECK(n0 == shortest);
    // max-norm does not exceed the input's
    Int inMax = 0, outMax = 0;
    for (int i = 0; i < 2; ++i) {
        Int ni = 0, no = 0;
        for (int j = 0; j < 2; ++j) {
            ni += b.at(i, j) * b.at(i, j);
            no += r.basis.at(i, j) * r.basis.at(i, j);
        }
        inMax = std::max(inMax, ni);
        outMax = std::max(outMax, no);
    }
    CHECK(outMax <= inMax);
}

TEST_CASE("hermiteNormalForm basics") {
    IntegerMatrix d2{{2, 0}, {0, 2}};
    CHECK(hermiteNormalForm(d2) == d2);
    IntegerMatrix swap{{0, 1}, {1, 0}};
    CHECK(hermiteNormalForm(swap) == IntegerMatrix::identity(2));
}

TEST_CASE("primitive vectors") {
    CHECK(primitive({Int(2), Int(-4), Int(6)}) == std::vector<Int>{1, -2, 3});
    CHECK(primitive({Int(0), Int(0), Int(5)}) == std::vector<Int>{0, 0, 1});
    CHECK(primitive({Int(7), Int(13)}) == std::vector<Int>{7, 13});
    CHECK_THROWS_AS(primitive({Int(0), Int(0)}), std::invalid_argument);
    // idempotent
    auto v = primitive({Int(9), Int(-6), Int(21)});
    CHECK(primitive(v) == v);
}

TEST_CASE("isUnimodular") {
    CHECK(isUnimodular(IntegerMatrix::identity(4)));
    CHECK_FALSE(isUnimodular(runningExample()));  // 2x2 minors include 1 and 2
    IntegerMatrix a22{{1, 1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 0, 0, 0},
                      {0, 0, 0, 0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 0, 0, 1, 0, 0},
                      {0, 1, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 1}};
    CHECK(isUnimodular(a22));
}

TEST_CASE("kernel basis rank bookkeeping") {
    IntegerMatrix a{{2, 4, 6}, {1, 2, 3}};  // rank 1
    LatticeBasis b = kernelBasis(a);
    CHECK(b.basis.rows() == 2);
    IntegerMatrix h = hermiteNormalForm(b.basis);
    int nonzero = 0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { ++nonzero; break; }
    CHECK(nonzero == 2);
}

TEST_CASE("matrix text round trip") {
    IntegerMatrix a = runningExample();
    CHECK(parseMatrix(formatMatrix(a)) == a);
    CHECK(parseMatrix("[[1,1,1,1,1],[0,1,2,7,8]]") == a);
    CHECK_THROWS_AS(parseMatrix("2 2\n1 2\n3"), std::invalid_argument);
    CHECK_THROWS_AS(parseMatrix("2 2\n1 2\n3 x"), std::invalid_argument);
}
