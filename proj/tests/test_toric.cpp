#include <random>
#include <set>

#include "doctest.h"
#include "thilb/toric.hpp"

using namespace thilb;

namespace {

IntegerMatrix runningMatrix() { return IntegerMatrix{{1, 1, 1, 1, 1}, {0, 1, 2, 7, 8}}; }

PolyList parseAll(const RingContext& ctx, std::initializer_list<const char*> gens) {
    PolyList out;
    for (const char* s : gens) out.push_back(parsePolynomial(s, ctx));
    return out;
}

std::set<std::pair<std::vector<Exp>, std::vector<Exp>>> binomialPairs(const PolyList& ps) {
    std::set<std::pair<std::vector<Exp>, std::vector<Exp>>> out;
    for (const auto& p : ps) {
        REQUIRE(p.terms.size() == 2);
        auto a = p.terms[0].mono.e, b = p.terms[1].mono.e;
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("toricIdeal of the running example") {
    RingContext ctx(runningMatrix());
    PolyList ia = toricIdeal(ctx);
    CHECK(ia.size() == 8);
    PolyList expect = parseAll(ctx, {"c*d - b*e", "b*d - a*e", "b^2 - a*c", "a^2*d^2 - c^3*e",
                                     "c^4 - a^3*e", "b*c^3 - a^3*d", "a*d^4 - c^2*e^3",
                                     "d^6 - c*e^5"});
    CHECK(idealEquals(ia, expect, ctx.order()));
    CHECK(binomialPairs(ia) == binomialPairs(expect));
}

TEST_CASE("toricIdeal twisted cubic segment") {
    RingContext ctx(IntegerMatrix{{1, 1, 1}, {0, 1, 2}});
    PolyList ia = toricIdeal(ctx);
    REQUIRE(ia.size() == 1);
    CHECK(ia[0] == parsePolynomial("b^2 - a*c", ctx));
}

TEST_CASE("toricIdeal without LLL agrees") {
    RingContext ctx(runningMatrix());
    CHECK(idealEquals(toricIdeal(ctx, false), toricIdeal(ctx, true), ctx.order()));
}

TEST_CASE("lawrenceLifting block structure") {
    IntegerMatrix a = runningMatrix();
    IntegerMatrix l = lawrenceLifting(a);
    CHECK(l.rows() == 7);
    CHECK(l.cols() == 10);
    IntegerMatrix one{{5}};
    IntegerMatrix l1 = lawrenceLifting(one);
    CHECK(l1 == IntegerMatrix{{5, 0}, {1, 1}});

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ee(-6, 6);
    for (int t = 0; t < 100; ++t) {
        std::vector<Int> u(5);
        for (auto& x : u) x = ee(rng);
        std::vector<Int> uu(10);
        for (int i = 0; i < 5; ++i) {
            uu[i] = u[i];
            uu[5 + i] = -u[i];
        }
        bool inKerA = true;
        for (const Int& x : matVec(a, u))
            if (x != 0) inKerA = false;
        bool inKerL = true;
        for (const Int& x : matVec(l, uu))
            if (x != 0) inKerL = false;
        CHECK(inKerA == inKerL);
    }
}

TEST_CASE("graverBasis of the running example has 42 elements") {
    RingContext ctx(runningMatrix());
    GraverBasis g = graverBasis(ctx);
    CHECK(g.binomials.size() == 42);
    // universal basis property: contains the reduced GB for several weights
    PolyList ia = toricIdeal(ctx);
    auto graverPairs = binomialPairs(g.binomials);
    for (auto w : std::vector<std::vector<Exp>>{{9, 3, 5, 0, 0}, {0, 0, 1, 15, 18}, {1, 7, 2, 4, 3}}) {
        GroebnerBasis gb = buchberger(ia, weightOrder(w));
        for (const auto& f : gb.elements) {
            REQUIRE(f.terms.size() == 2);
            auto a = f.terms[0].mono.e, b = f.terms[1].mono.e;
            if (b < a) std::swap(a, b);
            CHECK(graverPairs.count({a, b}) == 1);
        }
        // and every Graver element lies in the toric ideal
        for (const auto& f : g.binomials) CHECK(idealMembership(f, gb));
    }
}

TEST_CASE("graverBasis of the short twisted cubic") {
    RingContext ctx(IntegerMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
    GraverBasis g = graverBasis(ctx);
    CHECK(g.binomials.size() == 5);
}

TEST_CASE("monomialsOfDegree") {
    RingContext ctx(runningMatrix());
    auto f22 = monomialsOfDegree({Int(2), Int(2)}, ctx);
    REQUIRE(f22.size() == 2);
    CHECK(f22[0] == parseMonomial("a*c", ctx));
    CHECK(f22[1] == parseMonomial("b^2", ctx));

    auto f88 = monomialsOfDegree({Int(8), Int(8)}, ctx);
    std::vector<Monomial> expect;
    for (const char* s : {"a^7*e", "a^6*b*d", "a^4*c^4", "a^3*b^2*c^3", "a^2*b^4*c^2", "a*b^6*c", "b^8"})
        expect.push_back(parseMonomial(s, ctx));
    std::sort(expect.begin(), expect.end(), [](const Monomial& x, const Monomial& y) {
        return compareMonomials(x, y, MonomialOrder{}) < 0;
    });
    CHECK(f88 == expect);

    auto f0 = monomialsOfDegree({Int(0), Int(0)}, ctx);
    REQUIRE(f0.size() == 1);
    CHECK(f0[0].isOne());

    CHECK(monomialsOfDegree({Int(1), Int(99)}, ctx).empty());
}

TEST_CASE("monomialsOfDegree agrees with naive exhaustive search") {
    RingContext ctx(runningMatrix());
    GraverBasis g = graverBasis(ctx);
    std::set<MultiDegree> degrees;
    for (const auto& f : g.binomials) degrees.insert(ctx.degreeOf(f.leadMonomial()));
    for (const auto& b : degrees) {
        if (b[0] > 6) continue;
        long bound = b[0].get_si();
        std::vector<Monomial> naive;
        Monomial cur(5);
        auto rec = [&](auto&& self, int var) -> void {
            if (var == 5) {
                if (ctx.degreeOf(cur) == b) naive.push_back(cur);
                return;
            }
            for (Exp k = 0; k <= bound; ++k) {
                cur.e[var] = k;
                self(self, var + 1);
            }
            cur.e[var] = 0;
        };
        rec(rec, 0);
        std::sort(naive.begin(), naive.end(), [](const Monomial& x, const Monomial& y) {
            return compareMonomials(x, y, MonomialOrder{}) < 0;
        });
        CHECK(monomialsOfDegree(b, ctx) == naive);
    }
}

TEST_CASE("doubleIdeal basics") {
    RingContext ctx2(IntegerMatrix{{1, 1}});
    GraverBasis g{PolyList{parsePolynomial("a - b", ctx2)}};
    auto di = doubleIdeal(g, ctx2);
    REQUIRE(di.size() == 1);
    CHECK(di[0] == parseMonomial("a*b", ctx2));
}

TEST_CASE("graverFibers of the running example") {
    RingContext ctx(runningMatrix());
    GraverBasis g = graverBasis(ctx);
    GraverFiberTable fibers = graverFibers(g, ctx);
    CHECK(fibers.size() == 37);
    auto it = fibers.find({Int(8), Int(8)});
    REQUIRE(it != fibers.end());
    std::vector<Monomial> expect;
    for (const char* s : {"a^7*e", "a^6*b*d", "a^4*c^4", "b^8"}) expect.push_back(parseMonomial(s, ctx));
    CHECK(it->second == expect);
    // full fiber keeps the double-ideal members
    GraverFiberTable full = graverFibers(g, ctx, true);
    CHECK(full.at({Int(8), Int(8)}).size() == 7);
}

TEST_CASE("graverFibers of the twisted cubic") {
    RingContext ctx(IntegerMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
    GraverFiberTable fibers = graverFibers(graverBasis(ctx), ctx);
    REQUIRE(fibers.size() == 5);
    auto check = [&](std::vector<long> deg, std::initializer_list<const char*> monos) {
        MultiDegree b;
        for (long x : deg) b.emplace_back(x);
        std::vector<Monomial> expect;
        for (const char* s : monos) expect.push_back(parseMonomial(s, ctx));
        std::sort(expect.begin(), expect.end(), [](const Monomial& x, const Monomial& y) {
            return compareMonomials(x, y, MonomialOrder{}) < 0;
        });
        CHECK(fibers.at(b) == expect);
    };
    check({2, 2}, {"a*c", "b^2"});
    check({2, 3}, {"a*d", "b*c"});
    check({2, 4}, {"b*d", "c^2"});
    check({3, 3}, {"a^2*d", "a*b*c", "b^3"});
    check({3, 6}, {"a*d^2", "b*c*d", "c^3"});
}
