#include "doctest.h"
#include "thilb/groebner.hpp"

using namespace thilb;

namespace {

RingContext twoVars() { return RingContext(IntegerMatrix{{1, 1}, {0, 1}}); }
RingContext threeVars() { return RingContext(IntegerMatrix{{1, 1, 1}, {0, 1, 2}}); }

PolyList ideal(const RingContext& ctx, std::initializer_list<const char*> gens) {
    PolyList out;
    for (const char* s : gens) out.push_back(parsePolynomial(s, ctx));
    return out;
}

// exhaustive membership in one multidegree: f lies in the span of
// { m * g : g generator, m monomial, deg(m g) = deg(f) }; all inputs homogeneous
bool bruteMembership(const Polynomial& f, const PolyList& gens, const RingContext& ctx) {
    MultiDegree target = ctx.degreeOf(f.leadMonomial());
    MonomialOrder o = ctx.order();
    std::vector<Polynomial> rows;
    for (const auto& g : gens) {
        MultiDegree dg = ctx.degreeOf(g.leadMonomial());
        MultiDegree shift(dg.size());
        bool ok = true;
        for (size_t i = 0; i < dg.size(); ++i) {
            shift[i] = target[i] - dg[i];
            if (shift[i] < 0) ok = false;
        }
        if (!ok) continue;
        Int budget = 0;
        for (size_t i = 0; i < shift.size(); ++i) budget += ctx.positiveFunctional()[i] * shift[i];
        Monomial cur(ctx.n());
        auto rec = [&](auto&& self, int var, Int wrem) -> void {
            if (wrem < 0) return;
            if (var == ctx.n()) {
                if (ctx.degreeOf(cur) == shift) rows.push_back(mulTerm(g, 1, cur));
                return;
            }
            Exp kmax = Exp(Int(wrem / ctx.positiveWeight()[var]).get_si());
            for (Exp k = 0; k <= kmax; ++k) {
                cur.e[var] = k;
                self(self, var + 1, wrem - Int(k) * ctx.positiveWeight()[var]);
            }
            cur.e[var] = 0;
        };
        rec(rec, 0, budget);
    }
    // row echelon over Q, then lead-based reduction of f
    std::vector<Polynomial> ech;
    for (auto r : rows) {
        while (!r.isZero()) {
            bool hit = false;
            for (const auto& e : ech)
                if (e.leadMonomial() == r.leadMonomial()) {
                    r = sub(r, mulTerm(e, r.lead().coeff / e.lead().coeff, Monomial(ctx.n())), o);
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        if (!r.isZero()) ech.push_back(r);
    }
    Polynomial h = f;
    while (!h.isZero()) {
        bool hit = false;
        for (const auto& e : ech)
            if (e.leadMonomial() == h.leadMonomial()) {
                h = sub(h, mulTerm(e, h.lead().coeff / e.lead().coeff, Monomial(ctx.n())), o);
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("buchberger on a principal ideal") {
    RingContext ctx = twoVars();
    GroebnerBasis gb = buchberger(ideal(ctx, {"a"}), ctx.order());
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == parsePolynomial("a", ctx));
}

TEST_CASE("normalForm basics") {
    RingContext ctx = twoVars();
    GroebnerBasis gb = buchberger(ideal(ctx, {"a^2 - b^2"}), ctx.order());
    CHECK(normalForm(parsePolynomial("a^2", ctx), gb) == parsePolynomial("b^2", ctx));
    CHECK(normalForm(parsePolynomial("a^2 - b^2", ctx), gb).isZero());
}

TEST_CASE("buchberger criterion holds on the output") {
    RingContext ctx = threeVars();
    PolyList gens = ideal(ctx, {"a*c - b^2", "b*c^2 - a^2*c"});
    GroebnerBasis gb = buchberger(gens, ctx.order());
    for (size_t i = 0; i < gb.elements.size(); ++i)
        for (size_t j = i + 1; j < gb.elements.size(); ++j) {
            Monomial l = lcm(gb.elements[i].leadMonomial(), gb.elements[j].leadMonomial());
            Polynomial s = sub(mulTerm(gb.elements[i], 1, quotient(l, gb.elements[i].leadMonomial())),
                               mulTerm(gb.elements[j], 1, quotient(l, gb.elements[j].leadMonomial())),
                               ctx.order());
            CHECK(normalForm(s, gb).isZero());
        }
    // inter-reduced: no lead divides any term of another element
    for (size_t i = 0; i < gb.elements.size(); ++i)
        for (size_t j = 0; j < gb.elements.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb.elements[j].terms)
                CHECK_FALSE(divides(gb.elements[i].leadMonomial(), t.mono));
        }
}

TEST_CASE("saturate by a variable") {
    RingContext ctx = twoVars();
    PolyList sat = saturate(ideal(ctx, {"a^2*b"}), parsePolynomial("a", ctx), ctx.order());
    CHECK(idealEquals(sat, ideal(ctx, {"b"}), ctx.order()));
}

TEST_CASE("saturate leaves a prime alone") {
    RingContext ctx = threeVars();
    PolyList p = ideal(ctx, {"a*c - b^2"});
    PolyList sat = saturate(p, parsePolynomial("a", ctx), ctx.order());
    CHECK(idealEquals(sat, p, ctx.order()));
}

TEST_CASE("saturate idempotence") {
    RingContext ctx = twoVars();
    Polynomial f = parsePolynomial("a", ctx);
    PolyList s1 = saturate(ideal(ctx, {"a^3*b^2 - a^2*b^3"}), f, ctx.order());
    PolyList s2 = saturate(s1, f, ctx.order());
    CHECK(idealEquals(s1, s2, ctx.order()));
}

TEST_CASE("graded saturation matches elimination") {
    RingContext ctx = threeVars();
    for (const char* gen : {"a^2*b", "a*c - b^2"}) {
        PolyList gens = ideal(ctx, {gen});
        for (int v = 0; v < 3; ++v) {
            Monomial m(3);
            m.e[v] = 1;
            PolyList viaElim = saturate(gens, makePolynomial({Term{1, m}}, ctx.order()), ctx.order());
            PolyList viaGraded = saturateVariableGraded(gens, v, ctx.positiveWeight());
            CHECK(idealEquals(viaElim, viaGraded, ctx.order()));
        }
    }
}

TEST_CASE("ideal quotient by a product") {
    RingContext ctx = twoVars();
    PolyList q = idealQuotientByProduct(ideal(ctx, {"a*b"}), {0, 1}, ctx.order());
    GroebnerBasis gb = buchberger(q, ctx.order());
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == parsePolynomial("1", ctx));

    // (I : 1^inf) = I via an empty variable list
    PolyList same = idealQuotientByProduct(ideal(ctx, {"a*b"}), {}, ctx.order());
    CHECK(idealEquals(same, ideal(ctx, {"a*b"}), ctx.order()));
}

TEST_CASE("minimal generators") {
    RingContext ctx = twoVars();
    PolyList mins = minimalGenerators(ideal(ctx, {"a", "a^2", "a*b"}), ctx);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == parsePolynomial("a", ctx));
}

TEST_CASE("kPolynomial base cases") {
    RingContext ctx = twoVars();
    KPolynomial one = kPolynomial({}, ctx);
    REQUIRE(one.terms.size() == 1);
    CHECK(one.terms.at(MultiDegree{0, 0}) == 1);

    KPolynomial k1 = kPolynomial(ideal(ctx, {"a"}), ctx);
    CHECK(k1.terms.size() == 2);
    CHECK(k1.terms.at(MultiDegree{1, 0}) == -1);

    KPolynomial k12 = kPolynomial(ideal(ctx, {"a*b"}), ctx);
    CHECK(k12.terms.at(MultiDegree{0, 0}) == 1);
    CHECK(k12.terms.at(MultiDegree{2, 1}) == -1);
    CHECK(k12.terms.size() == 2);
}

TEST_CASE("kPolynomial is pivot-order independent via deformation") {
    RingContext ctx = threeVars();
    PolyList gens = ideal(ctx, {"a*c - b^2"});
    KPolynomial k0 = kPolynomial(gens, ctx);
    RingContext lexCtx = ctx.withOrder(weightOrder({}, Tiebreak::Lex));
    RingContext wCtx = ctx.withOrder(weightOrder({5, 1, 0}));
    CHECK(kPolynomial(gens, lexCtx) == k0);
    CHECK(kPolynomial(reorderAll(gens, wCtx.order()), wCtx) == k0);
}

TEST_CASE("idealMembership agrees with brute-force graded membership") {
    RingContext ctx = threeVars();
    PolyList gens = ideal(ctx, {"a*c - b^2", "a*b^2 - 2*a^2*c"});
    GroebnerBasis gb = buchberger(gens, ctx.order());
    for (const char* s : {"a*c - b^2", "a^2*c^2 - b^4", "a*b*c - b^3", "a^2*b^2 - 2*a^3*c",
                          "a*b^2 - 2*a^2*c", "b^2 - a*c"}) {
        Polynomial f = parsePolynomial(s, ctx);
        bool viaGb = idealMembership(f, gb);
        CHECK(viaGb == bruteMembership(f, gens, ctx));
        CHECK(viaGb);
    }
    for (const char* s : {"a*c", "b^2", "a^2", "a*c + b^2", "c^3"}) {
        Polynomial f = parsePolynomial(s, ctx);
        bool viaGb = idealMembership(f, gb);
        CHECK(viaGb == bruteMembership(f, gens, ctx));
        CHECK_FALSE(viaGb);
    }
}
