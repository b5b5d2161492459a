#include "thilb/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace thilb {

IntegerMatrix lawrenceLifting(const IntegerMatrix& a) {
    int d = a.rows(), n = a.cols();
    IntegerMatrix l(d + n, 2 * n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) l.at(i, j) = a.at(i, j);
    for (int i = 0; i < n; ++i) {
        l.at(d + i, i) = 1;
        l.at(d + i, n + i) = 1;
    }
    return l;
}

void sortCanonical(PolyList& polys, const RingContext& ctx) {
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& x, const Polynomial& y) {
        MultiDegree dx = ctx.degreeOf(x.leadMonomial()), dy = ctx.degreeOf(y.leadMonomial());
        if (dx != dy) return dx < dy;
        return x.leadMonomial().e < y.leadMonomial().e;
    });
}

namespace {

PolyList kernelBinomials(const RingContext& ctx, bool useLLL) {
    LatticeBasis b = kernelBasis(ctx.grading());
    if (useLLL && b.basis.rows() > 1) b = lllReduce(b);
    PolyList gens;
    for (int i = 0; i < b.basis.rows(); ++i) {
        Polynomial p = toBinomial(b.basis.row(i), ctx);
        if (!p.isZero()) gens.push_back(std::move(p));
    }
    return gens;
}

PolyList saturateAllVariables(PolyList gens, const RingContext& ctx) {
    for (int v = 0; v < ctx.n() && !gens.empty(); ++v)
        gens = saturateVariableGraded(gens, v, ctx.positiveWeight());
    return gens;
}

}  // namespace

PolyList toricIdeal(const RingContext& ctx, bool useLLL) {
    PolyList gens = saturateAllVariables(kernelBinomials(ctx, useLLL), ctx);
    PolyList mins = minimalGenerators(gens, ctx);
    sortCanonical(mins, ctx);
    return mins;
}

GraverBasis graverBasis(const RingContext& ctx, bool useLLL) {
    int n = ctx.n();
    RingContext lawCtx(lawrenceLifting(ctx.grading()), ctx.order(), n <= 13 ? "" : "x");
    LatticeBasis b = kernelBasis(ctx.grading());
    if (useLLL && b.basis.rows() > 1) b = lllReduce(b);
    PolyList gens;
    for (int i = 0; i < b.basis.rows(); ++i) {
        std::vector<Int> uv(2 * n);
        for (int j = 0; j < n; ++j) {
            uv[j] = b.basis.at(i, j);
            uv[n + j] = -b.basis.at(i, j);
        }
        Polynomial p = toBinomial(uv, lawCtx);
        if (!p.isZero()) gens.push_back(std::move(p));
    }
    gens = saturateAllVariables(gens, lawCtx);
    PolyList mins = minimalGenerators(gens, lawCtx);

    MonomialOrder grevlex;  // fixed global grevlex canonicalizes the minuend
    PolyList out;
    for (const auto& g : mins) {
        if (g.terms.size() != 2) throw std::logic_error("graverBasis: non-binomial minimal generator");
        Monomial a(n), c(n);
        const Monomial& t0 = g.terms[0].mono;
        const Monomial& t1 = g.terms[1].mono;
        for (int j = 0; j < n; ++j) {
            a.e[j] = t0.e[j];
            c.e[j] = t1.e[j];
        }
        Polynomial p = makePolynomial({Term{1, a}, Term{-1, c}}, grevlex);
        out.push_back(monicLead(p));
    }
    sortCanonical(out, ctx);
    return GraverBasis{std::move(out)};
}

std::vector<Monomial> monomialsOfDegree(const MultiDegree& b, const RingContext& ctx) {
    int n = ctx.n(), d = ctx.grading().rows();
    if (int(b.size()) != d) throw std::invalid_argument("monomialsOfDegree: wrong degree length");
    bool nonneg = true;
    for (int i = 0; i < d && nonneg; ++i)
        for (int j = 0; j < n; ++j)
            if (ctx.grading().at(i, j) < 0) { nonneg = false; break; }

    // weight budget c.b bounds every exponent: posWeight[var] * e_var <= budget
    Int budget = 0;
    for (int i = 0; i < d; ++i) budget += ctx.positiveFunctional()[i] * b[i];

    std::vector<Monomial> out;
    Monomial cur(n);
    MultiDegree rem = b;
    auto rec = [&](auto&& self, int var, Int wrem) -> void {
        if (wrem < 0) return;
        if (nonneg)
            for (const Int& x : rem)
                if (x < 0) return;
        if (var == n) {
            for (const Int& x : rem)
                if (x != 0) return;
            out.push_back(cur);
            return;
        }
        Exp kmax = Exp(Int(wrem / ctx.positiveWeight()[var]).get_si());
        for (Exp k = 0; k <= kmax; ++k) {
            cur.e[var] = k;
            self(self, var + 1, wrem - Int(k) * ctx.positiveWeight()[var]);
            for (int i = 0; i < d; ++i) rem[i] -= ctx.grading().at(i, var);
        }
        for (int i = 0; i < d; ++i) rem[i] += Int(kmax + 1) * ctx.grading().at(i, var);
        cur.e[var] = 0;
    };
    rec(rec, 0, budget);
    MonomialOrder grevlex;
    std::sort(out.begin(), out.end(),
              [&](const Monomial& x, const Monomial& y) { return compareMonomials(x, y, grevlex) < 0; });
    return out;
}

std::vector<Monomial> doubleIdeal(const GraverBasis& g, const RingContext& ctx) {
    (void)ctx;
    std::vector<Monomial> prods;
    prods.reserve(g.binomials.size());
    for (const auto& f : g.binomials) {
        if (f.terms.size() != 2) throw std::invalid_argument("doubleIdeal: binomials expected");
        prods.push_back(f.terms[0].mono * f.terms[1].mono);
    }
    return minimalizeMonomials(std::move(prods));
}

GraverFiberTable graverFibers(const GraverBasis& g, const RingContext& ctx, bool fullFibers) {
    std::vector<Monomial> di;
    if (!fullFibers) di = doubleIdeal(g, ctx);
    GraverFiberTable table;
    for (const auto& f : g.binomials) {
        MultiDegree b = ctx.degreeOf(f.leadMonomial());
        if (table.count(b)) continue;
        std::vector<Monomial> fiber = monomialsOfDegree(b, ctx);
        if (!fullFibers) {
            std::vector<Monomial> kept;
            for (auto& m : fiber)
                if (!inMonomialIdeal(m, di)) kept.push_back(std::move(m));
            fiber = std::move(kept);
        }
        table.emplace(std::move(b), std::move(fiber));
    }
    return table;
}

}  // namespace thilb
