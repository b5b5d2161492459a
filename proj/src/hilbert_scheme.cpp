#include "thilb/hilbert_scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace thilb {

namespace {

MonomialOrder plainGrevlex() { return MonomialOrder{}; }

void sortAscGrevlex(std::vector<Monomial>& gens) {
    MonomialOrder o = plainGrevlex();
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return compareMonomials(a, b, o) < 0; });
}

}  // namespace

MonomialIdeal canonicalIdeal(std::vector<Monomial> gens) {
    gens = minimalizeMonomials(std::move(gens));
    sortAscGrevlex(gens);
    return MonomialIdeal{std::move(gens)};
}

const std::vector<Monomial>& SchemeEnv::fullFiber(const MultiDegree& b) const {
    auto it = fiberCache_.find(b);
    if (it == fiberCache_.end()) it = fiberCache_.emplace(b, monomialsOfDegree(b, ctx)).first;
    return it->second;
}

SchemeEnv makeSchemeEnv(IntegerMatrix a, MonomialOrder order) {
    RingContext ctx(std::move(a), std::move(order));
    PolyList toric = toricIdeal(ctx);
    GraverBasis graver = graverBasis(ctx);
    GraverFiberTable fibers = graverFibers(graver, ctx);
    KPolynomial trueK = kPolynomial(toric, ctx);
    return SchemeEnv{std::move(ctx), std::move(toric), std::move(graver), std::move(fibers), std::move(trueK)};
}

bool isAGraded(const MonomialIdeal& m, const SchemeEnv& env) {
    return kPolynomialOfMonomialIdeal(m.gens, env.ctx) == env.trueK;
}

MonomialIdeal initialMonomialIdeal(const PolyList& gens, const MonomialOrder& o) {
    GroebnerBasis gb = buchberger(gens, o);
    return canonicalIdeal(initialIdealGens(gb));
}

std::vector<MonomialIdeal> enumerateMonomialIdeals(const SchemeEnv& env) {
    std::vector<const std::vector<Monomial>*> fiberList;
    for (const auto& [deg, fiber] : env.fibers) fiberList.push_back(&fiber);

    std::vector<MonomialIdeal> found;
    std::set<std::vector<Monomial>> seen;

    std::vector<Monomial> current;  // minimal generators so far
    auto adjoin = [](std::vector<Monomial> base, const std::vector<Monomial>& extra,
                     size_t skip) {
        for (size_t i = 0; i < extra.size(); ++i)
            if (i != skip) base.push_back(extra[i]);
        return minimalizeMonomials(std::move(base));
    };

    auto rec = [&](auto&& self, size_t idx, std::vector<Monomial> gens) -> void {
        if (idx == fiberList.size()) {
            if (kPolynomialOfMonomialIdeal(gens, env.ctx) == env.trueK) {
                MonomialIdeal m = canonicalIdeal(std::move(gens));
                if (seen.insert(m.gens).second) found.push_back(std::move(m));
            }
            return;
        }
        std::vector<Monomial> survivors;
        for (const auto& mono : *fiberList[idx])
            if (!inMonomialIdeal(mono, gens)) survivors.push_back(mono);
        if (survivors.empty()) return;  // no standard monomial left in this degree
        if (survivors.size() == 1) {
            self(self, idx + 1, std::move(gens));
            return;
        }
        for (size_t i = 0; i < survivors.size(); ++i)
            self(self, idx + 1, adjoin(gens, survivors, i));
    };
    rec(rec, 0, {});
    return found;
}

Monomial stdMonomial(const MonomialIdeal& m, const MultiDegree& b, const SchemeEnv& env) {
    const auto& fiber = env.fullFiber(b);
    std::optional<Monomial> result;
    for (const auto& mono : fiber) {
        if (inMonomialIdeal(mono, m.gens)) continue;
        if (result) throw std::domain_error("stdMonomial: standard monomial not unique; ideal not A-graded in this degree");
        result = mono;
    }
    if (!result) throw std::domain_error("stdMonomial: no standard monomial in this degree");
    return *result;
}

std::vector<MonomialIdeal> flips(const MonomialIdeal& m, const SchemeEnv& env) {
    const RingContext& ctx = env.ctx;
    std::vector<MonomialIdeal> result;
    for (size_t i = 0; i < m.gens.size(); ++i) {
        const Monomial& g = m.gens[i];
        Monomial s = stdMonomial(m, ctx.degreeOf(g), env);
        PolyList wall;
        wall.push_back(makePolynomial({Term{1, g}, Term{-1, s}}, ctx.order()));
        for (size_t j = 0; j < m.gens.size(); ++j)
            if (j != i) wall.push_back(makePolynomial({Term{1, m.gens[j]}}, ctx.order()));
        if (kPolynomial(wall, ctx) != env.trueK) continue;
        int pos = -1;
        for (int v = 0; v < ctx.n(); ++v)
            if (s.e[v] > g.e[v]) { pos = v; break; }
        MonomialOrder flipOrder;
        flipOrder.weight.assign(size_t(ctx.n()), 0);
        flipOrder.weight[pos] = 1;
        result.push_back(initialMonomialIdeal(wall, flipOrder));
    }
    return result;
}

FlipGraph flipGraph(const MonomialIdeal& start, const SchemeEnv& env) {
    FlipGraph g;
    std::map<std::vector<Monomial>, int> index;
    g.vertices.push_back(start);
    index[start.gens] = 0;
    for (size_t head = 0; head < g.vertices.size(); ++head) {
        MonomialIdeal cur = g.vertices[head];
        for (const auto& nb : flips(cur, env)) {
            auto it = index.find(nb.gens);
            int j;
            if (it == index.end()) {
                j = int(g.vertices.size());
                index[nb.gens] = j;
                g.vertices.push_back(nb);
            } else {
                j = it->second;
            }
            int a = int(head), b = j;
            if (a != b) g.edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return g;
}

IntegerMatrix inequalitiesMatrix(const MonomialIdeal& m, const SchemeEnv& env) {
    int n = env.ctx.n();
    IntegerMatrix mat(n, int(m.gens.size()));
    for (size_t i = 0; i < m.gens.size(); ++i) {
        Monomial s = stdMonomial(m, env.ctx.degreeOf(m.gens[i]), env);
        for (int v = 0; v < n; ++v) mat.at(v, int(i)) = Int(m.gens[i].e[v]) - Int(s.e[v]);
    }
    return mat;
}

CoherenceCertificate decideCoherence(const MonomialIdeal& m, const SchemeEnv& env) {
    int n = env.ctx.n();
    if (m.gens.empty()) return CoherenceCertificate{true, std::vector<Int>(size_t(n), 0)};
    IntegerMatrix ineqs = inequalitiesMatrix(m, env);
    DualPair dual = polarCone(ineqs);
    std::vector<Int> w(size_t(n), 0);
    for (int j = 0; j < dual.inequalities.cols(); ++j)
        for (int i = 0; i < n; ++i) w[i] -= dual.inequalities.at(i, j);
    for (int j = 0; j < ineqs.cols(); ++j) {
        Int dot = 0;
        for (int i = 0; i < n; ++i) dot += ineqs.at(i, j) * w[i];
        if (dot == 0) return CoherenceCertificate{false, {}};
    }
    // shift into the nonnegative orthant along the row space of A; the
    // inequality columns lie in ker(A), so the products are unchanged
    {
        Int shift = 0;
        for (int i = 0; i < n; ++i) {
            if (w[i] >= 0) continue;
            Int need;
            Int pw(env.ctx.positiveWeight()[i]);
            mpz_cdiv_q(need.get_mpz_t(), Int(-w[i]).get_mpz_t(), pw.get_mpz_t());
            if (need > shift) shift = need;
        }
        if (shift > 0)
            for (int i = 0; i < n; ++i) w[i] += shift * Int(env.ctx.positiveWeight()[i]);
    }
    w = primitive(w);
    // soundness: the witness must reproduce M as an initial ideal
    MonomialOrder wo;
    wo.weight.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        if (!w[i].fits_slong_p()) throw std::overflow_error("decideCoherence: witness weight overflow");
        wo.weight[i] = w[i].get_si();
    }
    MonomialIdeal check = initialMonomialIdeal(env.toric, wo);
    if (check != m) throw std::logic_error("decideCoherence: witness failed to reproduce the ideal");
    return CoherenceCertificate{true, std::move(w)};
}

MonomialIdeal radicalMonomial(const MonomialIdeal& m) {
    std::vector<Monomial> sqfree;
    sqfree.reserve(m.gens.size());
    for (const auto& g : m.gens) {
        Monomial s = g;
        for (auto& e : s.e)
            if (e > 1) e = 1;
        sqfree.push_back(std::move(s));
    }
    return canonicalIdeal(std::move(sqfree));
}

std::set<MonomialIdeal> distinctTriangulations(const std::vector<MonomialIdeal>& ideals) {
    std::set<MonomialIdeal> out;
    for (const auto& m : ideals) out.insert(radicalMonomial(m));
    return out;
}

ConePair groebnerConeRays(const GroebnerBasis& g) {
    if (g.elements.empty()) throw std::invalid_argument("groebnerConeRays: empty basis");
    int n = g.elements[0].lead().mono.vars();
    IntegerMatrix cols(n, int(g.elements.size()));
    for (size_t i = 0; i < g.elements.size(); ++i) {
        const Polynomial& f = g.elements[i];
        if (f.terms.size() != 2) throw std::invalid_argument("groebnerConeRays: binomial basis expected");
        for (int v = 0; v < n; ++v)
            cols.at(v, int(i)) = Int(f.terms[1].mono.e[v]) - Int(f.terms[0].mono.e[v]);
    }
    DualPair dual = polarCone(cols);
    return ConePair{dual.inequalities, dual.equations};
}

}  // namespace thilb
