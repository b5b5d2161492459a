#include "thilb/local_equations.hpp"

#include <algorithm>
#include <stdexcept>

namespace thilb {

Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    Polynomial acc;
    for (const auto& t : b.terms) acc = add(acc, mulTerm(a, t.coeff, t.mono), o);
    return acc;
}

Polynomial power(const Polynomial& a, Exp k, const MonomialOrder& o) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    if (a.terms.size() == 1) {  // monomial fast path
        Monomial m(a.lead().mono.vars());
        for (int i = 0; i < m.vars(); ++i) m.e[i] = a.lead().mono.e[i] * k;
        Rat c = 1;
        for (Exp i = 0; i < k; ++i) c *= a.lead().coeff;
        return makePolynomial({Term{c, m}}, o);
    }
    Polynomial acc;
    if (!a.terms.empty())
        acc = makePolynomial({Term{1, Monomial(a.lead().mono.vars())}}, o);
    for (Exp i = 0; i < k; ++i) acc = mul(acc, a, o);
    return acc;
}

namespace {

// weight vector strictly positive on every u_i - v_i; exists because the
// marked ideal is an initial ideal (interior of its Groebner cone)
std::vector<Int> strictWeight(const std::vector<std::pair<Monomial, Monomial>>& pairs, int n) {
    IntegerMatrix cols(n, int(pairs.size()));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (int v = 0; v < n; ++v) cols.at(v, int(i)) = Int(pairs[i].first.e[v]) - Int(pairs[i].second.e[v]);
    DualPair dual = polarCone(cols);
    std::vector<Int> w(size_t(n), 0);
    for (int j = 0; j < dual.inequalities.cols(); ++j)
        for (int i = 0; i < n; ++i) w[i] -= dual.inequalities.at(i, j);
    for (int j = 0; j < cols.cols(); ++j) {
        Int dot = 0;
        for (int i = 0; i < n; ++i) dot += cols.at(i, j) * w[i];
        if (dot <= 0) throw std::domain_error("universalFamily: no strict weight for the family (initial ideal not coherent?)");
    }
    return w;
}

}  // namespace

UniversalFamily universalFamily(const PolyList& toric, const RingContext& xctx) {
    GroebnerBasis gb = buchberger(toric, xctx.order());
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (const auto& f : gb.elements) {
        if (f.terms.size() != 2 || f.terms[0].coeff != 1 || f.terms[1].coeff != -1)
            throw std::domain_error("universalFamily: reduced basis is not binomial");
        pairs.emplace_back(f.terms[0].mono, f.terms[1].mono);
    }
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        MultiDegree da = xctx.degreeOf(a.first), db = xctx.degreeOf(b.first);
        if (da != db) return da < db;
        return compareMonomials(a.first, b.first, MonomialOrder{}) < 0;
    });
    // the initial ideal must itself be A-graded
    std::vector<Monomial> leads;
    for (const auto& p : pairs) leads.push_back(p.first);
    if (kPolynomialOfMonomialIdeal(leads, xctx) != kPolynomial(toric, xctx))
        throw std::domain_error("universalFamily: initial ideal is not A-graded");

    int n = xctx.n();
    std::vector<Int> lambda;
    {
        bool strict = true;
        const auto& w = xctx.order().weight;
        if (w.empty())
            strict = false;
        else
            for (const auto& p : pairs) {
                Exp dot = 0;
                for (int v = 0; v < n; ++v) dot += w[v] * (p.first.e[v] - p.second.e[v]);
                if (dot <= 0) { strict = false; break; }
            }
        if (strict) {
            lambda.assign(size_t(n), 0);
            for (int v = 0; v < n; ++v) lambda[v] = Int(w[v]);
        } else {
            lambda = strictWeight(pairs, n);
        }
    }
    int r = int(pairs.size());
    IntegerMatrix zGrading(1, r);
    for (int i = 0; i < r; ++i) {
        Int c = 0;
        for (int v = 0; v < n; ++v) c += lambda[v] * Int(pairs[i].first.e[v] - pairs[i].second.e[v]);
        zGrading.at(0, i) = c;
    }
    RingContext zctx(zGrading, MonomialOrder{}, "z");
    return UniversalFamily{xctx, std::move(pairs), std::move(zctx)};
}

namespace {

struct XZTerm {
    Monomial x;
    Monomial z;
};

// reduce the x-part by the marked family: lowest family index first
void reduceXZTerm(XZTerm& t, const UniversalFamily& fam) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < fam.pairs.size(); ++k) {
            if (divides(fam.pairs[k].first, t.x)) {
                t.x = quotient(t.x, fam.pairs[k].first) * fam.pairs[k].second;
                t.z.e[k] += 1;
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

SPairNormalForm familySPairNormalForm(const UniversalFamily& fam, int i, int j) {
    const Monomial& ui = fam.pairs[i].first;
    const Monomial& uj = fam.pairs[j].first;
    Monomial l = lcm(ui, uj);
    int r = int(fam.pairs.size());
    // S-pair (l/ui) f_i - (l/uj) f_j = z_j (l/uj) x^{v_j} - z_i (l/ui) x^{v_i};
    // the two terms carry opposite signs throughout the reduction
    XZTerm ti{quotient(l, ui) * fam.pairs[i].second, Monomial(r)};
    XZTerm tj{quotient(l, uj) * fam.pairs[j].second, Monomial(r)};
    ti.z.e[i] = 1;
    tj.z.e[j] = 1;
    reduceXZTerm(ti, fam);
    reduceXZTerm(tj, fam);
    SPairNormalForm out;
    if (ti.x == tj.x && ti.z == tj.z) return out;  // cancelled
    if (ti.x != tj.x)
        throw std::logic_error("familySPairNormalForm: normal form x-parts differ; initial ideal not A-graded");
    out.zero = false;
    out.xpart = ti.x;
    Polynomial zb = makePolynomial({Term{1, ti.z}, Term{-1, tj.z}}, fam.zctx.order());
    out.zbinomial = monicLead(zb);
    return out;
}

PolyList localEquations(const UniversalFamily& fam, bool reversePairOrder) {
    int r = int(fam.pairs.size());
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) order.emplace_back(i, j);
    if (reversePairOrder) std::reverse(order.begin(), order.end());
    PolyList gens;
    std::set<std::pair<std::vector<Exp>, std::vector<Exp>>> seen;
    for (auto [i, j] : order) {
        SPairNormalForm nf = familySPairNormalForm(fam, i, j);
        if (nf.zero) continue;
        auto key = std::make_pair(nf.zbinomial.terms[0].mono.e, nf.zbinomial.terms[1].mono.e);
        if (seen.insert(key).second) gens.push_back(nf.zbinomial);
    }
    sortCanonical(gens, fam.zctx);
    return gens;
}

bool SubstitutionMap::isSurvivor(int v) const {
    const Polynomial& p = images[v];
    return p.terms.size() == 1 && p.lead().coeff == 1 && p.lead().mono.e[v] == 1 &&
           p.lead().mono.totalDegree() == 1;
}

std::vector<int> SubstitutionMap::survivors() const {
    std::vector<int> out;
    for (int v = 0; v < int(images.size()); ++v)
        if (isSurvivor(v)) out.push_back(v);
    return out;
}

Polynomial SubstitutionMap::apply(const Polynomial& f, const MonomialOrder& o) const {
    Polynomial acc;
    for (const auto& t : f.terms) {
        Polynomial term = makePolynomial({Term{t.coeff, Monomial(int(images.size()))}}, o);
        for (int v = 0; v < int(images.size()); ++v)
            if (t.mono.e[v] != 0) term = mul(term, power(images[v], t.mono.e[v], o), o);
        acc = add(acc, term, o);
    }
    return acc;
}

namespace {

// f = c*x_v + g with g free of x_v: returns (v, -g/c); otherwise (-1, 0)
std::pair<int, Polynomial> findRedundant(const Polynomial& f, const RingContext& ctx) {
    for (int v = 0; v < ctx.n(); ++v) {
        Rat c = 0;
        bool elsewhere = false;
        for (const auto& t : f.terms) {
            if (t.mono.e[v] == 0) continue;
            if (t.mono.e[v] == 1 && t.mono.totalDegree() == 1)
                c = t.coeff;
            else
                elsewhere = true;
        }
        if (c != 0 && !elsewhere) {
            std::vector<Term> rest;
            for (const auto& t : f.terms)
                if (t.mono.e[v] == 0) rest.push_back(Term{-t.coeff / c, t.mono});
            return {v, makePolynomial(std::move(rest), ctx.order())};
        }
    }
    return {-1, Polynomial{}};
}

Polynomial substituteOneVariable(const Polynomial& f, int v, const Polynomial& image,
                                 const MonomialOrder& o) {
    Polynomial acc;
    for (const auto& t : f.terms) {
        if (t.mono.e[v] == 0) {
            acc = add(acc, makePolynomial({t}, o), o);
            continue;
        }
        Monomial rest = t.mono;
        Exp k = rest.e[v];
        rest.e[v] = 0;
        Polynomial p = mulTerm(power(image, k, o), t.coeff, rest);
        acc = add(acc, p, o);
    }
    return acc;
}

}  // namespace

SubstitutionMap removeRedundantVariables(const PolyList& gens, const RingContext& ctx) {
    int n = ctx.n();
    SubstitutionMap map;
    map.images.reserve(size_t(n));
    for (int v = 0; v < n; ++v) {
        Monomial m(n);
        m.e[v] = 1;
        map.images.push_back(makePolynomial({Term{1, m}}, ctx.order()));
    }
    PolyList work;
    for (const auto& g : gens)
        if (!g.isZero()) work.push_back(g);

    while (true) {
        int var = -1;
        Polynomial image;
        for (const auto& f : work) {
            auto [v, img] = findRedundant(f, ctx);
            if (v >= 0) {
                var = v;
                image = std::move(img);
                break;
            }
        }
        if (var < 0) break;
        for (auto& m : map.images) m = substituteOneVariable(m, var, image, ctx.order());
        map.images[var] = image;  // image is free of var
        PolyList next;
        for (const auto& f : work) {
            Polynomial h = substituteOneVariable(f, var, image, ctx.order());
            if (!h.isZero()) next.push_back(std::move(h));
        }
        work = std::move(next);
    }
    return map;
}

MinimalPresentation minimalPresentation(const PolyList& gens, const RingContext& ctx) {
    SubstitutionMap map = removeRedundantVariables(gens, ctx);
    PolyList image;
    for (const auto& g : gens) {
        Polynomial h = map.apply(g, ctx.order());
        if (!h.isZero()) image.push_back(std::move(h));
    }
    GroebnerBasis gb = buchberger(image, ctx.order());
    return MinimalPresentation{map.survivors(), gb.elements, std::move(map)};
}

PolyList coherentPatch(const PolyList& jm, const RingContext& zctx) {
    if (jm.empty()) return {};
    int r = zctx.n();
    SubstitutionMap map = removeRedundantVariables(jm, zctx);
    bool monomialImages = true;
    for (const auto& img : map.images)
        if (!(img.terms.size() == 1 && img.lead().coeff == 1) && !img.isZero()) {
            monomialImages = false;
            break;
        }

    std::vector<Exp> weights = zctx.positiveWeight();
    auto graded = [&](const PolyList& gens) -> const std::vector<Exp>* {
        for (const auto& g : gens) {
            if (g.isZero()) continue;
            Exp d = -1;
            for (const auto& t : g.terms) {
                Exp s = 0;
                for (int v = 0; v < int(t.mono.e.size()); ++v) s += weights[v] * t.mono.e[v];
                if (d < 0)
                    d = s;
                else if (s != d)
                    return nullptr;
            }
        }
        return &weights;
    };

    if (!monomialImages) {
        std::vector<int> all;
        for (int v = 0; v < r; ++v) all.push_back(v);
        return idealQuotientByProduct(jm, all, zctx.order(), graded(jm));
    }

    PolyList image;
    for (const auto& g : jm) {
        Polynomial h = map.apply(g, zctx.order());
        if (!h.isZero()) image.push_back(std::move(h));
    }
    PolyList sat = idealQuotientByProduct(image, map.survivors(), zctx.order(), graded(image));
    PolyList out;
    for (int v = 0; v < r; ++v) {
        if (map.isSurvivor(v)) continue;
        Monomial m(r);
        m.e[v] = 1;
        Polynomial rel = sub(makePolynomial({Term{1, m}}, zctx.order()), map.images[v], zctx.order());
        out.push_back(std::move(rel));
    }
    out.insert(out.end(), sat.begin(), sat.end());
    sortCanonical(out, zctx);
    return out;
}

Polynomial reductionPaths(const Monomial& start, const UniversalFamily& fam) {
    const MonomialOrder& zo = fam.zctx.order();
    int r = int(fam.pairs.size());
    std::map<std::vector<Exp>, Polynomial> memo;
    auto rec = [&](auto&& self, const Monomial& m) -> Polynomial {
        auto it = memo.find(m.e);
        if (it != memo.end()) return it->second;
        Polynomial acc;
        bool reducible = false;
        for (int k = 0; k < r; ++k) {
            if (!divides(fam.pairs[k].first, m)) continue;
            reducible = true;
            Monomial next = quotient(m, fam.pairs[k].first) * fam.pairs[k].second;
            Monomial zk(r);
            zk.e[k] = 1;
            acc = add(acc, mulTerm(self(self, next), 1, zk), zo);
        }
        if (!reducible) acc = makePolynomial({Term{1, Monomial(r)}}, zo);
        memo.emplace(m.e, acc);
        return acc;
    };
    return rec(rec, start);
}

CoherentEmbedding coherentEmbedding(const SchemeEnv& env, bool fullFibers) {
    GraverFiberTable fibers = fullFibers ? graverFibers(env.graver, env.ctx, true) : env.fibers;
    std::set<Monomial> acc;
    acc.insert(Monomial(env.ctx.n()));
    for (const auto& [deg, fiber] : fibers) {
        std::set<Monomial> next;
        for (const auto& g : acc)
            for (const auto& m : fiber) next.insert(g * m);
        acc = std::move(next);
    }
    std::vector<Monomial> products(acc.begin(), acc.end());
    MonomialOrder grevlex;
    std::sort(products.begin(), products.end(),
              [&](const Monomial& a, const Monomial& b) { return compareMonomials(a, b, grevlex) < 0; });

    int t = int(products.size());
    int n = env.ctx.n();
    IntegerMatrix lifted(n + 1, t);
    for (int j = 0; j < t; ++j) {
        for (int i = 0; i < n; ++i) lifted.at(i, j) = products[j].e[i];
        lifted.at(n, j) = 1;
    }
    RingContext yctx(lifted, MonomialOrder{}, "y");
    PolyList pa = toricIdeal(yctx);
    return CoherentEmbedding{std::move(products), std::move(yctx), std::move(pa)};
}

std::pair<int, Int> projectiveInvariants(const PolyList& pa, const RingContext& yctx) {
    int t = yctx.n();
    IntegerMatrix ones(1, t);
    for (int j = 0; j < t; ++j) ones.at(0, j) = 1;
    RingContext standard(ones, yctx.order(), yctx.varPrefix());
    KPolynomial k = kPolynomial(pa, standard);
    // dense univariate coefficients
    Exp maxDeg = 0;
    for (const auto& [d, c] : k.terms) maxDeg = std::max(maxDeg, Exp(d[0].get_si()));
    std::vector<Int> coeff(size_t(maxDeg) + 1, 0);
    for (const auto& [d, c] : k.terms) coeff[size_t(d[0].get_si())] = c;
    int codim = 0;
    while (true) {
        Int atOne = 0;
        for (const Int& c : coeff) atOne += c;
        if (atOne != 0 || coeff.size() <= 1) break;
        // divide by (1 - t): q_i = a_i + q_{i-1}, remainder must vanish
        std::vector<Int> q(coeff.size() - 1, 0);
        Int carry = 0;
        for (size_t i = 0; i + 1 < coeff.size(); ++i) {
            carry += coeff[i];
            q[i] = carry;
        }
        coeff = std::move(q);
        ++codim;
    }
    Int degree = 0;
    for (const Int& c : coeff) degree += c;
    return {codim, degree};
}

Polynomial substituteVariableOne(const Polynomial& f, int var, const MonomialOrder& o) {
    std::vector<Term> ts;
    ts.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Monomial m = t.mono;
        m.e[var] = 0;
        ts.push_back(Term{t.coeff, std::move(m)});
    }
    return makePolynomial(std::move(ts), o);
}

MinimalPresentation chart(const PolyList& pa, int var, const RingContext& yctx) {
    PolyList subbed;
    for (const auto& g : pa) {
        Polynomial h = substituteVariableOne(g, var, yctx.order());
        if (!h.isZero()) subbed.push_back(std::move(h));
    }
    return minimalPresentation(subbed, yctx);
}

}  // namespace thilb
