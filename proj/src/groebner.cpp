#include "thilb/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thilb {

PolyList reorderAll(const PolyList& gens, const MonomialOrder& o) {
    PolyList out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(reorder(g, o));
    return out;
}

Polynomial normalForm(const Polynomial& f, const PolyList& basis, const MonomialOrder& o) {
    Polynomial rem;  // collected irreducible terms, descending
    Polynomial h = reorder(f, o);  // inputs may arrive sorted under another order
    while (!h.isZero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.isZero()) continue;
            if (divides(g.leadMonomial(), h.leadMonomial())) {
                Rat c = h.lead().coeff / g.lead().coeff;
                Monomial q = quotient(h.leadMonomial(), g.leadMonomial());
                h = sub(h, mulTerm(g, c, q), o);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(h.lead());
            h.terms.erase(h.terms.begin());
        }
    }
    return rem;
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& g) {
    return normalForm(f, g.elements, g.order);
}

namespace {

Polynomial spolynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& o) {
    Monomial l = lcm(f.leadMonomial(), g.leadMonomial());
    Polynomial a = mulTerm(f, 1 / f.lead().coeff, quotient(l, f.leadMonomial()));
    Polynomial b = mulTerm(g, 1 / g.lead().coeff, quotient(l, g.leadMonomial()));
    return sub(a, b, o);
}

struct SPair {
    int i, j;
    Monomial lcm;
};

// Gebauer-Moeller update: prune the pending pair set against the new element
// h = basis[k], then add the surviving (i, k) pairs.
void updatePairs(std::vector<SPair>& pairs, const PolyList& basis, int k, const MonomialOrder& o) {
    const Monomial& lh = basis[k].leadMonomial();
    std::vector<SPair> fresh;
    for (int i = 0; i < k; ++i) {
        if (basis[i].isZero()) continue;
        fresh.push_back({i, k, lcm(basis[i].leadMonomial(), lh)});
    }
    // drop old pairs whose lcm is properly covered through h
    std::vector<SPair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        if (divides(lh, p.lcm) && lcm(basis[p.i].leadMonomial(), lh) != p.lcm &&
            lcm(basis[p.j].leadMonomial(), lh) != p.lcm)
            continue;
        kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    // among the new pairs keep one representative per lcm-divisibility class
    std::vector<SPair> filtered;
    for (size_t a = 0; a < fresh.size(); ++a) {
        bool drop = false;
        for (size_t b = 0; b < fresh.size() && !drop; ++b) {
            if (a == b) continue;
            if (fresh[b].lcm == fresh[a].lcm) {
                if (b < a) drop = true;  // duplicate lcm: keep the first
            } else if (divides(fresh[b].lcm, fresh[a].lcm)) {
                drop = true;
            }
        }
        if (!drop) filtered.push_back(fresh[a]);
    }
    for (auto& p : filtered) {
        if (coprime(basis[p.i].leadMonomial(), basis[p.j].leadMonomial())) continue;
        pairs.push_back(std::move(p));
    }
}

PolyList interReduce(PolyList gens, const MonomialOrder& o) {
    // keep only elements with divisibility-minimal leads
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compareMonomials(a.leadMonomial(), b.leadMonomial(), o) < 0;
    });
    PolyList minimal;
    for (auto& g : gens) {
        bool covered = false;
        for (const auto& m : minimal)
            if (divides(m.leadMonomial(), g.leadMonomial())) { covered = true; break; }
        if (!covered) minimal.push_back(std::move(g));
    }
    // tail-reduce each against the others
    PolyList out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        PolyList others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(monicLead(normalForm(minimal[i], others, o)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return compareMonomials(a.leadMonomial(), b.leadMonomial(), o) < 0;
    });
    return out;
}

}  // namespace

GroebnerBasis buchberger(const PolyList& gens, const MonomialOrder& o) {
    PolyList basis;
    for (const auto& g : gens) {
        Polynomial p = reorder(g, o);
        if (!p.isZero()) basis.push_back(monicLead(p));
    }
    std::vector<SPair> pairs;
    for (int k = 0; k < int(basis.size()); ++k) updatePairs(pairs, basis, k, o);

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the order
        size_t best = 0;
        for (size_t t = 1; t < pairs.size(); ++t) {
            int c = compareMonomials(pairs[t].lcm, pairs[best].lcm, o);
            if (c < 0 || (c == 0 && pairs[t].lcm.e < pairs[best].lcm.e))
                best = t;
        }
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        Polynomial s = spolynomial(basis[p.i], basis[p.j], o);
        Polynomial h = normalForm(s, basis, o);
        if (h.isZero()) continue;
        basis.push_back(monicLead(h));
        updatePairs(pairs, basis, int(basis.size()) - 1, o);
    }
    return GroebnerBasis{interReduce(std::move(basis), o), o};
}

std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.totalDegree() < b.totalDegree() || (a.totalDegree() == b.totalDegree() && a.e < b.e); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool covered = false;
        for (const auto& g : out)
            if (divides(g, m)) { covered = true; break; }
        if (!covered) out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    return out;
}

bool inMonomialIdeal(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (divides(g, m)) return true;
    return false;
}

std::vector<Monomial> initialIdealGens(const GroebnerBasis& g) {
    std::vector<Monomial> leads;
    leads.reserve(g.elements.size());
    for (const auto& e : g.elements) leads.push_back(e.leadMonomial());
    return minimalizeMonomials(std::move(leads));
}

bool idealMembership(const Polynomial& f, const GroebnerBasis& g) {
    return normalForm(f, g).isZero();
}

bool idealEquals(const PolyList& a, const PolyList& b, const MonomialOrder& o) {
    GroebnerBasis ga = buchberger(a, o), gb = buchberger(b, o);
    return ga.elements == gb.elements;
}

PolyList saturate(const PolyList& gens, const Polynomial& f, const MonomialOrder& o) {
    if (f.isZero()) throw std::invalid_argument("saturate: zero polynomial");
    if (gens.empty()) return gens;
    int n = gens[0].lead().mono.vars();
    // extended ring with t as the last variable, eliminated first
    MonomialOrder ext;
    ext.weight.assign(size_t(n) + 1, 0);
    ext.weight[n] = 1;
    ext.tiebreak = Tiebreak::GrevLex;
    auto lift = [&](const Polynomial& p, Exp tdeg) {
        std::vector<Term> ts;
        for (const auto& t : p.terms) {
            Monomial m(n + 1);
            std::copy(t.mono.e.begin(), t.mono.e.end(), m.e.begin());
            m.e[n] = tdeg;
            ts.push_back(Term{t.coeff, std::move(m)});
        }
        return makePolynomial(std::move(ts), ext);
    };
    PolyList extGens;
    for (const auto& g : gens)
        if (!g.isZero()) extGens.push_back(lift(g, 0));
    Polynomial tf = lift(f, 1);
    Monomial one(n + 1);
    extGens.push_back(sub(tf, makePolynomial({Term{1, one}}, ext), ext));
    GroebnerBasis gb = buchberger(extGens, ext);
    PolyList out;
    for (const auto& g : gb.elements) {
        bool hasT = false;
        for (const auto& t : g.terms)
            if (t.mono.e[n] != 0) { hasT = true; break; }
        if (hasT) continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms) {
            Monomial m(n);
            std::copy(t.mono.e.begin(), t.mono.e.begin() + n, m.e.begin());
            ts.push_back(Term{t.coeff, std::move(m)});
        }
        out.push_back(makePolynomial(std::move(ts), o));
    }
    return out;
}

namespace {

Exp weightOf(const Polynomial& p, const std::vector<Exp>& w) {
    Exp s = 0;
    const Monomial& m = p.leadMonomial();
    for (int i = 0; i < m.vars(); ++i) s += w[i] * m.e[i];
    return s;
}

void checkHomogeneous(const PolyList& gens, const std::vector<Exp>& w) {
    for (const auto& g : gens) {
        if (g.isZero()) continue;
        Exp d = weightOf(g, w);
        for (const auto& t : g.terms) {
            Exp s = 0;
            for (int i = 0; i < t.mono.vars(); ++i) s += w[i] * t.mono.e[i];
            if (s != d) throw std::invalid_argument("saturateVariableGraded: ideal not weight-homogeneous");
        }
    }
}

}  // namespace

PolyList saturateVariableGraded(const PolyList& gens, int var, const std::vector<Exp>& positiveWeight) {
    checkHomogeneous(gens, positiveWeight);
    MonomialOrder o = satOrder(positiveWeight, var);
    GroebnerBasis gb = buchberger(gens, o);
    PolyList out;
    for (const auto& g : gb.elements) {
        Exp k = g.terms[0].mono.e[var];
        for (const auto& t : g.terms) k = std::min(k, t.mono.e[var]);
        if (k == 0) {
            out.push_back(g);
            continue;
        }
        Polynomial q = g;
        for (auto& t : q.terms) t.mono.e[var] -= k;
        out.push_back(std::move(q));
    }
    return out;
}

PolyList idealQuotientByProduct(const PolyList& gens, const std::vector<int>& vars, const MonomialOrder& o,
                                const std::vector<Exp>* positiveWeight) {
    PolyList cur = gens;
    for (int v : vars) {
        if (cur.empty()) break;
        if (positiveWeight) {
            cur = saturateVariableGraded(cur, v, *positiveWeight);
        } else {
            int n = cur[0].lead().mono.vars();
            Monomial xm(n);
            xm.e[v] = 1;
            cur = saturate(cur, makePolynomial({Term{1, xm}}, o), o);
        }
    }
    return reorderAll(cur, o);
}

PolyList minimalGenerators(const PolyList& gens, const RingContext& ctx) {
    const auto& w = ctx.positiveWeight();
    GroebnerBasis gb = buchberger(gens, ctx.order());
    checkHomogeneous(gb.elements, w);
    PolyList sorted = gb.elements;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
        return weightOf(a, w) < weightOf(b, w);
    });
    PolyList kept;        // the chosen minimal generators
    PolyList lowerBasis;  // reduced GB of everything of strictly lower degree
    PolyList echelon;     // same-degree additions, fully reduced, distinct leads
    Exp curDeg = 0;
    bool first = true;
    for (const auto& g : sorted) {
        Exp d = weightOf(g, w);
        if (first || d != curDeg) {
            if (!kept.empty()) lowerBasis = buchberger(kept, ctx.order()).elements;
            echelon.clear();
            curDeg = d;
            first = false;
        }
        PolyList reducers = lowerBasis;
        reducers.insert(reducers.end(), echelon.begin(), echelon.end());
        Polynomial h = normalForm(g, reducers, ctx.order());
        if (!h.isZero()) {
            kept.push_back(g);
            echelon.push_back(monicLead(h));
        }
    }
    return kept;
}

Int KPolynomial::valueAtOne() const {
    Int s = 0;
    for (const auto& [d, c] : terms) s += c;
    return s;
}

KPolynomial kMul(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r;
    for (const auto& [da, ca] : a.terms)
        for (const auto& [db, cb] : b.terms) {
            MultiDegree d(da.size());
            for (size_t i = 0; i < d.size(); ++i) d[i] = da[i] + db[i];
            Int& slot = r.terms[d];
            slot += ca * cb;
            if (slot == 0) r.terms.erase(d);
        }
    return r;
}

KPolynomial kSub(const KPolynomial& a, const KPolynomial& b) {
    KPolynomial r = a;
    for (const auto& [d, c] : b.terms) {
        Int& slot = r.terms[d];
        slot -= c;
        if (slot == 0) r.terms.erase(d);
    }
    return r;
}

namespace {

KPolynomial kOne(int d) {
    KPolynomial k;
    k.terms[MultiDegree(size_t(d), Int(0))] = 1;
    return k;
}

KPolynomial kMonomialShift(const MultiDegree& deg, const KPolynomial& k) {
    KPolynomial r;
    for (const auto& [d, c] : k.terms) {
        MultiDegree nd(d.size());
        for (size_t i = 0; i < d.size(); ++i) nd[i] = d[i] + deg[i];
        r.terms[nd] = c;
    }
    return r;
}

std::vector<Monomial> colonByMonomial(const std::vector<Monomial>& gens, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(quotient(g, gcd(g, m)));
    return minimalizeMonomials(std::move(out));
}

KPolynomial kRec(const std::vector<Monomial>& gens, const RingContext& ctx) {
    int d = ctx.grading().rows();
    if (gens.empty()) return kOne(d);
    for (const auto& g : gens)
        if (g.isOne()) return KPolynomial{};  // unit ideal
    if (gens.size() == 1) {
        KPolynomial k = kOne(d);
        KPolynomial t;
        t.terms[ctx.degreeOf(gens[0])] = 1;
        return kSub(k, t);
    }
    // split support-disjoint blocks; the numerator multiplies across blocks
    {
        int n = ctx.n();
        std::vector<int> comp(gens.size(), -1);
        std::vector<int> varComp(n, -1);
        int nc = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (comp[i] != -1) continue;
            comp[i] = nc;
            std::vector<size_t> stack{i};
            while (!stack.empty()) {
                size_t g = stack.back();
                stack.pop_back();
                for (int v = 0; v < n; ++v) {
                    if (gens[g].e[v] == 0) continue;
                    if (varComp[v] == -1) varComp[v] = nc;
                    for (size_t h = 0; h < gens.size(); ++h)
                        if (comp[h] == -1 && gens[h].e[v] != 0) {
                            comp[h] = nc;
                            stack.push_back(h);
                        }
                }
            }
            ++nc;
        }
        if (nc > 1) {
            KPolynomial prod = kOne(d);
            for (int c = 0; c < nc; ++c) {
                std::vector<Monomial> block;
                for (size_t i = 0; i < gens.size(); ++i)
                    if (comp[i] == c) block.push_back(gens[i]);
                prod = kMul(prod, kRec(block, ctx));
            }
            return prod;
        }
    }
    // pivot: a generator supported on the most frequent variable
    int n = ctx.n();
    std::vector<int> freq(n, 0);
    for (const auto& g : gens)
        for (int v = 0; v < n; ++v)
            if (g.e[v] != 0) ++freq[v];
    int bestVar = 0;
    for (int v = 1; v < n; ++v)
        if (freq[v] > freq[bestVar]) bestVar = v;
    size_t pivot = 0;
    while (gens[pivot].e[bestVar] == 0) ++pivot;
    std::vector<Monomial> rest;
    for (size_t i = 0; i < gens.size(); ++i)
        if (i != pivot) rest.push_back(gens[i]);
    KPolynomial without = kRec(rest, ctx);
    KPolynomial colon = kRec(colonByMonomial(rest, gens[pivot]), ctx);
    return kSub(without, kMonomialShift(ctx.degreeOf(gens[pivot]), colon));
}

}  // namespace

KPolynomial kPolynomialOfMonomialIdeal(std::vector<Monomial> gens, const RingContext& ctx) {
    return kRec(minimalizeMonomials(std::move(gens)), ctx);
}

KPolynomial kPolynomial(const PolyList& gens, const RingContext& ctx) {
    std::vector<Monomial> monos;
    bool allMonomial = true;
    for (const auto& g : gens) {
        if (g.isZero()) continue;
        if (g.terms.size() == 1)
            monos.push_back(g.leadMonomial());
        else {
            allMonomial = false;
            break;
        }
    }
    if (!allMonomial) {
        GroebnerBasis gb = buchberger(gens, ctx.order());
        monos = initialIdealGens(gb);
    }
    return kPolynomialOfMonomialIdeal(std::move(monos), ctx);
}

std::string formatKPolynomial(const KPolynomial& k) {
    if (k.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : k.terms) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant = true;
        for (const auto& x : d)
            if (x != 0) { constant = false; break; }
        if (constant) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            bool f2 = true;
            for (size_t i = 0; i < d.size(); ++i) {
                if (d[i] == 0) continue;
                if (!f2) os << "*";
                os << "t" << (i + 1);
                if (d[i] != 1) os << "^" << d[i];
                f2 = false;
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace thilb
