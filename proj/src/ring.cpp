#include "thilb/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "thilb/polyhedra.hpp"

namespace thilb {

bool Monomial::isOne() const {
    for (Exp x : e)
        if (x != 0) return false;
    return true;
}

Exp Monomial::totalDegree() const {
    Exp d = 0;
    for (Exp x : e) d += x;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.vars());
    for (int i = 0; i < a.vars(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r(b.vars());
    for (int i = 0; i < b.vars(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.vars());
    for (int i = 0; i < a.vars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.vars());
    for (int i = 0; i < a.vars(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

MonomialOrder weightOrder(std::vector<Exp> w, Tiebreak tb) {
    return MonomialOrder{std::move(w), tb, -1};
}

MonomialOrder satOrder(std::vector<Exp> positiveWeight, int cheapVar) {
    return MonomialOrder{std::move(positiveWeight), Tiebreak::RevLexCheapest, cheapVar};
}

int compareMonomials(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
    int n = a.vars();
    if (!o.weight.empty()) {
        Exp wa = 0, wb = 0;
        for (int i = 0; i < n; ++i) {
            wa += o.weight[i] * a.e[i];
            wb += o.weight[i] * b.e[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
    }
    switch (o.tiebreak) {
        case Tiebreak::Lex:
            for (int i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Tiebreak::GrevLex: {
            Exp da = a.totalDegree(), db = b.totalDegree();
            if (da != db) return da < db ? -1 : 1;
            for (int i = n - 1; i >= 0; --i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        }
        case Tiebreak::RevLexCheapest: {
            int v = o.cheapest;
            if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
            for (int i = n - 1; i >= 0; --i) {
                if (i == v) continue;
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            }
            return 0;
        }
    }
    return 0;
}

namespace {

// Strictly positive functional c with c . a_j > 0 for every column, plus the
// composed weights. Throws when none exists.
std::pair<std::vector<Int>, std::vector<Exp>> findPositiveWeight(const IntegerMatrix& a) {
    int d = a.rows(), n = a.cols();
    for (int j = 0; j < n; ++j) {
        bool zero = true;
        for (int i = 0; i < d; ++i)
            if (a.at(i, j) != 0) { zero = false; break; }
        if (zero) throw std::invalid_argument("grading matrix has a zero column");
    }
    auto weightsFrom = [&](const std::vector<Int>& c) -> std::vector<Exp> {
        std::vector<Exp> w(n);
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int i = 0; i < d; ++i) s += c[i] * a.at(i, j);
            if (s <= 0) return {};
            if (!s.fits_slong_p()) throw std::overflow_error("positive grading weight overflow");
            w[j] = s.get_si();
        }
        return w;
    };
    // common case: one row (or the row sum) is already strictly positive
    for (int i = 0; i < d; ++i) {
        std::vector<Int> c(d, 0);
        c[i] = 1;
        auto w = weightsFrom(c);
        if (!w.empty()) return {c, w};
    }
    {
        std::vector<Int> c(d, 1);
        auto w = weightsFrom(c);
        if (!w.empty()) return {c, w};
    }
    // interior vector of { x : a_j . x >= 0 } via cone duality
    DualPair dual = polarCone(a);
    std::vector<Int> c(d, 0);
    for (int j = 0; j < dual.inequalities.cols(); ++j)
        for (int i = 0; i < d; ++i) c[i] -= dual.inequalities.at(i, j);
    auto w = weightsFrom(c);
    if (w.empty()) throw std::invalid_argument("grading admits no strictly positive functional");
    return {c, w};
}

}  // namespace

RingContext::RingContext(IntegerMatrix grading, MonomialOrder order, std::string varPrefix)
    : n_(grading.cols()),
      grading_(std::move(grading)),
      order_(std::move(order)),
      prefix_(std::move(varPrefix)) {
    auto [c, w] = findPositiveWeight(grading_);
    posFunctional_ = std::move(c);
    posWeight_ = std::move(w);
    if (prefix_.empty() && n_ > 26) prefix_ = "x";
}

RingContext RingContext::withOrder(MonomialOrder order) const {
    RingContext c = *this;
    c.order_ = std::move(order);
    return c;
}

std::string RingContext::varName(int i) const {
    if (prefix_.empty()) return std::string(1, char('a' + i));
    return prefix_ + std::to_string(i + 1);
}

int RingContext::varIndex(const std::string& name) const {
    if (prefix_.empty()) {
        if (name.size() == 1 && name[0] >= 'a' && name[0] < char('a' + n_)) return name[0] - 'a';
        return -1;
    }
    if (name.rfind(prefix_, 0) != 0) return -1;
    std::string num = name.substr(prefix_.size());
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) return -1;
    int i = std::stoi(num) - 1;
    return (i >= 0 && i < n_) ? i : -1;
}

MultiDegree RingContext::degreeOf(const Monomial& m) const {
    MultiDegree d(grading_.rows());
    for (int i = 0; i < grading_.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < n_; ++j)
            if (m.e[j] != 0) s += grading_.at(i, j) * Int(m.e[j]);
        d[i] = s;
    }
    return d;
}

Polynomial makePolynomial(std::vector<Term> terms, const MonomialOrder& o) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return compareMonomials(a.mono, b.mono, o) > 0;
    });
    std::vector<Term> out;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return Polynomial{std::move(out)};
}

Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    std::vector<Term> out;
    out.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = compareMonomials(a.terms[i].mono, b.terms[j].mono, o);
        if (c > 0)
            out.push_back(a.terms[i++]);
        else if (c < 0)
            out.push_back(b.terms[j++]);
        else {
            Rat s = a.terms[i].coeff + b.terms[j].coeff;
            if (s != 0) out.push_back(Term{std::move(s), a.terms[i].mono});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.push_back(b.terms[j]);
    return Polynomial{std::move(out)};
}

Polynomial negate(const Polynomial& a) {
    Polynomial r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& o) {
    return add(a, negate(b), o);
}

Polynomial mulTerm(const Polynomial& a, const Rat& c, const Monomial& m) {
    if (c == 0) return Polynomial{};
    Polynomial r = a;
    for (auto& t : r.terms) {
        t.coeff *= c;
        t.mono = t.mono * m;
    }
    return r;
}

Polynomial monicLead(const Polynomial& a) {
    if (a.isZero() || a.lead().coeff == 1) return a;
    Rat inv = 1 / a.lead().coeff;
    Polynomial r = a;
    for (auto& t : r.terms) t.coeff *= inv;
    return r;
}

Polynomial reorder(const Polynomial& a, const MonomialOrder& o) {
    return makePolynomial(a.terms, o);
}

bool isBinomialDifference(const Polynomial& f) {
    return f.terms.size() == 2 && f.terms[0].coeff == 1 && f.terms[1].coeff == -1;
}

Polynomial toBinomial(const std::vector<Int>& b, const RingContext& ctx) {
    if (int(b.size()) != ctx.n()) throw std::invalid_argument("toBinomial: wrong vector length");
    Monomial top(ctx.n()), bottom(ctx.n());
    for (int i = 0; i < ctx.n(); ++i) {
        if (b[i] > 0)
            top.e[i] = Exp(b[i].get_si());
        else if (b[i] < 0)
            bottom.e[i] = Exp(Int(-b[i]).get_si());
    }
    return makePolynomial({Term{1, top}, Term{-1, bottom}}, ctx.order());
}

Polynomial homogenizeToLawrence(const Polynomial& f, const RingContext& lawrenceCtx) {
    if (f.isZero()) return f;
    int n2 = lawrenceCtx.n();
    int n = n2 / 2;
    if (f.terms.size() != 2 || abs(f.terms[0].coeff) != 1 || abs(f.terms[1].coeff) != 1)
        throw std::invalid_argument("homogenizeToLawrence: binomial expected");
    Monomial a = f.terms[0].coeff == 1 ? f.terms[0].mono : f.terms[1].mono;
    Monomial b = f.terms[0].coeff == 1 ? f.terms[1].mono : f.terms[0].mono;
    for (int i = n; i < n2; ++i)
        if (a.e[i] != 0 || b.e[i] != 0)
            throw std::invalid_argument("homogenizeToLawrence: y-exponents must vanish");
    Monomial top = a, bottom = b;
    for (int i = 0; i < n; ++i) {
        top.e[n + i] = b.e[i];
        bottom.e[n + i] = a.e[i];
    }
    return makePolynomial({Term{1, top}, Term{-1, bottom}}, lawrenceCtx.order());
}

std::string formatMonomial(const Monomial& m, const RingContext& ctx) {
    if (m.isOne()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ctx.n(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << ctx.varName(i);
        if (m.e[i] > 1) os << "^" << m.e[i];
        first = false;
    }
    return os.str();
}

std::string formatPolynomial(const Polynomial& p, const RingContext& ctx) {
    if (p.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : p.terms) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (t.mono.isOne())
            os << c;
        else {
            if (c != 1) os << c << "*";
            os << formatMonomial(t.mono, ctx);
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skipSpace() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skipSpace();
        return i >= s.size();
    }
    char peek() {
        skipSpace();
        return i < s.size() ? s[i] : '\0';
    }
};

Exp parseExponent(Cursor& c) {
    c.skipSpace();
    size_t start = c.i;
    while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw std::invalid_argument("polynomial: exponent expected at '" + c.s.substr(start) + "'");
    return std::stol(c.s.substr(start, c.i - start));
}

// one multiplicand: either a variable power or a numeric literal
bool parseFactor(Cursor& c, const RingContext& ctx, Rat& coeff, Monomial& mono) {
    c.skipSpace();
    if (c.i >= c.s.size()) return false;
    char ch = c.s[c.i];
    if (isdigit(static_cast<unsigned char>(ch))) {
        size_t start = c.i;
        while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        Int num(c.s.substr(start, c.i - start));
        c.skipSpace();
        if (c.i < c.s.size() && c.s[c.i] == '/') {
            ++c.i;
            c.skipSpace();
            size_t dstart = c.i;
            while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
            if (c.i == dstart) throw std::invalid_argument("polynomial: denominator expected");
            Int den(c.s.substr(dstart, c.i - dstart));
            Rat q(num, den);
            q.canonicalize();
            coeff *= q;
        } else {
            coeff *= Rat(num);
        }
        return true;
    }
    if (!isalpha(static_cast<unsigned char>(ch))) return false;
    int var = -1;
    if (ctx.varPrefix().empty()) {
        var = ctx.varIndex(std::string(1, ch));
        if (var < 0) throw std::invalid_argument(std::string("polynomial: unknown variable '") + ch + "'");
        ++c.i;
        // single-letter rings: digits directly after a letter are an exponent
        if (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            mono.e[var] += parseExponent(c);
            return true;
        }
    } else {
        size_t start = c.i;
        ++c.i;
        while (c.i < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        std::string name = c.s.substr(start, c.i - start);
        var = ctx.varIndex(name);
        if (var < 0) throw std::invalid_argument("polynomial: unknown variable '" + name + "'");
    }
    c.skipSpace();
    if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        mono.e[var] += parseExponent(c);
    } else {
        mono.e[var] += 1;
    }
    return true;
}

Term parseTerm(Cursor& c, const RingContext& ctx) {
    Rat coeff = 1;
    Monomial mono(ctx.n());
    bool any = false;
    while (true) {
        if (!parseFactor(c, ctx, coeff, mono)) break;
        any = true;
        c.skipSpace();
        if (c.i < c.s.size() && c.s[c.i] == '*') {
            ++c.i;
            continue;
        }
        // juxtaposition like "bc3" or "3a" keeps going; +,-,end stop the term
        char nxt = c.peek();
        if (nxt == '+' || nxt == '-' || nxt == '\0' || nxt == ',') break;
    }
    if (!any) throw std::invalid_argument("polynomial: term expected near '" + c.s.substr(c.i) + "'");
    return Term{coeff, mono};
}

}  // namespace

Polynomial parsePolynomial(const std::string& text, const RingContext& ctx) {
    Cursor c{text};
    std::vector<Term> terms;
    c.skipSpace();
    if (c.done()) throw std::invalid_argument("polynomial: empty input");
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        ++c.i;
    } else if (c.peek() == '+') {
        ++c.i;
    }
    while (true) {
        Term t = parseTerm(c, ctx);
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (c.done()) break;
        char op = c.peek();
        if (op == '+')
            neg = false;
        else if (op == '-')
            neg = true;
        else
            throw std::invalid_argument("polynomial: unexpected character '" + std::string(1, op) + "'");
        ++c.i;
    }
    return makePolynomial(std::move(terms), ctx.order());
}

Monomial parseMonomial(const std::string& text, const RingContext& ctx) {
    Polynomial p = parsePolynomial(text, ctx);
    if (p.terms.size() != 1 || p.lead().coeff != 1)
        throw std::invalid_argument("monomial expected: " + text);
    return p.lead().mono;
}

}  // namespace thilb
