#pragma once

#include <string>
#include <vector>

#include "thilb/matrix.hpp"

namespace thilb {

using Exp = long;

/// Exponent vector in N^n.
struct Monomial {
    std::vector<Exp> e;

    Monomial() = default;
    explicit Monomial(int n) : e(size_t(n), 0) {}
    explicit Monomial(std::vector<Exp> v) : e(std::move(v)) {}

    int vars() const { return int(e.size()); }
    bool isOne() const;
    Exp totalDegree() const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // container ordering only (exponent-lex); term orders live in MonomialOrder
    bool operator<(const Monomial& o) const { return e < o.e; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);       // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

using MultiDegree = std::vector<Int>;

enum class Tiebreak {
    GrevLex,         // total degree, then reverse lex
    Lex,             // pure lex after the weight
    RevLexCheapest,  // reverse lex scanning the cheapest variable first; engine use
};

/// Weight vector compared first, ties resolved by the tiebreak.
struct MonomialOrder {
    std::vector<Exp> weight;  // empty = zero weight
    Tiebreak tiebreak = Tiebreak::GrevLex;
    int cheapest = -1;  // variable index for RevLexCheapest
};

MonomialOrder weightOrder(std::vector<Exp> w, Tiebreak tb = Tiebreak::GrevLex);
MonomialOrder satOrder(std::vector<Exp> positiveWeight, int cheapVar);

// < 0, 0, > 0 as a < b, a == b, a > b
int compareMonomials(const Monomial& a, const Monomial& b, const MonomialOrder& o);

/// Multigraded polynomial ring: n variables, grading matrix A (column i is the
/// degree of variable i), monomial order, variable naming scheme.
class RingContext {
public:
    RingContext(IntegerMatrix grading, MonomialOrder order = {}, std::string varPrefix = "");

    int n() const { return n_; }
    const IntegerMatrix& grading() const { return grading_; }
    const MonomialOrder& order() const { return order_; }
    /// Strictly positive functional composed with the grading: positiveWeight[i] > 0.
    const std::vector<Exp>& positiveWeight() const { return posWeight_; }
    /// The functional itself: positiveFunctional . a_i = positiveWeight[i].
    const std::vector<Int>& positiveFunctional() const { return posFunctional_; }
    const std::string& varPrefix() const { return prefix_; }

    RingContext withOrder(MonomialOrder order) const;

    std::string varName(int i) const;
    int varIndex(const std::string& name) const;  // -1 if unknown

    MultiDegree degreeOf(const Monomial& m) const;

private:
    int n_;
    IntegerMatrix grading_;
    MonomialOrder order_;
    std::vector<Exp> posWeight_;
    std::vector<Int> posFunctional_;
    std::string prefix_;
};

struct Term {
    Rat coeff;
    Monomial mono;
    bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

/// Terms sorted strictly descending in the active order, no zeros, no duplicates.
struct Polynomial {
    std::vector<Term> terms;

    bool isZero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    const Monomial& leadMonomial() const { return terms.front().mono; }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }
    bool operator!=(const Polynomial& o) const { return terms != o.terms; }
};

Polynomial makePolynomial(std::vector<Term> terms, const MonomialOrder& o);
Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
Polynomial negate(const Polynomial& a);
Polynomial mulTerm(const Polynomial& a, const Rat& c, const Monomial& m);
Polynomial monicLead(const Polynomial& a);
/// Re-sort the terms of a under a different order.
Polynomial reorder(const Polynomial& a, const MonomialOrder& o);
bool isBinomialDifference(const Polynomial& f);  // x^u - x^v form

/// Kernel vector b -> binomial x^{b+} - x^{b-}; zero vector gives 0.
Polynomial toBinomial(const std::vector<Int>& b, const RingContext& ctx);

/// x^a - x^b in the Lawrence ring (y-block zero) -> x^a y^b - x^b y^a.
Polynomial homogenizeToLawrence(const Polynomial& f, const RingContext& lawrenceCtx);

std::string formatMonomial(const Monomial& m, const RingContext& ctx);
std::string formatPolynomial(const Polynomial& p, const RingContext& ctx);
Monomial parseMonomial(const std::string& text, const RingContext& ctx);
Polynomial parsePolynomial(const std::string& text, const RingContext& ctx);

}  // namespace thilb
