#pragma once

#include <map>
#include <vector>

#include "thilb/ring.hpp"

namespace thilb {

using PolyList = std::vector<Polynomial>;

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by lead term.
/// Unique for a fixed order, so basis equality decides ideal equality.
struct GroebnerBasis {
    PolyList elements;
    MonomialOrder order;
};

PolyList reorderAll(const PolyList& gens, const MonomialOrder& o);

/// Full normal form: no term of the result is divisible by any lead monomial
/// of the basis. Reducers are scanned in the given sequence, lowest index first.
Polynomial normalForm(const Polynomial& f, const PolyList& basis, const MonomialOrder& o);
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& g);

GroebnerBasis buchberger(const PolyList& gens, const MonomialOrder& o);

/// Minimal generating set of the lead-term ideal.
std::vector<Monomial> initialIdealGens(const GroebnerBasis& g);

bool idealMembership(const Polynomial& f, const GroebnerBasis& g);
bool idealEquals(const PolyList& a, const PolyList& b, const MonomialOrder& o);

/// (I : f^infinity) by eliminating t from I + <t*f - 1>. Works for any input.
PolyList saturate(const PolyList& gens, const Polynomial& f, const MonomialOrder& o);

/// Fast path for ideals homogeneous under a strictly positive weight: the
/// reduced basis in the order that makes `var` cheapest, divided by var powers.
/// Throws if a generator is not weight-homogeneous.
PolyList saturateVariableGraded(const PolyList& gens, int var, const std::vector<Exp>& positiveWeight);

/// (I : (v_1 ... v_k)^infinity), one saturation per listed variable.
/// Uses the graded fast path when positiveWeight is given (must make I homogeneous).
PolyList idealQuotientByProduct(const PolyList& gens, const std::vector<int>& vars, const MonomialOrder& o,
                                const std::vector<Exp>* positiveWeight = nullptr);

/// Minimal generators of a homogeneous ideal (graded by ctx.positiveWeight).
PolyList minimalGenerators(const PolyList& gens, const RingContext& ctx);

/// Numerator of the multigraded Hilbert series of R/I over prod(1 - t^{a_i}).
struct KPolynomial {
    std::map<MultiDegree, Int> terms;

    bool operator==(const KPolynomial& o) const { return terms == o.terms; }
    bool operator!=(const KPolynomial& o) const { return terms != o.terms; }
    bool isZero() const { return terms.empty(); }
    Int valueAtOne() const;
};

KPolynomial kMul(const KPolynomial& a, const KPolynomial& b);
KPolynomial kSub(const KPolynomial& a, const KPolynomial& b);

KPolynomial kPolynomialOfMonomialIdeal(std::vector<Monomial> gens, const RingContext& ctx);
KPolynomial kPolynomial(const PolyList& gens, const RingContext& ctx);
std::string formatKPolynomial(const KPolynomial& k);

/// Keep only the divisibility-minimal monomials, sorted (exponent-lex).
std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens);
bool inMonomialIdeal(const Monomial& m, const std::vector<Monomial>& gens);

}  // namespace thilb
