#pragma once

#include <map>

#include "thilb/groebner.hpp"

namespace thilb {

/// Binomials x^u - x^v of the toric ideal, minimal under componentwise
/// divisibility of both terms; a universal Groebner basis.
struct GraverBasis {
    PolyList binomials;  // grevlex-lead minuend, sorted by (degree, lead exponents)
};

/// Graver degree -> fiber members (with the double-ideal members removed,
/// unless the table was built from full fibers). Keys sort lexicographically.
using GraverFiberTable = std::map<MultiDegree, std::vector<Monomial>>;

/// Block matrix [[A, 0], [I, I]] of shape (d+n) x 2n.
IntegerMatrix lawrenceLifting(const IntegerMatrix& a);

/// I_A = <x^u - x^v : Au = Av>: kernel-basis binomials saturated by every
/// variable. Returns the minimal generators, canonically sorted.
PolyList toricIdeal(const RingContext& ctx, bool useLLL = true);

/// Minimal generators of the Lawrence toric ideal, mapped y -> 1.
GraverBasis graverBasis(const RingContext& ctx, bool useLLL = true);

/// All monomials of the given multidegree, ascending grevlex. Complete and
/// duplicate-free; empty when the degree is infeasible.
std::vector<Monomial> monomialsOfDegree(const MultiDegree& b, const RingContext& ctx);

/// Monomial ideal < x^u x^v : x^u - x^v in Gr_A >, minimalized; contained in
/// every monomial ideal of the toric Hilbert scheme.
std::vector<Monomial> doubleIdeal(const GraverBasis& g, const RingContext& ctx);

GraverFiberTable graverFibers(const GraverBasis& g, const RingContext& ctx, bool fullFibers = false);

/// Canonical presentation order for homogeneous polynomial lists:
/// (A-degree lex, then lead monomial exponent-lex).
void sortCanonical(PolyList& polys, const RingContext& ctx);

}  // namespace thilb
