#pragma once

#include "thilb/hilbert_scheme.hpp"

namespace thilb {

/// Universal family x^{u_i} - z_i x^{v_i} at the coherent fixed point in_w(I_A).
/// Pairs are sorted by (A-degree, lead ascending grevlex); z_i carries the
/// strictly positive z-grading lambda.(u_i - v_i).
struct UniversalFamily {
    RingContext xctx;  // x-ring with the weight order that defines the family
    std::vector<std::pair<Monomial, Monomial>> pairs;  // (lead u_i, standard v_i)
    RingContext zctx;  // z_1..z_r
};

/// Requires in_(order)(<toric>) to be a monomial A-graded ideal.
UniversalFamily universalFamily(const PolyList& toric, const RingContext& xctx);

/// Normal form of the (i,j) S-pair against the family as a marked basis:
/// x^alpha * (z-monomial - z-monomial), or zero.
struct SPairNormalForm {
    bool zero = true;
    Monomial xpart;
    Polynomial zbinomial;  // in the z-ring, lead coefficient +1
};
SPairNormalForm familySPairNormalForm(const UniversalFamily& fam, int i, int j);

/// J_M: the z-binomials harvested from all S-pair normal forms, deduplicated
/// and canonically sorted. Pair processing order does not change the ideal.
PolyList localEquations(const UniversalFamily& fam, bool reversePairOrder = false);

/// Ring endomorphism sending redundant variables to polynomials in the
/// survivors and survivors to themselves; idempotent.
struct SubstitutionMap {
    std::vector<Polynomial> images;  // one per variable

    bool isSurvivor(int v) const;
    std::vector<int> survivors() const;
    Polynomial apply(const Polynomial& f, const MonomialOrder& o) const;
};

SubstitutionMap removeRedundantVariables(const PolyList& gens, const RingContext& ctx);

struct MinimalPresentation {
    std::vector<int> survivors;
    PolyList relations;  // reduced GB of the image ideal
    SubstitutionMap map;
};

MinimalPresentation minimalPresentation(const PolyList& gens, const RingContext& ctx);

/// (J_M : (z_1 ... z_r)^infinity); contains J_M and is monomial-free.
PolyList coherentPatch(const PolyList& jm, const RingContext& zctx);

/// Generating function of the reduction paths from `start` to its normal form,
/// one z-monomial per path (with multiplicity).
Polynomial reductionPaths(const Monomial& start, const UniversalFamily& fam);

/// Products of one monomial per Graver fiber (G), with the toric ideal P_A of
/// the lifted configuration { (exp g, 1) : g in G } in variables y_1..y_t.
struct CoherentEmbedding {
    std::vector<Monomial> products;  // G, ascending grevlex; y_i = products[i-1]
    RingContext yctx;
    PolyList pa;  // minimal generators of P_A
};

CoherentEmbedding coherentEmbedding(const SchemeEnv& env, bool fullFibers = false);

/// (codimension, degree) of the standard-graded ideal, via the K-polynomial
/// of its initial monomial ideal.
std::pair<int, Int> projectiveInvariants(const PolyList& pa, const RingContext& yctx);

/// Substitute y_var = 1, then take a minimal presentation.
MinimalPresentation chart(const PolyList& pa, int var, const RingContext& yctx);

Polynomial substituteVariableOne(const Polynomial& f, int var, const MonomialOrder& o);

Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& o);
Polynomial power(const Polynomial& a, Exp k, const MonomialOrder& o);

}  // namespace thilb
