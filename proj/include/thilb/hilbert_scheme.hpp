#pragma once

#include <optional>
#include <set>

#include "thilb/polyhedra.hpp"
#include "thilb/toric.hpp"

namespace thilb {

/// Monomial A-graded ideal in canonical form: minimal generators sorted
/// ascending grevlex, so equality and set membership are well defined.
struct MonomialIdeal {
    std::vector<Monomial> gens;

    bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
    bool operator!=(const MonomialIdeal& o) const { return gens != o.gens; }
    bool operator<(const MonomialIdeal& o) const { return gens < o.gens; }
};

MonomialIdeal canonicalIdeal(std::vector<Monomial> gens);

/// Everything the scheme algorithms need for one grading matrix.
struct SchemeEnv {
    RingContext ctx;
    PolyList toric;           // minimal generators of I_A
    GraverBasis graver;
    GraverFiberTable fibers;  // reduced fibers keyed by Graver degree
    KPolynomial trueK;        // Hilbert numerator of R/I_A

    SchemeEnv(RingContext c, PolyList t, GraverBasis g, GraverFiberTable f, KPolynomial k)
        : ctx(std::move(c)), toric(std::move(t)), graver(std::move(g)), fibers(std::move(f)), trueK(std::move(k)) {}

    const std::vector<Monomial>& fullFiber(const MultiDegree& b) const;

private:
    mutable std::map<MultiDegree, std::vector<Monomial>> fiberCache_;
};

SchemeEnv makeSchemeEnv(IntegerMatrix a, MonomialOrder order = {});

bool isAGraded(const MonomialIdeal& m, const SchemeEnv& env);

/// in_(w,tiebreak)(<gens>) as a canonical monomial ideal.
MonomialIdeal initialMonomialIdeal(const PolyList& gens, const MonomialOrder& o);

/// Backtracking over the sorted Graver fibers: pick one standard monomial per
/// fiber, adjoin the rest, keep candidates with the right Hilbert numerator.
/// Discovery order; duplicates removed keeping the first occurrence.
std::vector<MonomialIdeal> enumerateMonomialIdeals(const SchemeEnv& env);

/// The unique monomial of degree b outside M.
Monomial stdMonomial(const MonomialIdeal& m, const MultiDegree& b, const SchemeEnv& env);

std::vector<MonomialIdeal> flips(const MonomialIdeal& m, const SchemeEnv& env);

struct FlipGraph {
    std::vector<MonomialIdeal> vertices;      // BFS discovery order
    std::set<std::pair<int, int>> edges;      // vertex index pairs, first < second
};

FlipGraph flipGraph(const MonomialIdeal& start, const SchemeEnv& env);

/// n x r matrix whose column i is (generator exponent) - (standard exponent).
IntegerMatrix inequalitiesMatrix(const MonomialIdeal& m, const SchemeEnv& env);

struct CoherenceCertificate {
    bool coherent = false;
    std::vector<Int> witness;  // primitive; in_w(I_A) = M (verified)
};

CoherenceCertificate decideCoherence(const MonomialIdeal& m, const SchemeEnv& env);

/// Squarefree parts of the generators, minimalized (the Stanley-Reisner
/// ideal of the triangulation supporting M).
MonomialIdeal radicalMonomial(const MonomialIdeal& m);
std::set<MonomialIdeal> distinctTriangulations(const std::vector<MonomialIdeal>& ideals);

/// Extreme rays (plus lineality) of { w : w.(u_i - v_i) >= 0 } for the marked
/// binomials of a reduced Groebner basis of I_A.
ConePair groebnerConeRays(const GroebnerBasis& g);

}  // namespace thilb
