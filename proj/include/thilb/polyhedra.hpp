#pragma once

#include <set>
#include <vector>

#include "thilb/matrix.hpp"

namespace thilb {

/// Cone given by generators: cone(Z) + affine(H), both matrices of column vectors.
struct ConePair {
    IntegerMatrix generators;  // d x p
    IntegerMatrix lineality;   // d x q (may have 0 columns)
};

/// Dual description: { x : inequalities^T x <= 0, equations^T x = 0 }.
/// Equivalently (cone(Z)+affine(H))^v = cone(inequalities) + affine(equations).
struct DualPair {
    IntegerMatrix inequalities;
    IntegerMatrix equations;
};

/// One Fourier-Motzkin system: inequality rows "row . y <= 0" plus, per row,
/// the set of original ray indices at which the row does not vanish.
struct FMSystem {
    std::vector<std::vector<Int>> rows;
    std::vector<std::set<int>> supports;
};

/// True iff some existing support is a subset of the candidate
/// (the S-pair-style redundancy criterion for double description).
bool isRedundant(const std::vector<std::set<int>>& supports, const std::set<int>& candidate);

/// Eliminate the leading column of every row; `spot` is the original ray index
/// of the variable being eliminated (used for the implicit inequality -t <= 0).
FMSystem fourierMotzkinStep(const FMSystem& sys, int spot);

/// Convert the generator description cone(Z)+affine(H) into the inequality
/// description. Output columns are primitive and duplicate-free.
DualPair polarCone(const IntegerMatrix& z, const IntegerMatrix& h);
DualPair polarCone(const IntegerMatrix& z);

}  // namespace thilb
