#pragma once

#include <utility>
#include <vector>

#include "flagflow/rootdata.hpp"

namespace flagflow {

struct FlagType {
  std::vector<int> dvec;

  int d() const;
  int rank() const { return (int)dvec.size(); }
  // Cumulative dimensions d_1, d_1+d_2, ..., d (length r).
  std::vector<int> cumdims() const;
  FlagType reversed() const;
  bool operator==(const FlagType& o) const { return dvec == o.dvec; }
};

// Nested subspaces V_1 c ... c V_r = k^d stored through a single adapted
// unitary frame: the first cumdims[i] columns span V_{i+1}.
struct Flag {
  FlagType type;
  Field field;
  CMat frame;  // d x d, orthonormal columns

  int d() const { return (int)frame.rows(); }
  // Orthonormal frame of V_i (1-based), d x cumdims[i-1].
  CMat basis(int i) const;
};

struct Grading {
  Field field;
  std::vector<CMat> subspaces;  // orthonormal column frames E_1,...,E_r

  int d() const { return (int)subspaces.front().rows(); }
  std::vector<int> dims() const;
};

Flag coordinate_flag(const FlagType& type, Field field, int d);
// Builds the flag with V_i spanned by the concatenation of the first i block
// span matrices (need not be orthonormal).
Flag flag_from_blocks(const FlagType& type, Field field,
                      const std::vector<CMat>& block_spans);
Flag act(const CMat& g, const Flag& F);

// Orthonormal frame of the column span (rank decided against tol * largest
// singular value).
CMat orthonormalize(const CMat& A, double tol = 1e-10);
// Principal-angle distance between equal-dimension subspaces.
double subspace_distance(const CMat& A, const CMat& B);
// Intersection of the spans of A and B as an orthonormal frame.
CMat subspace_intersection(const CMat& A, const CMat& B, double tol = 1e-8);

bool is_transverse(const Flag& Fp, const Flag& Fm, double tol = 1e-8);
// Smallest stacked singular value over all complementary levels.
double transversality_margin(const Flag& Fp, const Flag& Fm);

Grading grading_from_pair(const Flag& Fp, const Flag& Fm, double tol = 1e-8);
std::pair<Flag, Flag> pair_from_grading(const Grading& E);

CMat project_flag(const Flag& F, int j);

// Real-linear basis of the nilradical of the stabilizer of F: strictly
// block-upper-triangular matrices in the adapted frame (with imaginary
// multiples over C). Deterministic order.
std::vector<CMat> nilradical_basis(const Flag& F);

// |det| of X -> g X g^-1 restricted to the nilradical of F; throws
// NotStabilizing when the conjugated basis leaves the nilradical.
double adjoint_det_on_nilradical(const CMat& g, const Flag& F,
                                 double stab_tol = 1e-6);
// Spectral radius of the same restriction.
double adjoint_spectral_radius_on_nilradical(const CMat& g, const Flag& F,
                                             double stab_tol = 1e-6);

}  // namespace flagflow
