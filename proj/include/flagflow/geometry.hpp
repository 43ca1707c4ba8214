#pragma once

#include <utility>
#include <vector>

#include "flagflow/densities.hpp"
#include "flagflow/flags.hpp"
#include "flagflow/rootdata.hpp"

namespace flagflow {

// Tangent model of the transverse flag space at a transverse pair: real-linear
// basis of n^- followed by n^+, both conjugated into the adapted basis of the
// pair's grading.
struct TangentFrame {
  Field field = Field::Real;
  std::vector<int> dvec;
  CMat Q;     // adapted basis (grading frames concatenated)
  CMat Qinv;
  std::vector<CMat> basis;  // size 2n
  int n = 0;                // basis.size() / 2
};

TangentFrame tangent_frame(const Flag& Fp, const Flag& Fm,
                           const RootSystem& rs);

// Gram matrix of the Killing form on n^- + n^+; signature (n, n).
Mat killing_metric_matrix(const TangentFrame& tf, const RootSystem& rs);

// Signature (positives, negatives) of a symmetric matrix.
std::pair<int, int> signature(const Mat& G, double tol = 1e-8);

// Diagonal (in the adapted basis) of the Killing dual X_s of the period
// differential sum_alpha s_alpha m_alpha w_alpha.
Vec period_dual_diagonal(const RootSystem& rs, const ThetaSet& theta,
                         const WeightVector& s);

// Entries -B(X_s, [X_i, X_j]) over the tangent frame.
Mat omega_ell_matrix(const TangentFrame& tf, const RootSystem& rs,
                     const ThetaSet& theta, const WeightVector& s);

int numerical_rank(const Mat& A, double tol = 1e-8);

// True iff omega^ell is non-degenerate; evaluates both the eigenvalue test on
// X_s (pairwise distinct block values) and the numerical rank, and throws
// RankDisagreement if they differ.
bool is_regular(const TangentFrame& tf, const RootSystem& rs,
                const ThetaSet& theta, const WeightVector& s);

// Combinatorial regularity predicate alone (no linear algebra): the block
// values of X_s are pairwise distinct. For weight vectors without sign
// cancellation this coincides with all s_alpha != 0.
bool is_regular_combinatorial(const RootSystem& rs, const ThetaSet& theta,
                              const WeightVector& s, double tol = 1e-10);

// Per-alpha verdicts alpha(X_s) != 0; coincides with s_alpha != 0.
std::vector<std::pair<int, bool>> contact_test(const RootSystem& rs,
                                               const ThetaSet& theta,
                                               const WeightVector& s,
                                               double tol = 1e-12);

}  // namespace flagflow
