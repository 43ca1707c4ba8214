#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "flagflow/errors.hpp"

namespace flagflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

enum class Field { Real, Complex };

inline int field_dim(Field f) { return f == Field::Real ? 1 : 2; }
inline const char* field_name(Field f) { return f == Field::Real ? "R" : "C"; }

// Restricted root system of sl(d,k) on the diagonal Cartan subspace.
struct RootSystem {
  int d;
  Field field;

  RootSystem(int d_, Field f);

  // Coefficient c in B(X,Y) = c * Re tr(XY): 2d over R, 4d for C viewed as a
  // real Lie algebra.
  double killing_scale() const { return 2.0 * d * field_dim(field); }
  int root_space_dim() const { return field_dim(field); }
  int n_simple_roots() const { return d - 1; }
};

// Subset of {1,...,d-1}, kept sorted and duplicate-free.
using ThetaSet = std::vector<int>;

// Weight parameter: simple-root index -> coefficient.
using WeightVector = std::map<int, double>;

// Validates the zero-sum constraint and returns the vector unchanged.
Vec make_cartan(const Vec& entries, double tol = 1e-12);

ThetaSet make_theta(std::vector<int> idx, int d);
ThetaSet full_theta(int d);
ThetaSet opposition_theta(const ThetaSet& theta, int d);

// Block partition of {0,...,d-1} induced by theta; returns block index per
// coordinate.
std::vector<int> theta_blocks(const ThetaSet& theta, int d);
// Dimension vector (d_1,...,d_r) of the theta-partition.
std::vector<int> theta_to_dvec(const ThetaSet& theta, int d);
ThetaSet dvec_to_theta(const std::vector<int>& dvec);

double simple_root(int j, const Vec& X);
double fundamental_weight(int j, const Vec& X);

double rho_theta(const RootSystem& rs, const ThetaSet& theta, const Vec& X);

// Positive integer m with 2*rho_{{alpha_j}} = m * w_{alpha_j}; throws
// NonIntegerRatio if the computed ratio is not integral.
int m_alpha(const RootSystem& rs, int j);

// Killing form via c * Re tr(XY) on traceless matrices.
double killing_form(const RootSystem& rs, const CMat& X, const CMat& Y);
// Brute-force tr(ad_X ad_Y) over a basis of sl(d,k) as a real Lie algebra.
double killing_form_ad_oracle(const RootSystem& rs, const CMat& X, const CMat& Y);

// Orthogonal projection onto the intersection of ker(alpha), alpha not in
// theta: averages entries within each theta-block.
Vec project_to_a_theta(const Vec& X, const ThetaSet& theta, int d);

// Realizes the opposition involution on the Cartan subspace.
Vec opposition(const Vec& X);

// Sum over alpha in theta of s_alpha * m_alpha * w_alpha(X).
double w_s_theta(const RootSystem& rs, const ThetaSet& theta,
                 const WeightVector& s, const Vec& X);

WeightVector constant_weight(const ThetaSet& theta, double value);

}  // namespace flagflow
