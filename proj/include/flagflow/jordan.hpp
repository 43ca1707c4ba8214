#pragma once

#include <utility>
#include <vector>

#include "flagflow/flags.hpp"
#include "flagflow/rootdata.hpp"

namespace flagflow {

// Checks |det g - 1| < tol and returns g unchanged.
CMat make_group_element(const CMat& g, double tol = 1e-9);

struct JordanData {
  Vec lambda;                        // non-increasing log moduli
  std::vector<double> eigen_moduli;  // with multiplicity, non-increasing
  CMat hyperbolic;
  CMat elliptic;
  CMat unipotent;
};

// Non-increasing vector of log moduli of eigenvalues; sums to 0 for
// determinant-one input.
Vec jordan_projection(const CMat& g);

JordanData jordan_decomposition(const CMat& g, double cluster_tol = 1e-8);

// alpha_j(lambda(g)), always >= 0.
double proximality_fn(int j, const CMat& g);

// 2 rho_Theta(p_Theta(lambda(g))).
double jacobian_class_fn(const RootSystem& rs, const ThetaSet& theta,
                         const CMat& g);

struct ProximalityReport {
  bool proximal;
  std::vector<double> margins;  // per alpha in theta order
  double margin_min;
};

ProximalityReport is_theta_proximal(const CMat& g, const ThetaSet& theta,
                                    double tol = 1e-6);

// Attracting flag of type dvec (generalized eigenspaces by decreasing
// modulus) and repelling flag of the reversed type (increasing modulus).
// Throws NotProximal when a required modulus gap is below tol.
std::pair<Flag, Flag> attracting_repelling_flags(const CMat& g,
                                                 const std::vector<int>& dvec,
                                                 Field field,
                                                 double tol = 1e-6);

}  // namespace flagflow
