#pragma once

#include <functional>
#include <vector>

#include "flagflow/flags.hpp"
#include "flagflow/rootdata.hpp"

namespace flagflow {

// s-density on a subspace: reference frame plus its value; the transformation
// rule value(f C) = value(f) |det C|^weight determines it everywhere.
struct Density {
  CMat frame;  // d x m, orthonormal columns
  double weight = 1.0;
  double value = 1.0;
  Field field = Field::Real;
};

// Value of nu on another frame of the same subspace.
double density_eval(const Density& nu, const CMat& frame, double tol = 1e-8);
// Push-forward (g.nu)(e) = nu(g^-1 e), represented on an orthonormal frame of
// g * span(nu).
Density act_density(const CMat& g, const Density& nu);
Density pow_density(const Density& nu, double p);

// One density per graded component, with a shared log-scale factor moved by
// the flow.
struct Multidensity {
  std::vector<Density> components;
  double log_scale = 0.0;
};

// Point of the flow space over a transverse pair of Theta-flags: for each
// alpha in theta (boundary index k) the plus component lives on V_k(x+) and
// the minus component on W_{d-k}(x-), both of weight s_alpha * m_alpha.
struct FlowPoint {
  ThetaSet theta;
  Field field = Field::Real;
  Multidensity mu_plus;
  Multidensity mu_minus;
};

// Pairing of matching component lists: product over factors of
// v+ v- / |det[f+ f-]|^weight, times the scale factors.
double pair_flow(const FlowPoint& p, double tol = 1e-8);
double pair_multidensity(const Multidensity& plus, const Multidensity& minus,
                         Field field, double tol = 1e-8);

FlowPoint flow(const FlowPoint& p, double t);
FlowPoint act_flow(const CMat& g, const FlowPoint& p);

// Euclidean-volume section: unit values on orthonormal frames, symmetrically
// rescaled so the pairing is exactly 1. SO(d)-equivariant.
FlowPoint canonical_section(const Flag& Fp, const Flag& Fm,
                            const RootSystem& rs, const ThetaSet& theta,
                            const WeightVector& s);

using Section = std::function<FlowPoint(const Flag&, const Flag&)>;

Section make_canonical_section(const RootSystem& rs, const ThetaSet& theta,
                               const WeightVector& s);
// A second smooth equivariant-flavoured section used to test that periods do
// not depend on the section: shifts the canonical one by a frame-independent
// function of the base point.
Section make_shifted_section(const RootSystem& rs, const ThetaSet& theta,
                            const WeightVector& s);

// The unique t with g.sigma(x) = phi^t(sigma(g.x)); consistency between the
// plus- and minus-side computations is asserted.
double cocycle(const Section& sigma, const Flag& Fp, const Flag& Fm,
               const CMat& g, double consistency_tol = 1e-6);

// Multiflow point: per alpha an independently scaled rank-one pair of unit
// weight (stored with the exponent m_alpha).
struct MultiflowPoint {
  ThetaSet theta;
  Field field = Field::Real;
  std::vector<Density> plus;       // weight m_alpha
  std::vector<Density> minus;      // weight m_alpha
  std::vector<double> log_scale_plus;
  std::vector<double> log_scale_minus;
};

MultiflowPoint multiflow_lift(const Flag& Fp, const Flag& Fm,
                              const RootSystem& rs, const ThetaSet& theta);
// Per-factor pairings, each expected to be 1 for points of the multiflow
// space.
std::vector<double> multiflow_pairings(const MultiflowPoint& p,
                                       double tol = 1e-8);
MultiflowPoint multiflow_translate(const MultiflowPoint& p,
                                   const std::vector<double>& t);
// Per-factor powers nu_alpha^{s_alpha} assembled into a flow point.
FlowPoint multiflow_project(const MultiflowPoint& p, const RootSystem& rs,
                            const WeightVector& s);

// Pairing of two weight-one densities on transverse Lagrangians of (R^{2n},
// omega): v1 v2 / |vol_omega(e1, e2)|.
double lagrangian_pair(const Density& mu1, const Density& mu2,
                       const Mat& omega, double tol = 1e-8);

}  // namespace flagflow
