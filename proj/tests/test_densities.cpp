#include <doctest.h>

#include <cmath>

#include "flagflow/anosov.hpp"
#include "flagflow/densities.hpp"
#include "flagflow/jordan.hpp"

using namespace flagflow;

namespace {

std::pair<Flag, Flag> coordinate_pair(const FlagType& t, Field f, int d) {
  Flag F = coordinate_flag(t, f, d);
  Flag W = coordinate_flag(t.reversed(), f, d);
  CMat rev = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) rev(d - 1 - i, i) = 1;
  W.frame = rev;
  return {F, W};
}

CMat rot3(double t) {
  CMat g = CMat::Identity(3, 3);
  g(0, 0) = std::cos(t);
  g(0, 1) = -std::sin(t);
  g(1, 0) = std::sin(t);
  g(1, 1) = std::cos(t);
  return g;
}

}  // namespace

TEST_CASE("density evaluation follows the |det|^s rule") {
  Density nu;
  nu.frame = CMat::Identity(3, 3).leftCols(1);
  nu.weight = 1.0;
  nu.value = 2.0;
  CHECK(density_eval(nu, nu.frame) == doctest::Approx(2.0));
  CHECK(density_eval(nu, 2.0 * nu.frame) == doctest::Approx(4.0));
  nu.weight = 0.0;
  CHECK(density_eval(nu, 2.0 * nu.frame) == doctest::Approx(2.0));
  CMat off = CMat::Identity(3, 3).rightCols(1);
  CHECK_THROWS_AS(density_eval(nu, off), NotInDomain);
}

TEST_CASE("coordinate axes pair to one") {
  const RootSystem rs(2, Field::Real);
  const auto [F, W] = coordinate_pair(FlagType{{1, 1}}, Field::Real, 2);
  const FlowPoint p =
      canonical_section(F, W, rs, {1}, constant_weight({1}, 1.0));
  CHECK(pair_flow(p) == doctest::Approx(1.0));
  CHECK(p.mu_plus.components[0].value == doctest::Approx(1.0));
  CHECK(p.mu_minus.components[0].value == doctest::Approx(1.0));
}

TEST_CASE("flow preserves the pairing and composes additively") {
  const RootSystem rs(3, Field::Real);
  const auto [F, W] = coordinate_pair(FlagType{{1, 1, 1}}, Field::Real, 3);
  const FlowPoint p =
      canonical_section(F, W, rs, {1, 2}, constant_weight({1, 2}, 1.0));
  const FlowPoint q = flow(p, 0.0);
  CHECK(q.mu_plus.log_scale == doctest::Approx(p.mu_plus.log_scale));
  const FlowPoint r = flow(flow(p, 0.7), -0.2);
  const FlowPoint r2 = flow(p, 0.5);
  CHECK(r.mu_plus.log_scale == doctest::Approx(r2.mu_plus.log_scale));
  CHECK(pair_flow(r) == doctest::Approx(1.0));
}

TEST_CASE("canonical section is rotation equivariant") {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta{1, 2};
  const WeightVector s = constant_weight(theta, 1.0);
  CMat g(3, 3);
  g << 1, 0.4, -0.2, 0.1, 1.3, 0.3, -0.2, 0.2, 0.8;
  auto [F, W] = coordinate_pair(FlagType{{1, 1, 1}}, Field::Real, 3);
  F = act(g, F);
  W = act(g, W);
  const CMat k = rot3(0.8);
  const FlowPoint lhs = act_flow(k, canonical_section(F, W, rs, theta, s));
  const FlowPoint rhs = canonical_section(act(k, F), act(k, W), rs, theta, s);
  CHECK(lhs.mu_plus.log_scale == doctest::Approx(rhs.mu_plus.log_scale));
  for (std::size_t i = 0; i < lhs.mu_plus.components.size(); ++i) {
    CHECK(density_eval(lhs.mu_plus.components[i],
                       rhs.mu_plus.components[i].frame) ==
          doctest::Approx(rhs.mu_plus.components[i].value));
    CHECK(density_eval(lhs.mu_minus.components[i],
                       rhs.mu_minus.components[i].frame) ==
          doctest::Approx(rhs.mu_minus.components[i].value));
  }
}

TEST_CASE("cocycle of the identity vanishes") {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta{1, 2};
  const Section sigma =
      make_canonical_section(rs, theta, constant_weight(theta, 1.0));
  CMat g(3, 3);
  g << 1, 0.4, -0.2, 0.1, 1.3, 0.3, -0.2, 0.2, 0.8;
  auto [F, W] = coordinate_pair(FlagType{{1, 1, 1}}, Field::Real, 3);
  F = act(g, F);
  W = act(g, W);
  CHECK(cocycle(sigma, F, W, CMat::Identity(3, 3)) == doctest::Approx(0.0));
}

TEST_CASE("cocycle at the fixed flags is the weighted length") {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta{1};
  const WeightVector s = constant_weight(theta, 1.0);
  CMat g = CMat::Zero(3, 3);
  g(0, 0) = 4;
  g(1, 1) = 1;
  g(2, 2) = 0.25;
  const auto [Fp, Fm] =
      attracting_repelling_flags(g, theta_to_dvec(theta, 3), Field::Real);
  const double t = cocycle(make_canonical_section(rs, theta, s), Fp, Fm, g);
  CHECK(t == doctest::Approx(3 * std::log(4.0)));
  const double t2 = cocycle(make_shifted_section(rs, theta, s), Fp, Fm, g);
  CHECK(t2 == doctest::Approx(t));
}

TEST_CASE("multiflow projection at zero translation") {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta{1, 2};
  CMat g(3, 3);
  g << 1, 0.4, -0.2, 0.1, 1.3, 0.3, -0.2, 0.2, 0.8;
  auto [F, W] = coordinate_pair(FlagType{{1, 1, 1}}, Field::Real, 3);
  F = act(g, F);
  W = act(g, W);
  const MultiflowPoint nu = multiflow_lift(F, W, rs, theta);
  for (double v : multiflow_pairings(nu)) CHECK(v == doctest::Approx(1.0));
  WeightVector s;
  s[1] = 0.7;
  s[2] = -1.2;
  const FlowPoint p = multiflow_project(nu, rs, s);
  CHECK(pair_flow(p) == doctest::Approx(1.0));
  const FlowPoint q =
      multiflow_project(multiflow_translate(nu, {0.0, 0.0}), rs, s);
  CHECK(q.mu_plus.log_scale == doctest::Approx(p.mu_plus.log_scale));
}

TEST_CASE("lagrangian pairing on the standard splitting") {
  const int n = 2;
  Mat omega = Mat::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Mat::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  Density mu1;
  mu1.frame = CMat::Identity(2 * n, 2 * n).leftCols(n);
  Density mu2;
  mu2.frame = CMat::Identity(2 * n, 2 * n).rightCols(n);
  CHECK(lagrangian_pair(mu1, mu2, omega) == doctest::Approx(1.0));
  Density bad;
  bad.frame = CMat::Zero(2 * n, n);
  bad.frame(0, 0) = 1;
  bad.frame(2, 1) = 1;  // span(e1, e3): omega(e1,e3) = 1
  CHECK_THROWS_AS(lagrangian_pair(bad, mu2, omega), NotLagrangian);
}

TEST_CASE("cocycle stays bounded against the Jacobian along pulled-back data") {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta{1, 2};
  const WeightVector s = constant_weight(theta, 1.0);
  const Section sigma = make_canonical_section(rs, theta, s);
  CMat h(3, 3);
  h << 1, 0.4, -0.2, 0.1, 1.3, 0.3, -0.2, 0.2, 0.8;
  auto [F0, W0] = coordinate_pair(FlagType{{1, 1, 1}}, Field::Real, 3);
  F0 = act(h, F0);
  W0 = act(h, W0);
  // mild Schottky-family element so that long pulled-back data stays
  // numerically resolvable in double precision
  Mat g0(2, 2), M(2, 2);
  M << 1, 0.4, 0.25, 1.1;  // det = 1
  Mat D(2, 2);
  D << 1.3, 0, 0, 1.0 / 1.3;
  g0 = M * D * M.inverse();
  const CMat w = sym_power_embed(g0, 2).cast<std::complex<double>>();
  std::vector<double> c;
  CMat gk = CMat::Identity(3, 3);
  for (int k = 1; k <= 8; ++k) {
    gk = gk * w;
    const CMat gkinv = gk.inverse();
    const double val = cocycle(sigma, act(gkinv, F0), act(gkinv, W0), gk) +
                       jacobian_class_fn(rs, theta, gk);
    c.push_back(val);
    CHECK(std::abs(val) < 100.0);
  }
  CHECK(std::abs(c[7] - c[6]) <= std::abs(c[2] - c[1]) + 1e-9);
}
