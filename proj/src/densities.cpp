#include "flagflow/densities.hpp"

#include <cmath>
#include <complex>

namespace flagflow {

namespace {

double log_abs_det(const CMat& M) {
  Eigen::PartialPivLU<CMat> lu(M);
  const std::complex<double> det = lu.determinant();
  const double a = std::abs(det);
  if (a <= 0 || !std::isfinite(a)) throw NotTransverse("vanishing determinant");
  return std::log(a);
}

}  // namespace

double density_eval(const Density& nu, const CMat& frame, double tol) {
  if (frame.rows() != nu.frame.rows() || frame.cols() != nu.frame.cols())
    throw Error("density_eval frame dimension mismatch");
  const CMat C = nu.frame.adjoint() * frame;
  const double res = (frame - nu.frame * C).norm();
  if (res > tol * frame.norm())
    throw NotInDomain("frame does not span the density's subspace");
  return nu.value * std::exp(nu.weight * log_abs_det(C));
}

Density act_density(const CMat& g, const Density& nu) {
  Density out = nu;
  out.frame = orthonormalize(g * nu.frame);
  const CMat pre = g.inverse() * out.frame;
  const CMat C = nu.frame.adjoint() * pre;
  out.value = nu.value * std::exp(nu.weight * log_abs_det(C));
  return out;
}

Density pow_density(const Density& nu, double p) {
  Density out = nu;
  out.weight = nu.weight * p;
  out.value = std::pow(nu.value, p);
  return out;
}

double pair_multidensity(const Multidensity& plus, const Multidensity& minus,
                         Field field, double tol) {
  if (plus.components.size() != minus.components.size())
    throw Error("pairing requires matching component lists");
  double log_total = plus.log_scale + minus.log_scale;
  for (std::size_t i = 0; i < plus.components.size(); ++i) {
    const Density& p = plus.components[i];
    const Density& m = minus.components[i];
    if (std::abs(p.weight - m.weight) > 1e-12)
      throw Error("pairing requires equal weights per factor");
    const int d = (int)p.frame.rows();
    if ((int)(p.frame.cols() + m.frame.cols()) != d)
      throw Error("pairing factors must have complementary dimensions");
    CMat S(d, d);
    S << p.frame, m.frame;
    Eigen::JacobiSVD<CMat> svd(S);
    if (svd.singularValues()(d - 1) < tol)
      throw NotTransverse("pairing factors are not transverse");
    log_total += std::log(p.value) + std::log(m.value) -
                 p.weight * log_abs_det(S);
  }
  (void)field;
  return std::exp(log_total);
}

double pair_flow(const FlowPoint& p, double tol) {
  return pair_multidensity(p.mu_plus, p.mu_minus, p.field, tol);
}

FlowPoint flow(const FlowPoint& p, double t) {
  FlowPoint out = p;
  out.mu_plus.log_scale -= t;
  out.mu_minus.log_scale += t;
  return out;
}

FlowPoint act_flow(const CMat& g, const FlowPoint& p) {
  FlowPoint out = p;
  for (auto& c : out.mu_plus.components) c = act_density(g, c);
  for (auto& c : out.mu_minus.components) c = act_density(g, c);
  return out;
}

FlowPoint canonical_section(const Flag& Fp, const Flag& Fm,
                            const RootSystem& rs, const ThetaSet& theta,
                            const WeightVector& s) {
  const int d = rs.d;
  FlowPoint p;
  p.theta = theta;
  p.field = rs.field;
  double log_pair = 0.0;
  for (int k : theta) {
    const auto it = s.find(k);
    const double sk = it == s.end() ? 0.0 : it->second;
    const double u = sk * m_alpha(rs, k);
    Density plus{Fp.frame.leftCols(k), u, 1.0, rs.field};
    Density minus{Fm.frame.leftCols(d - k), u, 1.0, rs.field};
    CMat S(d, d);
    S << plus.frame, minus.frame;
    log_pair += -u * log_abs_det(S);
    p.mu_plus.components.push_back(plus);
    p.mu_minus.components.push_back(minus);
  }
  p.mu_plus.log_scale = -0.5 * log_pair;
  p.mu_minus.log_scale = -0.5 * log_pair;
  return p;
}

Section make_canonical_section(const RootSystem& rs, const ThetaSet& theta,
                               const WeightVector& s) {
  return [rs, theta, s](const Flag& Fp, const Flag& Fm) {
    return canonical_section(Fp, Fm, rs, theta, s);
  };
}

Section make_shifted_section(const RootSystem& rs, const ThetaSet& theta,
                             const WeightVector& s) {
  const int d = rs.d;
  return [rs, theta, s, d](const Flag& Fp, const Flag& Fm) {
    double h = 0.0;
    for (int k : theta) {
      const CMat A = Fp.frame.leftCols(k);
      const CMat B = Fm.frame.leftCols(d - k);
      const CMat PA = A * A.adjoint();
      const CMat PB = B * B.adjoint();
      h += (PA * PB).trace().real();
    }
    return flow(canonical_section(Fp, Fm, rs, theta, s), std::sin(h));
  };
}

double cocycle(const Section& sigma, const Flag& Fp, const Flag& Fm,
               const CMat& g, double consistency_tol) {
  const FlowPoint p1 = act_flow(g, sigma(Fp, Fm));
  const FlowPoint p2 = sigma(act(g, Fp), act(g, Fm));

  auto side_total = [&](const Multidensity& a, const Multidensity& ref) {
    double log_a = a.log_scale;
    double log_ref = ref.log_scale;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
      log_a += std::log(density_eval(a.components[i], ref.components[i].frame));
      log_ref += std::log(ref.components[i].value);
    }
    return log_a - log_ref;
  };
  const double t_plus = -side_total(p1.mu_plus, p2.mu_plus);
  const double t_minus = side_total(p1.mu_minus, p2.mu_minus);
  if (std::abs(t_plus - t_minus) >
      consistency_tol * (1.0 + std::abs(t_plus)))
    throw Error("cocycle sides disagree: " + std::to_string(t_plus) + " vs " +
                std::to_string(t_minus));
  return 0.5 * (t_plus + t_minus);
}

MultiflowPoint multiflow_lift(const Flag& Fp, const Flag& Fm,
                              const RootSystem& rs, const ThetaSet& theta) {
  const int d = rs.d;
  MultiflowPoint p;
  p.theta = theta;
  p.field = rs.field;
  for (int k : theta) {
    const double m = m_alpha(rs, k);
    Density plus{Fp.frame.leftCols(k), m, 1.0, rs.field};
    Density minus{Fm.frame.leftCols(d - k), m, 1.0, rs.field};
    CMat S(d, d);
    S << plus.frame, minus.frame;
    const double log_pair = -m * log_abs_det(S);
    p.plus.push_back(plus);
    p.minus.push_back(minus);
    p.log_scale_plus.push_back(-0.5 * log_pair);
    p.log_scale_minus.push_back(-0.5 * log_pair);
  }
  return p;
}

std::vector<double> multiflow_pairings(const MultiflowPoint& p, double tol) {
  std::vector<double> out;
  for (std::size_t i = 0; i < p.plus.size(); ++i) {
    Multidensity a{{p.plus[i]}, p.log_scale_plus[i]};
    Multidensity b{{p.minus[i]}, p.log_scale_minus[i]};
    out.push_back(pair_multidensity(a, b, p.field, tol));
  }
  return out;
}

MultiflowPoint multiflow_translate(const MultiflowPoint& p,
                                   const std::vector<double>& t) {
  if (t.size() != p.plus.size())
    throw Error("multiflow translation dimension mismatch");
  MultiflowPoint out = p;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.log_scale_plus[i] -= t[i];
    out.log_scale_minus[i] += t[i];
  }
  return out;
}

FlowPoint multiflow_project(const MultiflowPoint& p, const RootSystem& rs,
                            const WeightVector& s) {
  FlowPoint out;
  out.theta = p.theta;
  out.field = p.field;
  double lsp = 0.0, lsm = 0.0;
  for (std::size_t i = 0; i < p.plus.size(); ++i) {
    const int k = p.theta[i];
    const auto it = s.find(k);
    const double sk = it == s.end() ? 0.0 : it->second;
    out.mu_plus.components.push_back(pow_density(p.plus[i], sk));
    out.mu_minus.components.push_back(pow_density(p.minus[i], sk));
    lsp += sk * p.log_scale_plus[i];
    lsm += sk * p.log_scale_minus[i];
  }
  out.mu_plus.log_scale = lsp;
  out.mu_minus.log_scale = lsm;
  return out;
}

double lagrangian_pair(const Density& mu1, const Density& mu2,
                       const Mat& omega, double tol) {
  if (std::abs(mu1.weight - 1.0) > 1e-12 || std::abs(mu2.weight - 1.0) > 1e-12)
    throw Error("lagrangian_pair requires weight-one densities");
  const Mat f1 = mu1.frame.real();
  const Mat f2 = mu2.frame.real();
  if (mu1.frame.imag().norm() > 1e-12 || mu2.frame.imag().norm() > 1e-12)
    throw Error("lagrangian_pair is implemented over R");
  const int n2 = (int)omega.rows();
  if ((int)(f1.cols() + f2.cols()) != n2)
    throw NotTransverse("Lagrangians must have complementary dimension");
  if ((f1.transpose() * omega * f1).norm() > tol ||
      (f2.transpose() * omega * f2).norm() > tol)
    throw NotLagrangian("a factor is not isotropic for the symplectic form");
  Mat S(n2, n2);
  S << f1, f2;
  const double det = std::abs(S.determinant());
  if (det < tol) throw NotTransverse("Lagrangian pair is not transverse");
  const double pf = std::sqrt(std::abs(omega.determinant()));
  return mu1.value * mu2.value / (det * pf);
}

}  // namespace flagflow
