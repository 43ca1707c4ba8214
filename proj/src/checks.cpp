#include "flagflow/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "flagflow/anosov.hpp"
#include "flagflow/densities.hpp"
#include "flagflow/geometry.hpp"
#include "flagflow/jordan.hpp"
#include "flagflow/rootdata.hpp"
#include "flagflow/zeta.hpp"

namespace flagflow {

namespace {

using Rng = std::mt19937_64;
using cd = std::complex<double>;

double randu(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}
double randn(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Vec rand_cartan(int d, Rng& rng) {
  Vec X(d);
  for (int i = 0; i < d; ++i) X(i) = randn(rng);
  X.array() -= X.mean();
  return X;
}

CMat rand_traceless(const RootSystem& rs, Rng& rng) {
  const int d = rs.d;
  CMat X(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      X(i, j) = rs.field == Field::Real
                    ? cd(randn(rng), 0.0)
                    : cd(randn(rng), randn(rng));
  X -= (X.trace() / (double)d) * CMat::Identity(d, d);
  return X;
}

Mat rand_orthogonal(int d, Rng& rng) {
  Mat A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = randn(rng);
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  return Q;
}

// Random real determinant-one matrix with moderate condition number.
CMat rand_sl(int d, Rng& rng) {
  const Mat U = rand_orthogonal(d, rng);
  const Mat V = rand_orthogonal(d, rng);
  Vec sv(d);
  for (int i = 0; i < d; ++i) sv(i) = 0.5 + 1.5 * randu(rng);
  Mat M = U * Mat(sv.asDiagonal()) * V;
  double det = M.determinant();
  if (det < 0) {
    M.row(0) *= -1.0;
    det = -det;
  }
  M /= std::pow(det, 1.0 / d);
  return M.cast<cd>();
}

// Conjugate of a generic diagonal with well separated moduli.
CMat rand_proximal(int d, Rng& rng) {
  Vec logs(d);
  double cur = 0.0;
  for (int i = 0; i < d; ++i) {
    logs(i) = cur;
    cur -= 0.4 + 1.2 * randu(rng);
  }
  logs.array() -= logs.mean();
  Mat D = logs.array().exp().matrix().asDiagonal();
  const Mat U = rand_orthogonal(d, rng);
  const Mat V = rand_orthogonal(d, rng);
  Vec sv(d);
  for (int i = 0; i < d; ++i) sv(i) = 0.5 + 1.5 * randu(rng);
  const Mat H = U * Mat(sv.asDiagonal()) * V;
  const Mat G = H * D * H.inverse();
  return G.cast<cd>();
}

std::pair<Flag, Flag> rand_transverse_pair(const FlagType& type, Field field,
                                           Rng& rng) {
  const int d = type.d();
  const CMat g = rand_sl(d, rng);
  Flag Fp = act(g, coordinate_flag(type, field, d));
  Flag Fm = coordinate_flag(type.reversed(), field, d);
  CMat rev = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i) rev(d - 1 - i, i) = 1;
  Fm.frame = rev;
  Fm = act(g, Fm);
  return {Fp, Fm};
}

struct Collector {
  std::vector<CheckResult>& out;

  void add(const std::string& id, double max_error, double tol,
           const std::string& detail, bool forced_fail = false) {
    CheckResult r;
    r.id = id;
    r.max_error = max_error;
    r.tolerance = tol;
    r.pass = !forced_fail && max_error < tol;
    r.detail = detail;
    out.push_back(r);
  }
  void add_bool(const std::string& id, bool pass, const std::string& detail) {
    CheckResult r;
    r.id = id;
    r.pass = pass;
    r.max_error = pass ? 0.0 : 1.0;
    r.tolerance = 1.0;
    r.detail = detail;
    out.push_back(r);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// ---------------------------------------------------------------- rootdata

void suite_rootdata(Collector& c, Rng& rng) {
  {
    double err = 0.0;
    for (int d = 2; d <= 6; ++d)
      for (Field f : {Field::Real, Field::Complex}) {
        const RootSystem rs(d, f);
        for (int j = 1; j <= d - 1; ++j) {
          const int m = m_alpha(rs, j);
          const int expected = d * field_dim(f);
          if (m != expected)
            throw NonIntegerRatio("unexpected m_alpha value");
          for (int t = 0; t < 100; ++t) {
            const Vec X = rand_cartan(d, rng);
            err = std::max(err,
                           std::abs(2.0 * rho_theta(rs, {j}, X) -
                                    m * fundamental_weight(j, X)));
          }
        }
      }
    c.add("rootdata.weight-rho-identity", err, 1e-10,
          "d=2..6 both fields, 100 samples per simple root");
  }
  {
    double err = 0.0;
    for (int d = 2; d <= 4; ++d)
      for (Field f : {Field::Real, Field::Complex}) {
        const RootSystem rs(d, f);
        for (int t = 0; t < 50; ++t) {
          const CMat X = rand_traceless(rs, rng);
          const CMat Y = rand_traceless(rs, rng);
          const double lib = killing_form(rs, X, Y);
          const double ora = killing_form_ad_oracle(rs, X, Y);
          err = std::max(err, std::abs(lib - ora) /
                                  std::max(1.0, std::abs(ora)));
        }
      }
    c.add("rootdata.killing-ad-oracle", err, 1e-9,
          "trace form vs brute-force ad composition, d=2..4 both fields");
  }
  {
    double err = 0.0;
    for (int d = 2; d <= 6; ++d)
      for (int t = 0; t < 20; ++t) {
        const Vec X = rand_cartan(d, rng);
        for (int j = 1; j <= d - 1; ++j)
          err = std::max(err, std::abs(simple_root(j, opposition(X)) -
                                       simple_root(d - j, X)));
      }
    c.add("rootdata.opposition-involution", err, 1e-12,
          "simple roots under reverse-negate");
  }
  {
    double err = 0.0;
    for (int d = 3; d <= 6; ++d)
      for (int t = 0; t < 20; ++t) {
        const Vec X = rand_cartan(d, rng);
        ThetaSet theta;
        for (int j = 1; j <= d - 1; ++j)
          if (randu(rng) < 0.5) theta.push_back(j);
        if (theta.empty()) theta.push_back(1);
        const RootSystem rs(d, Field::Real);
        const Vec P = project_to_a_theta(X, theta, d);
        err = std::max(err, (project_to_a_theta(P, theta, d) - P).norm());
        for (int j : theta)
          err = std::max(err, std::abs(fundamental_weight(j, P) -
                                       fundamental_weight(j, X)));
        (void)rs;
      }
    c.add("rootdata.theta-projection", err, 1e-12,
          "idempotence and weight preservation of the block averaging");
  }
}

// ------------------------------------------------------------------ jordan

void suite_jordan(Collector& c, Rng& rng) {
  {
    double err = 0.0;
    for (int d : {3, 4}) {
      const RootSystem rs(d, Field::Real);
      const ThetaSet theta = full_theta(d);
      const std::vector<int> dvec(d, 1);
      for (int t = 0; t < 50; ++t) {
        const CMat g = rand_proximal(d, rng);
        const auto [Fp, Fm] = attracting_repelling_flags(g, dvec, Field::Real);
        const double J = jacobian_class_fn(rs, theta, g);
        const double det = adjoint_det_on_nilradical(g, Fp);
        err = std::max(err, std::abs(std::exp(J) / det - 1.0));
        (void)Fm;
      }
    }
    c.add("jordan.jacobian-determinant", err, 1e-7,
          "exp of the Jacobian class function vs |det Ad| on the nilradical, "
          "100 proximal elements in SL(3,R)/SL(4,R)");
  }
  {
    double err = 0.0;
    for (int d : {3, 4}) {
      for (int t = 0; t < 50; ++t) {
        const CMat g = rand_proximal(d, rng);
        const CMat ginv = g.inverse();
        for (int j = 1; j <= d - 1; ++j) {
          const auto [Fp, Fm] =
              attracting_repelling_flags(g, {j, d - j}, Field::Real);
          const double rho =
              adjoint_spectral_radius_on_nilradical(ginv, Fp);
          err = std::max(err,
                         std::abs(proximality_fn(j, g) + std::log(rho)));
          (void)Fm;
        }
      }
    }
    c.add("jordan.proximality-spectral-radius", err, 1e-7,
          "alpha(lambda(g)) vs -log spectral radius of Ad(g^-1) on the "
          "attracting nilradical");
  }
  {
    double err = 0.0;
    for (int d : {2, 3, 4}) {
      for (int t = 0; t < 20; ++t) {
        const CMat g = rand_proximal(d, rng);
        const CMat h = rand_sl(d, rng);
        err = std::max(
            err, (jordan_projection(h * g * h.inverse()) - jordan_projection(g))
                     .cwiseAbs()
                     .maxCoeff());
        err = std::max(err, (jordan_projection(g.inverse()) -
                             opposition(jordan_projection(g)))
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
    c.add("jordan.projection-conjugation-invariance", err, 1e-8,
          "lambda under conjugation and inversion");
  }
  {
    double err = 0.0;
    for (int d : {2, 3, 4})
      for (int t = 0; t < 20; ++t) {
        const CMat g = rand_proximal(d, rng);
        const JordanData jd = jordan_decomposition(g);
        const double gn = std::max(1.0, g.norm());
        err = std::max(err,
                       (jd.elliptic * jd.hyperbolic * jd.unipotent - g).norm() /
                           gn);
        err = std::max(
            err, (jd.hyperbolic * jd.elliptic - jd.elliptic * jd.hyperbolic)
                         .norm() /
                     gn);
        err = std::max(err, (jordan_projection(jd.hyperbolic) - jd.lambda)
                                .cwiseAbs()
                                .maxCoeff());
      }
    c.add("jordan.decomposition-residuals", err, 1e-7,
          "commuting parts reconstruct the element; hyperbolic part carries "
          "lambda");
  }
}

// ----------------------------------------------------------------- pairing

FlowPoint rand_flow_point(const RootSystem& rs, const ThetaSet& theta,
                          const WeightVector& s, Rng& rng, Flag* Fp_out,
                          Flag* Fm_out) {
  const FlagType type{theta_to_dvec(theta, rs.d)};
  auto [Fp, Fm] = rand_transverse_pair(type, rs.field, rng);
  FlowPoint p = canonical_section(Fp, Fm, rs, theta, s);
  for (std::size_t i = 0; i < p.mu_plus.components.size(); ++i) {
    const double f = std::exp(randn(rng));
    p.mu_plus.components[i].value *= f;
    p.mu_minus.components[i].value /= f;
  }
  p = flow(p, randn(rng));
  if (Fp_out) *Fp_out = Fp;
  if (Fm_out) *Fm_out = Fm;
  return p;
}

CMat rand_unitary_mix(int k, Field field, Rng& rng) {
  if (field == Field::Real) return rand_orthogonal(k, rng).cast<cd>();
  CMat A(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A(i, j) = cd(randn(rng), randn(rng));
  Eigen::HouseholderQR<CMat> qr(A);
  return CMat(qr.householderQ());
}

void suite_pairing(Collector& c, Rng& rng) {
  const RootSystem rs(3, Field::Real);
  const ThetaSet theta = full_theta(3);
  const WeightVector s = constant_weight(theta, 1.0);
  {
    double err = 0.0;
    for (int t = 0; t < 5; ++t) {
      FlowPoint p = rand_flow_point(rs, theta, s, rng, nullptr, nullptr);
      const double ref = pair_flow(p);
      for (int rep = 0; rep < 20; ++rep) {
        FlowPoint q = p;
        for (auto* md : {&q.mu_plus, &q.mu_minus})
          for (auto& comp : md->components) {
            const CMat U =
                rand_unitary_mix((int)comp.frame.cols(), rs.field, rng);
            const CMat nf = comp.frame * U;
            comp.value = density_eval(comp, nf);
            comp.frame = nf;
          }
        err = std::max(err, std::abs(pair_flow(q) / ref - 1.0));
      }
    }
    c.add("pairing.basis-independence", err, 1e-10,
          "pairing spread under 100 random frame changes");
  }
  {
    double err = 0.0;
    for (int t = 0; t < 50; ++t) {
      FlowPoint p = rand_flow_point(rs, theta, s, rng, nullptr, nullptr);
      const CMat g = rand_sl(3, rng);
      err = std::max(err,
                     std::abs(pair_flow(act_flow(g, p)) / pair_flow(p) - 1.0));
    }
    c.add("pairing.sl-invariance", err, 1e-10,
          "pairing under the diagonal SL(d) action, 50 samples");
  }
  {
    double err = 0.0;
    for (int t = 0; t < 50; ++t) {
      FlowPoint p = rand_flow_point(rs, theta, s, rng, nullptr, nullptr);
      const double tp = std::exp(randn(rng)), tm = std::exp(randn(rng));
      FlowPoint q = p;
      q.mu_plus.log_scale += std::log(tp);
      q.mu_minus.log_scale += std::log(tm);
      err = std::max(err,
                     std::abs(pair_flow(q) - tp * tm * pair_flow(p)) /
                         std::max(1.0, pair_flow(q)));
      const FlowPoint r = flow(p, randn(rng));
      err = std::max(err, std::abs(pair_flow(r) / pair_flow(p) - 1.0));
    }
    c.add("pairing.homogeneity", err, 1e-12,
          "bilinear scaling and flow invariance of the pairing");
  }
  {
    double err = 0.0;
    const int n = 2;
    Mat omega = Mat::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Mat::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    Density mu1{CMat::Identity(2 * n, 2 * n).leftCols(n), 1.0, 1.0,
                Field::Real};
    Density mu2{CMat::Identity(2 * n, 2 * n).rightCols(n), 1.0, 1.0,
                Field::Real};
    err = std::max(err, std::abs(lagrangian_pair(mu1, mu2, omega) - 1.0));
    for (int t = 0; t < 20; ++t) {
      // Random symplectic matrix from a Hamiltonian generator.
      Mat Hsym(2 * n, 2 * n);
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) Hsym(i, j) = 0.3 * randn(rng);
      Hsym = 0.5 * (Hsym + Hsym.transpose().eval());
      Mat J = omega;
      Mat A = J * Hsym;
      Mat S = Mat::Identity(2 * n, 2 * n);
      Mat term = Mat::Identity(2 * n, 2 * n);
      for (int k = 1; k < 60; ++k) {
        term = term * A / (double)k;
        S += term;
      }
      const double base = lagrangian_pair(mu1, mu2, omega);
      const Density g1 = act_density(S.cast<cd>(), mu1);
      const Density g2 = act_density(S.cast<cd>(), mu2);
      err = std::max(err,
                     std::abs(lagrangian_pair(g1, g2, omega) / base - 1.0));
      const double a = std::exp(randn(rng)), b = std::exp(randn(rng));
      Density s1 = mu1, s2 = mu2;
      s1.value *= a;
      s2.value *= b;
      err = std::max(err, std::abs(lagrangian_pair(s1, s2, omega) -
                                   a * b * base));
    }
    c.add("pairing.lagrangian", err, 1e-9,
          "unit example, Sp-invariance and bilinearity of the Lagrangian "
          "pairing");
  }
}

// --------------------------------------------------------- period identity

void suite_period_identity(Collector& c, Rng& rng) {
  {
    double err = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
      const int d = rep % 2 == 0 ? 3 : 4;
      const RootSystem rs(d, Field::Real);
      const ThetaSet theta = full_theta(d);
      WeightVector s;
      for (int j : theta) s[j] = 0.5 + 1.5 * randu(rng);
      const Section sigma = make_canonical_section(rs, theta, s);
      const FlagType type{std::vector<int>(d, 1)};
      auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
      const CMat g1 = rand_sl(d, rng);
      const CMat g2 = rand_sl(d, rng);
      const double lhs = cocycle(sigma, Fp, Fm, g2 * g1);
      const double rhs = cocycle(sigma, act(g1, Fp), act(g1, Fm), g2) +
                         cocycle(sigma, Fp, Fm, g1);
      err = std::max(err, std::abs(lhs - rhs));
    }
    c.add("period-identity.cocycle-relation", err, 1e-9,
          "additivity over 200 random triples in SL(3,R)/SL(4,R)");
  }
  {
    double err = 0.0;
    for (int rep = 0; rep < 40; ++rep) {
      const int d = rep % 2 == 0 ? 3 : 4;
      const RootSystem rs(d, Field::Real);
      const ThetaSet theta = full_theta(d);
      WeightVector s;
      for (int j : theta) s[j] = 0.5 + 1.5 * randu(rng);
      const CMat g = rand_proximal(d, rng);
      const auto [Fp, Fm] =
          attracting_repelling_flags(g, std::vector<int>(d, 1), Field::Real);
      const double expected = w_s_theta(rs, theta, s, jordan_projection(g));
      const double t1 =
          cocycle(make_canonical_section(rs, theta, s), Fp, Fm, g);
      const double t2 =
          cocycle(make_shifted_section(rs, theta, s), Fp, Fm, g);
      const double scale = std::max(1.0, std::abs(expected));
      err = std::max(err, std::abs(t1 - t2) / scale);
      err = std::max(err, std::abs(t1 - expected) / scale);
    }
    c.add("period-identity.section-independence", err, 1e-9,
          "cocycles of two sections agree with the weighted-length formula at "
          "fixed flags");
  }
  {
    double err = 0.0;
    int n_classes = 0;
    for (const std::string& name :
         {std::string("sl3-sym2-schottky"), std::string("sl4-diag-schottky")}) {
      const GroupSpec spec = builtin_spec(name);
      const RootSystem rs(spec.d, spec.field);
      const WeightVector s = constant_weight(spec.theta, 1.0);
      const Section sigma = make_canonical_section(rs, spec.theta, s);
      const auto dvec = theta_to_dvec(spec.theta, spec.d);
      // length 4 keeps the word condition numbers inside the range where the
      // two cocycle sides agree to full precision
      const auto records = period_spectrum(spec, spec.theta, s, 4);
      for (const auto& rec : records) {
        const CMat g = evaluate_word(spec, rec.word);
        const auto [Fp, Fm] =
            attracting_repelling_flags(g, dvec, spec.field);
        const double t = cocycle(sigma, Fp, Fm, g);
        err = std::max(err, std::abs(t - rec.period) /
                                std::max(1.0, std::abs(rec.period)));
        ++n_classes;
      }
    }
    c.add("period-identity.spec-periods", err, 1e-7,
          "cocycle at the fixed flags vs weighted length over " +
              std::to_string(n_classes) + " primitive classes (length <= 4)");
  }
  {
    double err = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const int d = rep % 2 == 0 ? 3 : 4;
      const RootSystem rs(d, Field::Real);
      ThetaSet theta = full_theta(d);
      if (rep % 3 == 0 && d == 4) theta = {1, 3};
      const FlagType type{theta_to_dvec(theta, d)};
      auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
      MultiflowPoint nu = multiflow_lift(Fp, Fm, rs, theta);
      std::vector<double> t0(theta.size());
      for (auto& v : t0) v = randn(rng);
      nu = multiflow_translate(nu, t0);
      for (std::size_t i = 0; i < nu.plus.size(); ++i) {
        const double f = std::exp(randn(rng));
        nu.plus[i].value *= f;
        nu.minus[i].value /= f;
      }
      WeightVector s;
      double ts = 0.0;
      std::vector<double> t(theta.size());
      for (std::size_t i = 0; i < theta.size(); ++i) {
        s[theta[i]] = randn(rng);
        t[i] = randn(rng);
        ts += t[i] * s[theta[i]];
      }
      const FlowPoint lhs = multiflow_project(multiflow_translate(nu, t), rs, s);
      const FlowPoint rhs = flow(multiflow_project(nu, rs, s), ts);
      double local = std::abs(lhs.mu_plus.log_scale - rhs.mu_plus.log_scale) +
                     std::abs(lhs.mu_minus.log_scale - rhs.mu_minus.log_scale);
      for (std::size_t i = 0; i < lhs.mu_plus.components.size(); ++i) {
        local = std::max(local, std::abs(lhs.mu_plus.components[i].value -
                                         rhs.mu_plus.components[i].value));
        local = std::max(local, std::abs(lhs.mu_minus.components[i].value -
                                         rhs.mu_minus.components[i].value));
      }
      err = std::max(err, local);
    }
    c.add("period-identity.multiflow-equivariance", err, 1e-12,
          "projection of a translated multiflow point vs the flowed "
          "projection, 100 samples");
  }
}

// ---------------------------------------------------------------- geometry

void suite_geometry(Collector& c, Rng& rng) {
  {
    bool ok = true;
    std::string detail;
    int cases = 0;
    for (int d = 2; d <= 4; ++d) {
      const RootSystem rs(d, Field::Real);
      std::vector<ThetaSet> thetas = {full_theta(d)};
      if (d == 3) thetas.push_back({1});
      if (d == 4) thetas.push_back({2});
      if (d == 4) thetas.push_back({1, 3});
      for (const auto& theta : thetas) {
        const FlagType type{theta_to_dvec(theta, d)};
        auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
        const TangentFrame tf = tangent_frame(Fp, Fm, rs);
        const int patterns = 1 << theta.size();
        for (int mask = 0; mask < patterns; ++mask) {
          WeightVector s;
          bool all_nonzero = true;
          for (std::size_t i = 0; i < theta.size(); ++i) {
            if (mask & (1 << i)) {
              s[theta[i]] = 1.0 + randu(rng);
            } else {
              s[theta[i]] = 0.0;
              all_nonzero = false;
            }
          }
          const bool reg = is_regular(tf, rs, theta, s);
          ++cases;
          if (reg != all_nonzero) {
            ok = false;
            detail = "mismatch at d=" + std::to_string(d);
          }
        }
      }
    }
    c.add_bool("geometry.regularity-rank", ok,
               ok ? "full rank of the period 2-form iff all weights nonzero, " +
                        std::to_string(cases) + " zero-patterns"
                  : detail);
  }
  {
    bool ok = true;
    int cases = 0;
    for (int rep = 0; rep < 50; ++rep) {
      const int d = 2 + rep % 3;
      const RootSystem rs(d, Field::Real);
      ThetaSet theta = full_theta(d);
      if (rep % 4 == 0 && d >= 3) theta = {1};
      const FlagType type{theta_to_dvec(theta, d)};
      auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
      const TangentFrame tf = tangent_frame(Fp, Fm, rs);
      const auto sig = signature(killing_metric_matrix(tf, rs));
      ++cases;
      if (sig.first != tf.n || sig.second != tf.n) ok = false;
    }
    c.add_bool("geometry.signature", ok,
               "Killing metric has neutral signature on " +
                   std::to_string(cases) + " random transverse pairs");
  }
  {
    double err = 0.0;
    const RootSystem rs(3, Field::Real);
    const ThetaSet theta = full_theta(3);
    const FlagType type{theta_to_dvec(theta, 3)};
    auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
    const TangentFrame tf = tangent_frame(Fp, Fm, rs);
    WeightVector s;
    for (int j : theta) s[j] = randn(rng);
    const Vec diag = period_dual_diagonal(rs, theta, s);
    const CMat Xs =
        tf.Q * diag.cast<cd>().asDiagonal() * tf.Qinv;
    const double cscale = rs.killing_scale();
    auto B = [&](const CMat& A, const CMat& Bm) {
      return cscale * (A * Bm).trace().real();
    };
    for (int t = 0; t < 60; ++t) {
      const int i = (int)(randu(rng) * tf.basis.size());
      const int j = (int)(randu(rng) * tf.basis.size());
      const int k = (int)(randu(rng) * tf.basis.size());
      auto br = [](const CMat& A, const CMat& Bm) { return A * Bm - Bm * A; };
      const double cyc =
          B(Xs, br(br(tf.basis[i], tf.basis[j]), tf.basis[k])) +
          B(Xs, br(br(tf.basis[j], tf.basis[k]), tf.basis[i])) +
          B(Xs, br(br(tf.basis[k], tf.basis[i]), tf.basis[j]));
      err = std::max(err, std::abs(cyc));
    }
    c.add("geometry.jacobi-closedness", err, 1e-9,
          "cyclic bracket sums against the period dual vanish");
  }
  {
    double err = 0.0;
    const RootSystem rs(4, Field::Real);
    const ThetaSet theta = full_theta(4);
    const FlagType type{theta_to_dvec(theta, 4)};
    auto [Fp, Fm] = rand_transverse_pair(type, Field::Real, rng);
    const TangentFrame tf = tangent_frame(Fp, Fm, rs);
    WeightVector s1, s2;
    for (int j : theta) {
      s1[j] = randn(rng);
      s2[j] = randn(rng);
    }
    WeightVector s12;
    for (int j : theta) s12[j] = s1[j] + s2[j];
    const Mat W1 = omega_ell_matrix(tf, rs, theta, s1);
    const Mat W2 = omega_ell_matrix(tf, rs, theta, s2);
    const Mat W12 = omega_ell_matrix(tf, rs, theta, s12);
    err = std::max(err, (W12 - W1 - W2).cwiseAbs().maxCoeff());
    err = std::max(err, (W1 + W1.transpose()).cwiseAbs().maxCoeff());
    // The two distributions are isotropic for omega^ell.
    const int n = tf.n;
    err = std::max(err, W1.topLeftCorner(n, n).cwiseAbs().maxCoeff());
    err = std::max(err, W1.bottomRightCorner(n, n).cwiseAbs().maxCoeff());
    c.add("geometry.two-form-structure", err, 1e-9,
          "linearity in the weights, antisymmetry, isotropic distributions");
  }
  {
    bool ok = true;
    for (int d = 2; d <= 6; ++d) {
      const RootSystem rs(d, Field::Real);
      const ThetaSet theta = full_theta(d);
      const int patterns = 1 << theta.size();
      for (int mask = 0; mask < patterns; ++mask) {
        WeightVector s;
        for (std::size_t i = 0; i < theta.size(); ++i)
          s[theta[i]] = (mask & (1 << i)) ? 1.0 + randu(rng) : 0.0;
        for (const auto& [alpha, verdict] : contact_test(rs, theta, s))
          if (verdict != (s[alpha] != 0.0)) ok = false;
      }
    }
    c.add_bool("geometry.contact-test", ok,
               "per-root contact verdicts coincide with nonzero weights, "
               "d=2..6");
  }
}

// -------------------------------------------------------------------- zeta

void suite_zeta(Collector& c, Rng& rng) {
  {
    bool ok = true;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& name : builtin_spec_names()) {
      const GroupSpec spec = builtin_spec(name);
      const RootSystem rs(spec.d, spec.field);
      const auto sample = limit_cone_sample(spec, spec.theta, 6);
      const auto verdict = is_admissible(
          rs, spec.theta, constant_weight(spec.theta, 1.0), sample);
      if (!verdict.admissible) ok = false;
      min_margin = std::min(min_margin, verdict.margin);
    }
    c.add_bool("zeta.admissibility-baseline", ok,
               "unit weights admissible on every shipped spec, worst margin " +
                   fmt("%.6g", min_margin));
  }
  {
    ZetaJob job;
    job.spec = builtin_spec("sl3-sym2-schottky");
    job.theta = job.spec.theta;
    job.s = constant_weight(job.theta, 1.0);
    job.maxLen = 7;
    const auto records = period_spectrum(job.spec, job.theta, job.s, 1);
    const double min_period = records.front().period;
    job.z = cd(2.0 / min_period, 0.0);
    ZetaJob jp = job;
    jp.mode = ZetaMode::Product;
    ZetaJob jt = job;
    jt.mode = ZetaMode::TraceSeries;
    const ZetaResult rp = zeta_truncated(jp);
    const ZetaResult rt = log_zeta_series(jt);
    const double err = std::abs(std::exp(rp.log_zeta) - std::exp(rt.log_zeta)) /
                       std::max(1.0, std::abs(std::exp(rp.log_zeta)));
    c.add("zeta.product-vs-series", err, 1e-8,
          "Euler product vs trace expansion over " +
              std::to_string(rp.n_classes) + " classes (length <= 7)");
    (void)rng;
  }
  {
    ZetaJob job;
    job.spec = builtin_spec("sl3-one-generator");
    job.theta = job.spec.theta;
    job.s = constant_weight(job.theta, 1.0);
    job.maxLen = 6;
    const double ell = 3.0 * std::log(4.0);
    job.z = cd(0.6, 0.2);
    const ZetaResult r = zeta_truncated(job);
    const cd closed = -2.0 * std::log(1.0 - std::exp(-job.z * ell));
    const double err = std::abs(r.log_zeta - closed);
    c.add("zeta.closed-form", err, 1e-10,
          "one-generator spec vs the geometric-series formula");
  }
  {
    ZetaJob base;
    base.spec = builtin_spec("sl3-sym2-schottky");
    base.theta = base.spec.theta;
    base.s = constant_weight(base.theta, 1.0);
    base.maxLen = 5;
    const auto records = period_spectrum(base.spec, base.theta, base.s, 1);
    base.z = cd(2.0, 0.3) / records.front().period;
    base.rho_dim = 2;
    CMat ra(2, 2), rb(2, 2);
    ra << cd(0.8, 0.1), cd(0.2, 0.0), cd(-0.1, 0.0), cd(1.1, -0.2);
    rb << cd(1.0, 0.0), cd(0.4, 0.1), cd(0.0, 0.2), cd(0.9, 0.0);
    base.rho = {{"a", ra}, {"b", rb}};
    const ZetaResult r0 = zeta_truncated(base);
    double err = 0.0;
    for (int t = 0; t < 3; ++t) {
      CMat h(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h(i, j) = cd(randn(rng), randn(rng));
      ZetaJob conj = base;
      conj.rho = {{"a", h * ra * h.inverse()}, {"b", h * rb * h.inverse()}};
      const ZetaResult rc = zeta_truncated(conj);
      err = std::max(err, std::abs(rc.log_zeta - r0.log_zeta));
    }
    c.add("zeta.conjugation-invariance", err, 1e-10,
          "twisted values depend on the twist only through conjugacy");
  }
  {
    ZetaJob job;
    job.spec = builtin_spec("sl3-sym2-schottky");
    job.theta = job.spec.theta;
    job.s = constant_weight(job.theta, 1.0);
    const auto records = period_spectrum(job.spec, job.theta, job.s, 1);
    job.z = cd(2.0, 0.0) / records.front().period;
    std::vector<cd> values;
    for (int N = 4; N <= 7; ++N) {
      job.maxLen = N;
      values.push_back(zeta_truncated(job).log_zeta);
    }
    bool ok = true;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < values.size(); ++i) {
      const double inc = std::abs(values[i] - values[i - 1]);
      if (inc > prev) ok = false;
      prev = inc;
    }
    c.add_bool("zeta.truncation-stability",
               ok, "length-shell increments decay monotonically");
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"rootdata", "jordan",   "pairing", "period-identity",
          "geometry", "zeta",     "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, uint64_t seed) {
  std::vector<CheckResult> out;
  Collector c{out};
  Rng rng(seed);
  const bool all = suite == "all";
  if (all || suite == "rootdata") suite_rootdata(c, rng);
  if (all || suite == "jordan") suite_jordan(c, rng);
  if (all || suite == "pairing") suite_pairing(c, rng);
  if (all || suite == "period-identity") suite_period_identity(c, rng);
  if (all || suite == "geometry") suite_geometry(c, rng);
  if (all || suite == "zeta") suite_zeta(c, rng);
  if (out.empty()) throw Error("unknown suite: " + suite);
  return out;
}

std::string format_report(const std::string& suite, uint64_t seed,
                          const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "# flagflow " << FLAGFLOW_VERSION << "\n";
  os << "# suite=" << suite << " seed=" << seed << "\n";
  os << "# columns: check_id,status,max_error,tolerance,detail\n";
  int passed = 0;
  for (const auto& r : results) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", r.max_error);
    std::string me = buf;
    std::snprintf(buf, sizeof(buf), "%.6e", r.tolerance);
    os << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << me << "," << buf
       << ",\"" << r.detail << "\"\n";
    if (r.pass) ++passed;
  }
  os << "# summary: pass=" << passed << "/" << results.size() << "\n";
  return os.str();
}

}  // namespace flagflow
