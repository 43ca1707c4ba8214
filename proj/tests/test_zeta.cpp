#include <doctest.h>

#include <cmath>
#include <complex>

#include "flagflow/zeta.hpp"

using namespace flagflow;
using cd = std::complex<double>;

TEST_CASE("empty truncation gives the empty product") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-one-generator");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.z = cd(1.0, 0.0);
  job.maxLen = 0;
  const ZetaResult r = zeta_truncated(job);
  CHECK(r.n_classes == 0);
  CHECK(std::abs(r.log_zeta) == doctest::Approx(0.0));
}

TEST_CASE("one-generator closed form") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-one-generator");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.maxLen = 5;
  const double ell = 3 * std::log(4.0);
  for (const cd z : {cd(0.5, 0.0), cd(0.8, 0.4)}) {
    job.z = z;
    const ZetaResult r = zeta_truncated(job);
    CHECK(r.n_classes == 2);  // the classes [c] and [c^-1]
    const cd closed = -2.0 * std::log(1.0 - std::exp(-z * ell));
    CHECK(std::abs(r.log_zeta - closed) < 1e-10);
  }
}

TEST_CASE("product and series modes agree") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-sym2-schottky");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.maxLen = 4;
  job.z = cd(0.2, 0.1);
  const ZetaResult p = zeta_truncated(job);
  job.mode = ZetaMode::TraceSeries;
  const ZetaResult t = log_zeta_series(job);
  CHECK(std::abs(p.log_zeta - t.log_zeta) < 1e-8);
  CHECK(p.n_classes == t.n_classes);
}

TEST_CASE("identity twist recovers the untwisted value") {
  ZetaJob plain;
  plain.spec = builtin_spec("sl3-sym2-schottky");
  plain.theta = plain.spec.theta;
  plain.s = constant_weight(plain.theta, 1.0);
  plain.maxLen = 3;
  plain.z = cd(0.25, 0.0);
  ZetaJob twisted = plain;
  twisted.rho_dim = 1;
  twisted.rho = {{"a", CMat::Identity(1, 1)}, {"b", CMat::Identity(1, 1)}};
  CHECK(std::abs(zeta_truncated(plain).log_zeta -
                 zeta_truncated(twisted).log_zeta) < 1e-12);
}

TEST_CASE("real argument and trivial twist give a real value") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-sym2-schottky");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.maxLen = 3;
  job.z = cd(0.3, 0.0);
  CHECK(std::abs(zeta_truncated(job).log_zeta.imag()) < 1e-12);
}

TEST_CASE("low real part raises a warning flag") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-sym2-schottky");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.maxLen = 5;
  job.z = cd(1e-4, 0.0);
  const ZetaResult r = zeta_truncated(job);
  bool flagged = false;
  for (const auto& w : r.warnings)
    if (w == "BelowEmpiricalAbscissa" || w == "SlowConvergence") flagged = true;
  CHECK(flagged);
}

TEST_CASE("truncation increments shrink for large real part") {
  ZetaJob job;
  job.spec = builtin_spec("sl3-sym2-schottky");
  job.theta = job.spec.theta;
  job.s = constant_weight(job.theta, 1.0);
  job.z = cd(0.3, 0.0);
  cd prev = 0.0;
  double last_inc = 1e300;
  for (int N = 2; N <= 6; ++N) {
    job.maxLen = N;
    const cd cur = zeta_truncated(job).log_zeta;
    if (N > 2) {
      const double inc = std::abs(cur - prev);
      CHECK(inc < last_inc);
      last_inc = inc;
    }
    prev = cur;
  }
}
