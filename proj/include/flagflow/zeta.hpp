#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "flagflow/anosov.hpp"

namespace flagflow {

enum class ZetaMode { Product, TraceSeries };

struct ZetaJob {
  GroupSpec spec;
  ThetaSet theta;
  WeightVector s;
  std::complex<double> z;
  // Generator label -> matrix; empty means the trivial 1-dimensional twist.
  std::map<std::string, CMat> rho;
  int rho_dim = 1;
  int maxLen = 6;
  ZetaMode mode = ZetaMode::Product;
};

struct ZetaResult {
  std::complex<double> log_zeta;
  int n_classes = 0;
  double min_period = 0.0;
  double last_shell = 0.0;      // magnitude of the final length-shell increment
  double tail_estimate = 0.0;   // geometric extrapolation of the remainder
  double empirical_abscissa = 0.0;
  std::vector<std::string> warnings;
};

// log of the truncated Euler product over primitive classes:
// -sum log det(1 - e^{-z l(gamma)} rho(gamma)).
ZetaResult zeta_truncated(const ZetaJob& job);

// Trace expansion sum_prim sum_m (1/m) tr(rho(gamma)^m) e^{-m z l(gamma)},
// terms truncated below 1e-16.
ZetaResult log_zeta_series(const ZetaJob& job);

CMat evaluate_rho(const ZetaJob& job, const CyclicWord& w);

}  // namespace flagflow
