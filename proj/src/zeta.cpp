#include "flagflow/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace flagflow {

namespace {

using cd = std::complex<double>;

struct ClassData {
  CyclicWord word;
  double period;
  CMat rho;
};

std::vector<ClassData> prepare_classes(const ZetaJob& job) {
  const RootSystem rs(job.spec.d, job.spec.field);
  const auto classes = enumerate_primitive_classes(
      (int)job.spec.generators.size(), job.maxLen);
  std::vector<ClassData> out;
  for (const auto& w : classes) {
    ClassData cdta;
    cdta.word = w;
    const Vec lam = jordan_projection(evaluate_word(job.spec, w));
    cdta.period = w_s_theta(rs, job.theta, job.s, lam);
    cdta.rho = evaluate_rho(job, w);
    out.push_back(std::move(cdta));
  }
  // Documented accumulation order: by period, then lexicographic word.
  std::sort(out.begin(), out.end(), [&](const ClassData& a, const ClassData& b) {
    if (a.period != b.period) return a.period < b.period;
    return word_to_string(a.word, job.spec) < word_to_string(b.word, job.spec);
  });
  return out;
}

void finish_diagnostics(const ZetaJob& job, const std::vector<ClassData>& cls,
                        const std::vector<cd>& contributions,
                        ZetaResult& res) {
  res.n_classes = (int)cls.size();
  res.min_period = std::numeric_limits<double>::infinity();
  std::vector<double> shell_mag(job.maxLen + 1, 0.0);
  std::vector<int> shell_count(job.maxLen + 1, 0);
  std::vector<double> shell_max_period(job.maxLen + 1, 0.0);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    res.min_period = std::min(res.min_period, cls[i].period);
    const int L = cls[i].word.length();
    shell_mag[L] += std::abs(contributions[i]);
    shell_count[L] += 1;
    shell_max_period[L] = std::max(shell_max_period[L], cls[i].period);
  }
  res.last_shell = shell_mag[job.maxLen];
  if (job.maxLen >= 2 && shell_mag[job.maxLen - 1] > 0.0) {
    const double r = shell_mag[job.maxLen] / shell_mag[job.maxLen - 1];
    res.tail_estimate = r < 1.0
                            ? shell_mag[job.maxLen] * r / (1.0 - r)
                            : std::numeric_limits<double>::infinity();
  } else {
    res.tail_estimate = shell_mag[job.maxLen];
  }
  // Least-squares slope of log cumulative class count against period reach,
  // an empirical stand-in for the convergence abscissa.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int npt = 0, cum = 0;
  for (int L = 1; L <= job.maxLen; ++L) {
    cum += shell_count[L];
    if (cum == 0 || shell_max_period[L] <= 0) continue;
    const double x = shell_max_period[L], y = std::log((double)cum);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++npt;
  }
  if (npt >= 2 && npt * sxx - sx * sx > 0)
    res.empirical_abscissa = (npt * sxy - sx * sy) / (npt * sxx - sx * sx);
  if (job.z.real() < res.empirical_abscissa)
    res.warnings.push_back("BelowEmpiricalAbscissa");
  if (res.tail_estimate > 1e-8) res.warnings.push_back("SlowConvergence");
}

void admissibility_warning(const ZetaJob& job, ZetaResult& res) {
  if (job.maxLen < 1) return;
  const RootSystem rs(job.spec.d, job.spec.field);
  const auto sample =
      limit_cone_sample(job.spec, job.theta, std::min(job.maxLen, 4));
  const auto verdict = is_admissible(rs, job.theta, job.s, sample);
  if (!verdict.admissible) res.warnings.push_back("AdmissibilityWarning");
}

}  // namespace

CMat evaluate_rho(const ZetaJob& job, const CyclicWord& w) {
  if (job.rho.empty()) return CMat::Identity(job.rho_dim, job.rho_dim);
  CMat out = CMat::Identity(job.rho_dim, job.rho_dim);
  for (int l : w.letters) {
    const auto& label = job.spec.generators[std::abs(l) - 1].label;
    const auto it = job.rho.find(label);
    if (it == job.rho.end())
      throw Error("twist has no matrix for generator " + label);
    out = out * (l > 0 ? it->second : it->second.inverse().eval());
  }
  return out;
}

ZetaResult zeta_truncated(const ZetaJob& job) {
  if (job.mode == ZetaMode::TraceSeries) return log_zeta_series(job);
  const auto cls = prepare_classes(job);
  ZetaResult res;
  std::vector<cd> contributions;
  bool near_zero = false;
  for (const auto& c : cls) {
    const CMat A = std::exp(-job.z * c.period) * c.rho;
    const CMat F = CMat::Identity(A.rows(), A.cols()) - A;
    const cd det = Eigen::PartialPivLU<CMat>(F).determinant();
    if (std::abs(det) < 1e-12) near_zero = true;
    const cd contrib = -std::log(det);
    contributions.push_back(contrib);
    res.log_zeta += contrib;
  }
  if (near_zero) res.warnings.push_back("NearZeroDeterminant");
  finish_diagnostics(job, cls, contributions, res);
  admissibility_warning(job, res);
  return res;
}

ZetaResult log_zeta_series(const ZetaJob& job) {
  const auto cls = prepare_classes(job);
  ZetaResult res;
  std::vector<cd> contributions;
  bool slow = false;
  for (const auto& c : cls) {
    Eigen::ComplexEigenSolver<CMat> es(c.rho, false);
    const CVec mu = es.eigenvalues();
    cd contrib = 0.0;
    const cd q = std::exp(-job.z * c.period);
    cd qm = 1.0;
    bool converged = false;
    for (int m = 1; m <= 100000; ++m) {
      qm *= q;
      cd tr = 0.0;
      for (int i = 0; i < mu.size(); ++i) tr += std::pow(mu(i), m);
      const cd term = tr * qm / (double)m;
      contrib += term;
      if (std::abs(term) < 1e-16) {
        converged = true;
        break;
      }
    }
    if (!converged) slow = true;
    contributions.push_back(contrib);
    res.log_zeta += contrib;
  }
  if (slow) res.warnings.push_back("SlowConvergence");
  finish_diagnostics(job, cls, contributions, res);
  admissibility_warning(job, res);
  return res;
}

}  // namespace flagflow
