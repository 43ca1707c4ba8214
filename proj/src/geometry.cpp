#include "flagflow/geometry.hpp"

#include <cmath>
#include <complex>

namespace flagflow {

TangentFrame tangent_frame(const Flag& Fp, const Flag& Fm,
                           const RootSystem& rs) {
  const Grading E = grading_from_pair(Fp, Fm);
  const int d = rs.d;
  TangentFrame tf;
  tf.field = rs.field;
  tf.dvec = E.dims();
  tf.Q = CMat(d, d);
  int col = 0;
  for (const auto& S : E.subspaces) {
    tf.Q.block(0, col, d, S.cols()) = S;
    col += (int)S.cols();
  }
  tf.Qinv = tf.Q.inverse();
  const auto blocks = theta_blocks(dvec_to_theta(tf.dvec), d);
  const std::complex<double> I(0.0, 1.0);
  // n^- first (block(p) > block(q)), then n^+.
  for (int pass = 0; pass < 2; ++pass)
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        const bool lower = blocks[p] > blocks[q];
        const bool upper = blocks[p] < blocks[q];
        if ((pass == 0 && !lower) || (pass == 1 && !upper)) continue;
        CMat Epq = CMat::Zero(d, d);
        Epq(p, q) = 1.0;
        const CMat X = tf.Q * Epq * tf.Qinv;
        tf.basis.push_back(X);
        if (rs.field == Field::Complex) tf.basis.push_back(I * X);
      }
  tf.n = (int)tf.basis.size() / 2;
  return tf;
}

Mat killing_metric_matrix(const TangentFrame& tf, const RootSystem& rs) {
  const int n2 = (int)tf.basis.size();
  Mat G(n2, n2);
  for (int i = 0; i < n2; ++i)
    for (int j = i; j < n2; ++j) {
      G(i, j) = rs.killing_scale() *
                (tf.basis[i] * tf.basis[j]).trace().real();
      G(j, i) = G(i, j);
    }
  return G;
}

std::pair<int, int> signature(const Mat& G, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(G, Eigen::EigenvaluesOnly);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  int pos = 0, neg = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = es.eigenvalues()(i);
    if (v > tol * scale)
      ++pos;
    else if (v < -tol * scale)
      ++neg;
  }
  return {pos, neg};
}

Vec period_dual_diagonal(const RootSystem& rs, const ThetaSet& theta,
                         const WeightVector& s) {
  const int d = rs.d;
  const double c = rs.killing_scale();
  Vec diag = Vec::Zero(d);
  for (int k : theta) {
    const auto it = s.find(k);
    const double sk = it == s.end() ? 0.0 : it->second;
    const double coeff = sk * m_alpha(rs, k) / c;
    for (int i = 0; i < d; ++i)
      diag(i) += coeff * ((i < k ? 1.0 : 0.0) - (double)k / d);
  }
  return diag;
}

Mat omega_ell_matrix(const TangentFrame& tf, const RootSystem& rs,
                     const ThetaSet& theta, const WeightVector& s) {
  const Vec diag = period_dual_diagonal(rs, theta, s);
  const CMat Xs = tf.Q * diag.cast<std::complex<double>>().asDiagonal() *
                  tf.Qinv;
  const int n2 = (int)tf.basis.size();
  const double c = rs.killing_scale();
  Mat W(n2, n2);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) {
      const CMat br = tf.basis[i] * tf.basis[j] - tf.basis[j] * tf.basis[i];
      W(i, j) = -c * (Xs * br).trace().real();
    }
  return W;
}

int numerical_rank(const Mat& A, double tol) {
  if (A.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(A);
  const double cutoff = tol * svd.singularValues()(0);
  if (svd.singularValues()(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  return rank;
}

bool is_regular_combinatorial(const RootSystem& rs, const ThetaSet& theta,
                              const WeightVector& s, double tol) {
  const Vec diag = period_dual_diagonal(rs, theta, s);
  const auto blocks = theta_blocks(theta, rs.d);
  double scale = std::max(1e-30, diag.cwiseAbs().maxCoeff());
  for (int i = 0; i < rs.d; ++i)
    for (int j = i + 1; j < rs.d; ++j)
      if (blocks[i] != blocks[j] &&
          std::abs(diag(i) - diag(j)) <= tol * scale)
        return false;
  return true;
}

bool is_regular(const TangentFrame& tf, const RootSystem& rs,
                const ThetaSet& theta, const WeightVector& s) {
  const bool comb = is_regular_combinatorial(rs, theta, s);
  const Mat W = omega_ell_matrix(tf, rs, theta, s);
  bool zero = true;
  for (const auto& [k, v] : s)
    if (v != 0.0) zero = false;
  const bool numeric =
      !zero && numerical_rank(W) == (int)tf.basis.size();
  if (comb != numeric)
    throw RankDisagreement("combinatorial and numerical regularity disagree");
  return numeric;
}

std::vector<std::pair<int, bool>> contact_test(const RootSystem& rs,
                                               const ThetaSet& theta,
                                               const WeightVector& s,
                                               double tol) {
  const Vec diag = period_dual_diagonal(rs, theta, s);
  std::vector<std::pair<int, bool>> out;
  double scale = std::max(1e-30, diag.cwiseAbs().maxCoeff());
  for (int k : theta) {
    const double pairing = diag(k - 1) - diag(k);  // alpha_k(X_s)
    out.emplace_back(k, std::abs(pairing) > tol * scale);
  }
  return out;
}

}  // namespace flagflow
