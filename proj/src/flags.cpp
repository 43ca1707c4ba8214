#include "flagflow/flags.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace flagflow {

int FlagType::d() const {
  int sum = 0;
  for (int p : dvec) {
    if (p < 1) throw Error("flag type parts must be >= 1");
    sum += p;
  }
  return sum;
}

std::vector<int> FlagType::cumdims() const {
  std::vector<int> out;
  int cum = 0;
  for (int p : dvec) {
    cum += p;
    out.push_back(cum);
  }
  return out;
}

FlagType FlagType::reversed() const {
  FlagType t = *this;
  std::reverse(t.dvec.begin(), t.dvec.end());
  return t;
}

CMat Flag::basis(int i) const {
  const auto cum = type.cumdims();
  if (i < 1 || i > (int)cum.size()) throw Error("flag level out of range");
  return frame.leftCols(cum[i - 1]);
}

std::vector<int> Grading::dims() const {
  std::vector<int> out;
  for (const auto& E : subspaces) out.push_back((int)E.cols());
  return out;
}

Flag coordinate_flag(const FlagType& type, Field field, int d) {
  if (type.d() != d) throw Error("flag type does not sum to d");
  Flag F;
  F.type = type;
  F.field = field;
  F.frame = CMat::Identity(d, d);
  return F;
}

CMat orthonormalize(const CMat& A, double tol) {
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  const double cutoff = tol * std::max(1e-300, (double)sv(0));
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Flag flag_from_blocks(const FlagType& type, Field field,
                      const std::vector<CMat>& block_spans) {
  const int d = type.d();
  if ((int)block_spans.size() != type.rank())
    throw Error("flag_from_blocks: block count mismatch");
  Flag F;
  F.type = type;
  F.field = field;
  F.frame = CMat::Zero(d, d);
  int filled = 0;
  for (int i = 0; i < type.rank(); ++i) {
    CMat B = block_spans[i];
    if (filled > 0) {
      const CMat Q = F.frame.leftCols(filled);
      B = B - Q * (Q.adjoint() * B);
    }
    const CMat Qi = orthonormalize(B);
    if ((int)Qi.cols() != type.dvec[i])
      throw Error("flag_from_blocks: block span has wrong dimension");
    F.frame.block(0, filled, d, type.dvec[i]) = Qi;
    filled += type.dvec[i];
  }
  return F;
}

Flag act(const CMat& g, const Flag& F) {
  std::vector<CMat> blocks;
  int start = 0;
  for (int p : F.type.dvec) {
    blocks.push_back(g * F.frame.middleCols(start, p));
    start += p;
  }
  return flag_from_blocks(F.type, F.field, blocks);
}

double subspace_distance(const CMat& A, const CMat& B) {
  if (A.cols() != B.cols()) throw Error("subspace dimension mismatch");
  // sin of the largest principal angle, stable for small angles
  const CMat R = B - A * (A.adjoint() * B);
  Eigen::JacobiSVD<CMat> svd(R);
  const double s = std::min(1.0, (double)svd.singularValues()(0));
  return std::asin(s);
}

CMat subspace_intersection(const CMat& A, const CMat& B, double tol) {
  const int d = (int)A.rows();
  CMat S(d, A.cols() + B.cols());
  S << A, -B;
  Eigen::JacobiSVD<CMat> svd(S, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<int> null_idx;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < tol) null_idx.push_back(i);
  // Trailing V columns beyond the row rank also belong to the null space.
  for (int i = (int)sv.size(); i < S.cols(); ++i) null_idx.push_back(i);
  if (null_idx.empty()) return CMat::Zero(d, 0);
  CMat X(d, (int)null_idx.size());
  for (std::size_t k = 0; k < null_idx.size(); ++k)
    X.col((int)k) = A * svd.matrixV().col(null_idx[k]).head(A.cols());
  return orthonormalize(X);
}

double transversality_margin(const Flag& Fp, const Flag& Fm) {
  if (Fp.type.reversed() != Fm.type)
    throw Error("transversality requires opposite flag types");
  const int d = Fp.d();
  const int r = Fp.type.rank();
  double margin = 1.0;
  for (int i = 1; i < r; ++i) {
    const CMat V = Fp.basis(i);
    const CMat W = Fm.basis(r - i);
    CMat S(d, V.cols() + W.cols());
    S << V, W;
    Eigen::JacobiSVD<CMat> svd(S);
    margin = std::min(margin,
                      (double)svd.singularValues()(svd.singularValues().size() - 1));
  }
  return margin;
}

bool is_transverse(const Flag& Fp, const Flag& Fm, double tol) {
  return transversality_margin(Fp, Fm) > tol;
}

Grading grading_from_pair(const Flag& Fp, const Flag& Fm, double tol) {
  if (!is_transverse(Fp, Fm, tol)) throw NotTransverse("flag pair is not transverse");
  const int r = Fp.type.rank();
  Grading E;
  E.field = Fp.field;
  for (int i = 1; i <= r; ++i) {
    const CMat V = Fp.basis(i);
    const CMat W = Fm.basis(r + 1 - i);
    CMat Ei = subspace_intersection(V, W, tol);
    if ((int)Ei.cols() != Fp.type.dvec[i - 1])
      throw NotTransverse("grading block has unexpected dimension");
    E.subspaces.push_back(Ei);
  }
  return E;
}

std::pair<Flag, Flag> pair_from_grading(const Grading& E) {
  const int r = (int)E.subspaces.size();
  FlagType tp;
  for (const auto& S : E.subspaces) tp.dvec.push_back((int)S.cols());
  std::vector<CMat> rev(E.subspaces.rbegin(), E.subspaces.rend());
  Flag Fp = flag_from_blocks(tp, E.field, E.subspaces);
  Flag Fm = flag_from_blocks(tp.reversed(), E.field, rev);
  (void)r;
  return {Fp, Fm};
}

CMat project_flag(const Flag& F, int j) { return F.basis(j); }

std::vector<CMat> nilradical_basis(const Flag& F) {
  const int d = F.d();
  const auto blocks = theta_blocks(dvec_to_theta(F.type.dvec), d);
  const CMat& Q = F.frame;
  const CMat Qh = Q.adjoint();
  const std::complex<double> I(0.0, 1.0);
  std::vector<CMat> basis;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (blocks[p] >= blocks[q]) continue;
      const CMat N = Q.col(p) * Qh.row(q);
      basis.push_back(N);
      if (F.field == Field::Complex) basis.push_back(I * N);
    }
  return basis;
}

namespace {

// Matrix of X -> g X g^-1 on the nilradical in its orthonormal basis; throws
// NotStabilizing if the image leaves the span.
Mat adjoint_matrix_on_nilradical(const CMat& g, const Flag& F,
                                 double stab_tol) {
  const std::vector<CMat> basis = nilradical_basis(F);
  const int n = (int)basis.size();
  const CMat ginv = g.inverse();
  Mat M(n, n);
  for (int k = 0; k < n; ++k) {
    const CMat img = g * basis[k] * ginv;
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      M(i, k) = (img * basis[i].adjoint()).trace().real();
      norm2 += M(i, k) * M(i, k);
    }
    const double res = std::sqrt(std::max(0.0, img.squaredNorm() - norm2));
    if (res > stab_tol * img.norm())
      throw NotStabilizing("element does not stabilize the flag (residual " +
                           std::to_string(res / img.norm()) + ")");
  }
  return M;
}

}  // namespace

double adjoint_det_on_nilradical(const CMat& g, const Flag& F,
                                 double stab_tol) {
  const Mat M = adjoint_matrix_on_nilradical(g, F, stab_tol);
  return std::abs(M.determinant());
}

double adjoint_spectral_radius_on_nilradical(const CMat& g, const Flag& F,
                                             double stab_tol) {
  const Mat M = adjoint_matrix_on_nilradical(g, F, stab_tol);
  Eigen::EigenSolver<Mat> es(M, false);
  double rho = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    rho = std::max(rho, std::abs(es.eigenvalues()(i)));
  return rho;
}

}  // namespace flagflow
