#include "flagflow/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace flagflow {

namespace {

using cd = std::complex<double>;

CVec eigenvalues_of(const CMat& g) {
  Eigen::ComplexEigenSolver<CMat> es(g, false);
  if (es.info() != Eigen::Success)
    throw IllConditioned("eigenvalue solver failed");
  return es.eigenvalues();
}

// Deterministic ordering: decreasing modulus, then real part, then imaginary
// part.
std::vector<int> sort_by_modulus(const CVec& w) {
  std::vector<int> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double ma = std::abs(w(a)), mb = std::abs(w(b));
    if (ma != mb) return ma > mb;
    if (w(a).real() != w(b).real()) return w(a).real() > w(b).real();
    return w(a).imag() > w(b).imag();
  });
  return idx;
}

// Null space of A of expected dimension m via SVD.
CMat null_space(const CMat& A, int m) {
  Eigen::JacobiSVD<CMat> svd(A, Eigen::ComputeFullV);
  const int cols = (int)A.cols();
  return svd.matrixV().rightCols(m).eval().block(0, 0, cols, m);
}

// Generalized eigenspace attached to the eigenvalue indices `sel`: null space
// of the normalized product of (g - w_i I) over the selected indices, one
// factor per occurrence (so the kernel has the algebraic multiplicity).
CMat generalized_eigenspace(const CMat& g, const CVec& w,
                            const std::vector<int>& sel) {
  const int d = (int)g.rows();
  if ((int)sel.size() == d) return CMat::Identity(d, d);
  CMat P = CMat::Identity(d, d);
  for (int i : sel) {
    P = P * (g - w(i) * CMat::Identity(d, d));
    const double n = P.norm();
    if (n > 0) P /= n;
  }
  return null_space(P, (int)sel.size());
}

CMat realify(const CMat& B) {
  CMat R(B.rows(), 2 * B.cols());
  R << B.real().cast<cd>(), B.imag().cast<cd>();
  return orthonormalize(R, 1e-9);
}

}  // namespace

CMat make_group_element(const CMat& g, double tol) {
  if (std::abs(g.determinant() - cd(1.0, 0.0)) > tol)
    throw Error("matrix is not in SL(d,k): |det - 1| too large");
  return g;
}

Vec jordan_projection(const CMat& g) {
  const CVec w = eigenvalues_of(g);
  std::vector<double> logs;
  for (int i = 0; i < w.size(); ++i) {
    const double m = std::abs(w(i));
    if (m <= 0)
      throw IllConditioned(
          "eigenvalue modulus underflowed in jordan_projection; the spectral "
          "spread exceeds double precision (try a shorter word)");
    logs.push_back(std::log(m));
  }
  std::sort(logs.begin(), logs.end(), std::greater<double>());
  Vec out((int)logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) out((int)i) = logs[i];
  return out;
}

JordanData jordan_decomposition(const CMat& g, double cluster_tol) {
  const int d = (int)g.rows();
  const CVec w = eigenvalues_of(g);
  const double scale = w.cwiseAbs().maxCoeff();

  // Transitive clustering of nearby eigenvalues.
  std::vector<int> cluster(d, -1);
  int n_clusters = 0;
  for (int i = 0; i < d; ++i) {
    if (cluster[i] >= 0) continue;
    cluster[i] = n_clusters;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < d; ++a) {
        if (cluster[a] != n_clusters) continue;
        for (int b = 0; b < d; ++b) {
          if (cluster[b] >= 0) continue;
          if (std::abs(w(a) - w(b)) <= cluster_tol * scale) {
            cluster[b] = n_clusters;
            grew = true;
          }
        }
      }
    }
    ++n_clusters;
  }

  std::vector<std::vector<int>> members(n_clusters);
  for (int i = 0; i < d; ++i) members[cluster[i]].push_back(i);
  std::vector<cd> reps(n_clusters);
  for (int c = 0; c < n_clusters; ++c) {
    cd sum = 0.0;
    for (int i : members[c]) sum += w(i);
    reps[c] = sum / (double)members[c].size();
  }

  CMat S(d, d);
  CVec diag_s(d);
  int col = 0;
  for (int c = 0; c < n_clusters; ++c) {
    const CMat B = generalized_eigenspace(g, w, members[c]);
    for (int k = 0; k < B.cols(); ++k) {
      S.col(col) = B.col(k);
      diag_s(col) = reps[c];
      ++col;
    }
  }
  Eigen::PartialPivLU<CMat> lu(S);
  const CMat Sinv = lu.inverse();
  const double cond_proxy = S.norm() * Sinv.norm();
  if (!Sinv.allFinite() || cond_proxy > 1e12)
    throw IllConditioned("generalized eigenbasis is ill conditioned");

  CVec diag_h(d), diag_e(d);
  for (int i = 0; i < d; ++i) {
    const double m = std::abs(diag_s(i));
    diag_h(i) = m;
    diag_e(i) = diag_s(i) / m;
  }
  JordanData out;
  out.hyperbolic = S * diag_h.asDiagonal() * Sinv;
  out.elliptic = S * diag_e.asDiagonal() * Sinv;
  const CMat h_inv = S * diag_h.cwiseInverse().asDiagonal() * Sinv;
  const CMat e_inv = S * diag_e.cwiseInverse().asDiagonal() * Sinv;
  out.unipotent = h_inv * e_inv * g;

  const double gn = std::max(1.0, g.norm());
  const double recon =
      (out.elliptic * out.hyperbolic * out.unipotent - g).norm() / gn;
  auto comm = [&](const CMat& A, const CMat& B) {
    return (A * B - B * A).norm() / gn;
  };
  const double worst = std::max(
      {recon, comm(out.elliptic, out.hyperbolic),
       comm(out.elliptic, out.unipotent), comm(out.hyperbolic, out.unipotent)});
  if (worst > 1e-7)
    throw IllConditioned("jordan_decomposition residual " +
                         std::to_string(worst));

  for (int i = 0; i < d; ++i) out.eigen_moduli.push_back(std::abs(w(i)));
  std::sort(out.eigen_moduli.begin(), out.eigen_moduli.end(),
            std::greater<double>());
  out.lambda = jordan_projection(g);
  return out;
}

double proximality_fn(int j, const CMat& g) {
  return simple_root(j, jordan_projection(g));
}

double jacobian_class_fn(const RootSystem& rs, const ThetaSet& theta,
                         const CMat& g) {
  const Vec lam = jordan_projection(g);
  return 2.0 * rho_theta(rs, theta, project_to_a_theta(lam, theta, rs.d));
}

ProximalityReport is_theta_proximal(const CMat& g, const ThetaSet& theta,
                                    double tol) {
  const Vec lam = jordan_projection(g);
  ProximalityReport rep;
  rep.proximal = true;
  rep.margin_min = std::numeric_limits<double>::infinity();
  for (int j : theta) {
    const double m = simple_root(j, lam);
    rep.margins.push_back(m);
    rep.margin_min = std::min(rep.margin_min, m);
    if (m <= tol) rep.proximal = false;
  }
  return rep;
}

std::pair<Flag, Flag> attracting_repelling_flags(const CMat& g,
                                                 const std::vector<int>& dvec,
                                                 Field field, double tol) {
  const int d = (int)g.rows();
  FlagType type{dvec};
  if (type.d() != d) throw Error("dimension vector does not sum to d");
  const CVec w = eigenvalues_of(g);
  const std::vector<int> order = sort_by_modulus(w);

  const auto cums = type.cumdims();
  for (std::size_t b = 0; b + 1 < cums.size(); ++b) {
    const int c = cums[b];
    const double gap =
        std::log(std::abs(w(order[c - 1]))) - std::log(std::abs(w(order[c])));
    if (gap <= tol)
      throw NotProximal("modulus gap " + std::to_string(gap) +
                        " at block boundary " + std::to_string(c));
  }

  std::vector<CMat> blocks;
  int start = 0;
  for (int p : dvec) {
    std::vector<int> sel(order.begin() + start, order.begin() + start + p);
    CMat B = generalized_eigenspace(g, w, sel);
    if (field == Field::Real) {
      B = realify(B);
      if ((int)B.cols() != p)
        throw IllConditioned("realified eigenspace has wrong dimension");
    }
    blocks.push_back(B);
    start += p;
  }

  Flag attracting = flag_from_blocks(type, field, blocks);
  std::vector<CMat> rev(blocks.rbegin(), blocks.rend());
  Flag repelling = flag_from_blocks(type.reversed(), field, rev);
  return {attracting, repelling};
}

}  // namespace flagflow
