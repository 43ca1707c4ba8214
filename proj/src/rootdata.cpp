#include "flagflow/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace flagflow {

RootSystem::RootSystem(int d_, Field f) : d(d_), field(f) {
  if (d < 2) throw Error("RootSystem requires d >= 2");
}

Vec make_cartan(const Vec& entries, double tol) {
  if (std::abs(entries.sum()) > tol)
    throw Error("CartanVector entries must sum to zero");
  return entries;
}

ThetaSet make_theta(std::vector<int> idx, int d) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int j : idx)
    if (j < 1 || j > d - 1) throw Error("theta index out of range");
  return idx;
}

ThetaSet full_theta(int d) {
  ThetaSet t;
  for (int j = 1; j <= d - 1; ++j) t.push_back(j);
  return t;
}

ThetaSet opposition_theta(const ThetaSet& theta, int d) {
  std::vector<int> out;
  for (int j : theta) out.push_back(d - j);
  return make_theta(out, d);
}

std::vector<int> theta_blocks(const ThetaSet& theta, int d) {
  std::vector<int> blocks(d);
  int b = 0;
  std::size_t t = 0;
  for (int i = 0; i < d; ++i) {
    blocks[i] = b;
    // i is 0-based; boundary after coordinate i corresponds to index i+1
    if (t < theta.size() && theta[t] == i + 1) {
      ++b;
      ++t;
    }
  }
  return blocks;
}

std::vector<int> theta_to_dvec(const ThetaSet& theta, int d) {
  std::vector<int> dvec;
  int prev = 0;
  for (int j : theta) {
    dvec.push_back(j - prev);
    prev = j;
  }
  dvec.push_back(d - prev);
  return dvec;
}

ThetaSet dvec_to_theta(const std::vector<int>& dvec) {
  ThetaSet theta;
  int cum = 0;
  for (std::size_t i = 0; i + 1 < dvec.size(); ++i) {
    cum += dvec[i];
    theta.push_back(cum);
  }
  return theta;
}

double simple_root(int j, const Vec& X) {
  const int d = (int)X.size();
  if (j < 1 || j > d - 1) throw Error("simple_root index out of range");
  return X(j - 1) - X(j);
}

double fundamental_weight(int j, const Vec& X) {
  const int d = (int)X.size();
  if (j < 1 || j > d - 1) throw Error("fundamental_weight index out of range");
  return X.head(j).sum();
}

double rho_theta(const RootSystem& rs, const ThetaSet& theta, const Vec& X) {
  const int d = rs.d;
  if ((int)X.size() != d) throw Error("dimension mismatch in rho_theta");
  const std::vector<int> blocks = theta_blocks(theta, d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (blocks[i] != blocks[j]) sum += X(i) - X(j);
  return 0.5 * rs.root_space_dim() * sum;
}

int m_alpha(const RootSystem& rs, int j) {
  if (j < 1 || j > rs.d - 1) throw Error("m_alpha index out of range");
  // Evaluate both functionals on a vector where w_{alpha_j} is nonzero.
  Vec X = Vec::Zero(rs.d);
  for (int i = 0; i < rs.d; ++i) X(i) = rs.d - 1 - 2.0 * i;  // strictly dominant
  X.array() -= X.mean();
  const double num = 2.0 * rho_theta(rs, ThetaSet{j}, X);
  const double den = fundamental_weight(j, X);
  const double ratio = num / den;
  const double rounded = std::round(ratio);
  if (rounded <= 0 || std::abs(ratio - rounded) > 1e-10)
    throw NonIntegerRatio("m_alpha ratio " + std::to_string(ratio) +
                          " is not a positive integer");
  return (int)rounded;
}

double killing_form(const RootSystem& rs, const CMat& X, const CMat& Y) {
  if (X.rows() != rs.d || Y.rows() != rs.d || X.cols() != rs.d ||
      Y.cols() != rs.d)
    throw Error("killing_form dimension mismatch");
  if (std::abs(X.trace()) > 1e-8 * (1.0 + X.norm()) ||
      std::abs(Y.trace()) > 1e-8 * (1.0 + Y.norm()))
    throw Error("killing_form requires traceless input");
  return rs.killing_scale() * (X * Y).trace().real();
}

namespace {

// Real-linear basis of sl(d,k) viewed as a real Lie algebra.
std::vector<CMat> sl_basis(const RootSystem& rs) {
  const int d = rs.d;
  std::vector<CMat> basis;
  const std::complex<double> I(0.0, 1.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      CMat E = CMat::Zero(d, d);
      E(i, j) = 1.0;
      basis.push_back(E);
      if (rs.field == Field::Complex) basis.push_back(I * E);
    }
  for (int i = 0; i < d - 1; ++i) {
    CMat H = CMat::Zero(d, d);
    H(i, i) = 1.0;
    H(i + 1, i + 1) = -1.0;
    basis.push_back(H);
    if (rs.field == Field::Complex) basis.push_back(I * H);
  }
  return basis;
}

}  // namespace

double killing_form_ad_oracle(const RootSystem& rs, const CMat& X,
                              const CMat& Y) {
  const std::vector<CMat> basis = sl_basis(rs);
  const int n = (int)basis.size();
  // Gram matrix of the real inner product Re tr(A B^*) on the basis, used to
  // expand ad coefficients.
  Mat G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G(i, j) = (basis[i] * basis[j].adjoint()).trace().real();
  Eigen::LDLT<Mat> solver(G);
  auto ad_matrix = [&](const CMat& A) {
    Mat M(n, n);
    for (int k = 0; k < n; ++k) {
      const CMat br = A * basis[k] - basis[k] * A;
      Vec rhs(n);
      for (int i = 0; i < n; ++i)
        rhs(i) = (br * basis[i].adjoint()).trace().real();
      M.col(k) = solver.solve(rhs);
    }
    return M;
  };
  return (ad_matrix(X) * ad_matrix(Y)).trace();
}

Vec project_to_a_theta(const Vec& X, const ThetaSet& theta, int d) {
  const std::vector<int> blocks = theta_blocks(theta, d);
  const int r = blocks.back() + 1;
  Vec sums = Vec::Zero(r);
  Vec counts = Vec::Zero(r);
  for (int i = 0; i < d; ++i) {
    sums(blocks[i]) += X(i);
    counts(blocks[i]) += 1.0;
  }
  Vec out(d);
  for (int i = 0; i < d; ++i) out(i) = sums(blocks[i]) / counts(blocks[i]);
  return out;
}

Vec opposition(const Vec& X) {
  return -X.reverse();
}

double w_s_theta(const RootSystem& rs, const ThetaSet& theta,
                 const WeightVector& s, const Vec& X) {
  double out = 0.0;
  for (int j : theta) {
    const auto it = s.find(j);
    const double sj = it == s.end() ? 0.0 : it->second;
    out += sj * m_alpha(rs, j) * fundamental_weight(j, X);
  }
  return out;
}

WeightVector constant_weight(const ThetaSet& theta, double value) {
  WeightVector s;
  for (int j : theta) s[j] = value;
  return s;
}

}  // namespace flagflow
