#include "flagflow/anosov.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

#include "flagflow/densities.hpp"

namespace flagflow {

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (letters.size() != o.letters.size())
    return letters.size() < o.letters.size();
  return letters < o.letters;
}

namespace {

bool all_single_char_labels(const GroupSpec& spec) {
  for (const auto& g : spec.generators)
    if (g.label.size() != 1 || !std::islower((unsigned char)g.label[0]))
      return false;
  return true;
}

std::vector<int> min_rotation(const std::vector<int>& v) {
  std::vector<int> best = v;
  const int L = (int)v.size();
  for (int r = 1; r < L; ++r) {
    std::vector<int> rot(v.begin() + r, v.end());
    rot.insert(rot.end(), v.begin(), v.begin() + r);
    if (rot < best) best = rot;
  }
  return best;
}

bool is_cyclically_reduced(const std::vector<int>& v) {
  const int L = (int)v.size();
  for (int i = 0; i < L; ++i)
    if (v[i] == -v[(i + 1) % L] && L > 1) return false;
  return true;
}

bool is_proper_power(const std::vector<int>& v) {
  const int L = (int)v.size();
  for (int p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool match = true;
    for (int i = p; i < L && match; ++i)
      if (v[i] != v[i % p]) match = false;
    if (match) return true;
  }
  return false;
}

int worker_count_impl() {
  if (const char* env = std::getenv("FLAGFLOW_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : (int)hc;
}

// Index-parallel map with deterministic output order.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count_impl(), std::max(1, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

int worker_count() { return worker_count_impl(); }

std::string word_to_string(const CyclicWord& w, const GroupSpec& spec) {
  const bool compact = all_single_char_labels(spec);
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const int l = w.letters[i];
    const auto& label = spec.generators[std::abs(l) - 1].label;
    if (compact) {
      char c = label[0];
      out.push_back(l > 0 ? c : (char)std::toupper((unsigned char)c));
    } else {
      if (i > 0) out.push_back('.');
      out += label;
      if (l < 0) out += "^-1";
    }
  }
  return out;
}

CyclicWord word_from_string(const std::string& s, const GroupSpec& spec) {
  CyclicWord w;
  auto letter_of = [&](const std::string& label, bool inv) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i)
      if (spec.generators[i].label == label)
        return inv ? -(int)(i + 1) : (int)(i + 1);
    throw ParseError("unknown generator label: " + label);
  };
  if (s.find('.') == std::string::npos && all_single_char_labels(spec)) {
    for (char c : s) {
      const bool inv = std::isupper((unsigned char)c);
      std::string label(1, (char)std::tolower((unsigned char)c));
      w.letters.push_back(letter_of(label, inv));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos
                                                             : dot - pos);
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    w.letters.push_back(letter_of(tok, inv));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

CyclicWord inverse_word(const CyclicWord& w) {
  CyclicWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

std::vector<CyclicWord> enumerate_primitive_classes(int n_generators,
                                                    int maxLen,
                                                    bool exclude_inverses) {
  std::vector<CyclicWord> out;
  const int alphabet = 2 * n_generators;
  auto letter = [&](int i) {
    return i < n_generators ? i + 1 : -(i - n_generators + 1);
  };
  for (int L = 1; L <= maxLen; ++L) {
    std::vector<int> idx(L, 0);
    while (true) {
      std::vector<int> word(L);
      for (int i = 0; i < L; ++i) word[i] = letter(idx[i]);
      if (is_cyclically_reduced(word) && word == min_rotation(word) &&
          !is_proper_power(word)) {
        bool keep = true;
        if (exclude_inverses) {
          std::vector<int> inv;
          for (auto it = word.rbegin(); it != word.rend(); ++it)
            inv.push_back(-*it);
          keep = !(min_rotation(inv) < word);
        }
        if (keep) out.push_back(CyclicWord{word});
      }
      int pos = L - 1;
      while (pos >= 0 && idx[pos] == alphabet - 1) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
    }
  }
  return out;
}

CMat evaluate_word(const GroupSpec& spec, const CyclicWord& w) {
  const int d = spec.d;
  std::vector<CMat> inv_cache(spec.generators.size());
  CMat out = CMat::Identity(d, d);
  for (int l : w.letters) {
    const int i = std::abs(l) - 1;
    if (i < 0 || i >= (int)spec.generators.size())
      throw Error("word letter out of range");
    if (l > 0) {
      out = out * spec.generators[i].matrix;
    } else {
      if (inv_cache[i].size() == 0)
        inv_cache[i] = spec.generators[i].matrix.inverse();
      out = out * inv_cache[i];
    }
    if (out.norm() > 1e150)
      throw MagnitudeOverflow("word evaluation exceeds magnitude guard");
  }
  return out;
}

LimitConeSample limit_cone_sample(const GroupSpec& spec, const ThetaSet& theta,
                                  int maxLen) {
  const auto classes =
      enumerate_primitive_classes((int)spec.generators.size(), maxLen);
  LimitConeSample sample;
  sample.directions.resize(classes.size());
  sample.lengths.resize(classes.size());
  std::vector<char> keep(classes.size(), 0);
  parallel_for((int)classes.size(), [&](int i) {
    const Vec lam = jordan_projection(evaluate_word(spec, classes[i]));
    const Vec proj = project_to_a_theta(lam, theta, spec.d);
    const double n = proj.norm();
    if (n > 1e-12) {
      sample.directions[i] = proj / n;
      sample.lengths[i] = classes[i].length();
      keep[i] = 1;
    }
  });
  LimitConeSample out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (keep[i]) {
      out.directions.push_back(sample.directions[i]);
      out.lengths.push_back(sample.lengths[i]);
    } else {
      ++out.skipped;
    }
  }
  return out;
}

AdmissibilityVerdict is_admissible(const RootSystem& rs, const ThetaSet& theta,
                                   const WeightVector& s,
                                   const LimitConeSample& sample) {
  if (sample.directions.empty())
    throw EmptySample("no nonzero limit cone samples");
  AdmissibilityVerdict v;
  v.n_samples = (int)sample.directions.size();
  v.margin = std::numeric_limits<double>::infinity();
  for (const Vec& dir : sample.directions)
    v.margin = std::min(v.margin, w_s_theta(rs, theta, s, dir));
  v.admissible = v.margin > 0.0;
  return v;
}

std::vector<SpectrumRecord> period_spectrum(const GroupSpec& spec,
                                            const ThetaSet& theta,
                                            const WeightVector& s, int maxLen,
                                            double check_fraction,
                                            double check_tol) {
  const RootSystem rs(spec.d, spec.field);
  const auto classes =
      enumerate_primitive_classes((int)spec.generators.size(), maxLen);
  std::vector<SpectrumRecord> records(classes.size());
  parallel_for((int)classes.size(), [&](int i) {
    SpectrumRecord rec;
    rec.word = classes[i];
    const CMat g = evaluate_word(spec, classes[i]);
    rec.lambda = jordan_projection(g);
    rec.margin_min = std::numeric_limits<double>::infinity();
    rec.proximal = true;
    for (int j : theta) {
      const double m = simple_root(j, rec.lambda);
      rec.margins.push_back(m);
      rec.margin_min = std::min(rec.margin_min, m);
      if (m <= 1e-6) rec.proximal = false;
    }
    rec.period = w_s_theta(rs, theta, s, rec.lambda);
    records[i] = rec;
  });

  if (check_fraction > 0.0) {
    const int n = (int)records.size();
    const int n_check = std::max(1, (int)std::ceil(check_fraction * n));
    const int stride = std::max(1, n / n_check);
    const Section sigma = make_canonical_section(rs, theta, s);
    const auto dvec = theta_to_dvec(theta, spec.d);
    for (int i = 0; i < n; i += stride) {
      if (!records[i].proximal) continue;
      const CMat g = evaluate_word(spec, records[i].word);
      const auto [Fp, Fm] = attracting_repelling_flags(g, dvec, spec.field);
      const double t = cocycle(sigma, Fp, Fm, g);
      const double err = std::abs(t - records[i].period) /
                         std::max(1.0, std::abs(records[i].period));
      if (err > check_tol)
        throw Error("period cross-check failed for word " +
                    word_to_string(records[i].word, spec) + ": " +
                    std::to_string(err));
    }
  }

  auto key = [&](const SpectrumRecord& r) {
    return std::make_pair(r.period, word_to_string(r.word, spec));
  };
  std::sort(records.begin(), records.end(),
            [&](const SpectrumRecord& a, const SpectrumRecord& b) {
              return key(a) < key(b);
            });
  return records;
}

Mat sym_power_embed(const Mat& g, int k) {
  if (g.rows() != 2 || g.cols() != 2)
    throw Error("sym_power_embed expects a 2x2 matrix");
  if (k < 1) throw Error("sym_power_embed expects k >= 1");
  const double a = g(0, 0), b = g(0, 1), c = g(1, 0), dd = g(1, 1);
  auto binom = [](int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double out = 1.0;
    for (int i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
  };
  Mat M = Mat::Zero(k + 1, k + 1);
  // Column j: expansion of (a x + c y)^{k-j} (b x + d y)^j; row i collects
  // the coefficient of x^{k-i} y^i.
  for (int j = 0; j <= k; ++j)
    for (int q = 0; q <= j; ++q)
      for (int p = 0; p <= k - j; ++p) {
        const int i = k - p - q;
        M(i, j) += binom(k - j, p) * std::pow(a, p) *
                   std::pow(c, k - j - p) * binom(j, q) * std::pow(b, q) *
                   std::pow(dd, j - q);
      }
  return M;
}

namespace {

GroupSpec spec_sl3_sym2() {
  Mat A2(2, 2), R(2, 2);
  A2 << 4.0, 0.0, 0.0, 0.25;
  const double t = M_PI / 4.0;
  R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  const Mat B2 = R * A2 * R.transpose();
  GroupSpec spec;
  spec.d = 3;
  spec.field = Field::Real;
  spec.generators.push_back({"a", sym_power_embed(A2, 2).cast<std::complex<double>>()});
  spec.generators.push_back({"b", sym_power_embed(B2, 2).cast<std::complex<double>>()});
  spec.theta = {1, 2};
  spec.notes =
      "two-generator hyperbolic Schottky pair pushed through the degree-2 "
      "symmetric power into SL(3,R); all Jordan projections lie on one ray";
  return spec;
}

GroupSpec spec_sl4_diag() {
  // Cubic symmetric power of a purely hyperbolic SL(2,R) Schottky pair, so
  // every element of the group is proximal with respect to the full flag.
  Mat A2(2, 2), R(2, 2);
  A2 << 2.5, 0.0, 0.0, 0.4;
  const double t = M_PI / 4.0;
  R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  const Mat B2 = R * A2 * R.transpose();
  GroupSpec spec;
  spec.d = 4;
  spec.field = Field::Real;
  spec.generators.push_back(
      {"a", sym_power_embed(A2, 3).cast<std::complex<double>>()});
  spec.generators.push_back(
      {"b", sym_power_embed(B2, 3).cast<std::complex<double>>()});
  spec.theta = {1, 2, 3};
  spec.notes =
      "hyperbolic Schottky pair pushed through the degree-3 symmetric power "
      "into SL(4,R); the first generator is diagonal and every primitive "
      "class is proximal for the full flag";
  return spec;
}

GroupSpec spec_sl3_one_generator() {
  Mat C(3, 3);
  C << 4.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.25;
  GroupSpec spec;
  spec.d = 3;
  spec.field = Field::Real;
  spec.generators.push_back({"c", C.cast<std::complex<double>>()});
  spec.theta = {1};
  spec.notes =
      "one-generator diagonal spec used for the closed-form zeta oracle";
  return spec;
}

}  // namespace

std::vector<std::string> builtin_spec_names() {
  return {"sl3-sym2-schottky", "sl4-diag-schottky", "sl3-one-generator"};
}

GroupSpec builtin_spec(const std::string& name) {
  if (name == "sl3-sym2-schottky") return spec_sl3_sym2();
  if (name == "sl4-diag-schottky") return spec_sl4_diag();
  if (name == "sl3-one-generator") return spec_sl3_one_generator();
  throw Error("unknown builtin spec: " + name);
}

}  // namespace flagflow
