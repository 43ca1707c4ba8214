#pragma once

#include <string>
#include <vector>

#include "flagflow/jordan.hpp"
#include "flagflow/rootdata.hpp"

namespace flagflow {

struct GeneratorSpec {
  std::string label;
  CMat matrix;
};

// Free (Schottky) group specification: generators as determinant-one
// matrices.
struct GroupSpec {
  int d = 0;
  Field field = Field::Real;
  std::vector<GeneratorSpec> generators;
  ThetaSet theta;
  std::string notes;
};

// Letters are +-(i+1) for generator index i; words are reduced and
// cyclically reduced.
struct CyclicWord {
  std::vector<int> letters;

  int length() const { return (int)letters.size(); }
  bool operator==(const CyclicWord& o) const { return letters == o.letters; }
  bool operator<(const CyclicWord& o) const;
};

std::string word_to_string(const CyclicWord& w, const GroupSpec& spec);
CyclicWord word_from_string(const std::string& s, const GroupSpec& spec);
CyclicWord inverse_word(const CyclicWord& w);

// One representative (lexicographically minimal rotation) per rotation class
// of cyclically reduced words of length 1..maxLen, proper powers excluded.
// With exclude_inverses, one of {[w], [w^-1]} is kept.
std::vector<CyclicWord> enumerate_primitive_classes(int n_generators,
                                                    int maxLen,
                                                    bool exclude_inverses = false);

CMat evaluate_word(const GroupSpec& spec, const CyclicWord& w);

struct SpectrumRecord {
  CyclicWord word;
  Vec lambda;
  std::vector<double> margins;
  double margin_min = 0.0;
  double period = 0.0;
  bool proximal = false;
};

struct LimitConeSample {
  std::vector<Vec> directions;  // unit vectors p_Theta(lambda)/|.|
  std::vector<int> lengths;
  int skipped = 0;  // words with lambda = 0
};

LimitConeSample limit_cone_sample(const GroupSpec& spec, const ThetaSet& theta,
                                  int maxLen);

struct AdmissibilityVerdict {
  bool admissible = false;
  double margin = 0.0;  // min of w^s_Theta over normalized samples
  int n_samples = 0;
};

// Sampled certificate only: checks w^s_Theta on every normalized sample
// direction (the minimum of a linear functional over the sampled cone).
AdmissibilityVerdict is_admissible(const RootSystem& rs, const ThetaSet& theta,
                                   const WeightVector& s,
                                   const LimitConeSample& sample);

// Sorted by (period, word); parallel over words, deterministic merge.
// check_fraction in [0,1] additionally verifies that fraction of the records
// against the density cocycle at the fixed flags.
std::vector<SpectrumRecord> period_spectrum(const GroupSpec& spec,
                                            const ThetaSet& theta,
                                            const WeightVector& s, int maxLen,
                                            double check_fraction = 0.0,
                                            double check_tol = 1e-7);

// Action of a 2x2 matrix on degree-k binary forms in the monomial basis; a
// group homomorphism SL(2,R) -> SL(k+1,R).
Mat sym_power_embed(const Mat& g, int k);

// Worker count: FLAGFLOW_THREADS when set, else hardware concurrency.
int worker_count();

// Example specifications shipped with the tool (also mirrored as JSON files
// under data/specs).
GroupSpec builtin_spec(const std::string& name);
std::vector<std::string> builtin_spec_names();

}  // namespace flagflow
