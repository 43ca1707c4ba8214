#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagflow/anosov.hpp"
#include "flagflow/checks.hpp"
#include "flagflow/geometry.hpp"
#include "flagflow/groupspec.hpp"
#include "flagflow/jordan.hpp"
#include "flagflow/zeta.hpp"

using namespace flagflow;
using nlohmann::json;

namespace {

struct Options {
  std::string spec_path;
  std::string builtin;
  std::vector<int> theta;
  std::vector<double> s;
  int max_len = 6;
  double tol = 1e-8;
  uint64_t seed = 7;
  std::string out;
  std::string format = "csv";
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw Error("cannot open output file: " + opt.out);
  f << text;
}

std::string header(const Options& opt, const std::string& command) {
  std::ostringstream os;
  os << "# flagflow " << FLAGFLOW_VERSION << " command=" << command
     << " seed=" << opt.seed << " tol=" << num(opt.tol)
     << " max-len=" << opt.max_len << "\n";
  return os.str();
}

GroupSpec load_spec(const Options& opt) {
  if (!opt.spec_path.empty()) return load_group_spec(opt.spec_path);
  if (!opt.builtin.empty()) return builtin_spec(opt.builtin);
  throw Error("no group spec given (use --spec PATH or --builtin NAME)");
}

ThetaSet resolve_theta(const Options& opt, const GroupSpec& spec) {
  if (opt.theta.empty()) return spec.theta;
  return make_theta(opt.theta, spec.d);
}

WeightVector resolve_s(const Options& opt, const ThetaSet& theta) {
  if (opt.s.empty()) return constant_weight(theta, 1.0);
  if (opt.s.size() != theta.size())
    throw Error("--s needs one value per index in theta");
  WeightVector s;
  for (std::size_t i = 0; i < theta.size(); ++i) s[theta[i]] = opt.s[i];
  return s;
}

void add_common(CLI::App* cmd, Options& opt, bool with_spec = true) {
  if (with_spec) {
    cmd->add_option("--spec", opt.spec_path, "Group spec JSON file");
    cmd->add_option("--builtin", opt.builtin, "Name of a shipped spec");
  }
  cmd->add_option("--theta", opt.theta, "Simple-root indices (default: spec)");
  cmd->add_option("--s", opt.s, "Weight per theta index (default: all 1)");
  cmd->add_option("--max-len", opt.max_len, "Maximum word length");
  cmd->add_option("--tol", opt.tol, "Tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "Seed for randomized checks");
  cmd->add_option("--out", opt.out, "Output path (default: stdout)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

int cmd_roots(const Options& opt, int d, const std::string& field_str) {
  if (d < 2) throw Error("need d >= 2");
  const Field field = field_str == "C" ? Field::Complex : Field::Real;
  const RootSystem rs(d, field);
  if (opt.format == "json") {
    json j;
    j["d"] = d;
    j["field"] = field_name(field);
    j["killing_scale"] = rs.killing_scale();
    j["roots"] = json::array();
    for (int k = 1; k <= d - 1; ++k) {
      // alpha_k and w_k as coefficient vectors on the diagonal coordinates.
      json alpha = json::array(), w = json::array();
      for (int i = 0; i < d; ++i) {
        alpha.push_back(i == k - 1 ? 1.0 : (i == k ? -1.0 : 0.0));
        w.push_back((i < k ? 1.0 : 0.0) - (double)k / d);
      }
      j["roots"].push_back({{"index", k},
                            {"alpha", alpha},
                            {"weight", w},
                            {"m_alpha", m_alpha(rs, k)},
                            {"opposition_index", d - k}});
    }
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << header(opt, "roots");
  os << "index,m_alpha,opposition_index";
  for (int i = 1; i <= d; ++i) os << ",alpha_" << i;
  for (int i = 1; i <= d; ++i) os << ",w_" << i;
  os << "\n";
  for (int k = 1; k <= d - 1; ++k) {
    os << k << "," << m_alpha(rs, k) << "," << (d - k);
    for (int i = 0; i < d; ++i)
      os << "," << num(i == k - 1 ? 1.0 : (i == k ? -1.0 : 0.0));
    for (int i = 0; i < d; ++i)
      os << "," << num((i < k ? 1.0 : 0.0) - (double)k / d);
    os << "\n";
  }
  emit(opt, os.str());
  return 0;
}

int cmd_jordan(const Options& opt, const std::string& word) {
  const GroupSpec spec = load_spec(opt);
  const ThetaSet theta = resolve_theta(opt, spec);
  const CyclicWord w = word_from_string(word, spec);
  const CMat g = evaluate_word(spec, w);
  const Vec lam = jordan_projection(g);
  const auto rep = is_theta_proximal(g, theta, opt.tol);
  if (opt.format == "json") {
    json j;
    j["word"] = word_to_string(w, spec);
    j["lambda"] = std::vector<double>(lam.data(), lam.data() + lam.size());
    j["proximal"] = rep.proximal;
    j["margins"] = rep.margins;
    j["margin_min"] = rep.margin_min;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << header(opt, "jordan") << "word,len";
    for (int i = 1; i <= spec.d; ++i) os << ",lambda_" << i;
    os << ",proximal,margin_min\n";
    os << word_to_string(w, spec) << "," << w.length();
    for (int i = 0; i < spec.d; ++i) os << "," << num(lam(i));
    os << "," << (rep.proximal ? 1 : 0) << "," << num(rep.margin_min) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_flags(const Options& opt, const std::string& word) {
  const GroupSpec spec = load_spec(opt);
  const ThetaSet theta = resolve_theta(opt, spec);
  const CyclicWord w = word_from_string(word, spec);
  const CMat g = evaluate_word(spec, w);
  const auto dvec = theta_to_dvec(theta, spec.d);
  const auto [Fp, Fm] = attracting_repelling_flags(g, dvec, spec.field, opt.tol);
  const double margin = transversality_margin(Fp, Fm);
  auto frame_json = [&](const Flag& F) {
    json rows = json::array();
    for (int i = 0; i < F.frame.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < F.frame.cols(); ++j) {
        if (spec.field == Field::Real)
          row.push_back(F.frame(i, j).real());
        else
          row.push_back(json::array(
              {F.frame(i, j).real(), F.frame(i, j).imag()}));
      }
      rows.push_back(row);
    }
    return rows;
  };
  json j;
  j["word"] = word_to_string(w, spec);
  j["dvec"] = dvec;
  j["transverse"] = is_transverse(Fp, Fm, opt.tol);
  j["transversality_margin"] = margin;
  j["attracting_frame"] = frame_json(Fp);
  j["repelling_frame"] = frame_json(Fm);
  emit(opt, j.dump(2) + "\n");
  return 0;
}

int cmd_periods(const Options& opt) {
  const GroupSpec spec = load_spec(opt);
  const ThetaSet theta = resolve_theta(opt, spec);
  const WeightVector s = resolve_s(opt, theta);
  const RootSystem rs(spec.d, spec.field);
  const auto verdict = is_admissible(
      rs, theta, s, limit_cone_sample(spec, theta, std::min(opt.max_len, 4)));
  const auto records = period_spectrum(spec, theta, s, opt.max_len);
  if (opt.format == "json") {
    json j;
    j["admissible"] = verdict.admissible;
    j["margin"] = verdict.margin;
    j["records"] = json::array();
    for (const auto& r : records)
      j["records"].push_back(
          {{"word", word_to_string(r.word, spec)},
           {"len", r.word.length()},
           {"lambda",
            std::vector<double>(r.lambda.data(),
                                r.lambda.data() + r.lambda.size())},
           {"period", r.period},
           {"margin_min", r.margin_min}});
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << header(opt, "periods");
    os << "word,len";
    for (int i = 1; i <= spec.d; ++i) os << ",lambda_" << i;
    os << ",period,margin_min\n";
    for (const auto& r : records) {
      os << word_to_string(r.word, spec) << "," << r.word.length();
      for (int i = 0; i < spec.d; ++i) os << "," << num(r.lambda(i));
      os << "," << num(r.period) << "," << num(r.margin_min) << "\n";
    }
    emit(opt, os.str());
  }
  if (!verdict.admissible) {
    std::cerr << "admissibility margin " << verdict.margin
              << " is not positive\n";
    return 2;
  }
  return 0;
}

int cmd_cone(const Options& opt) {
  const GroupSpec spec = load_spec(opt);
  const ThetaSet theta = resolve_theta(opt, spec);
  const auto sample = limit_cone_sample(spec, theta, opt.max_len);
  if (opt.format == "json") {
    json j;
    j["skipped"] = sample.skipped;
    j["directions"] = json::array();
    for (std::size_t i = 0; i < sample.directions.size(); ++i) {
      const Vec& v = sample.directions[i];
      j["directions"].push_back(
          {{"len", sample.lengths[i]},
           {"dir", std::vector<double>(v.data(), v.data() + v.size())}});
    }
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << header(opt, "cone");
    os << "# skipped=" << sample.skipped << "\n";
    os << "len";
    for (int i = 1; i <= spec.d; ++i) os << ",dir_" << i;
    os << "\n";
    for (std::size_t i = 0; i < sample.directions.size(); ++i) {
      os << sample.lengths[i];
      for (int k = 0; k < spec.d; ++k) os << "," << num(sample.directions[i](k));
      os << "\n";
    }
    emit(opt, os.str());
  }
  return 0;
}

int cmd_admissible(const Options& opt) {
  const GroupSpec spec = load_spec(opt);
  const ThetaSet theta = resolve_theta(opt, spec);
  const WeightVector s = resolve_s(opt, theta);
  const RootSystem rs(spec.d, spec.field);
  const auto sample = limit_cone_sample(spec, theta, opt.max_len);
  const auto verdict = is_admissible(rs, theta, s, sample);
  json j;
  j["admissible"] = verdict.admissible;
  j["margin"] = verdict.margin;
  j["n_samples"] = verdict.n_samples;
  j["skipped"] = sample.skipped;
  emit(opt, j.dump(2) + "\n");
  return verdict.admissible ? 0 : 2;
}

int cmd_zeta(const Options& opt, double z_re, double z_im,
             const std::string& mode, const std::string& rho_path) {
  ZetaJob job;
  job.spec = load_spec(opt);
  job.theta = resolve_theta(opt, job.spec);
  job.s = resolve_s(opt, job.theta);
  job.z = {z_re, z_im};
  job.maxLen = opt.max_len;
  job.mode = mode == "series" ? ZetaMode::TraceSeries : ZetaMode::Product;
  if (!rho_path.empty()) {
    std::ifstream f(rho_path);
    if (!f) throw Error("cannot open twist file: " + rho_path);
    json j = json::parse(f);
    job.rho_dim = j.at("dim").get<int>();
    for (const auto& [label, rows] : j.at("matrices").items()) {
      CMat M(job.rho_dim, job.rho_dim);
      for (int r = 0; r < job.rho_dim; ++r)
        for (int cix = 0; cix < job.rho_dim; ++cix) {
          const auto& e = rows[r][cix];
          if (e.is_array())
            M(r, cix) = std::complex<double>(e[0].get<double>(),
                                             e[1].get<double>());
          else
            M(r, cix) = e.get<double>();
        }
      job.rho[label] = M;
    }
  }
  const ZetaResult res = zeta_truncated(job);
  if (opt.format == "json") {
    json j;
    j["z"] = {z_re, z_im};
    j["log_zeta"] = {res.log_zeta.real(), res.log_zeta.imag()};
    j["n_classes"] = res.n_classes;
    j["maxLen"] = job.maxLen;
    j["min_period"] = res.min_period;
    j["tail_estimate"] = res.tail_estimate;
    j["empirical_abscissa"] = res.empirical_abscissa;
    j["warnings"] = res.warnings;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << header(opt, "zeta");
    for (const auto& w : res.warnings) os << "# warning: " << w << "\n";
    os << "z_re,z_im,log_zeta_re,log_zeta_im,n_classes,maxLen,tail_estimate\n";
    os << num(z_re) << "," << num(z_im) << "," << num(res.log_zeta.real())
       << "," << num(res.log_zeta.imag()) << "," << res.n_classes << ","
       << job.maxLen << "," << num(res.tail_estimate) << "\n";
    emit(opt, os.str());
  }
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
  return 0;
}

int cmd_contact(const Options& opt, int d, const std::string& field_str) {
  const Field field = field_str == "C" ? Field::Complex : Field::Real;
  const RootSystem rs(d, field);
  ThetaSet theta =
      opt.theta.empty() ? full_theta(d) : make_theta(opt.theta, d);
  Options tmp = opt;
  const WeightVector s = resolve_s(tmp, theta);
  const auto verdicts = contact_test(rs, theta, s);
  const bool regular = is_regular_combinatorial(rs, theta, s);
  if (opt.format == "json") {
    json j;
    j["d"] = d;
    j["field"] = field_name(field);
    j["theta"] = theta;
    j["regular"] = regular;
    j["contact"] = json::array();
    for (const auto& [k, v] : verdicts)
      j["contact"].push_back({{"index", k}, {"contact", v}});
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << header(opt, "contact");
    os << "# regular=" << (regular ? 1 : 0) << "\n";
    os << "index,s,contact\n";
    for (const auto& [k, v] : verdicts)
      os << k << "," << num(s.at(k)) << "," << (v ? 1 : 0) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_check(const Options& opt, const std::string& suite) {
  const auto results = run_suite(suite, opt.seed);
  emit(opt, format_report(suite, opt.seed, results));
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag-space invariants for discrete subgroups of SL(d)"};
  app.require_subcommand(1);

  Options opt;
  int d = 3;
  std::string field_str = "R";
  std::string word = "a";
  double z_re = 1.0, z_im = 0.0;
  std::string mode = "product";
  std::string rho_path;
  std::string suite = "all";

  auto* roots = app.add_subcommand("roots", "Root system tables");
  roots->add_option("--d", d, "Matrix size")->required();
  roots->add_option("--field", field_str, "R or C")
      ->check(CLI::IsMember({"R", "C"}));
  add_common(roots, opt, false);

  auto* jordan = app.add_subcommand("jordan", "Jordan projection of a word");
  jordan->add_option("--word", word, "Word in the generators")->required();
  add_common(jordan, opt);

  auto* flags = app.add_subcommand("flags", "Attracting/repelling flag pair");
  flags->add_option("--word", word, "Word in the generators")->required();
  add_common(flags, opt);

  auto* periods = app.add_subcommand("periods", "Period spectrum table");
  add_common(periods, opt);

  auto* cone = app.add_subcommand("cone", "Sampled limit-cone directions");
  add_common(cone, opt);

  auto* admissible =
      app.add_subcommand("admissible", "Sampled admissibility certificate");
  add_common(admissible, opt);

  auto* zeta = app.add_subcommand("zeta", "Truncated twisted zeta value");
  zeta->add_option("--z-re", z_re, "Re(z)")->required();
  zeta->add_option("--z-im", z_im, "Im(z)");
  zeta->add_option("--mode", mode, "product or series")
      ->check(CLI::IsMember({"product", "series"}));
  zeta->add_option("--rho", rho_path, "Twist JSON {dim, matrices:{label: rows}}");
  add_common(zeta, opt);

  auto* contact = app.add_subcommand("contact", "Contact/regularity verdicts");
  contact->add_option("--d", d, "Matrix size")->required();
  contact->add_option("--field", field_str, "R or C")
      ->check(CLI::IsMember({"R", "C"}));
  add_common(contact, opt, false);

  auto* check = app.add_subcommand("check", "Run invariant suites");
  check->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember(suite_names()));
  add_common(check, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(opt, d, field_str);
    if (jordan->parsed()) return cmd_jordan(opt, word);
    if (flags->parsed()) return cmd_flags(opt, word);
    if (periods->parsed()) return cmd_periods(opt);
    if (cone->parsed()) return cmd_cone(opt);
    if (admissible->parsed()) return cmd_admissible(opt);
    if (zeta->parsed()) return cmd_zeta(opt, z_re, z_im, mode, rho_path);
    if (contact->parsed()) return cmd_contact(opt, d, field_str);
    if (check->parsed()) return cmd_check(opt, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
