// potts-atlas: command-line front end for the exact boundary classification
// of the q-state Potts model on random planar maps. Every subcommand prints
// table, CSV, or JSON; all data goes to stdout and is byte-stable for fixed
// flags, timing diagnostics go to stderr.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "potts/classify.hpp"
#include "potts/criticality.hpp"
#include "potts/duality.hpp"
#include "potts/sheets.hpp"

using nlohmann::json;
using namespace potts;

namespace {

enum class Format { Table, Csv, Json };

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Doubles are rounded to 12 significant digits before serialization so the
// JSON numbers match the documented precision of the text formats.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

std::string exact_str(const CycloNumber& v) {
  if (auto r = v.as_rational()) return r->str();
  std::string s = "zeta" + std::to_string(v.order()) + ":[";
  const auto& coeffs = v.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += coeffs[i].str();
  }
  s += ']';
  return s;
}

json cyclo_json(const CycloNumber& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
  const auto approx = v.to_complex();
  return json{{"order", v.order()},
              {"coeffs", coeffs},
              {"approx_re", round12(approx.real())},
              {"approx_im", round12(approx.imag())}};
}

json cyclo_json(const CycloReal& v) { return cyclo_json(v.value()); }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    return out;
  };
  std::cout << line(header) << '\n';
  for (const auto& row : rows) std::cout << line(row) << '\n';
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(widths[i] - cells[i].size(), ' ');
    }
    return out;
  };
  std::cout << line(header) << '\n';
  for (const auto& row : rows) std::cout << line(row) << '\n';
}

void emit(Format format, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows, const json& doc) {
  switch (format) {
    case Format::Table: print_table(header, rows); break;
    case Format::Csv: print_csv(header, rows); break;
    case Format::Json: std::cout << doc.dump(2) << '\n'; break;
  }
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "'");
}

Series parse_series(const std::string& name) {
  if (name == "S1") return Series::S1;
  if (name == "S2") return Series::S2;
  if (name == "C2") return Series::C2;
  throw UsageError("unknown series '" + name + "' (expected S1, S2 or C2)");
}

unsigned default_jobs() {
  if (const char* env = std::getenv("POTTS_ATLAS_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

ThetaParam make_param(long n, long m) {
  if (n <= 0 || m <= 0) throw UsageError("n and m must be positive");
  if (n >= m) throw UsageError("need n < m");
  if (std::gcd(n, m) != 1) throw UsageError("n and m must be coprime");
  return ThetaParam(static_cast<unsigned>(n), static_cast<unsigned>(m));
}

std::string case_name(CaseTag tag) {
  return tag == CaseTag::Case1 ? "1" : "2";
}

int cmd_allowed_q(long max_m, Format format) {
  if (max_m < 2) throw UsageError("max-m must be >= 2");
  const auto entries = allowed_q(static_cast<unsigned>(max_m));

  std::vector<std::vector<std::string>> rows;
  json results = json::array();
  for (const auto& e : entries) {
    rows.push_back({std::to_string(e.param.n), std::to_string(e.param.m),
                    case_name(e.param.kase), exact_str(e.q.value()),
                    fmt12(e.q_approx)});
    results.push_back(json{{"n", e.param.n},
                           {"m", e.param.m},
                           {"case", case_name(e.param.kase)},
                           {"q", cyclo_json(e.q)},
                           {"q_approx", round12(e.q_approx)}});
  }
  const json doc{{"command", "allowed-q"},
                 {"parameters", json{{"max_m", max_m}}},
                 {"results", results}};
  emit(format, {"n", "m", "case", "q", "q_approx"}, rows, doc);
  return kExitOk;
}

int cmd_allowed_p(long n, long m, bool all, Format format) {
  const ThetaParam param = make_param(n, m);
  const auto sols = allowed_p(param);

  std::vector<std::vector<std::string>> rows;
  json results = json::array();
  for (const auto& s : sols) {
    if (!all && !s.physical) continue;
    rows.push_back({std::string(series_name(s.series)), std::to_string(s.M),
                    exact_str(s.p.value()), fmt12(s.p_approx),
                    s.physical ? "yes" : "no", std::to_string(s.termination_pos),
                    std::to_string(s.termination_neg),
                    std::to_string(s.termination_pos - s.termination_neg + 1)});
    results.push_back(json{{"series", series_name(s.series)},
                           {"M", s.M},
                           {"p", cyclo_json(s.p)},
                           {"p_approx", round12(s.p_approx)},
                           {"physical", s.physical},
                           {"termination_pos", s.termination_pos},
                           {"termination_neg", s.termination_neg}});
  }
  const json doc{
      {"command", "allowed-p"},
      {"parameters", json{{"n", n}, {"m", m}, {"all", all}}},
      {"results", results}};
  emit(format,
       {"series", "M", "p", "p_approx", "physical", "term_pos", "term_neg",
        "sheets"},
       rows, doc);
  return kExitOk;
}

int cmd_coeffs(long n, long m, const std::string& series_str, long M,
               const std::string& range_str, Format format) {
  const ThetaParam param = make_param(n, m);
  const Series series = parse_series(series_str);
  if (series == Series::C2 && param.kase == CaseTag::Case1)
    throw UsageError("C2 requires Case 2");
  if (series != Series::C2 && param.kase == CaseTag::Case2)
    throw UsageError("S1/S2 require Case 1");
  const long lo_M = (series == Series::S2) ? 0 : 1;
  if (M < lo_M || M > m - 1) throw UsageError("M out of range for the series");

  const auto sols = allowed_p(param);
  const BoundarySolution* sol = nullptr;
  for (const auto& s : sols) {
    if (s.series == series && s.M == M) sol = &s;
  }
  if (!sol) throw UsageError("no solution at the requested series index");

  LabelRange range{sol->termination_neg, sol->termination_pos};
  if (!range_str.empty()) {
    const auto sep = range_str.find("..");
    if (sep == std::string::npos)
      throw UsageError("range must look like LO..HI");
    try {
      range.lo = std::stol(range_str.substr(0, sep));
      range.hi = std::stol(range_str.substr(sep + 2));
    } catch (const std::exception&) {
      throw UsageError("range must look like LO..HI");
    }
    if (range.lo > range.hi) throw UsageError("range must have LO <= HI");
  }

  const SheetContext ctx(param);
  const auto table = ctx.closed_form_table(sol->p, range);

  std::vector<std::vector<std::string>> rows;
  json results = json::array();
  for (long label = table.lo(); label <= table.hi(); ++label) {
    const auto& e = table.at(label);
    const std::string kind = e.kind == SheetKind::Rho ? "rho" : "delta";
    rows.push_back({std::to_string(label), kind, exact_str(e.value.value()),
                    fmt12(e.value.to_double()), exact_str(e.alpha.value()),
                    fmt12(e.alpha.to_double())});
    results.push_back(json{{"label", label},
                           {"kind", kind},
                           {"value", cyclo_json(e.value)},
                           {"alpha", cyclo_json(e.alpha)}});
  }
  const json doc{{"command", "coeffs"},
                 {"parameters", json{{"n", n},
                                     {"m", m},
                                     {"series", series_name(series)},
                                     {"M", M},
                                     {"p", cyclo_json(sol->p)},
                                     {"range_lo", range.lo},
                                     {"range_hi", range.hi}}},
                 {"results", results}};
  emit(format, {"label", "kind", "value", "value_approx", "alpha", "alpha_approx"},
       rows, doc);
  return kExitOk;
}

int cmd_exponents(long n, long m, Format format) {
  const ThetaParam param = make_param(n, m);
  const auto r = exponent_result(param);
  const auto parts = degree_decomposition(param);

  const std::vector<std::string> header{
      "n", "m", "case", "sheets", "disc_degree", "sqrt_cuts",
      "collided_pairs", "critical_exponent", "string_exponent"};
  std::vector<std::vector<std::string>> rows{
      {std::to_string(param.n), std::to_string(param.m), case_name(param.kase),
       std::to_string(r.sheet_count), std::to_string(r.disc_degree),
       std::to_string(r.sqrt_cut_count), std::to_string(parts.collided_pairs),
       r.critical_exponent.str(), r.string_exponent.str()}};
  const json doc{{"command", "exponents"},
                 {"parameters", json{{"n", n}, {"m", m}}},
                 {"results",
                  json::array({json{{"case", case_name(param.kase)},
                                    {"sheets", r.sheet_count},
                                    {"disc_degree", r.disc_degree},
                                    {"sqrt_cuts", r.sqrt_cut_count},
                                    {"collided_pairs", parts.collided_pairs},
                                    {"critical_exponent", r.critical_exponent.str()},
                                    {"string_exponent", r.string_exponent.str()},
                                    {"critical_exponent_approx",
                                     round12(r.critical_exponent.to_double())},
                                    {"string_exponent_approx",
                                     round12(r.string_exponent.to_double())}}})}};
  emit(format, header, rows, doc);
  return kExitOk;
}

int cmd_scan(long max_m, long target, unsigned jobs, bool prefilter,
             Format format) {
  if (max_m < 2) throw UsageError("max-m must be >= 2");
  if (target < 2) throw UsageError("target must be >= 2");

  const auto start = std::chrono::steady_clock::now();
  const auto result =
      scan_integer_p(static_cast<unsigned>(max_m), target, jobs, prefilter);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  std::vector<std::vector<std::string>> rows;
  json hits = json::array();
  for (const auto& h : result.hits) {
    rows.push_back({std::to_string(h.param.n), std::to_string(h.param.m),
                    case_name(h.param.kase), std::string(series_name(h.series)),
                    std::to_string(h.M), fmt12(h.q_approx)});
    hits.push_back(json{{"n", h.param.n},
                        {"m", h.param.m},
                        {"case", case_name(h.param.kase)},
                        {"series", series_name(h.series)},
                        {"M", h.M},
                        {"q_approx", round12(h.q_approx)}});
  }
  const json doc{{"command", "scan"},
                 {"parameters",
                  json{{"max_m", max_m}, {"target", target}, {"jobs", jobs}}},
                 {"results", hits},
                 {"summary", json{{"pairs_scanned", result.pairs_scanned},
                                  {"candidates_tested", result.candidates_tested},
                                  {"hits", result.hits.size()}}}};
  emit(format, {"n", "m", "case", "series", "M", "q_approx"}, rows, doc);
  if (format != Format::Json) {
    std::cout << "scanned " << result.pairs_scanned << " pairs, "
              << result.candidates_tested << " candidates, "
              << result.hits.size() << " hits\n";
  }
  std::cerr << "scan wall time: " << fmt12(elapsed.count()) << " s\n";
  return kExitOk;
}

int cmd_duality_words(long length, bool verify, Format format) {
  if (length < 0) throw UsageError("length must be >= 0");
  if (verify && length > static_cast<long>(kExpansionLengthCap))
    throw UsageError("length cap is 12 for --verify");
  if (length > static_cast<long>(kWordLengthCap))
    throw UsageError("length cap is 14");
  const unsigned n = static_cast<unsigned>(length);

  if (!verify) {
    const auto words = allowed_words(n);
    std::vector<std::vector<std::string>> rows;
    json list = json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
      rows.push_back({std::to_string(i), words[i].str()});
      list.push_back(words[i].str());
    }
    const json doc{{"command", "duality-words"},
                   {"parameters", json{{"length", length}, {"verify", false}}},
                   {"results", list},
                   {"summary", json{{"count", words.size()}}}};
    emit(format, {"index", "word"}, rows, doc);
    if (format != Format::Json)
      std::cout << words.size() << " allowed words of length " << n << '\n';
    return kExitOk;
  }

  if (n == 0) {
    // The empty word contributes 1 to the single empty string.
    std::cout << "PASS 1 strings\n";
    return kExitOk;
  }
  const auto expansion = expand_word_sum(n, default_jobs());
  const std::size_t total = expansion.string_count();
  std::optional<std::size_t> first_mismatch;
  for (std::size_t idx = 0; idx < total && !first_mismatch; ++idx) {
    const auto sigma = WordExpansion::sigma_from_index(n, idx);
    const CycloNumber brute = expansion.coefficient_by_index(idx);
    if (brute != coefficient_closed_form(sigma)) {
      first_mismatch = idx;
      break;
    }
    // Re(coefficient) equals the boundary weight: compare via 2*Re.
    const CycloNumber twice_re = brute + brute.conjugate();
    const CycloNumber twice_weight =
        CycloNumber::from_rational(3, new_weight(sigma) * BigRational(2));
    if (twice_re != twice_weight) first_mismatch = idx;
  }
  const std::size_t expected_words = (n == 0) ? 1 : (1ull << (n - 1));
  if (allowed_words(n).size() != expected_words) first_mismatch = 0;

  if (first_mismatch) {
    const auto sigma = WordExpansion::sigma_from_index(n, *first_mismatch);
    std::string s;
    for (int v : sigma) s += std::to_string(v);
    std::cout << "FAIL at string " << s << " (index " << *first_mismatch
              << ")\n";
    return kExitVerifyFailed;
  }
  std::cout << "PASS " << total << " strings\n";
  return kExitOk;
}

int cmd_duality_beta(const std::string& model_str, double beta, Format format) {
  Model model;
  if (model_str == "ising") {
    model = Model::Ising;
  } else if (model_str == "potts3") {
    model = Model::Potts3;
  } else {
    throw UsageError("model must be 'ising' or 'potts3'");
  }
  if (!(beta > 0.0)) throw UsageError("beta must be positive");

  const DualityMap map = coupling_map(model, beta, 1.0);
  const double involution = dual_beta(model, map.beta_dual);
  const double residual = std::abs(involution - beta);

  std::vector<std::string> header{"model", "beta", "beta_dual", "residual",
                                  "lambda", "coupling_scale"};
  std::vector<std::string> row{model_str, fmt12(beta), fmt12(map.beta_dual),
                               fmt12(residual), fmt12(map.lambda),
                               fmt12(map.coupling_scale)};
  json result{{"model", model_str},
              {"beta", round12(beta)},
              {"beta_dual", round12(map.beta_dual)},
              {"involution_residual", round12(residual)},
              {"lambda", round12(map.lambda)},
              {"coupling_scale", round12(map.coupling_scale)}};
  if (model == Model::Potts3) {
    header.push_back("c");
    row.push_back(fmt12(map.c));
    result["c"] = round12(map.c);
  }
  const json doc{{"command", "duality-beta"},
                 {"parameters", json{{"model", model_str}, {"beta", beta}}},
                 {"results", json::array({result})}};
  emit(format, header, {row}, doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact boundary classification for the q-state Potts model on "
               "random planar maps"};
  app.require_subcommand(1);
  std::string format_str = "table";

  auto* q_cmd = app.add_subcommand("allowed-q", "List allowed q values");
  long q_max_m = 0;
  q_cmd->add_option("--max-m", q_max_m, "Largest m to enumerate")->required();
  q_cmd->add_option("--format", format_str, "table|csv|json");

  auto* p_cmd = app.add_subcommand("allowed-p", "List allowed boundary values p");
  long p_n = 0, p_m = 0;
  bool p_all = false;
  p_cmd->add_option("--n", p_n, "theta numerator")->required();
  p_cmd->add_option("--m", p_m, "theta denominator")->required();
  p_cmd->add_flag("--all", p_all, "Include non-physical (p <= 0) entries");
  p_cmd->add_option("--format", format_str, "table|csv|json");

  auto* c_cmd = app.add_subcommand("coeffs", "Sheet coefficient table");
  long c_n = 0, c_m = 0, c_M = 0;
  std::string c_series, c_range;
  c_cmd->add_option("--n", c_n)->required();
  c_cmd->add_option("--m", c_m)->required();
  c_cmd->add_option("--series", c_series, "S1|S2|C2")->required();
  c_cmd->add_option("--M", c_M, "series index")->required();
  c_cmd->add_option("--range", c_range, "label range LO..HI");
  c_cmd->add_option("--format", format_str, "table|csv|json");

  auto* e_cmd = app.add_subcommand("exponents", "Critical and string exponents");
  long e_n = 0, e_m = 0;
  e_cmd->add_option("--n", e_n)->required();
  e_cmd->add_option("--m", e_m)->required();
  e_cmd->add_option("--format", format_str, "table|csv|json");

  auto* s_cmd = app.add_subcommand("scan", "Exhaustive integer-p search");
  long s_max_m = 0, s_target = 0;
  unsigned s_jobs = default_jobs();
  bool s_no_prefilter = false;
  s_cmd->add_option("--max-m", s_max_m)->required();
  s_cmd->add_option("--target", s_target)->required();
  s_cmd->add_option("--jobs", s_jobs, "parallel workers");
  s_cmd->add_flag("--no-prefilter", s_no_prefilter,
                  "skip the float prefilter; exact test everywhere");
  s_cmd->add_option("--format", format_str, "table|csv|json");

  auto* d_cmd = app.add_subcommand("duality", "Kramers-Wannier duality tools");
  d_cmd->require_subcommand(1);
  auto* dw_cmd =
      d_cmd->add_subcommand("words", "Allowed words and the expansion oracle");
  long dw_length = 0;
  bool dw_verify = false;
  dw_cmd->add_option("--length", dw_length)->required();
  dw_cmd->add_flag("--verify", dw_verify,
                   "check expansion = closed form = boundary weights");
  dw_cmd->add_option("--format", format_str, "table|csv|json");
  auto* db_cmd = d_cmd->add_subcommand("beta", "Dual temperature map");
  std::string db_model;
  double db_beta = 0.0;
  db_cmd->add_option("--model", db_model, "ising|potts3")->required();
  db_cmd->add_option("--beta", db_beta)->required();
  db_cmd->add_option("--format", format_str, "table|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_str);
    if (*q_cmd) return cmd_allowed_q(q_max_m, format);
    if (*p_cmd) return cmd_allowed_p(p_n, p_m, p_all, format);
    if (*c_cmd) return cmd_coeffs(c_n, c_m, c_series, c_M, c_range, format);
    if (*e_cmd) return cmd_exponents(e_n, e_m, format);
    if (*s_cmd)
      return cmd_scan(s_max_m, s_target, s_jobs, !s_no_prefilter, format);
    if (*dw_cmd) return cmd_duality_words(dw_length, dw_verify, format);
    if (*db_cmd) return cmd_duality_beta(db_model, db_beta, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
