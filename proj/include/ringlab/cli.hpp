#pragma once

// The ringlab command line: analyze, element and corpus. Commands write to
// caller-supplied streams and return the process exit code.
//
// Exit codes: 0 success, 1 corpus failure or fast-path disagreement,
// 2 usage, parse or literal error, 3 order cap exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/dsl.hpp"
#include "ringlab/polarity.hpp"
#include "ringlab/report_io.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/theorems.hpp"
#include "ringlab/verify.hpp"

namespace ringlab {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitCap = 3 };

struct GlobalOptions {
  bool json = false;
  bool quiet = false;
  std::optional<std::uint64_t> max_order;
  std::string out;

  /// --max-order N caps classification at N and never lowers the
  /// construction cap below its default.
  Limits limits() const {
    Limits l;
    if (max_order) {
      l.max_classify_order = *max_order;
      l.max_order = std::max(l.max_order, *max_order);
    }
    return l;
  }
};

/// Brute-force certificates for every class, plus the matching closed-form
/// criteria when requested.
inline ElementReport analyze_element(const FiniteRing& r, Index a, bool fast_path) {
  const auto start = std::chrono::steady_clock::now();
  ElementReport e;
  e.ring = r.describe();
  e.element = r.render(a);
  e.comm_size = commutant(r, a).size();
  e.comm2_size = double_commutant(r, a).size();
  e.in_radical = jacobson_radical(r).contains(a);
  e.in_j_sharp = j_sharp(r).contains(a);
  e.is_unit = units(r).contains(a);
  e.is_idempotent = r.mul(a, a) == a;

  const auto weak = weakly_jqp_element(r, a);
  e.classes.push_back({PolarityClass::weakly_j_quasipolar, weak, std::nullopt});
  e.classes.push_back({PolarityClass::j_quasipolar, jqp_element(r, a), std::nullopt});
  e.classes.push_back({PolarityClass::quasipolar, quasipolar_element(r, a), std::nullopt});
  e.classes.push_back({PolarityClass::clean, clean_family_element(r, a, CleanVariant::clean),
                       std::nullopt});
  e.classes.push_back({PolarityClass::strongly_clean,
                       clean_family_element(r, a, CleanVariant::strongly_clean), std::nullopt});
  e.classes.push_back({PolarityClass::strongly_j_clean,
                       clean_family_element(r, a, CleanVariant::strongly_j_clean), std::nullopt});
  e.classes.push_back({PolarityClass::uniquely_clean,
                       clean_family_element(r, a, CleanVariant::uniquely_clean),
                       uniquely_clean_count(r, a)});

  if (fast_path) {
    std::vector<FastPathResult> fp;
    auto add = [&](std::string name, FastPathVerdict v) {
      const bool agrees =
          !v.applicable || (v.verdict && *v.verdict == weak.has_value() &&
                            (!weak || (v.certificate && v.certificate->idempotent == weak->idempotent)));
      fp.push_back({std::move(name), std::move(v), agrees});
    };
    if (r.kind() == RingKind::triangular && r.dim() == 2) {
      add("t2", t2_fast_classify(r, a));
    } else if (r.kind() == RingKind::matrix && r.dim() == 2) {
      const Mat2 m = Mat2::from_ring(r, a);
      add("m2_unit", m2_unit_criterion(r, a));
      if (m.a12 == r.base().zero() && m.a21 == r.base().zero())
        add("m2_diagonal", m2_diagonal_classify(r, m.a11, m.a22));
      add("m2_quadratic", m2_quadratic_classify(r, a));
      add("m2_trace_det", m2_trace_det_obstruction(r, a));
    }
    e.fast_path = std::move(fp);
  }
  e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return e;
}

namespace detail {

// Runs `body`, mapping library errors to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "ringlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SemanticError& e) {
    err << "ringlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "ringlab: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidParameter& e) {
    err << "ringlab: " << e.what() << "\n";
    return kExitUsage;
  }
}

// Writes to --out when given, else to `out`.
inline int emit(const GlobalOptions& g, std::ostream& out, std::ostream& err,
                const std::string& text) {
  if (g.out.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(g.out, std::ios::binary);
  file << text;
  if (!file) {
    err << "ringlab: cannot write " << g.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

inline std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int run_analyze(const std::string& expr, const std::vector<std::string>& properties,
                       bool witnesses, const GlobalOptions& g, std::ostream& out,
                       std::ostream& err) {
  return detail::guarded(err, [&] {
    for (const auto& p : properties)
      if (std::find(kPropertyNames.begin(), kPropertyNames.end(), p) == kPropertyNames.end()) {
        err << "ringlab: unknown property " << p << "\n";
        return int(kExitUsage);
      }
    const Limits limits = g.limits();
    const RingPtr ring = eval_ring_expr(expr, limits);
    const PropertyReport report = classify_ring(ring, limits);
    const ReportView view{properties, witnesses};
    const std::string text = g.json ? detail::json_text(to_json(*ring, report, view))
                                    : to_text(*ring, report, view);
    return detail::emit(g, out, err, text);
  });
}

inline int run_element(const std::string& expr, const std::string& literal, bool fast_path,
                       const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const RingPtr ring = eval_ring_expr(expr, g.limits());
    const Element a = parse_element(literal, *ring);
    const ElementReport report = analyze_element(*ring, a.index(), fast_path);
    const std::string text = g.json ? detail::json_text(to_json(report)) : to_text(report);
    const int code = detail::emit(g, out, err, text);
    if (code != kExitOk) return code;
    if (report.fast_path)
      for (const auto& f : *report.fast_path)
        if (!f.agrees) {
          err << "ringlab: fast path " << f.criterion << " disagrees with brute force\n";
          return int(kExitFailure);
        }
    return int(kExitOk);
  });
}

/// Corpus file: one ring expression per line, '#' starts a comment line.
inline std::vector<RingExpr> parse_corpus(std::istream& in) {
  std::vector<RingExpr> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_ring_expr(line));
    } catch (const Error& e) {
      throw InvalidParameter("corpus line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

inline int run_corpus(const std::string& file, bool builtin, const GlobalOptions& g,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (builtin == !file.empty()) {
      err << "ringlab: corpus needs exactly one of a file or --builtin\n";
      return int(kExitUsage);
    }
    std::vector<RingExpr> corpus;
    if (builtin) {
      for (const auto& s : builtin_corpus()) corpus.push_back(parse_ring_expr(s));
    } else {
      std::ifstream in(file);
      if (!in) {
        err << "ringlab: cannot read " << file << "\n";
        return int(kExitUsage);
      }
      corpus = parse_corpus(in);
    }
    VerifyOptions opt;
    opt.limits = g.limits();
    const auto rows = verify_corpus(corpus, opt);
    const std::string text = g.json ? detail::json_text(to_json(rows)) : to_csv(rows);
    const int code = detail::emit(g, out, err, text);
    if (code != kExitOk) return code;
    const auto count = [&](CheckResult r) {
      return std::count_if(rows.begin(), rows.end(), [&](const auto& row) { return row.result == r; });
    };
    if (!g.quiet)
      err << "ringlab: " << corpus.size() << " rings, " << rows.size() << " checks, "
          << count(CheckResult::fail) << " failed, " << count(CheckResult::skipped)
          << " skipped\n";
    return any_failed(rows) ? int(kExitFailure) : int(kExitOk);
  });
}

/// Parses argv-style arguments (without the program name) and dispatches.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-ring polarity analysis", "ringlab"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t max_order = 0;
  auto add_globals = [&](CLI::App* cmd) {
    cmd->add_flag("--json", g.json, "Emit JSON");
    cmd->add_flag("--quiet", g.quiet, "Suppress the summary on standard error");
    cmd->add_option("--max-order", max_order, "Whole-ring classification cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", g.out, "Write output to this file");
  };
  add_globals(&app);

  std::string expr, literal, file;
  std::string properties;
  bool witnesses = false, fast_path = false, builtin = false;

  auto* analyze = app.add_subcommand("analyze", "Classify a ring");
  analyze->add_option("expr", expr, "Ring expression")->required();
  analyze->add_option("--properties", properties, "Comma-separated property names");
  analyze->add_flag("--witnesses", witnesses, "Include counterexample literals");
  add_globals(analyze);

  auto* element = app.add_subcommand("element", "Certificates for one element");
  element->add_option("expr", expr, "Ring expression")->required();
  element->add_option("literal", literal, "Element literal")->required();
  element->add_flag("--fast-path", fast_path, "Also run the closed-form criteria");
  add_globals(element);

  auto* corpus = app.add_subcommand("corpus", "Verify the theorem checks over a corpus");
  corpus->add_option("file", file, "Corpus file");
  corpus->add_flag("--builtin", builtin, "Use the built-in corpus");
  add_globals(corpus);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ringlab: " << e.what() << "\n";
    return kExitUsage;
  }
  if (max_order) g.max_order = max_order;

  if (*analyze) {
    std::vector<std::string> names;
    std::stringstream ss(properties);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) names.push_back(item);
    return run_analyze(expr, names, witnesses, g, out, err);
  }
  if (*element) return run_element(expr, literal, fast_path, g, out, err);
  return run_corpus(file, builtin, g, out, err);
}

}  // namespace ringlab
