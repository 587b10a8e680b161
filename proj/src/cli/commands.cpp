#include "quditx/cli/commands.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "quditx/cli/csv.hpp"
#include "quditx/cli/matrix_file.hpp"
#include "quditx/core.hpp"
#include "quditx/error.hpp"
#include "quditx/measures.hpp"
#include "quditx/werner.hpp"

namespace quditx::cli {

namespace {

// Tolerance on entries outside the X pattern. Looser than kHermTolerance so
// hand-typed files with short decimals are accepted.
constexpr double kXShapeTolerance = 1e-9;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IoError:
      return kExitIo;
    case ErrorKind::ParseError:
    case ErrorKind::BadFlags:
    case ErrorKind::BadRule:
    case ErrorKind::BadRange:
    case ErrorKind::BadGrid:
    case ErrorKind::BadParameter:
      return kExitUsage;
    default:
      return kExitValidation;
  }
}

std::string human(double v) {
  if (v == 0.0) v = 0.0;
  std::array<char, 40> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string human(const Spectrum& s) {
  std::string out;
  for (double v : s.values) {
    if (!out.empty()) out += ' ';
    out += human(v);
  }
  return out;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

// Collects (key, value) pairs and renders them as an aligned text report or
// as a two-column CSV.
class Report {
 public:
  explicit Report(bool csv) : csv_(csv) {}

  void section(std::string title) { lines_.push_back({std::move(title), "", true}); }

  void add(std::string key, std::string value) {
    lines_.push_back({std::move(key), std::move(value), false});
  }

  void number(const std::string& key, double v) {
    add(key, csv_ ? format_number(v) : human(v));
  }

  void flag(const std::string& key, bool v) { add(key, csv_ ? (v ? "1" : "0") : yes_no(v)); }

  void spectrum(const std::string& key, const Spectrum& s) {
    if (csv_) {
      for (int i = 0; i < 4; ++i) number(key + std::to_string(i + 1), s.values[i]);
    } else {
      add(key, human(s));
    }
  }

  std::string render() const {
    std::ostringstream out;
    if (csv_) {
      out << "quantity,value\n";
      for (const auto& l : lines_)
        if (!l.is_section) out << l.key << ',' << l.value << '\n';
      return out.str();
    }
    for (const auto& l : lines_) {
      if (l.is_section) {
        out << l.key << '\n';
        continue;
      }
      out << "  " << l.key;
      for (std::size_t pad = l.key.size(); pad < 30; ++pad) out << ' ';
      out << l.value << '\n';
    }
    return out.str();
  }

 private:
  struct Line {
    std::string key;
    std::string value;
    bool is_section;
  };
  bool csv_;
  std::vector<Line> lines_;
};

void add_validation(Report& r, const ValidationReport& v) {
  r.section("validation");
  r.flag("hermitian", v.hermitian);
  r.number("hermiticity_residual", v.hermiticity_residual);
  r.flag("unit_trace", v.unit_trace);
  r.number("trace_residual", v.trace_residual);
  r.flag("positive", v.positive);
  r.number("min_eigenvalue", v.min_eigenvalue);
}

void add_state_measures(Report& r, const XState& x) {
  const Spectrum closed = xstate_spectrum(x);
  const Spectrum oracle = hermitian_eigenvalues(to_matrix(x).raw());
  const Spectrum ppt_closed = ppt_spectrum(x);
  const Spectrum ppt_oracle =
      hermitian_eigenvalues(to_matrix(partial_transpose(x)).raw());

  r.section("spectrum");
  r.spectrum("lam", closed);
  r.spectrum("oracle_lam", oracle);
  r.number("spectrum_max_diff", max_abs_diff(closed, oracle));
  r.section("ppt spectrum");
  r.spectrum("lamppt", ppt_closed);
  r.spectrum("oracle_lamppt", ppt_oracle);
  r.number("ppt_spectrum_max_diff", max_abs_diff(ppt_closed, ppt_oracle));

  const EntropyReport e = entropy_report(x);
  r.section("entropies (nats)");
  r.number("S1", e.s1);
  r.number("S2", e.s2);
  r.number("S12", e.s12);
  r.number("I", e.info);

  const EntanglementReport ent = entanglement_report(x);
  r.section("entanglement");
  r.number("neg_param", ent.negativity_parameter);
  r.number("neg_std", ent.standard_negativity);
  r.number("concurrence", ent.concurrence);
  r.number("concurrence_spectrum_route", concurrence_spectrum_route(x));
  r.flag("entangled", ent.entangled);
  r.add("condition", to_string(ent.active_condition));
}

std::string q_label(double q) {
  std::ostringstream s;
  s << q;
  return s.str();
}

void check_q_list(const std::vector<double>& qs) {
  for (double q : qs) {
    if (!std::isfinite(q) || q <= 0.0 || q == 1.0) {
      throw Error(ErrorKind::BadFlags,
                  "--q values must be positive and different from 1, got " +
                      q_label(q));
    }
  }
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open " + out_path + " for writing");
  file << text;
  file.close();
  if (!file) throw Error(ErrorKind::IoError, "cannot write " + out_path);
}

struct AnalyzeOptions {
  std::string path;
  std::vector<double> qs;
  std::string format = "text";
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  check_q_list(opt.qs);
  const DensityMatrix4 m = read_matrix_file(opt.path);

  Report report(opt.format == "csv");
  const ValidationReport v = validate(m);
  add_validation(report, v);
  if (!v.ok()) {
    out << report.render();
    err << "error: " << opt.path << " is not a density matrix (";
    if (!v.hermitian) err << " hermiticity";
    if (!v.unit_trace) err << " trace";
    if (!v.positive) err << " positivity";
    err << " )\n";
    return kExitValidation;
  }

  XState x;
  try {
    x = from_matrix(m, kXShapeTolerance);
  } catch (const Error& e) {
    out << report.render();
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }

  add_state_measures(report, x);
  if (!opt.qs.empty()) {
    report.section("q-entropies of (rho_11, rho_22, rho_33, rho_44)");
    const auto probs = x.diagonal();
    for (double q : opt.qs) {
      report.number("tsallis_q=" + q_label(q), tsallis_entropy(probs, q));
      report.number("renyi_q=" + q_label(q), renyi_entropy(probs, q));
    }
  }
  out << report.render();
  return kExitOk;
}

struct WernerOptions {
  std::optional<double> p;
  std::optional<double> b;
  std::string sweep;
  std::string b_rule;
  std::string out;
};

double parse_double_field(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::BadFlags, "cannot read " + what + " from '" + text + "'");
}

BRule parse_b_rule(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::BadFlags,
                "--b-rule must be const:<v> or scaled:<k>, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const double v = parse_double_field(text.substr(colon + 1), "--b-rule value");
  if (kind == "const") return ConstB{v};
  if (kind == "scaled") {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::BadFlags, "--b-rule scaled:<k> needs k > 0");
    }
    return ScaledB{v};
  }
  throw Error(ErrorKind::BadFlags, "unknown --b-rule kind '" + kind + "'");
}

std::array<double, 3> parse_sweep_range(const std::string& text) {
  std::array<double, 3> out{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto colon = text.find(':', start);
    if ((i < 2) == (colon == std::string::npos)) {
      throw Error(ErrorKind::BadFlags,
                  "--sweep must be <start>:<stop>:<step>, got '" + text + "'");
    }
    const std::string field =
        text.substr(start, i < 2 ? colon - start : std::string::npos);
    out[i] = parse_double_field(field, "--sweep");
    start = colon + 1;
  }
  return out;
}

std::string werner_point_report(double p, double b) {
  const SweepRow row = sweep_row(p, b);
  const WernerPoint pt = classify_point(p, b);
  Report r(false);
  r.section("werner point");
  r.number("p", p);
  r.number("b", b);
  r.flag("state_valid", row.state_valid);
  r.flag("ppt_valid", row.ppt_valid);
  r.add("class", to_string(pt.classification));
  r.section("closed forms");
  r.spectrum("lam", row.spectrum);
  r.spectrum("lamppt", row.ppt_spectrum);
  r.number("neg_param", row.negativity_parameter);
  r.number("neg_std", row.standard_negativity);
  r.number("concurrence", row.concurrence);
  std::string text = r.render();
  if (row.state_valid) {
    const XState x = werner_state(p, b);
    Report full(false);
    add_state_measures(full, x);
    text += full.render();
    text += "matrix\n";
    text += format_matrix_file(to_matrix(x));
  } else {
    text += "state invalid: entropies and oracle checks skipped\n";
  }
  return text;
}

int cmd_werner(const WernerOptions& opt, std::ostream& out) {
  const bool single = opt.p.has_value() || opt.b.has_value();
  const bool sweeping = !opt.sweep.empty() || !opt.b_rule.empty();
  if (single == sweeping) {
    throw Error(ErrorKind::BadFlags,
                "use either --p and --b, or --sweep with --b-rule");
  }
  if (single) {
    if (!opt.p || !opt.b) throw Error(ErrorKind::BadFlags, "--p and --b go together");
    if (!std::isfinite(*opt.p) || !std::isfinite(*opt.b))
      throw Error(ErrorKind::BadFlags, "--p and --b must be finite");
    emit(werner_point_report(*opt.p, *opt.b), opt.out, out);
    return kExitOk;
  }
  if (opt.sweep.empty() || opt.b_rule.empty()) {
    throw Error(ErrorKind::BadFlags, "--sweep and --b-rule go together");
  }
  const BRule rule = parse_b_rule(opt.b_rule);
  const auto [start, stop, step] = parse_sweep_range(opt.sweep);
  const std::vector<SweepRow> rows = sweep(rule, start, stop, step);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(csv.str(), opt.out, out);
  return kExitOk;
}

struct RegionOptions {
  int p_steps = 201;
  int b_steps = 201;
  std::string out;
};

int cmd_region(const RegionOptions& opt, std::ostream& out) {
  const std::vector<WernerPoint> grid = region_grid(opt.p_steps, opt.b_steps);
  std::ostringstream csv;
  write_region_csv(csv, grid);
  emit(csv.str(), opt.out, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Separability and entanglement analysis of j=3/2 qudit X-states",
               "quditx"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand(
      "analyze", "Analyze a 4x4 X-state density matrix read from a file");
  analyze->add_option("path", analyze_opt.path, "Matrix file (4 rows of 4 entries)")
      ->required();
  analyze->add_option("--q", analyze_opt.qs,
                      "Comma-separated Tsallis/Renyi orders (q > 0, q != 1)")
      ->delimiter(',');
  analyze->add_option("--format", analyze_opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  WernerOptions werner_opt;
  auto* werner = app.add_subcommand(
      "werner", "Evaluate the two-parameter Werner family at a point or along a sweep");
  werner->add_option("--p", werner_opt.p, "Single point: p in [-1/3, 1]");
  werner->add_option("--b", werner_opt.b, "Single point: b");
  werner->add_option("--sweep", werner_opt.sweep,
                     "Sweep range <start>:<stop>:<step> over p "
                     "(use --sweep=<range> when start is negative)");
  werner->add_option("--b-rule", werner_opt.b_rule,
                     "b along the sweep: const:<v> or scaled:<k> for b = (1-p)/k");
  werner->add_option("--out", werner_opt.out, "Write output here instead of stdout");

  RegionOptions region_opt;
  auto* region = app.add_subcommand(
      "region", "Classify a (p, b) grid as invalid/separable/entangled");
  region->add_option("--p-steps", region_opt.p_steps, "Grid points along p")
      ->capture_default_str();
  region->add_option("--b-steps", region_opt.b_steps, "Grid points along b")
      ->capture_default_str();
  region->add_option("--out", region_opt.out, "Write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_opt, out, err);
    if (werner->parsed()) return cmd_werner(werner_opt, out);
    return cmd_region(region_opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace quditx::cli
