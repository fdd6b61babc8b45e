#include "tn2/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tn2/json_io.hpp"

namespace tn2 {

namespace {

struct Options {
  std::string algebra = "topological-n2";
  std::string range = "-5..5";
  std::string check_window = "-3..3";
  std::string gen_window = "-2..2";
  std::string value_window = "-8..8";
  std::string relation_window;
  std::string degrees;
  std::string families;
  std::string r_file;
  std::string config_file;
  std::string out_file;
  std::string format = "json";
  std::string parity = "even";
  int degree = 0;
  int margin = 1;
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const AlgebraSpec& resolve_algebra(const std::string& name) {
  const AlgebraSpec* a = find_algebra(name);
  if (!a) throw InputError("unknown algebra '" + name + "' (known: topological-n2, witt)");
  return *a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Json::array();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Parity parse_parity(const std::string& s) {
  if (s == "even" || s == "0") return 0;
  if (s == "odd" || s == "1") return 1;
  throw InputError("parity must be even or odd, got '" + s + "'");
}

std::vector<Family> parse_families(const std::string& s) {
  std::vector<Family> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto f = family_from_symbol(item);
    if (!f) throw InputError("unknown family '" + item + "'");
    out.push_back(*f);
  }
  return out;
}

void text_dump(const Json& j, std::ostream& os, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << indent << k << ":\n";
        text_dump(v, os, indent + "  ");
      } else {
        os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << indent << "-\n";
        text_dump(v, os, indent + "  ");
      } else {
        os << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << indent << j.dump() << "\n";
  }
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  std::ostringstream body;
  if (opt.format == "text") {
    text_dump(report, body, "");
  } else {
    body << report.dump(2) << "\n";
  }
  if (opt.out_file.empty()) {
    out << body.str();
    return;
  }
  const std::filesystem::path target(opt.out_file);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + opt.out_file + "'");
    f << body.str();
  }
  std::filesystem::rename(tmp, target);
}

int cmd_verify_algebra(const Options& opt, std::ostream& out, std::ostream& err) {
  const AlgebraSpec& algebra = resolve_algebra(opt.algebra);
  const IndexRange range = parse_range(opt.range);
  Json checks = Json::array();
  bool ok = true;
  for (const auto& report : {check_super_skew(algebra, range), check_super_jacobi(algebra, range),
                             check_grading(algebra, range), check_parity(algebra, range)}) {
    checks.push_back(to_json(report));
    if (!report.passed()) {
      if (ok) err << report.check << " failed: " << *report.counterexample << "\n";
      ok = false;
    }
  }
  emit({{"algebra", algebra.name()}, {"range", to_json(range)}, {"checks", checks}, {"passed", ok}}, opt, out);
  return ok ? kPass : kCheckFailed;
}

int cmd_check_r(const Options& opt, std::ostream& out, std::ostream& err) {
  const AlgebraSpec& algebra = resolve_algebra(opt.algebra);
  const IndexRange window = parse_range(opt.check_window);
  if (opt.r_file.empty()) throw InputError("check-r needs --r <file>");
  const Tensor2 value = tensor2_from_json(read_json_file(opt.r_file), algebra);
  if (!value.homogeneous_parity()) throw InputError("r must be parity-homogeneous");
  const RMatrix r(value, &algebra);

  std::vector<CheckReport> reports{skew_check(r),
                                   cybe_check(r),
                                   mybe_check(r, window),
                                   co_skew_check(r, window),
                                   co_jacobi_check(r, window),
                                   cocycle_check(r, window)};
  Json checks = Json::array();
  bool ok = true;
  for (auto& report : reports) {
    report.window = window;
    checks.push_back(to_json(report));
    if (!report.passed()) {
      err << report.check << " failed (" << report.violations.size() << " violations, " << report.defect_terms
          << " defect terms)\n";
      ok = false;
    }
  }
  emit({{"algebra", algebra.name()},
        {"r", to_json(value)},
        {"r_parity", r.parity() ? "odd" : "even"},
        {"window", to_json(window)},
        {"checks", checks},
        {"passed", ok}},
       opt, out);
  return ok ? kPass : kCheckFailed;
}

int cmd_solve_derivations(const Options& opt, std::ostream& out, std::ostream& err) {
  WindowConfig config;
  const AlgebraSpec* algebra = nullptr;
  if (!opt.config_file.empty()) {
    Json j = read_json_file(opt.config_file);
    if (j.contains("config")) j = j.at("config");
    std::tie(config, algebra) = window_config_from_json(j);
  } else {
    algebra = &resolve_algebra(opt.algebra);
    config.gen_window = parse_range(opt.gen_window);
    config.value_window = parse_range(opt.value_window);
    config.relation_window = opt.relation_window.empty() ? config.gen_window : parse_range(opt.relation_window);
    config.degree = opt.degree;
    config.parity = parse_parity(opt.parity);
    config.margin = opt.margin;
  }
  const CohomologyReport report = compare_der_vs_inn(*algebra, config);
  emit(to_json(report), opt, out);
  if (!report.passed()) {
    err << "derivation cohomology check failed: quotient_dim " << report.quotient_dim << ", "
        << report.witness_failures.size() << " witness failures\n";
    return kCheckFailed;
  }
  return kPass;
}

ProbeConfig probe_config(const Options& opt) {
  ProbeConfig config;
  config.gen_window = parse_range(opt.gen_window);
  config.value_window = parse_range(opt.value_window);
  if (!opt.degrees.empty()) config.degrees = parse_range(opt.degrees);
  if (!opt.families.empty()) config.acting_families = parse_families(opt.families);
  config.margin = opt.margin;
  return config;
}

int cmd_invariant_kernel(const Options& opt, std::ostream& out, std::ostream& err) {
  const AlgebraSpec& algebra = resolve_algebra(opt.algebra);
  const KernelReport report = invariant_kernel(algebra, probe_config(opt));
  emit(to_json(report, algebra), opt, out);
  if (!report.basis.empty()) {
    err << "invariant kernel is nontrivial: " << report.basis.size() << " basis vectors\n";
    return kCheckFailed;
  }
  return kPass;
}

int cmd_skew_probe(const Options& opt, std::ostream& out, std::ostream& err) {
  const AlgebraSpec& algebra = resolve_algebra(opt.algebra);
  const ProbeConfig config = probe_config(opt);
  const SkewProbeReport report = skew_invariance_probe(algebra, config);
  Json j = to_json(report, algebra);
  if (!opt.r_file.empty()) {
    const Tensor2 r = tensor2_from_json(read_json_file(opt.r_file), algebra);
    const auto witness = find_skew_witness(algebra, r, config);
    j["r"] = to_json(r);
    j["r_skew"] = is_skew(r);
    j["r_witness"] = witness ? to_json(*witness) : Json(nullptr);
  }
  emit(j, opt, out);
  if (!report.passed()) {
    err << "skew probe found " << report.violations.size() << " violations\n";
    return kCheckFailed;
  }
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact verification engine for the topological N=2 superconformal algebra", "tn2"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", opt.algebra, "topological-n2 | witt")->capture_default_str();
    cmd->add_option("--out", opt.out_file, "write the report here instead of stdout");
    cmd->add_option("--format", opt.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  auto add_windows = [&](CLI::App* cmd) {
    cmd->add_option("--gen-window", opt.gen_window, "generator index range lo..hi")->capture_default_str();
    cmd->add_option("--value-window", opt.value_window, "tensor slot index range lo..hi")->capture_default_str();
    cmd->add_option("--margin", opt.margin, "safety margin for the inner sub-window")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify-algebra", "skew-symmetry, Jacobi, grading and parity sweeps");
  add_common(verify);
  verify->add_option("--range", opt.range, "generator index range lo..hi")->capture_default_str();

  auto* check_r = app.add_subcommand("check-r", "skewness, CYBE, MYBE and co-bialgebra checks for an r-matrix");
  add_common(check_r);
  check_r->add_option("--r", opt.r_file, "Tensor2 JSON file")->required();
  check_r->add_option("--range", opt.check_window, "generator window for the sweeps")->capture_default_str();

  auto* solve = app.add_subcommand("solve-derivations", "windowed Der vs Inn comparison");
  add_common(solve);
  add_windows(solve);
  solve->add_option("--relation-window", opt.relation_window, "bracket relation range (default: gen window)");
  solve->add_option("--degree", opt.degree, "degree of d")->capture_default_str();
  solve->add_option("--parity", opt.parity, "even | odd")->capture_default_str();
  solve->add_option("--config", opt.config_file, "read the configuration (or a report's echoed config)");

  auto* kernel = app.add_subcommand("invariant-kernel", "solve x.r = 0 over the window");
  add_common(kernel);
  add_windows(kernel);
  kernel->add_option("--degrees", opt.degrees, "restrict to total degrees lo..hi");
  kernel->add_option("--families", opt.families, "acting families, e.g. L or L,H");

  auto* probe = app.add_subcommand("skew-probe", "check that x.r skew for all x forces r skew");
  add_common(probe);
  add_windows(probe);
  probe->add_option("--degrees", opt.degrees, "restrict to total degrees lo..hi");
  probe->add_option("--families", opt.families, "acting families, e.g. L or L,H");
  probe->add_option("--r", opt.r_file, "also find a witnessing generator for this tensor");

  std::vector<std::string> reversed(args.rbegin(), std::prev(args.rend()));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kPass;
    err << e.what() << "\n";
    return kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify_algebra(opt, out, err);
    if (check_r->parsed()) return cmd_check_r(opt, out, err);
    if (solve->parsed()) return cmd_solve_derivations(opt, out, err);
    if (kernel->parsed()) return cmd_invariant_kernel(opt, out, err);
    if (probe->parsed()) return cmd_skew_probe(opt, out, err);
  } catch (const std::invalid_argument& e) {  // InputError, ParseError, ClosureError
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace tn2
