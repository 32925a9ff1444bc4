#include "chdyn/cli.hpp"

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chdyn/chdyn.hpp"

namespace chdyn::cli {

namespace {

std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

struct Common {
  std::string family = "ch";
  std::string a_text = "0";
  std::string lambda_text = "1";
  int n = 4;
  int d = 2;
  int max_iter = 200;
  std::string out_path;
};

struct RenderArgs {
  Common common;
  std::string center_text = "0";
  double width = 1.0;
  std::optional<double> height;
  std::string res_text = "256x256";
  std::string csv_path;
  unsigned workers = 0;
};

struct SpecialArgs {
  std::string target = "a-star";
  std::string bracket_text;
  double a = 0.0;
  std::string out_path;
};

struct VerifyArgs {
  std::string suite = "all";
  std::string a_text;
  std::uint64_t seed = 0;
  std::optional<int> samples;
  std::string out_path;
};

Complex require_complex(const std::string& text, const char* flag) {
  const auto z = parse_complex(text);
  if (!z) throw CLI::ValidationError(flag, "expected a complex literal re,im");
  return *z;
}

void add_family_flags(CLI::App& cmd, Common& c, bool with_params) {
  cmd.add_option("--family", c.family, "map family")->check(CLI::IsMember({"ch", "mcmullen"}));
  if (with_params) {
    cmd.add_option("--a", c.a_text, "CH parameter a as re,im");
    cmd.add_option("--lambda", c.lambda_text, "McMullen parameter lambda as re,im");
  }
  cmd.add_option("--n", c.n, "McMullen exponent n");
  cmd.add_option("--d", c.d, "McMullen exponent d");
  cmd.add_option("--max-iter", c.max_iter, "iteration cap");
}

void add_geometry_flags(CLI::App& cmd, RenderArgs& r) {
  cmd.add_option("--center", r.center_text, "window centre as re,im");
  cmd.add_option("--width", r.width, "window width")->required();
  cmd.add_option("--height", r.height, "window height (default: square pixels)");
  cmd.add_option("--res", r.res_text, "resolution NXxNY");
  cmd.add_option("--out", r.common.out_path, "output PPM path")->required();
  cmd.add_option("--csv", r.csv_path, "optional CSV dump of the cells");
  cmd.add_option("--workers", r.workers, "worker threads (0 = hardware)");
}

void emit(std::ostream& out, const std::string& path, const std::string& doc) {
  if (path.empty()) {
    out << doc;
  } else {
    write_file(path, doc);
  }
}

int do_render(const RenderArgs& r, bool parameter_plane, std::ostream& out) {
  const auto res = parse_resolution(r.res_text);
  if (!res) throw CLI::ValidationError("--res", "expected NXxNY");
  PlaneSpec spec;
  spec.center = require_complex(r.center_text, "--center");
  spec.width = r.width;
  spec.nx = res->first;
  spec.ny = res->second;
  spec.height = r.height.value_or(PlaneSpec::square_height(r.width, spec.nx, spec.ny));
  spec.max_iter = r.common.max_iter;
  spec.n = r.common.n;
  spec.d = r.common.d;
  const bool ch = r.common.family == "ch";
  if (parameter_plane) {
    spec.kind = ch ? PlaneKind::ParameterCH : PlaneKind::ParameterMcMullen;
  } else {
    spec.kind = ch ? PlaneKind::DynamicalCH : PlaneKind::DynamicalMcMullen;
    spec.a = require_complex(r.common.a_text, "--a");
    spec.lambda = require_complex(r.common.lambda_text, "--lambda");
  }
  const PlaneGrid grid = render_plane(spec, r.workers);
  write_ppm(grid, r.common.out_path);
  if (!r.csv_path.empty()) write_csv(grid, r.csv_path);
  out << "wrote " << r.common.out_path << " (" << spec.nx << "x" << spec.ny << ", " << to_string(spec.kind) << ")\n";
  return kExitOk;
}

int do_classify(const Common& c, int critical, std::ostream& out) {
  TrichotomyReport report;
  if (c.family == "ch") {
    report = classify_ra(require_complex(c.a_text, "--a"), c.max_iter, critical);
  } else {
    report = classify_mcmullen({c.n, c.d, require_complex(c.lambda_text, "--lambda")}, c.max_iter,
                               static_cast<std::size_t>(critical));
  }
  emit(out, c.out_path, to_json(report));
  return kExitOk;
}

std::optional<RealBracket> parse_bracket(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto pos = text.find(',');
  if (pos == std::string::npos) throw CLI::ValidationError("--bracket", "expected lo,hi");
  const auto lo = parse_double(std::string_view(text).substr(0, pos));
  const auto hi = parse_double(std::string_view(text).substr(pos + 1));
  if (!lo || !hi) throw CLI::ValidationError("--bracket", "expected lo,hi");
  return RealBracket(*lo, *hi);
}

int do_special(const SpecialArgs& s, std::ostream& out) {
  const auto bracket = parse_bracket(s.bracket_text);
  SpecialParamResult result;
  if (s.target == "a-q") {
    result = find_a_q(bracket);
  } else if (s.target == "a-star") {
    result = find_a_star(bracket);
  } else {
    const TwoCycle cycle = q0_cycle(s.a, bracket);
    result.value = cycle.q0;
    result.residual = cycle.residual;
    result.kind = SpecialParamKind::Q0;
    result.bracket = bracket.value_or(default_q0_bracket());
    result.tolerance = 1e-13;
  }
  emit(out, s.out_path, to_json(result));
  return kExitOk;
}

int do_verify(const VerifyArgs& v, std::ostream& out) {
  std::optional<Complex> a;
  if (!v.a_text.empty()) a = require_complex(v.a_text, "--a");
  const bool all = v.suite == "all";
  std::vector<LemmaCheckResult> results;
  if (all || v.suite == "symmetry") results.push_back(check_symmetry(a.value_or(Complex{0.7, 0.2}), v.samples.value_or(1000), v.seed));
  if (all || v.suite == "annulus") results.push_back(check_annulus_bound(a.value_or(1e-6), v.samples.value_or(10000), v.seed));
  if (all || v.suite == "smalldisk")
    results.push_back(check_small_disk_bound(a.value_or(1e-6), 0.1, v.samples.value_or(10000), v.seed));
  if (all || v.suite == "converge") results.push_back(check_uniform_convergence(a.value_or(1e-4)));
  if (all || v.suite == "normalize") results.push_back(check_normalize_roundtrip(v.samples.value_or(100), v.seed));

  std::string doc;
  bool passed = true;
  for (const auto& r : results) {
    doc += to_json(r);
    passed = passed && r.passed;
  }
  emit(out, v.out_path, doc);
  return passed ? kExitOk : kExitDomain;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  const auto pos = text.find(',');
  if (pos == std::string_view::npos) {
    const auto re = parse_double(text);
    if (!re) return std::nullopt;
    return Complex{*re, 0.0};
  }
  const auto re = parse_double(text.substr(0, pos));
  const auto im = parse_double(text.substr(pos + 1));
  if (!re || !im) return std::nullopt;
  return Complex{*re, *im};
}

std::optional<std::pair<int, int>> parse_resolution(std::string_view text) {
  const auto pos = text.find('x');
  if (pos == std::string_view::npos) return std::nullopt;
  int nx = 0, ny = 0;
  const auto lhs = text.substr(0, pos);
  const auto rhs = text.substr(pos + 1);
  auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), nx);
  auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), ny);
  if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
      r2.ptr != rhs.data() + rhs.size() || nx < 1 || ny < 1)
    return std::nullopt;
  return std::pair{nx, ny};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev-Halley and McMullen dynamics engine", "chdyn"};
  app.require_subcommand(1);

  RenderArgs dyn;
  auto* render_dyn = app.add_subcommand("render-dyn", "render a dynamical plane to PPM");
  add_family_flags(*render_dyn, dyn.common, true);
  add_geometry_flags(*render_dyn, dyn);

  RenderArgs param;
  auto* render_param = app.add_subcommand("render-param", "render a parameter plane to PPM");
  add_family_flags(*render_param, param.common, false);
  add_geometry_flags(*render_param, param);

  Common cls;
  int critical = 0;
  auto* classify = app.add_subcommand("classify", "classify the critical orbit (Escape Trichotomy)");
  add_family_flags(*classify, cls, true);
  classify->add_option("--critical", critical, "index of the critical point followed");
  classify->add_option("--out", cls.out_path, "write the report here instead of stdout");

  SpecialArgs special;
  auto* find = app.add_subcommand("find-special", "solve for q0, a_q or a*");
  find->add_option("--target", special.target, "a-star | a-q | q0")->check(CLI::IsMember({"a-star", "a-q", "q0"}));
  find->add_option("--bracket", special.bracket_text, "search interval lo,hi");
  find->add_option("--a", special.a, "real parameter a (q0 only)");
  find->add_option("--out", special.out_path, "write the report here instead of stdout");

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "run numerical lemma checks");
  ver->add_option("--suite", verify.suite, "symmetry | annulus | smalldisk | converge | normalize | all")
      ->check(CLI::IsMember({"symmetry", "annulus", "smalldisk", "converge", "normalize", "all"}));
  ver->add_option("--a", verify.a_text, "parameter a as re,im");
  ver->add_option("--seed", verify.seed, "sampling seed");
  ver->add_option("--samples", verify.samples, "sample count");
  ver->add_option("--out", verify.out_path, "write the reports here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chdyn: " << e.what() << "\n";
    return kExitIoOrUsage;
  }

  try {
    if (*render_dyn) return do_render(dyn, false, out);
    if (*render_param) return do_render(param, true, out);
    if (*classify) return do_classify(cls, critical, out);
    if (*find) return do_special(special, out);
    if (*ver) return do_verify(verify, out);
  } catch (const CLI::ParseError& e) {
    err << "chdyn: " << e.what() << "\n";
    return kExitIoOrUsage;
  } catch (const DomainError& e) {
    err << "chdyn: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IoError& e) {
    err << "chdyn: " << e.what() << "\n";
    return kExitIoOrUsage;
  }
  return kExitIoOrUsage;
}

}  // namespace chdyn::cli
