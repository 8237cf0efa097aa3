// octo: roots, multiples and dynamics of octonion polynomials.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "octo/io.hpp"
#include "octo/render.hpp"
#include "octo/selftest.hpp"

namespace {

using namespace octo;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;
constexpr int kExitResource = 4;
constexpr int kExitSelftest = 5;

struct Options {
  std::string mode;  // empty: exact for algebra, real for dynamics
  double eps = 1e-9;
  std::string seed = "0xC0FFEE";
  int max_iter = 50;
  double escape_radius = 4.0;
  std::string out;
  std::string params;

  std::string poly;
  std::string element;
  std::string alpha;
  int count = 10;
  int period = 0;
  int compose_depth = 0;
  double tol = kPeriodTolerance;

  std::string base = "0", dir_u = "1", dir_v = "i";
  int width = 256, height = 256;
  double scale = 0.0;
  unsigned threads = 0;
};

std::uint64_t seed_value(const Options& o) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(o.seed, &used, 0);
    if (used != o.seed.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad --seed '" + o.seed + "'", 1, 1);
  }
}

// A polynomial argument is a file path when such a file exists, otherwise
// inline text.
std::string read_source(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read " + arg, 1, 1);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

template <FieldScalar S>
AlgebraParams<S> params_of(const Options& o) {
  return o.params.empty() ? AlgebraParams<S>::standard() : parse_params<S>(o.params);
}

template <FieldScalar S>
OPolynomial<S> load_poly(const Options& o) {
  return parse_polynomial<S>(read_source(o.poly), params_of<S>(o));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw MathError(ErrorKind::kInvalidInput, "cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

void require_real(const Options& o, std::string_view command) {
  if (o.mode == "exact") {
    throw MathError(ErrorKind::kInvalidInput,
                    std::string(command) + " needs --mode real (absolute values use square roots)");
  }
}

template <FieldScalar S>
void cmd_roots(const Options& o) {
  emit_json(o, to_json(roots(load_poly<S>(o))));
}

template <FieldScalar S>
void cmd_companion(const Options& o) {
  emit_json(o, to_json(companion(load_poly<S>(o))));
}

template <FieldScalar S>
void cmd_rmr(const Options& o) {
  auto f = load_poly<S>(o);
  Json j;
  j["classes"] = Json::array();
  for (const auto& c : rmr_classes(f)) j["classes"].push_back(to_json(c));
  if (!o.element.empty()) {
    auto mu = parse_octonion<S>(o.element, f.params());
    j["element"] = to_json(mu);
    const bool contained = rmr_contains(f, mu);
    j["contains"] = contained;
    if (contained) {
      auto c = rmr_witness(f, mu, seed_value(o));
      j["witness"] = to_json(c);
      j["residual"] = to_json(eval(scale_right(f, c), mu));
    }
  }
  emit_json(o, j);
}

template <FieldScalar S>
void cmd_lmr_describe(const Options& o) {
  Json j = Json::array();
  for (const auto& d : lmr_describe(load_poly<S>(o))) j.push_back(to_json(d));
  emit_json(o, j);
}

template <FieldScalar S>
void cmd_lmr_sample(const Options& o) {
  Json j = Json::array();
  const auto seed = seed_value(o);
  std::uint64_t k = 0;
  for (const auto& d : lmr_describe(load_poly<S>(o))) {
    Json cls;
    cls["class"] = to_json(d.cls);
    cls["samples"] = Json::array();
    for (const auto& p : lmr_sample(d, o.count, seed + k++)) cls["samples"].push_back(to_json(p));
    j.push_back(std::move(cls));
  }
  emit_json(o, j);
}

template <FieldScalar S>
void cmd_lmr_contains(const Options& o) {
  auto f = load_poly<S>(o);
  auto mu = parse_octonion<S>(o.element, f.params());
  bool contained = false;
  for (const auto& d : lmr_describe(f)) {
    if (in_class(d.cls, mu) && lmr_contains(d, mu)) contained = true;
  }
  Json j;
  j["element"] = to_json(mu);
  j["contains"] = contained;
  emit_json(o, j);
}

void cmd_classify(const Options& o) {
  require_real(o, "classify");
  auto f = load_poly<double>(o);
  require_monic_quadratic(f);
  Json j;
  if (o.alpha.empty()) {
    auto fps = fixed_points(f);
    j["fixedPoints"] = Json::array();
    for (const auto& r : fps.isolated) j["fixedPoints"].push_back(to_json(classify_fixed(f, r.root)));
    j["sphericalClasses"] = Json::array();
    for (const auto& c : fps.spherical) j["sphericalClasses"].push_back(to_json(c));
    emit_json(o, j);
    return;
  }
  auto alpha = parse_octonion<double>(o.alpha, f.params());
  int n = o.period;
  if (n == 0) {
    auto detected = detect_pseudo_period(f, alpha, o.max_iter, o.tol);
    if (!detected) {
      throw MathError(ErrorKind::kOrderMismatch,
                      "alpha does not return within " + std::to_string(o.max_iter) + " steps");
    }
    n = *detected;
  }
  if (n == 1) {
    j["fixed"] = to_json(classify_fixed(f, alpha));
    if (o.compose_depth > 0) {
      auto check = verify_composition_fixed(f, alpha, o.compose_depth);
      Json c;
      c["depth"] = o.compose_depth;
      c["ok"] = check.ok;
      c["failingN"] = check.failing_n ? Json(*check.failing_n) : Json(nullptr);
      j["composition"] = std::move(c);
    }
  }
  j["pseudoPeriodic"] = to_json(classify_pseudo_periodic(f, alpha, n, o.tol));
  emit_json(o, j);
}

void cmd_orbit(const Options& o) {
  require_real(o, "orbit");
  auto f = load_poly<double>(o);
  auto start = parse_octonion<double>(o.element, f.params());
  auto rec = orbit(f, start, o.max_iter, o.escape_radius, o.tol);
  std::ostringstream os;
  os << "# escaped=" << (rec.escaped ? "true" : "false") << " period="
     << (rec.detected_period ? std::to_string(*rec.detected_period) : "none") << '\n';
  write_orbit_csv(os, rec);
  emit(o, os.str());
}

void cmd_render(const Options& o) {
  require_real(o, "render");
  if (o.out.empty()) throw MathError(ErrorKind::kInvalidInput, "render needs --out <file.pgm>");
  auto f = load_poly<double>(o);
  SliceSpec spec;
  spec.base = parse_octonion<double>(o.base, f.params());
  spec.dir_u = parse_octonion<double>(o.dir_u, f.params());
  spec.dir_v = parse_octonion<double>(o.dir_v, f.params());
  spec.width = o.width;
  spec.height = o.height;
  spec.scale = o.scale > 0 ? o.scale : 4.0 / std::max(1, std::min(o.width, o.height));
  spec.max_iter = o.max_iter;
  spec.escape_radius = o.escape_radius;
  auto img = render_slice(f, spec, o.threads);
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw MathError(ErrorKind::kInvalidInput, "cannot write " + o.out);
  write_pgm(out, img);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidInput:
      return kExitParse;
    case ErrorKind::kResourceLimit:
      return kExitResource;
    default:
      return kExitMath;
  }
}

template <typename Fn>
void dispatch(const Options& o, Fn&& fn) {
  if (o.mode != "real") {
    fn.template operator()<Rational>();
  } else {
    fn.template operator()<double>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Roots, scalar multiples and dynamics of octonion polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mode", o.mode, "Arithmetic: exact (rationals) or real (doubles)")
      ->check(CLI::IsMember({"exact", "real"}));
  app.add_option("--eps", o.eps, "Real-mode comparison tolerance");
  app.add_option("--seed", o.seed, "Seed for randomized steps");
  app.add_option("--max-iter", o.max_iter, "Iteration cap for orbits, periods and rendering");
  app.add_option("--escape-radius", o.escape_radius, "Orbit escape radius");
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--params", o.params, "Structure constants a,b,c for text polynomials");

  auto poly_arg = [&](CLI::App* sub) {
    sub->add_option("poly", o.poly, "Polynomial file, '-' for stdin, or inline text")->required();
  };

  auto* roots_cmd = app.add_subcommand("roots", "All roots, class by class");
  poly_arg(roots_cmd);
  auto* comp_cmd = app.add_subcommand("companion", "Companion polynomial conj(f) f");
  poly_arg(comp_cmd);
  auto* rmr_cmd = app.add_subcommand("rmr", "Root classes of right scalar multiples");
  poly_arg(rmr_cmd);
  rmr_cmd->add_option("element", o.element, "Test membership and produce a witness");

  auto* lmr_cmd = app.add_subcommand("lmr", "Roots of left scalar multiples");
  lmr_cmd->require_subcommand(1);
  auto* lmr_describe_cmd = lmr_cmd->add_subcommand("describe", "Per-class description");
  poly_arg(lmr_describe_cmd);
  auto* lmr_sample_cmd = lmr_cmd->add_subcommand("sample", "Seeded sample points per class");
  poly_arg(lmr_sample_cmd);
  lmr_sample_cmd->add_option("-n,--count", o.count, "Samples per class")->check(CLI::NonNegativeNumber);
  auto* lmr_contains_cmd = lmr_cmd->add_subcommand("contains", "Membership test");
  poly_arg(lmr_contains_cmd);
  lmr_contains_cmd->add_option("element", o.element)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Fixed-point and pseudo-periodic classification");
  poly_arg(classify_cmd);
  classify_cmd->add_option("--alpha", o.alpha, "Point to classify (default: all fixed points)");
  classify_cmd->add_option("--period", o.period, "Expected order (default: detect)");
  classify_cmd->add_option("--tol", o.tol, "Return tolerance");
  classify_cmd->add_option("--compose", o.compose_depth,
                           "Also check f composed n times fixes alpha (degree grows as 2^n)");

  auto* orbit_cmd = app.add_subcommand("orbit", "Substitution orbit as CSV");
  poly_arg(orbit_cmd);
  orbit_cmd->add_option("start", o.element)->required();
  orbit_cmd->add_option("--tol", o.tol, "Revisit tolerance");

  auto* render_cmd = app.add_subcommand("render", "Escape-time slice as PGM");
  poly_arg(render_cmd);
  render_cmd->add_option("--base", o.base, "Slice centre");
  render_cmd->add_option("--u", o.dir_u, "Horizontal direction");
  render_cmd->add_option("--v", o.dir_v, "Vertical direction");
  render_cmd->add_option("--width", o.width);
  render_cmd->add_option("--height", o.height);
  render_cmd->add_option("--scale", o.scale, "Units per pixel (default 4/min(width,height))");
  render_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Reproduce the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (!(o.eps > 0)) throw MathError(ErrorKind::kInvalidInput, "--eps must be positive");
    set_real_epsilon(o.eps);
    if (*roots_cmd) {
      dispatch(o, [&]<typename S>() { cmd_roots<S>(o); });
    } else if (*comp_cmd) {
      dispatch(o, [&]<typename S>() { cmd_companion<S>(o); });
    } else if (*rmr_cmd) {
      dispatch(o, [&]<typename S>() { cmd_rmr<S>(o); });
    } else if (*lmr_describe_cmd) {
      dispatch(o, [&]<typename S>() { cmd_lmr_describe<S>(o); });
    } else if (*lmr_sample_cmd) {
      dispatch(o, [&]<typename S>() { cmd_lmr_sample<S>(o); });
    } else if (*lmr_contains_cmd) {
      dispatch(o, [&]<typename S>() { cmd_lmr_contains<S>(o); });
    } else if (*classify_cmd) {
      cmd_classify(o);
    } else if (*orbit_cmd) {
      cmd_orbit(o);
    } else if (*render_cmd) {
      cmd_render(o);
    } else if (*selftest_cmd) {
      return print_selftest(std::cout, run_selftest()) ? kExitOk : kExitSelftest;
    }
  } catch (const MathError& e) {
    std::cerr << "octo: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "octo: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
