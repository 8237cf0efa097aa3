#include "octo/selftest.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "octo/io.hpp"

namespace octo {

namespace {

using Q = Rational;

Octonion<Q> oq(std::string_view text) { return parse_octonion<Q>(text); }
Octonion<double> od(std::string_view text) { return parse_octonion<double>(text); }
OPolynomial<Q> pq(std::string_view text) { return parse_polynomial<Q>(text); }
OPolynomial<double> pd(std::string_view text) { return parse_polynomial<double>(text); }

std::string join(const std::vector<std::string>& parts) {
  std::string out = "{";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out + "}";
}

template <FieldScalar S>
std::string roots_text(const RootSet<S>& rs) {
  std::vector<std::string> parts;
  for (const auto& r : rs.isolated) parts.push_back(format_octonion(r.root));
  for (const auto& c : rs.spherical) {
    parts.push_back("[T=" + format_scalar(c.trace) + " N=" + format_scalar(c.norm) + "]");
  }
  if (!rs.anomalies.empty()) parts.push_back("anomalies=" + std::to_string(rs.anomalies.size()));
  std::sort(parts.begin(), parts.end());
  return join(parts);
}

template <FieldScalar S>
std::string classes_text(const std::vector<ConjClass<S>>& classes) {
  std::vector<std::string> parts;
  for (const auto& c : classes) {
    parts.push_back("(" + format_scalar(c.trace) + "," + format_scalar(c.norm) + ")");
  }
  return join(parts);
}

std::string fixed(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

// Each check returns the "got" string; the row passes when it equals `expected`.
void add(std::vector<SelftestRow>& rows, std::string id, std::string expected,
         const std::function<std::string()>& check) {
  SelftestRow row{std::move(id), std::move(expected), "", false};
  try {
    row.got = check();
  } catch (const std::exception& e) {
    row.got = std::string("error: ") + e.what();
  }
  row.pass = row.got == row.expected;
  rows.push_back(std::move(row));
}

}  // namespace

std::vector<SelftestRow> run_selftest() {
  std::vector<SelftestRow> rows;

  // Linear polynomial and its scalar multiples.
  add(rows, "linear.ix+j.roots", "{k}", [] { return roots_text(roots(pq("(i)x + (j)"))); });
  add(rows, "linear.eval(ix+j,ij)", "0",
      [] { return format_octonion(eval(pq("(i)x + (j)"), oq("k"))); });
  add(rows, "linear.l*l", "-1", [] { return format_octonion(Octonion<Q>(oq("l") * oq("l"))); });
  add(rows, "linear.right-multiple.coeffs", "(il)x + (jl)",
      [] { return format_polynomial(scale_right(pq("(i)x + (j)"), oq("l"))); });
  add(rows, "linear.right-multiple.roots", "{-k}",
      [] { return roots_text(roots(pq("(il)x + (jl)"))); });
  add(rows, "linear.right-multiple.eval(-ij)", "0",
      [] { return format_octonion(eval(pq("(il)x + (jl)"), oq("-k"))); });
  add(rows, "linear.right-multiple.formula", "-k", [] {
    auto f = pq("(i)x + (j)");
    return format_octonion(multiple_root(f, ConjClass<Q>::of(oq("k")), oq("l"), Side::kRight));
  });
  add(rows, "linear.left-multiple.coeffs", "(-il)x + (-jl)",
      [] { return format_polynomial(scale_left(oq("l"), pq("(i)x + (j)"))); });
  add(rows, "linear.left-multiple.roots", "{-k}",
      [] { return roots_text(roots(scale_left(oq("l"), pq("(i)x + (j)")))); });
  add(rows, "linear.left-multiple.formula", "-k", [] {
    auto f = pq("(i)x + (j)");
    return format_octonion(multiple_root(f, ConjClass<Q>::of(oq("k")), oq("l"), Side::kLeft));
  });
  add(rows, "linear.rmr.contains(-ij)", "true",
      [] { return rmr_contains(pq("(i)x + (j)"), oq("-k")) ? "true" : "false"; });
  add(rows, "linear.rmr.witness(-ij)", "0", [] {
    auto f = pq("(i)x + (j)");
    auto c = rmr_witness(f, oq("-k"));
    return format_octonion(eval(scale_right(f, c), oq("-k")));
  });

  // Quadratic x^2 + ix - ij + 1.
  const std::string quad = "(1)x^2 + (i)x + (1 - k)";
  add(rows, "quadratic.companion", "[2,0,3,0,1]",
      [&] { return to_json(companion(pq(quad)))["coeffs"].dump(); });
  add(rows, "quadratic.companion.real-roots", "{(0,1), (0,2)}", [&] {
    std::vector<ConjClass<double>> classes;
    for (const auto& c : central_roots(companion(pd(quad)))) {
      auto cls = ConjClass<double>::from_candidate(c);
      cls.trace = std::round(cls.trace * 1e9) / 1e9;
      cls.norm = std::round(cls.norm * 1e9) / 1e9;
      classes.push_back(cls);
    }
    return classes_text(classes);
  });
  add(rows, "quadratic.classes", "{(0,1), (0,2)}",
      [&] { return classes_text(companion_classes(pq(quad))); });
  add(rows, "quadratic.reduce(0,1)", "E=i G=-k", [&] {
    auto red = reduce_linear(pq(quad), ConjClass<Q>{Q(0), Q(1), false});
    return "E=" + format_octonion(red.E) + " G=" + format_octonion(red.G);
  });
  add(rows, "quadratic.roots", "{-i + j, j}", [&] { return roots_text(roots(pq(quad))); });
  add(rows, "quadratic.eval(j)", "0", [&] { return format_octonion(eval(pq(quad), oq("j"))); });
  add(rows, "quadratic.Q-is-quaternions", "true", [] {
    auto q = quat_subalgebra_containing(oq("i"), oq("-k"));
    for (const auto& e : q.basis) {
      for (int a = 4; a < kOctonionDim; ++a) {
        if (e[a] != 0) return std::string("false");
      }
    }
    return std::string("true");
  });
  add(rows, "quadratic.lmr[j].kind", "parametrized EinvG=-j GEinv=j commNorm=4", [&] {
    for (const auto& d : lmr_describe(pq(quad))) {
      if (d.cls.norm != 1) continue;
      return std::string(d.kind == LmrKind::kParametrized ? "parametrized" : "other") +
             " EinvG=" + format_octonion(*d.EinvG) + " GEinv=" + format_octonion(*d.GEinv) +
             " commNorm=" + format_scalar(d.comm_norm);
    }
    return std::string("missing");
  });
  add(rows, "quadratic.lmr[j].members(j,-j,l)", "true true true", [&] {
    for (const auto& d : lmr_describe(pq(quad))) {
      if (d.cls.norm != 1) continue;
      std::string out;
      for (auto text : {"j", "-j", "l"}) {
        out += (out.empty() ? "" : " ") + std::string(lmr_contains(d, oq(text)) ? "true" : "false");
      }
      return out;
    }
    return std::string("missing");
  });

  // Fixed point of x^2 + ix - i/2 - 1/4.
  const std::string fp = "(1)x^2 + (i)x + (-1/4 - 1/2 i)";
  add(rows, "fixed.f(alpha)", "-1/2 i",
      [&] { return format_octonion(eval(pq(fp), oq("-1/2 i"))); });
  add(rows, "fixed.fixed_points.contains(-i/2)", "true", [&] {
    for (const auto& r : fixed_points(pq(fp)).isolated) {
      if (r.root == oq("-1/2 i")) return "true";
    }
    return "false";
  });
  add(rows, "fixed.classify", "M=1 m=0 ambivalent", [&] {
    auto r = classify_fixed(pd(fp), od("-0.5 i"));
    return "M=" + fixed(r.M) + " m=" + fixed(r.m) + " " + std::string(to_string(r.verdict));
  });
  add(rows, "fixed.composition(n<=3)", "true", [&] {
    return verify_composition_fixed(pq(fp), oq("-1/2 i"), 3).ok ? "true" : "false";
  });
  add(rows, "fixed.cj-direction-ratio>=1", "true", [&] {
    return step_ratio(pd(fp), od("-0.5 i"), od("j"), 1e-4) >= 1.0 - 1e-6 ? "true" : "false";
  });
  add(rows, "periodic.B=0.sqrtM=|2a|", "true", [] {
    auto a = od("0.3 - 0.2 i + 0.1 jl");
    auto zero = Octonion<double>();
    return std::abs(multiplier_upper(a, zero) - abs(Octonion<double>(a * 2.0))) < 1e-12 ? "true"
                                                                                         : "false";
  });
  return rows;
}

bool print_selftest(std::ostream& os, const std::vector<SelftestRow>& rows) {
  std::size_t w_id = 2, w_exp = 8;
  for (const auto& r : rows) {
    w_id = std::max(w_id, r.id.size());
    w_exp = std::max(w_exp, r.expected.size());
  }
  os << std::left << std::setw(static_cast<int>(w_id)) << "id" << "  "
     << std::setw(static_cast<int>(w_exp)) << "expected" << "  got\n";
  bool all = true;
  for (const auto& r : rows) {
    os << std::setw(static_cast<int>(w_id)) << r.id << "  " << std::setw(static_cast<int>(w_exp))
       << r.expected << "  " << r.got << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
    all = all && r.pass;
  }
  os << (all ? "all examples passed" : "SELFTEST FAILED") << '\n';
  return all;
}

}  // namespace octo
