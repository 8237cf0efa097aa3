#include "octo/io.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <ostream>

namespace octo {

namespace {

constexpr std::array<std::string_view, kOctonionDim> kUnitNames = {"",  "i",  "j",  "k",
                                                                   "l", "il", "jl", "kl"};

// Position-tracking reader over a text buffer.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    get();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string near = done() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw ParseError(what + " near " + near, line_, col_);
  }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Optional '+' / '-' (repeated signs compose).
bool read_sign(Cursor& cur) {
  bool negative = false;
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == '+') {
      cur.get();
    } else if (cur.peek() == '-') {
      cur.get();
      negative = !negative;
    } else {
      return negative;
    }
  }
}

bool starts_scalar(const Cursor& cur) {
  return std::isdigit(static_cast<unsigned char>(cur.peek())) ||
         (cur.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1))));
}

template <FieldScalar S>
S read_scalar(Cursor& cur) {
  const int line = cur.line(), col = cur.col();
  std::string token;
  auto digits = [&] {
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) token += cur.get();
  };
  digits();
  if (cur.peek() == '.') {
    token += cur.get();
    digits();
  }
  if ((cur.peek() == 'e' || cur.peek() == 'E') &&
      (std::isdigit(static_cast<unsigned char>(cur.peek(1))) ||
       ((cur.peek(1) == '+' || cur.peek(1) == '-') &&
        std::isdigit(static_cast<unsigned char>(cur.peek(2)))))) {
    token += cur.get();
    if (cur.peek() == '+' || cur.peek() == '-') token += cur.get();
    digits();
  }
  if (cur.peek() == '/' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
    token += cur.get();
    digits();
  }
  try {
    return parse_scalar<S>(token);
  } catch (const MathError& e) {
    throw ParseError(std::string("bad scalar '") + token + "'", line, col);
  }
}

// Longest unit name at the cursor, or -1.
int read_unit(Cursor& cur) {
  cur.skip_ws();
  for (int a : {5, 6, 7, 1, 2, 3, 4}) {
    const auto name = kUnitNames[static_cast<std::size_t>(a)];
    bool match = true;
    for (std::size_t k = 0; k < name.size(); ++k) {
      if (cur.peek(k) != name[k]) match = false;
    }
    if (match && !is_ident(cur.peek(name.size()))) {
      for (std::size_t k = 0; k < name.size(); ++k) cur.get();
      return a;
    }
  }
  return -1;
}

// Sum of terms up to (not including) a ')' or end of input.
template <FieldScalar S>
Coords<S> read_octonion_terms(Cursor& cur) {
  Coords<S> c = Coords<S>::Zero();
  bool first = true;
  for (;;) {
    cur.skip_ws();
    if (cur.done() || cur.peek() == ')') {
      if (first) cur.fail("expected an octonion term");
      return c;
    }
    if (!first && cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    const bool negative = read_sign(cur);
    S coef(1);
    int unit;
    if (starts_scalar(cur)) {
      coef = read_scalar<S>(cur);
      cur.accept('*');
      unit = read_unit(cur);
      if (unit < 0) unit = 0;
    } else {
      unit = read_unit(cur);
      if (unit < 0) cur.fail("expected a scalar or one of i, j, k, l, il, jl, kl");
    }
    if (negative) coef = -coef;
    c[unit] += coef;
    first = false;
  }
}

std::pair<int, int> line_col(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
}

template <FieldScalar S>
S scalar_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return S(v.get<long long>());
  }
  if (v.is_number()) {
    // Go through the shortest decimal so that 0.1 means 1/10 in exact mode.
    return parse_scalar<S>(format_scalar(v.get<double>()));
  }
  if (v.is_string()) {
    try {
      return parse_scalar<S>(v.get<std::string>());
    } catch (const MathError&) {
    }
  }
  throw ParseError("expected a scalar in " + where, 1, 1);
}

template <FieldScalar S>
Octonion<S> octonion_from_json(const nlohmann::json& v, const AlgebraParams<S>& params,
                               const std::string& where) {
  if (v.is_string()) return parse_octonion<S>(v.get<std::string>(), params);
  if (!v.is_array() || v.size() != kOctonionDim) {
    throw ParseError("expected an array of 8 scalars in " + where, 1, 1);
  }
  Coords<S> c;
  for (int a = 0; a < kOctonionDim; ++a) {
    c[a] = scalar_from_json<S>(v[static_cast<std::size_t>(a)], where);
  }
  return Octonion<S>(params, c);
}

template <FieldScalar S>
AlgebraParams<S> params_from_json(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 3) throw ParseError("\"params\" must hold 3 scalars", 1, 1);
  return AlgebraParams<S>::make(scalar_from_json<S>(v[0], "params"),
                                scalar_from_json<S>(v[1], "params"),
                                scalar_from_json<S>(v[2], "params"));
}

template <FieldScalar S>
bool negative(const S& x) {
  return x < S(0);
}

}  // namespace

template <FieldScalar S>
AlgebraParams<S> parse_params(std::string_view text) {
  Cursor cur(text);
  cur.accept('[');
  std::array<S, 3> v;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) cur.expect(',');
    const bool neg = read_sign(cur);
    if (!starts_scalar(cur)) cur.fail("expected a scalar");
    v[static_cast<std::size_t>(k)] = read_scalar<S>(cur);
    if (neg) v[static_cast<std::size_t>(k)] = -v[static_cast<std::size_t>(k)];
  }
  cur.accept(']');
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input");
  return AlgebraParams<S>::make(v[0], v[1], v[2]);
}

template <FieldScalar S>
Octonion<S> parse_octonion(std::string_view text, const AlgebraParams<S>& params) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.peek() == '[') return octonion_from_json<S>(parse_json(text), params, "octonion");
  Coords<S> c = read_octonion_terms<S>(cur);
  if (!cur.done()) cur.fail("unexpected character");
  return Octonion<S>(params, c);
}

template <FieldScalar S>
OPolynomial<S> parse_polynomial(std::string_view text, const AlgebraParams<S>& params) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.peek() == '{') {
    auto doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
      throw ParseError("polynomial JSON needs a \"coeffs\" array", 1, 1);
    }
    AlgebraParams<S> p = doc.contains("params") ? params_from_json<S>(doc["params"]) : params;
    std::vector<Octonion<S>> coeffs;
    for (std::size_t t = 0; t < doc["coeffs"].size(); ++t) {
      coeffs.push_back(octonion_from_json<S>(doc["coeffs"][t], p, "coeffs[" + std::to_string(t) + "]"));
    }
    return OPolynomial<S>(p, std::move(coeffs));
  }

  std::map<int, Octonion<S>> terms;
  bool first = true;
  for (;;) {
    cur.skip_ws();
    if (cur.done()) {
      if (first) cur.fail("empty polynomial");
      break;
    }
    if (!first && cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    const bool neg = read_sign(cur);
    Octonion<S> coef = Octonion<S>::scalar(params, S(1));
    bool have_coef = false;
    if (cur.accept('(')) {
      coef = Octonion<S>(params, read_octonion_terms<S>(cur));
      cur.expect(')');
      have_coef = true;
    } else if (starts_scalar(cur)) {
      coef = Octonion<S>::scalar(params, read_scalar<S>(cur));
      have_coef = true;
    }
    int degree = 0;
    if (have_coef) cur.accept('*');
    cur.skip_ws();
    if (cur.peek() == 'x' && !is_ident(cur.peek(1))) {
      cur.get();
      degree = 1;
      if (cur.accept('^')) {
        cur.skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected an exponent");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(cur.peek()))) digits += cur.get();
        if (digits.size() > 4) cur.fail("exponent too large");
        degree = std::stoi(digits);
      }
    } else if (!have_coef) {
      cur.fail("expected '(', a scalar or x");
    }
    if (neg) coef = -coef;
    auto [it, inserted] = terms.try_emplace(degree, coef);
    if (!inserted) it->second += coef;
    first = false;
  }
  std::vector<Octonion<S>> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1,
                                  Octonion<S>(params));
  for (const auto& [t, c] : terms) coeffs[static_cast<std::size_t>(t)] = c;
  return OPolynomial<S>(params, std::move(coeffs));
}

template <FieldScalar S>
std::string format_octonion(const Octonion<S>& x) {
  std::string out;
  for (int a = 0; a < kOctonionDim; ++a) {
    S c = x[a];
    if (c == S(0)) continue;
    const bool neg = negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const S mag = neg ? S(-c) : c;
    if (a == 0) {
      out += format_scalar(mag);
    } else {
      if (mag != S(1)) out += format_scalar(mag) + " ";
      out += kUnitNames[static_cast<std::size_t>(a)];
    }
  }
  return out.empty() ? "0" : out;
}

template <FieldScalar S>
std::string format_polynomial(const OPolynomial<S>& f) {
  if (f.is_zero()) return "(0)";
  std::string out;
  for (int t = f.degree(); t >= 0; --t) {
    const auto& c = f.coeff(t);
    if (c == Octonion<S>(f.params())) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_octonion(c) + ")";
    if (t == 1) out += "x";
    if (t > 1) out += "x^" + std::to_string(t);
  }
  return out;
}

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const Octonion<S>& x) {
  return os << format_octonion(x);
}

Json scalar_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0.0 ? 0.0 : x;
}

Json scalar_json(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1) {
    BigInt n = boost::multiprecision::numerator(x);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
      return n.convert_to<long long>();
    }
  }
  return format_scalar(x);
}

template <FieldScalar S>
Json to_json(const Octonion<S>& x) {
  Json arr = Json::array();
  for (int a = 0; a < kOctonionDim; ++a) arr.push_back(scalar_json(x[a]));
  return arr;
}

template <FieldScalar S>
Json to_json(const OPolynomial<S>& f) {
  Json j;
  j["params"] = Json::array({scalar_json(f.params().alpha()), scalar_json(f.params().beta()),
                             scalar_json(f.params().gamma())});
  j["coeffs"] = Json::array();
  for (const auto& c : f.coeffs()) j["coeffs"].push_back(to_json(c));
  return j;
}

template <FieldScalar S>
Json to_json(const CentralPoly<S>& p) {
  Json j;
  j["degree"] = p.degree();
  j["coeffs"] = Json::array();
  for (const auto& c : p.coeffs()) j["coeffs"].push_back(scalar_json(c));
  return j;
}

template <FieldScalar S>
Json to_json(const ConjClass<S>& cls) {
  Json j;
  j["T"] = scalar_json(cls.trace);
  j["N"] = scalar_json(cls.norm);
  j["central"] = cls.central;
  return j;
}

template <FieldScalar S>
Json to_json(const RootSet<S>& rs) {
  Json j;
  j["isolated"] = Json::array();
  for (const auto& r : rs.isolated) {
    Json e;
    e["root"] = to_json(r.root);
    e["text"] = format_octonion(r.root);
    e["class"] = to_json(r.cls);
    j["isolated"].push_back(std::move(e));
  }
  j["spherical"] = Json::array();
  for (const auto& c : rs.spherical) j["spherical"].push_back(to_json(c));
  j["anomalies"] = Json::array();
  for (const auto& a : rs.anomalies) {
    Json e;
    e["class"] = to_json(a.cls);
    e["reason"] = a.reason;
    j["anomalies"].push_back(std::move(e));
  }
  return j;
}

template <FieldScalar S>
Json to_json(const LMRClassDescription<S>& d) {
  Json j;
  j["class"] = to_json(d.cls);
  switch (d.kind) {
    case LmrKind::kWholeClass: j["kind"] = "whole-class"; break;
    case LmrKind::kSinglePoint: j["kind"] = "single-point"; break;
    case LmrKind::kParametrized: j["kind"] = "parametrized"; break;
  }
  if (d.point) j["point"] = to_json(*d.point);
  if (d.E) j["E"] = to_json(*d.E);
  if (d.G) j["G"] = to_json(*d.G);
  if (d.EinvG) j["EinvG"] = to_json(*d.EinvG);
  if (d.GEinv) j["GEinv"] = to_json(*d.GEinv);
  if (d.comm) {
    j["comm"] = to_json(*d.comm);
    j["commNorm"] = scalar_json(d.comm_norm);
  }
  if (d.Q) {
    Json q = Json::array();
    for (const auto& e : d.Q->basis) q.push_back(to_json(e));
    j["Q"] = std::move(q);
    j["ell"] = to_json(d.Q->ell);
    j["gamma"] = scalar_json(d.Q->gamma_eff);
  }
  return j;
}

Json to_json(const FixedPointReport& r) {
  Json j;
  j["alpha"] = to_json(r.alpha);
  j["B"] = to_json(r.B);
  j["M"] = scalar_json(r.M);
  j["m"] = scalar_json(r.m);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const PseudoPeriodReport& r) {
  Json j;
  j["alpha"] = to_json(r.alpha);
  j["n"] = r.n;
  j["cycle"] = Json::array();
  for (const auto& c : r.cycle) j["cycle"].push_back(to_json(c));
  j["Mi"] = Json::array();
  for (double m : r.Mi) j["Mi"].push_back(scalar_json(m));
  j["product"] = scalar_json(r.product);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const OrbitRecord& r) {
  Json j;
  j["start"] = to_json(r.start);
  j["steps"] = static_cast<int>(r.iterates.size()) - 1;
  j["escaped"] = r.escaped;
  j["detectedPeriod"] = r.detected_period ? Json(*r.detected_period) : Json(nullptr);
  return j;
}

void write_orbit_csv(std::ostream& os, const OrbitRecord& r) {
  os << "step";
  for (int a = 0; a < kOctonionDim; ++a) os << ",c" << a;
  os << ",abs\n";
  for (std::size_t k = 0; k < r.iterates.size(); ++k) {
    const auto& z = r.iterates[k];
    os << k;
    for (int a = 0; a < kOctonionDim; ++a) os << ',' << format_scalar(z[a]);
    os << ',' << format_scalar(abs(z)) << '\n';
  }
}

#define OCTO_INSTANTIATE(S)                                                                 \
  template AlgebraParams<S> parse_params<S>(std::string_view);                              \
  template Octonion<S> parse_octonion<S>(std::string_view, const AlgebraParams<S>&);        \
  template OPolynomial<S> parse_polynomial<S>(std::string_view, const AlgebraParams<S>&);   \
  template std::string format_octonion<S>(const Octonion<S>&);                              \
  template std::string format_polynomial<S>(const OPolynomial<S>&);                         \
  template std::ostream& operator<< <S>(std::ostream&, const Octonion<S>&);                 \
  template Json to_json<S>(const Octonion<S>&);                                             \
  template Json to_json<S>(const OPolynomial<S>&);                                          \
  template Json to_json<S>(const CentralPoly<S>&);                                          \
  template Json to_json<S>(const ConjClass<S>&);                                            \
  template Json to_json<S>(const RootSet<S>&);                                              \
  template Json to_json<S>(const LMRClassDescription<S>&);

OCTO_INSTANTIATE(double)
OCTO_INSTANTIATE(Rational)

#undef OCTO_INSTANTIATE

}  // namespace octo
