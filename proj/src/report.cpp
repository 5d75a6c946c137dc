#include "minorgrowth/report.hpp"

#include "minorgrowth/series.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace minorgrowth {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

double parse_double(const std::string& text) {
  if (text == "nan") return NAN;
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double x = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  return x;
}

namespace {

std::string str(int x) { return std::to_string(x); }
std::string str(const BigInt& x) { return to_decimal(x); }
std::string str(double x) { return format_double(x); }
std::string str(const Rational& x) { return to_string(x); }

int get_int(const json& j) {
  const std::string s = j.get<std::string>();
  std::size_t used = 0;
  int x = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return x;
}
BigInt get_big(const json& j) { return parse_decimal(j.get<std::string>()); }
double get_double(const json& j) { return parse_double(j.get<std::string>()); }
Rational get_rational(const json& j) {
  const std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_decimal(s));
  return Rational(parse_decimal(s.substr(0, slash)), parse_decimal(s.substr(slash + 1)));
}

template <typename T>
json opt(const std::optional<T>& x) {
  return x ? json(str(*x)) : json(nullptr);
}
template <typename T, typename F>
std::optional<T> get_opt(const json& j, F get) {
  if (j.is_null()) return std::nullopt;
  return get(j);
}

json interval(const Interval& i) { return {{"lo", str(i.lo)}, {"hi", str(i.hi)}}; }
Interval get_interval(const json& j) { return {get_double(j.at("lo")), get_double(j.at("hi"))}; }

json intervals(const std::vector<Interval>& v) {
  json out = json::array();
  for (const auto& i : v) out.push_back(interval(i));
  return out;
}
std::vector<Interval> get_intervals(const json& j) {
  std::vector<Interval> out;
  for (const auto& x : j) out.push_back(get_interval(x));
  return out;
}

json gamma_json(const GammaEstimate& g) {
  json points = json::array();
  for (const auto& p : g.points) {
    points.push_back({{"n", str(p.n)}, {"count", str(p.count)}, {"e", opt(p.e)},
                      {"ratio", opt(p.ratio)}});
  }
  json trend = json::array();
  for (int t : g.trend) trend.push_back(str(t));
  return {{"points", points}, {"trend", trend}};
}

GammaEstimate get_gamma(const json& j) {
  GammaEstimate g;
  for (const auto& p : j.at("points")) {
    g.points.push_back({get_int(p.at("n")), get_big(p.at("count")),
                        get_opt<double>(p.at("e"), get_double),
                        get_opt<double>(p.at("ratio"), get_double)});
  }
  for (const auto& t : j.at("trend")) g.trend.push_back(get_int(t));
  return g;
}

json audit_json(const AuditReport& a) {
  json rows = json::array();
  for (const auto& r : a.rows) {
    rows.push_back({{"n", str(r.n)}, {"count", str(r.count)}, {"bound", opt(r.bound)},
                    {"exact", r.exact}, {"holds", r.holds}, {"constant", opt(r.constant)}});
  }
  return {{"category", a.category}, {"constant_label", a.constant_label}, {"rows", rows},
          {"holds", a.holds()}};
}

AuditReport get_audit(const json& j) {
  AuditReport a;
  a.category = j.at("category").get<std::string>();
  a.constant_label = j.at("constant_label").get<std::string>();
  for (const auto& r : j.at("rows")) {
    a.rows.push_back({get_int(r.at("n")), get_big(r.at("count")),
                      get_opt<BigInt>(r.at("bound"), get_big), r.at("exact").get<bool>(),
                      r.at("holds").get<bool>(), get_opt<double>(r.at("constant"), get_double)});
  }
  return a;
}

json super_json(const SupermultiplicativeReport& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"m", str(r.m)}, {"n", str(r.n)}, {"lhs", str(r.lhs)}, {"rhs", str(r.rhs)},
                    {"holds", r.holds}});
  }
  return {{"rows", rows}, {"holds", s.holds()}};
}

SupermultiplicativeReport get_super(const json& j) {
  SupermultiplicativeReport s;
  for (const auto& r : j.at("rows")) {
    s.rows.push_back({get_int(r.at("m")), get_int(r.at("n")), get_rational(r.at("lhs")),
                      get_rational(r.at("rhs")), r.at("holds").get<bool>()});
  }
  return s;
}

json sandwich_json(const SandwichReport& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"n", str(r.n)}, {"lower", str(r.lower)}, {"apex", str(r.apex)},
                    {"upper", str(r.upper)}, {"holds", r.holds}});
  }
  return {{"rows", rows}, {"holds", s.holds()}};
}

SandwichReport get_sandwich(const json& j) {
  SandwichReport s;
  for (const auto& r : j.at("rows")) {
    s.rows.push_back({get_int(r.at("n")), get_big(r.at("lower")), get_big(r.at("apex")),
                      get_big(r.at("upper")), r.at("holds").get<bool>()});
  }
  return s;
}

json payload_json(const Payload& p) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ClassifyResult>) {
          return {{"kind", "classify"},
                  {"category", r.category},
                  {"growth_constant_exists", r.growth_constant_exists},
                  {"gamma_one", r.gamma_one},
                  {"minimized", r.minimized}};
        } else if constexpr (std::is_same_v<T, CountResult>) {
          return {{"kind", "count"}, {"table", r.table}};
        } else if constexpr (std::is_same_v<T, ConstantsResult>) {
          return {{"kind", "constants"},   {"tol", str(r.tol)},
                  {"xi_root", interval(r.xi_root)}, {"xi", interval(r.xi)},
                  {"nu_root", interval(r.nu_root)}, {"nu", interval(r.nu)},
                  {"rho", intervals(r.rho)},       {"gamma", intervals(r.gamma)},
                  {"e", interval(r.e)}};
        } else if constexpr (std::is_same_v<T, GrowthResult>) {
          return {{"kind", "growth"},
                  {"gamma", gamma_json(r.gamma)},
                  {"audit", audit_json(r.audit)},
                  {"supermultiplicative", super_json(r.supermultiplicative)},
                  {"sandwich", r.sandwich ? sandwich_json(*r.sandwich) : json(nullptr)}};
        } else {
          json criteria = json::array();
          for (const auto& c : r.criteria) {
            criteria.push_back({{"id", str(c.id)},
                                {"name", c.name},
                                {"passed", c.passed},
                                {"diagnostic", c.diagnostic},
                                {"detail", c.detail},
                                {"seconds", str(c.seconds)}});
          }
          return {{"kind", "verify"},
                  {"level", to_string(r.level)},
                  {"passed", r.passed()},
                  {"criteria", criteria}};
        }
      },
      p);
}

Payload get_payload(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "classify") {
    ClassifyResult r;
    r.category = j.at("category").get<GrowthCategory>();
    r.growth_constant_exists = j.at("growth_constant_exists").get<bool>();
    r.gamma_one = j.at("gamma_one").get<bool>();
    r.minimized = j.at("minimized").get<std::vector<std::string>>();
    return r;
  }
  if (kind == "count") return CountResult{j.at("table").get<CountTable>()};
  if (kind == "constants") {
    ConstantsResult r;
    r.tol = get_double(j.at("tol"));
    r.xi_root = get_interval(j.at("xi_root"));
    r.xi = get_interval(j.at("xi"));
    r.nu_root = get_interval(j.at("nu_root"));
    r.nu = get_interval(j.at("nu"));
    r.rho = get_intervals(j.at("rho"));
    r.gamma = get_intervals(j.at("gamma"));
    r.e = get_interval(j.at("e"));
    return r;
  }
  if (kind == "growth") {
    GrowthResult r;
    r.gamma = get_gamma(j.at("gamma"));
    r.audit = get_audit(j.at("audit"));
    r.supermultiplicative = get_super(j.at("supermultiplicative"));
    if (!j.at("sandwich").is_null()) r.sandwich = get_sandwich(j.at("sandwich"));
    return r;
  }
  if (kind == "verify") {
    VerifyResult r;
    r.level = parse_level(j.at("level").get<std::string>());
    for (const auto& c : j.at("criteria")) {
      CriterionResult cr;
      cr.id = get_int(c.at("id"));
      cr.name = c.at("name").get<std::string>();
      cr.passed = c.at("passed").get<bool>();
      cr.diagnostic = c.at("diagnostic").get<bool>();
      cr.detail = c.at("detail").get<std::string>();
      cr.seconds = get_double(c.at("seconds"));
      r.criteria.push_back(std::move(cr));
    }
    return r;
  }
  throw std::invalid_argument("unknown report kind '" + kind + "'");
}

}  // namespace

bool VerifyResult::passed() const {
  for (const auto& c : criteria) {
    if (!c.passed) return false;
  }
  return true;
}

bool same_except_timing(const Report& a, const Report& b) {
  Report x = a;
  Report y = b;
  x.elapsed_ms = y.elapsed_ms = 0;
  // Verification results carry their own timings.
  for (Report* r : {&x, &y}) {
    if (auto* v = std::get_if<VerifyResult>(&r->result)) {
      for (auto& c : v->criteria) c.seconds = 0;
    }
  }
  return x == y;
}

void to_json(json& j, const GrowthCategory& c) {
  j = {{"name", category_name(c)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SemiFactorial>) {
          j["k"] = str(v.k);
          j["lower_bound_only"] = v.lower_bound_only;
        } else if constexpr (std::is_same_v<T, PolynomialGrowth>) {
          json coeffs = json::array();
          for (const auto& x : v.coefficients) coeffs.push_back(str(x));
          j["coefficients"] = coeffs;
          j["threshold"] = str(v.threshold);
          j["empirical_threshold"] = opt(v.empirical_threshold);
          j["checked_up_to"] = str(v.checked_up_to);
        } else if constexpr (std::is_same_v<T, ConstantGrowth>) {
          j["value"] = str(v.value);
          j["threshold"] = str(v.threshold);
        }
      },
      c);
}

void from_json(const json& j, GrowthCategory& c) {
  const std::string name = j.at("name").get<std::string>();
  if (name == "Factorial") {
    c = Factorial{};
  } else if (name == "AlmostFactorial") {
    c = AlmostFactorial{};
  } else if (name == "SemiFactorial") {
    c = SemiFactorial{get_int(j.at("k")), j.at("lower_bound_only").get<bool>()};
  } else if (name == "Exponential") {
    c = Exponential{};
  } else if (name == "Polynomial") {
    PolynomialGrowth p;
    for (const auto& x : j.at("coefficients")) p.coefficients.push_back(get_big(x));
    p.threshold = get_int(j.at("threshold"));
    p.empirical_threshold = get_opt<int>(j.at("empirical_threshold"), get_int);
    p.checked_up_to = get_int(j.at("checked_up_to"));
    c = p;
  } else if (name == "Constant") {
    c = ConstantGrowth{get_int(j.at("value")), get_int(j.at("threshold"))};
  } else {
    throw std::invalid_argument("unknown growth category '" + name + "'");
  }
}

void to_json(json& j, const CountTable& t) {
  json entries = json::array();
  for (const auto& [n, e] : t.entries()) {
    entries.push_back({{"n", str(n)},
                       {"count", str(e.value())},
                       {"provenance", to_string(e.provenance())},
                       {"brute", opt(e.brute)},
                       {"formula", opt(e.formula)}});
  }
  j = {{"spec", t.key()}, {"entries", entries}};
}

void from_json(const json& j, CountTable& t) {
  t = CountTable(j.at("spec").get<std::string>());
  for (const auto& e : j.at("entries")) {
    const int n = get_int(e.at("n"));
    if (!e.at("brute").is_null()) t.record(n, get_big(e.at("brute")), Provenance::kBrute);
    if (!e.at("formula").is_null()) t.record(n, get_big(e.at("formula")), Provenance::kFormula);
    if (t.at(n) != get_big(e.at("count"))) throw std::invalid_argument("count field disagrees");
  }
}

void to_json(json& j, const Report& r) {
  j = {{"command", r.command},       {"args", r.args},       {"spec", r.spec},
       {"result", payload_json(r.result)}, {"version", r.version}, {"elapsed_ms", str(r.elapsed_ms)}};
}

void from_json(const json& j, Report& r) {
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  r.spec = j.at("spec").get<std::string>();
  r.result = get_payload(j.at("result"));
  r.version = j.at("version").get<std::string>();
  r.elapsed_ms = get_double(j.at("elapsed_ms"));
}

ConstantsResult compute_constants(int k_max, double tol) {
  ConstantsResult out;
  out.tol = tol;
  auto xi = xi_constant(tol);
  auto nu = nu_constant(tol);
  out.xi_root = {xi.lo, xi.hi};
  out.xi = {xi.inverse_lo, xi.inverse_hi};
  out.nu_root = {nu.lo, nu.hi};
  out.nu = {nu.inverse_lo, nu.inverse_hi};
  for (const auto& r : rho_sequence(k_max, tol)) {
    out.rho.push_back({r.lo, r.hi});
    out.gamma.push_back({r.inverse_lo, r.inverse_hi});
  }
  const double e = std::exp(1.0);
  out.e = {std::nextafter(e, 0.0), std::nextafter(e, 4.0)};
  return out;
}

}  // namespace minorgrowth
