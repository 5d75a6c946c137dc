#include "cli.hpp"

#include "minorgrowth/cache.hpp"
#include "minorgrowth/graph_expr.hpp"
#include "minorgrowth/minor.hpp"
#include "minorgrowth/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef MINORGROWTH_VERSION
#define MINORGROWTH_VERSION "unknown"
#endif

namespace minorgrowth {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || x < 0) {
      throw UsageError("--n expects an integer or a range a..b, got '" + text + "'");
    }
    return x;
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

std::string show(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string show(const GrowthCategory& c) {
  std::string out = category_name(c);
  if (auto* s = std::get_if<SemiFactorial>(&c)) {
    out += " k=" + std::to_string(s->k);
    if (s->lower_bound_only) out += " (lower bound: search cap reached)";
  } else if (auto* p = std::get_if<PolynomialGrowth>(&c)) {
    out += " f(n) =";
    bool first = true;
    for (std::size_t j = 0; j < p->coefficients.size(); ++j) {
      if (p->coefficients[j] == 0) continue;
      out += first ? " " : " + ";
      first = false;
      out += to_decimal(p->coefficients[j]) + "*C(n," + std::to_string(j) + ")";
    }
    out += " for n >= " + std::to_string(p->threshold);
    if (p->empirical_threshold) {
      out += " (matches brute counts from n = " + std::to_string(*p->empirical_threshold) +
             " to " + std::to_string(p->checked_up_to) + ")";
    }
  } else if (auto* k = std::get_if<ConstantGrowth>(&c)) {
    out += " value=" + std::to_string(k->value) + " for n >= " + std::to_string(k->threshold);
  }
  return out;
}

void print_text(const Report& r, std::ostream& out) {
  if (!r.spec.empty()) out << "spec: Ex(" << r.spec << ")\n";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ClassifyResult>) {
          out << "category: " << show(p.category) << "\n";
          out << "growth constant guaranteed: " << (p.growth_constant_exists ? "yes" : "no")
              << "\n";
          out << "growth constant 1 test: " << (p.gamma_one ? "yes" : "no") << "\n";
          out << "minimal obstructions:";
          for (const auto& m : p.minimized) out << " " << m;
          out << "\n";
        } else if constexpr (std::is_same_v<T, CountResult>) {
          out << std::setw(4) << "n" << "  " << std::setw(14) << "count" << "  provenance\n";
          for (const auto& [n, e] : p.table.entries()) {
            out << std::setw(4) << n << "  " << std::setw(14) << to_decimal(e.value()) << "  "
                << to_string(e.provenance()) << (e.brute && e.formula ? "+formula" : "") << "\n";
          }
        } else if constexpr (std::is_same_v<T, ConstantsResult>) {
          out << "xi  = 1/root of x e^x = 1      in [" << show(p.xi.lo) << ", " << show(p.xi.hi)
              << "]\n";
          out << "nu  = 1/root of z e^(z/(1-z)) = 1 in [" << show(p.nu.lo) << ", "
              << show(p.nu.hi) << "]\n";
          out << std::setw(4) << "k" << "  " << std::setw(16) << "rho_k" << "  " << std::setw(16)
              << "gamma_k" << "\n";
          for (std::size_t k = 0; k < p.rho.size(); ++k) {
            out << std::setw(4) << k << "  " << std::setw(16)
                << show(0.5 * (p.rho[k].lo + p.rho[k].hi)) << "  " << std::setw(16)
                << show(0.5 * (p.gamma[k].lo + p.gamma[k].hi)) << "\n";
          }
          out << "limit of gamma_k: e = " << show(p.e.hi) << "\n";
          out << "growth constants: path forests 1, caterpillar forests xi, forests e\n";
        } else if constexpr (std::is_same_v<T, GrowthResult>) {
          out << "category: " << p.audit.category << "\n";
          out << std::setw(4) << "n" << "  " << std::setw(12) << "count" << "  " << std::setw(10)
              << "e_n" << "  " << std::setw(10) << "r_n" << "  " << std::setw(12) << "bound"
              << "  ok\n";
          for (std::size_t i = 0; i < p.gamma.points.size(); ++i) {
            const auto& pt = p.gamma.points[i];
            const auto& row = p.audit.rows[i];
            out << std::setw(4) << pt.n << "  " << std::setw(12) << to_decimal(pt.count) << "  "
                << std::setw(10) << (pt.e ? show(*pt.e, 6) : "-") << "  " << std::setw(10)
                << (pt.ratio ? show(*pt.ratio, 6) : "-") << "  " << std::setw(12)
                << (row.bound ? (row.exact ? "=" : ">=") + to_decimal(*row.bound) : "-") << "  "
                << (row.holds ? "yes" : "NO") << "\n";
          }
          out << "supermultiplicative (m + n in table): "
              << (p.supermultiplicative.holds() ? "holds" : "FAILS") << " on "
              << p.supermultiplicative.rows.size() << " pairs\n";
          if (p.sandwich) {
            out << "apex sandwich 2^n g_n <= |AG_(n+1)| <= (n+1) 2^n g_n:\n";
            for (const auto& row : p.sandwich->rows) {
              out << std::setw(4) << row.n << "  " << to_decimal(row.lower) << " <= "
                  << to_decimal(row.apex) << " <= " << to_decimal(row.upper) << "  "
                  << (row.holds ? "yes" : "NO") << "\n";
            }
          }
          out << "(desk-scale estimates; limits are not asserted)\n";
        } else {
          for (const auto& c : p.criteria) out << format_line(c) << "\n";
          out << (p.passed() ? "verification passed" : "verification FAILED") << " (level "
              << to_string(p.level) << ")\n";
        }
      },
      r.result);
}

void print_csv(const CountTable& t, std::ostream& out) {
  out << "n,count,provenance\n";
  for (const auto& [n, e] : t.entries()) {
    out << n << "," << to_decimal(e.value()) << "," << to_string(e.provenance()) << "\n";
  }
}

ClassSpec spec_from(const std::vector<std::string>& excludes) {
  ClassSpec spec = ClassSpec::parse(excludes);
  if (spec.empty()) throw UsageError("at least one --exclude graph is required");
  return spec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth of minor-closed graph classes Ex(H_1, ..., H_k)", "minorgrowth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MINORGROWTH_VERSION);

  std::vector<std::string> excludes;
  std::string n_text = "1..7";
  std::string cache_path;
  std::string level_text = "fast";
  std::string fault;
  int workers = 1;
  int k_max = 10;
  double tol = 1e-12;
  bool as_json = false;
  bool as_csv = false;
  bool apex = false;

  auto add_exclude = [&](CLI::App* cmd) {
    cmd->add_option("--exclude,-x", excludes,
                    "Excluded minor(s) in the graph DSL; repeatable, comma lists allowed")
        ->required();
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "Emit the JSON report"); };

  auto* classify_cmd = app.add_subcommand("classify", "Growth category of Ex(...)");
  add_exclude(classify_cmd);
  add_json(classify_cmd);

  auto* count_cmd = app.add_subcommand("count", "Exact counts g_n of labelled members");
  add_exclude(count_cmd);
  count_cmd->add_option("--n", n_text, "Order or range a..b")->required();
  count_cmd->add_option("--cache", cache_path, "Count cache file (JSON)");
  count_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  auto* json_flag = count_cmd->add_flag("--json", as_json, "Emit the JSON report");
  count_cmd->add_flag("--csv", as_csv, "Emit n,count,provenance rows")->excludes(json_flag);

  auto* constants_cmd = app.add_subcommand("constants", "xi, nu and the rho_k sequence");
  constants_cmd->add_option("--kmax", k_max, "Largest k in the rho_k table")
      ->check(CLI::Range(0, 60));
  constants_cmd->add_option("--tol", tol, "Bisection tolerance")
      ->check(CLI::Range(1e-15, 1e-1));
  add_json(constants_cmd);

  auto* growth_cmd = app.add_subcommand("growth", "Growth estimates and bound checks");
  add_exclude(growth_cmd);
  growth_cmd->add_option("--n", n_text, "Order or range a..b (default 1..7)");
  growth_cmd->add_option("--cache", cache_path, "Count cache file (JSON)");
  growth_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  growth_cmd->add_flag("--apex", apex, "Also run the apex sandwich below the top of the range");
  add_json(growth_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--level", level_text, "fast (n <= 6) or full (n <= 7)")
      ->check(CLI::IsMember({"fast", "full"}));
  verify_cmd->add_option("--inject-fault", fault, "Testing aid: invert-minor")
      ->check(CLI::IsMember({"invert-minor"}))
      ->group("");
  add_json(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.args = args;
  report.version = MINORGROWTH_VERSION;
  std::optional<CountCache> cache;
  auto open_cache = [&]() -> CountCache* {
    if (cache_path.empty()) return nullptr;
    cache = CountCache::load(cache_path);
    if (cache->rebuilt()) err << "warning: cache " << cache_path << " was corrupt; rebuilding\n";
    return &*cache;
  };

  try {
    if (classify_cmd->parsed()) {
      report.command = "classify";
      ClassSpec spec = spec_from(excludes);
      report.spec = spec.key();
      ClassifyResult r;
      r.category = classify(spec);
      r.growth_constant_exists = exists_growth_constant(spec);
      r.gamma_one = gamma_one_test(spec);
      const ClassSpec minimal = minimize_obstructions(spec);
      for (const auto& e : minimal.excluded()) r.minimized.push_back(e.label);
      std::sort(r.minimized.begin(), r.minimized.end());
      report.result = r;
    } else if (count_cmd->parsed()) {
      report.command = "count";
      ClassSpec spec = spec_from(excludes);
      report.spec = spec.key();
      Range range = parse_range(n_text);
      CountCache* c = open_cache();
      report.result = CountResult{cached_count_table(spec, range.lo, range.hi, {workers, -1}, c)};
      if (c) c->save(cache_path);
    } else if (constants_cmd->parsed()) {
      report.command = "constants";
      report.result = compute_constants(k_max, tol);
    } else if (growth_cmd->parsed()) {
      report.command = "growth";
      ClassSpec spec = spec_from(excludes);
      report.spec = spec.key();
      Range range = parse_range(n_text);
      CountCache* c = open_cache();
      CountTable table = cached_count_table(spec, range.lo, range.hi, {workers, -1}, c);
      if (c) c->save(cache_path);
      GrowthResult r;
      r.gamma = gamma_sequence(table);
      r.audit = bound_audit(spec, classify(spec), table);
      r.supermultiplicative = supermultiplicative_check(table);
      if (apex) r.sandwich = apex_sandwich_check(spec, std::min(range.hi, 7));
      report.result = r;
    } else if (verify_cmd->parsed()) {
      report.command = "verify";
      AcceptanceOptions options;
      options.level = parse_level(level_text);
      if (fault == "invert-minor") {
        options.minor_test = [](const Graph& h, const Graph& g) { return !is_minor(h, g); };
      }
      VerifyResult r;
      r.level = options.level;
      r.criteria = run_acceptance(options);
      report.result = r;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    out << json(report).dump(2) << "\n";
  } else if (as_csv) {
    print_csv(std::get<CountResult>(report.result).table, out);
  } else {
    print_text(report, out);
  }
  if (auto* v = std::get_if<VerifyResult>(&report.result); v && !v->passed()) return 1;
  return 0;
}

}  // namespace minorgrowth
