#include "zfree/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "zfree/cli/reproduce.hpp"
#include "zfree/cli/run_config.hpp"
#include "zfree/cli/verify.hpp"
#include "zfree/dirichlet.hpp"
#include "zfree/error.hpp"
#include "zfree/factorisatio.hpp"
#include "zfree/family_dz.hpp"
#include "zfree/hardy_ramanujan.hpp"
#include "zfree/series_eval.hpp"

namespace zfree::cli {

namespace {

using nlohmann::json;

// Option storage shared by the subcommand callbacks.
struct Options {
  std::uint64_t limit = 0;
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  unsigned kappa = 2;
  unsigned k = 0;
  double c = 2.0;
  double sigma = 2.0;
  double t = 0.0;
  std::string emit;
  std::string format = "csv";
  std::string lambda;
  std::string input;
  std::string a;
  std::string b;
  std::string z = "1";
  std::string xi = "f";
  std::string method = "recurrence";
  std::string suite = "all";
  std::string config;
  std::string output_dir;
  std::string output;
  bool identity = false;
  bool ones = false;
  bool prime = false;
  std::uint64_t seed = RunConfig{}.seed;
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

SieveTables sieve_for(std::uint64_t limit) { return build_sieve(std::max<std::uint64_t>(limit, 2)); }

std::ostream& target(std::ostream& out, std::unique_ptr<std::ofstream>& file,
                     const std::string& path) {
  if (path.empty()) return out;
  file = std::make_unique<std::ofstream>(path);
  if (!*file) throw DomainError("cannot open output file " + path);
  return *file;
}

ArithFn load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file " + path);
  return read_arith_csv(in);
}

void write_fn(std::ostream& out, const ArithFn& f) {
  if (is_integer_valued(f)) {
    write_arith_csv(out, to_integer(f));
  } else {
    write_arith_csv(out, f);
  }
}

std::vector<unsigned> parse_parts(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      parts.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw DomainError("bad partition part '" + item + "'");
    }
  }
  if (parts.empty()) throw DomainError("empty partition");
  return parts;
}

// ---- subcommand bodies -------------------------------------------------

int cmd_sieve(const Options& o, std::ostream& out) {
  const SieveTables s = build_sieve(o.limit);
  auto value = [&](std::uint64_t n) -> std::int64_t {
    if (o.emit == "mu") return s.mu(n);
    if (o.emit == "omega") return s.small_omega(n);
    if (o.emit == "bigomega") return s.big_omega(n);
    return n == 1 ? 1 : static_cast<std::int64_t>(s.spf(n));  // spf, with spf(1) = 1
  };
  if (o.format == "json") {
    json values = json::array();
    for (std::uint64_t n = 1; n <= o.limit; ++n) values.push_back(value(n));
    print_json(out, {{"limit", o.limit}, {"emit", o.emit}, {"values", values}});
  } else {
    out << "n," << o.emit << '\n';
    for (std::uint64_t n = 1; n <= o.limit; ++n) out << n << ',' << value(n) << '\n';
  }
  return kExitOk;
}

int cmd_factorisatio(const Options& o, std::ostream& out) {
  if (o.limit < 1) throw DomainError("factorisatio needs --limit >= 1");
  if (o.emit == "fk" && o.k == 0) throw DomainError("--emit fk needs --k K (K >= 1)");
  const SieveTables s = sieve_for(o.limit);
  const auto t = o.emit == "fk" ? build_factorisation_tables(s, o.limit, o.k)
                                : build_factorisation_tables(s, o.limit, 0);
  auto value = [&](std::uint64_t n) -> std::uint64_t {
    if (o.emit == "f") return t.f(n);
    if (o.emit == "feven") return t.f_even(n);
    if (o.emit == "fodd") return t.f_odd(n);
    return t.fk(o.k, n);
  };
  const std::string column = o.emit == "fk" ? "f" + std::to_string(o.k) : o.emit;
  if (o.format == "json") {
    json values = json::array();
    for (std::uint64_t n = 1; n <= o.limit; ++n) values.push_back(value(n));
    print_json(out, {{"limit", o.limit}, {"emit", column}, {"values", values}});
  } else {
    out << "n," << column << '\n';
    for (std::uint64_t n = 1; n <= o.limit; ++n) out << n << ',' << value(n) << '\n';
  }
  return kExitOk;
}

int cmd_dlambda(const Options& o, std::ostream& out) {
  if (o.n < 1) throw DomainError("dlambda needs --n >= 1");
  const SieveTables s = sieve_for(o.n);
  const PartitionMultiset lambda(parse_parts(o.lambda));
  const FactoredInt fn = factorize(o.n, s);
  const std::uint64_t d = d_lambda(fn, lambda);
  print_json(out, {{"n", o.n},
                   {"lambda", lambda.parts()},
                   {"d_lambda", d},
                   {"bound", d_lambda_bound(lambda).str()},
                   {"squarefree", fn.is_squarefree()}});
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const int sources = int(o.identity) + int(o.ones) + int(!o.input.empty());
  if (sources != 1) throw DomainError("invert needs exactly one of --input, --identity, --ones");
  ArithFn f;
  if (o.input.empty()) {
    if (o.limit < 1) throw DomainError("--identity/--ones need --limit >= 1");
    f = o.identity ? unit_fn<Complex>(o.limit) : ones_fn<Complex>(o.limit);
  } else {
    f = load_csv(o.input);
    if (o.limit > 0) {
      if (o.limit > f.limit()) throw RangeError("--limit exceeds the rows in " + o.input);
      const ArithFn full = f;
      f = ArithFn(o.limit, [&](std::uint64_t n) { return full(n); });
    }
  }
  const bool alternating = o.method == "alternating";
  if (is_integer_valued(f) && (f(1) == Complex(1.0) || f(1) == Complex(-1.0))) {
    const IntArithFn g = to_integer(f);
    write_arith_csv(out, alternating ? inverse_via_alternating(g) : dirichlet_inverse(g));
  } else {
    write_arith_csv(out, alternating ? inverse_via_alternating(f) : dirichlet_inverse(f));
  }
  return kExitOk;
}

int cmd_convolve(const Options& o, std::ostream& out) {
  const ArithFn a = load_csv(o.a);
  const ArithFn b = load_csv(o.b);
  if (is_integer_valued(a) && is_integer_valued(b)) {
    write_arith_csv(out, convolve(to_integer(a), to_integer(b)));
  } else {
    write_fn(out, convolve(a, b));
  }
  return kExitOk;
}

int cmd_hr_count(const Options& o, std::ostream& out) {
  const SieveTables s = sieve_for(o.x);
  const CountingProfile p = kappa_profile(o.x, o.kappa, s);
  if (o.format == "json") {
    print_json(out, {{"x", o.x}, {"kappa", o.kappa}, {"per_ell", p.per_ell}, {"total", p.total()}});
  } else {
    out << "ell,count\n";
    for (std::size_t ell = 0; ell < p.per_ell.size(); ++ell) out << ell << ',' << p.per_ell[ell] << '\n';
  }
  return kExitOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  if (o.n < 1) throw DomainError("psi needs --n >= 1");
  // tilde_p needs primes up to n; the sieve must hold n itself for factorize
  const SieveTables s = sieve_for(o.n);
  const PsiTuple psi = psi_tuple(o.n, o.kappa, s);
  for (std::size_t i = 0; i < psi.indices.size(); ++i) out << (i ? "," : "") << psi.indices[i];
  out << '\n' << "J=" << psi.J << '\n';
  return kExitOk;
}

int cmd_coffeeshop(const Options& o, std::ostream& out) {
  const SieveTables s = sieve_for(o.x);
  const auto t = build_factorisation_tables(s, std::max<std::uint64_t>(o.x, 2), 0);
  const CoffeeshopSum r = coffeeshop_sum(o.x, o.c, o.kappa, s, t);
  print_json(out, {{"x", r.x},
                   {"c", r.c},
                   {"kappa", r.kappa},
                   {"value", static_cast<double>(r.value)},
                   {"f_by_omega", r.f_by_omega},
                   {"exponent", r.exponent}});
  return kExitOk;
}

int cmd_dz(const Options& o, std::ostream& out) {
  if (o.limit < 1) throw DomainError("dz needs --limit >= 1");
  const Complex z = parse_complex(o.z);
  const SieveTables s = sieve_for(o.limit);
  const bool exact = z.imag() == 0.0 && std::floor(z.real()) == z.real() && std::abs(z.real()) < 1e9;
  if (exact) {
    const IntZFamily fam = build_exact_context(static_cast<std::int64_t>(z.real()), o.limit, s);
    const IntArithFn& f = o.emit == "fz" ? fam.fz : o.emit == "gz" ? fam.gz : fam.fz_tilde;
    write_arith_csv(out, f);
  } else {
    const ZFamily fam = build_context(z, o.limit, s);
    const ArithFn& f = o.emit == "fz" ? fam.fz : o.emit == "gz" ? fam.gz : fam.fz_tilde;
    write_arith_csv(out, f);
  }
  return kExitOk;
}

int cmd_dz_eval(const Options& o, std::ostream& out) {
  const Complex z = parse_complex(o.z);
  const std::uint64_t limit = o.limit ? o.limit : 10'000;
  const SieveTables s = sieve_for(limit);
  const ZFamily fam = build_context(z, limit, s);
  const TildeGrowthFit fit = fit_tilde_growth(fam);
  const DzEvaluation e = evaluate_family(fam, ComplexPoint{o.sigma, o.t}, s, fit.constant);
  auto cj = [](Complex v) { return json::array({v.real(), v.imag()}); };
  print_json(out, {{"z", cj(z)},
                   {"sigma", o.sigma},
                   {"t", o.t},
                   {"limit", limit},
                   {"inverse_series", cj(e.fz_tilde_series)},
                   {"closed_form", cj(e.closed_form)},
                   {"dagger", cj(e.dagger)},
                   {"dz", cj(e.dz)},
                   {"tail_bound", std::isfinite(e.tail_bound) ? json(e.tail_bound) : json(nullptr)},
                   {"abscissa", fit.exponent + 1.0},
                   {"fitted_growth_c", fit.constant}});
  return kExitOk;
}

int cmd_beta_z(const Options& o, std::ostream& out) {
  const Complex z = parse_complex(o.z);
  const double b = beta_z(z);
  print_json(out, {{"z", json::array({z.real(), z.imag()})},
                   {"beta_z", std::isfinite(b) ? json(b) : json("-inf")}});
  return kExitOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const ZetaReal z = zeta_real(o.sigma);
  json j{{"sigma", z.sigma}, {"value", z.value}, {"error_bound", z.error_bound}, {"method", z.method}};
  if (o.prime) {
    j["derivative"] = z.derivative;
    j["derivative_error_bound"] = z.derivative_error_bound;
  }
  print_json(out, j);
  return kExitOk;
}

int cmd_kalmar(const Options& o, std::ostream& out) {
  const SieveTables s = sieve_for(o.x);
  const auto t = build_factorisation_tables(s, std::max<std::uint64_t>(o.x, 1), 0);
  const KalmarPoint k = kalmar_ratio(o.x, t);
  print_json(out, {{"x", k.x},
                   {"sum_f", k.sum},
                   {"predicted", k.predicted},
                   {"ratio", k.ratio},
                   {"log_exponent", k.log_exponent},
                   {"beta", kalmar_beta()}});
  return kExitOk;
}

int cmd_sarnak(const Options& o, std::ostream& out) {
  const SieveTables s = sieve_for(o.x);
  const auto t = build_factorisation_tables(s, std::max<std::uint64_t>(o.x, 1), 0);
  const SarnakPoint p = sarnak_correlation(
      o.x, o.xi == "fmu2" ? SarnakSelector::kFMu2 : SarnakSelector::kF, s, t);
  print_json(out, {{"x", p.x},
                   {"xi", to_string(p.xi)},
                   {"numerator", p.numerator},
                   {"denominator", p.denominator},
                   {"ratio", p.ratio}});
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_verify(o.suite, o.limit ? o.limit : 5000, o.seed);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    failed += !r.passed;
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed ? kExitFailure : kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  RunConfig config = o.config.empty() ? RunConfig{} : RunConfig::load(o.config);
  if (!o.output_dir.empty()) config.output_dir = o.output_dir;
  if (o.seed != RunConfig{}.seed) config.seed = o.seed;
  if (o.limit) {
    config.sieve_limit = o.limit;
    std::erase_if(config.checkpoints, [&](std::uint64_t x) { return x > o.limit; });
  }
  const json report = reproduce_report(config);
  print_json(out, report);
  if (!config.output_dir.empty()) {
    const std::string path = config.output_dir + "/report.json";
    std::ofstream file(path);
    if (!file) throw DomainError("cannot write " + path);
    file << report.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet-inverse and ordered-factorization workbench", "zfree"};
  app.require_subcommand(1);
  Options o;
  std::function<int(std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& help,
                 int (*body)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, &o, body] { action = [&o, body](std::ostream& os) { return body(o, os); }; });
    sub->add_option("--output", o.output, "Write to this file instead of stdout");
    return sub;
  };

  auto* sieve = add("sieve", "Sieve tables: mu, omega, bigomega or spf", cmd_sieve);
  sieve->add_option("--limit", o.limit, "Sieve limit N")->required();
  sieve->add_option("--emit", o.emit)->required()->check(CLI::IsMember({"mu", "omega", "bigomega", "spf"}));
  sieve->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* fact = add("factorisatio", "Ordered-factorization counts", cmd_factorisatio);
  fact->add_option("--limit", o.limit)->required();
  fact->add_option("--k", o.k, "Length k for --emit fk");
  fact->add_option("--emit", o.emit)->required()->check(CLI::IsMember({"f", "fk", "feven", "fodd"}));
  fact->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* dl = add("dlambda", "Count factorizations of n with a given Omega pattern", cmd_dlambda);
  dl->add_option("--n", o.n)->required();
  dl->add_option("--lambda", o.lambda, "Parts, comma separated, e.g. 1,2")->required();

  auto* inv = add("invert", "Dirichlet inverse of a CSV function", cmd_invert);
  inv->add_option("--input", o.input, "CSV rows n,re,im");
  inv->add_flag("--identity", o.identity, "Invert the unit function I");
  inv->add_flag("--ones", o.ones, "Invert the constant function 1");
  inv->add_option("--limit", o.limit);
  inv->add_option("--method", o.method)->check(CLI::IsMember({"recurrence", "alternating"}));

  auto* conv = add("convolve", "Dirichlet convolution of two CSV functions", cmd_convolve);
  conv->add_option("--a", o.a)->required();
  conv->add_option("--b", o.b)->required();

  auto* hr = add("hr-count", "Counts of kappa-free n <= x by Omega", cmd_hr_count);
  hr->add_option("--x", o.x)->required();
  hr->add_option("--kappa", o.kappa)->required();
  hr->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* psi = add("psi", "Minimal-index representation of a kappa-free n", cmd_psi);
  psi->add_option("--n", o.n)->required();
  psi->add_option("--kappa", o.kappa)->required();

  auto* cs = add("coffeeshop", "Sum of C^Omega(n) f(n) over kappa-free n <= x", cmd_coffeeshop);
  cs->add_option("--x", o.x)->required();
  cs->add_option("--c", o.c)->required();
  cs->add_option("--kappa", o.kappa)->required();

  auto* dz = add("dz", "Tables of the family F_z, its inverse, and G_z", cmd_dz);
  dz->add_option("--z", o.z, "RE or RE,IM")->required();
  dz->add_option("--limit", o.limit)->required();
  dz->add_option("--emit", o.emit)->required()->check(CLI::IsMember({"fz", "fztilde", "gz"}));
  dz->add_option("--format", o.format)->check(CLI::IsMember({"csv"}));

  auto* dze = add("dz-eval", "Truncated series of the family at s = sigma + it", cmd_dz_eval);
  dze->add_option("--z", o.z)->required();
  dze->add_option("--sigma", o.sigma)->required();
  dze->add_option("--t", o.t);
  dze->add_option("--limit", o.limit, "Truncation N (default 10000)");

  auto* bz = add("beta-z", "Root of zeta(sigma) = 1 + 1/|z|", cmd_beta_z);
  bz->add_option("--z", o.z)->required();

  auto* zeta = add("zeta", "Real zeta value with error bound", cmd_zeta);
  zeta->add_option("--sigma", o.sigma)->required();
  zeta->add_flag("--prime", o.prime, "Also report the derivative");

  auto* kal = add("kalmar", "Sum of f(n) against the Kalmar asymptotic", cmd_kalmar);
  kal->add_option("--x", o.x)->required();

  auto* sar = add("sarnak", "Correlation of mu with f or f mu^2", cmd_sarnak);
  sar->add_option("--x", o.x)->required();
  sar->add_option("--xi", o.xi)->check(CLI::IsMember({"f", "fmu2"}));

  std::vector<std::string> suite_names{"all"};
  for (const auto& s : verify_suites()) suite_names.push_back(s);
  auto* ver = add("verify", "Run invariant suites; nonzero exit on failure", cmd_verify);
  ver->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names));
  ver->add_option("--limit", o.limit, "Scale of the checks (default 5000)");
  ver->add_option("--seed", o.seed);

  auto* rep = add("reproduce", "Full experiment report as JSON", cmd_reproduce);
  rep->add_option("--config", o.config, "JSON run configuration");
  rep->add_option("--output-dir", o.output_dir, "Also write report.json here");
  rep->add_option("--limit", o.limit, "Override the sieve limit");
  rep->add_option("--seed", o.seed);

  std::vector<std::string> argv_storage{"zfree"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    std::ostream& os = target(out, file, o.output);
    return action(os);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  }
  return kExitFailure;
}

}  // namespace zfree::cli
