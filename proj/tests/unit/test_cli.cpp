#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zfree/cli/commands.hpp"
#include "zfree/cli/reproduce.hpp"
#include "zfree/cli/run_config.hpp"
#include "zfree/dirichlet.hpp"
#include "zfree/error.hpp"

using namespace zfree;
using namespace zfree::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_subcommand(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zfree_test_" + name);
}

}  // namespace

TEST_CASE("psi prints the tuple and J") {
  const Run r = run({"psi", "--n", "4400", "--kappa", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,3,4,9,10,17\nJ=17\n");
}

TEST_CASE("usage errors exit with 2, domain errors with 1") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"psi", "--n", "12"}).code == kExitUsage);
  CHECK(run({"psi", "--n", "12", "--kappa", "3", "--bogus"}).code == kExitUsage);
  CHECK(run({"sieve", "--limit", "10", "--emit", "phi"}).code == kExitUsage);

  const Run not_free = run({"psi", "--n", "8", "--kappa", "3"});
  CHECK(not_free.code == kExitFailure);
  CHECK(not_free.err.find("not 3-free") != std::string::npos);
  CHECK(run({"sieve", "--limit", "1", "--emit", "mu"}).code == kExitFailure);
  CHECK(run({"zeta", "--sigma", "1"}).code == kExitFailure);
  CHECK(run({"invert", "--identity", "--ones", "--limit", "5"}).code == kExitFailure);
}

TEST_CASE("sieve output is re-parseable") {
  const Run r = run({"sieve", "--limit", "30", "--emit", "mu", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const IntArithFn mu = to_integer(read_arith_csv(in));
  CHECK(mu.limit() == 30);
  CHECK(mu(30) == -1);
  CHECK(mu(12) == 0);

  const Run j = run({"sieve", "--limit", "10", "--emit", "spf", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["values"][9] == 2);
  CHECK(parsed["values"][8] == 3);
}

TEST_CASE("factorisatio tables") {
  const Run r = run({"factorisatio", "--limit", "12", "--emit", "f"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  CHECK(to_integer(read_arith_csv(in))(12) == 8);

  const Run k = run({"factorisatio", "--limit", "12", "--k", "2", "--emit", "fk"});
  REQUIRE(k.code == 0);
  std::istringstream kin(k.out);
  CHECK(to_integer(read_arith_csv(kin))(12) == 4);
  CHECK(run({"factorisatio", "--limit", "12", "--emit", "fk"}).code == kExitFailure);
}

TEST_CASE("dlambda") {
  const Run r = run({"dlambda", "--n", "30", "--lambda", "1,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["d_lambda"] == 6);
  CHECK(j["bound"] == "6");
  CHECK(run({"dlambda", "--n", "30", "--lambda", "1,1"}).code == kExitFailure);
}

TEST_CASE("invert and convolve round trip through files") {
  const Run id = run({"invert", "--identity", "--limit", "5"});
  REQUIRE(id.code == 0);
  CHECK(id.out == "1,1,0\n2,0,0\n3,0,0\n4,0,0\n5,0,0\n");

  const Run mu = run({"invert", "--ones", "--limit", "50"});
  REQUIRE(mu.code == 0);
  const auto a = temp_file("mu.csv");
  const auto b = temp_file("one.csv");
  std::ofstream(a) << mu.out;
  {
    std::ofstream one(b);
    write_arith_csv(one, ones_fn<std::int64_t>(50));
  }
  const Run conv = run({"convolve", "--a", a.string(), "--b", b.string()});
  REQUIRE(conv.code == 0);
  std::istringstream in(conv.out);
  CHECK(to_integer(read_arith_csv(in)) == unit_fn<std::int64_t>(50));

  const Run alt = run({"invert", "--input", b.string(), "--method", "alternating", "--limit", "40"});
  REQUIRE(alt.code == 0);
  std::istringstream ain(alt.out);
  const IntArithFn alt_mu = to_integer(read_arith_csv(ain));
  CHECK(alt_mu.limit() == 40);
  CHECK(alt_mu(30) == -1);

  const auto c = temp_file("complex.csv");
  std::ofstream(c) << "n,re,im\n1,2,0\n2,0,1\n3,0.5,0.5\n";
  const Run cinv = run({"invert", "--input", c.string()});
  REQUIRE(cinv.code == 0);
  std::istringstream cin(cinv.out);
  const ArithFn g = read_arith_csv(cin);
  CHECK(g(1) == Complex(0.5, 0.0));
  CHECK(std::abs(g(2) - Complex(0.0, -0.25)) < 1e-15);

  CHECK(run({"convolve", "--a", a.string(), "--b", "/nonexistent.csv"}).code == kExitFailure);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
}

TEST_CASE("hr-count, coffeeshop, kalmar, sarnak") {
  const Run hr = run({"hr-count", "--x", "10", "--kappa", "2"});
  REQUIRE(hr.code == 0);
  CHECK(hr.out == "ell,count\n0,1\n1,4\n2,2\n");

  const Run cs = run({"coffeeshop", "--x", "10", "--c", "1", "--kappa", "2"});
  REQUIRE(cs.code == 0);
  CHECK(nlohmann::json::parse(cs.out)["value"] == 11.0);

  const Run k = run({"kalmar", "--x", "1000"});
  REQUIRE(k.code == 0);
  CHECK(nlohmann::json::parse(k.out)["ratio"].get<double>() > 0.9);

  const Run s = run({"sarnak", "--x", "10", "--xi", "f"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["numerator"] == 3);
}

TEST_CASE("family subcommands") {
  const Run dz = run({"dz", "--z", "2", "--limit", "12", "--emit", "fztilde"});
  REQUIRE(dz.code == 0);
  std::istringstream in(dz.out);
  CHECK(to_integer(read_arith_csv(in))(12) == 42);

  const Run cz = run({"dz", "--z", "0.5,0.5", "--limit", "10", "--emit", "gz"});
  REQUIRE(cz.code == 0);
  std::istringstream cin(cz.out);
  CHECK(std::abs(read_arith_csv(cin)(6) - Complex(-0.5, -0.5)) < 1e-12);

  const Run neg = run({"dz", "--z", "-1", "--limit", "10", "--emit", "fztilde"});
  REQUIRE(neg.code == 0);

  const Run b = run({"beta-z", "--z", "-1"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["beta_z"].get<double>() == doctest::Approx(1.728647).epsilon(1e-6));
  CHECK(nlohmann::json::parse(run({"beta-z", "--z", "0"}).out)["beta_z"] == "-inf");

  const Run e = run({"dz-eval", "--z", "0.5", "--sigma", "4", "--t", "1", "--limit", "2000"});
  REQUIRE(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["tail_bound"].is_number());

  const Run z = run({"zeta", "--sigma", "2", "--prime"});
  REQUIRE(z.code == 0);
  const auto zj = nlohmann::json::parse(z.out);
  CHECK(zj["value"].get<double>() == doctest::Approx(1.6449340668482264));
  CHECK(zj["derivative"].get<double>() < 0.0);
}

TEST_CASE("verify suites") {
  const Run r = run({"verify", "--suite", "all", "--limit", "2000", "--seed", "3"});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--suite", "dirichlet", "--limit", "1000"}).code == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
}

TEST_CASE("reproduce is deterministic and labels fitted constants") {
  const auto cfg = temp_file("config.json");
  std::ofstream(cfg) << R"({"sieve_limit": 20000, "checkpoints": [100, 1000, 10000],
                           "kappas": [2, 3], "zs": [[1, 0], [0, 1]], "seed": 5})";
  const Run a = run({"reproduce", "--config", cfg.string()});
  const Run b = run({"reproduce", "--config", cfg.string()});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["fitted"]["label"] == "fitted");
  CHECK(j["checks"]["psi_4400"]["J"] == 17);
  CHECK(j["checks"]["mu_parity"]["pass"] == true);
  CHECK(j["checks"]["completely_multiplicative_support"]["pass"] == true);
  CHECK(j["checks"]["prime_power_closed_form"]["pass"] == true);
  CHECK(j["measurements"]["kalmar"].size() == 3);

  std::ofstream(cfg) << R"({"sieve_limit": 1000, "checkpoints": [1000, 100]})";
  CHECK(run({"reproduce", "--config", cfg.string()}).code == kExitFailure);
  std::filesystem::remove(cfg);
}

TEST_CASE("run config parsing") {
  CHECK(parse_complex("2") == std::complex<double>(2.0, 0.0));
  CHECK(parse_complex("2,-3") == std::complex<double>(2.0, -3.0));
  CHECK_THROWS_AS((void)parse_complex("2x"), DomainError);
  const RunConfig c = RunConfig::from_json(RunConfig{}.to_json());
  CHECK(c.to_json() == RunConfig{}.to_json());
  RunConfig bad;
  bad.sieve_limit = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}
