#include <doctest.h>

#include <set>

#include "lpq/verification.hpp"

using namespace lpq;

TEST_CASE("displayed polynomial") {
  MultiLaurent p = borromean_axis_polynomial();
  CHECK(p.term_count() == 17);
  CHECK(p.coeff({0, 0, 0, 0}) == -4);
  CHECK(p.coeff({1, 1, 1, 0}) == 1);
  CHECK(p.coeff({-1, 0, -1, 0}) == -1);
  CHECK(has_symmetric_support(p));
}

TEST_CASE("random generators respect their bounds and the seed") {
  std::mt19937_64 a(1), b(1);
  for (int i = 0; i < 200; ++i) {
    MultiLaurent p = random_laurent(a);
    CHECK(p == random_laurent(b));
    CHECK(p.term_count() >= 1);
    CHECK(p.term_count() <= 8);
    CHECK(p.max_exponents()[0] - p.min_exponents()[0] <= 30);
  }
  for (int k = 1; k <= 6; ++k) {
    MultiLaurent p = random_linear_product(a, k);
    CHECK(p.max_exponents()[0] - p.min_exponents()[0] == k);
  }
}

TEST_CASE("report status is the conjunction of its checks") {
  VerificationReport r;
  CHECK(r.passed());
  r.checks.push_back({"a", "", true, 0, ""});
  CHECK(r.passed());
  r.checks.push_back({"b", "", false, 0, ""});
  CHECK_FALSE(r.passed());
  CHECK(to_json(r)["passed"] == false);
  CHECK(format_table(r).find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("small verification run passes and is deterministic") {
  VerificationOptions opts;
  opts.pmax = 1;
  opts.qmax = 1;
  opts.random_trials = 100;
  VerificationReport r = run_verification(opts);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << " " << c.params << " " << c.detail);
  CHECK(r.passed());
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.name);
  CHECK(names.count("golden_poly") == 1);
  CHECK(names.count("known_values") == 1);
  CHECK(to_json(r).dump() == to_json(run_verification(opts)).dump());
  opts.pmax = 0;
  CHECK_THROWS(run_verification(opts));
}
