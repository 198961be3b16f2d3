#include <random>

#include "doctest.h"
#include "ncalg/errors.hpp"
#include "ncalg/rewrite.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<long> dims(const AlgebraPresentation& P, int N) {
  return hilbert_function(complete(P.ring, P.relations, N).system, N).dims;
}

}  // namespace

TEST_CASE("free algebra and commutative polynomial rings") {
  auto F = presentation({"x2", "x1"}, {});
  CHECK(dims(F, 5) == std::vector<long>{1, 2, 4, 8, 16, 32});
  auto k2 = presentation({"x2", "x1"}, {"x2*x1 - x1*x2"});
  CHECK(dims(k2, 6) == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
  auto k4 = presentation({"x4", "x3", "x2", "x1"}, {"x4*x3 - x3*x4", "x4*x2 - x2*x4", "x4*x1 - x1*x4",
                                                     "x3*x2 - x2*x3", "x3*x1 - x1*x3", "x2*x1 - x1*x2"});
  auto h = dims(k4, 6);
  for (int n = 0; n <= 6; ++n) CHECK(h[n] == binom(n + 3, 3));
}

TEST_CASE("Jordan plane needs no new rules") {
  auto J = presentation({"x2", "x1"}, {"x2*x1 - x1*x2 - x1^2"});
  auto res = complete(J.ring, J.relations, 6);
  CHECK(res.new_rules.empty());
  CHECK(hilbert_function(res.system, 6).dims == std::vector<long>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("completion adds the cubic relation of a non-confluent system") {
  // x2^2 -> x1^2 and x2*x1 -> x1*x2 overlap on x2^2*x1.
  auto P = presentation({"x2", "x1"}, {"x2^2 - x1^2", "x2*x1 - x1*x2"});
  auto res = complete(P.ring, P.relations, 5);
  for (int n = 0; n <= 5; ++n) CHECK(hilbert_function(res.system, 5).dims[n] == brute_force_dimension(P.ring, P.relations, n));
}

TEST_CASE("rewriting agrees with the span oracle on random quadratic algebras") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-2, 2);
  const std::vector<std::string> words{"x3^2", "x3*x2", "x3*x1", "x2*x3", "x2^2", "x2*x1", "x1*x3", "x1*x2", "x1^2"};
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::string> rels;
    const int count = 2 + trial % 3;
    for (int r = 0; r < count; ++r) {
      std::string s;
      for (const auto& w : words) {
        const int c = coef(rng);
        if (c) s += (c > 0 ? " + " : " - ") + std::to_string(std::abs(c)) + "*" + w;
      }
      rels.push_back(s.empty() ? "x1^2" : s);
    }
    auto P = presentation({"x3", "x2", "x1"}, rels);
    auto h = dims(P, 4);
    for (int n = 0; n <= 4; ++n) CHECK(h[n] == brute_force_dimension(P.ring, P.relations, n));
  }
}

TEST_CASE("normal forms and bases") {
  auto P = algebra("D1");
  auto res = complete(P.ring, P.relations, 4);
  for (const auto& r : P.relations) CHECK(normal_form(r, res.system).is_zero());
  auto basis = enumerate_basis(res.system, 3);
  CHECK(basis.size() == 20);
  for (const auto& w : basis) CHECK(!res.system.is_reducible(w));
  CHECK_THROWS_AS(hilbert_function(res.system, 5), Error);
}

TEST_CASE("type A completion adds exactly r7 and r8") {
  for (const Fixture* f : fixtures_of_kind("D")) {
    CAPTURE(f->label);
    auto D = instantiate(*f);
    auto res = complete(D.ring, D.relations, 6);
    REQUIRE(res.new_rules.size() == 2);
    std::vector<std::string> leads;
    for (const auto& r : res.new_rules) leads.push_back(r.lead.to_string(D.alphabet()));
    std::sort(leads.begin(), leads.end());
    CHECK(leads == std::vector<std::string>{"x2*x1^2", "x2^2*x1"});
  }
}

TEST_CASE("hilbert csv") {
  HilbertFunction h{{1, 4, 10}};
  CHECK(hilbert_csv(h) == "0,1\n1,4\n2,10\n");
}
