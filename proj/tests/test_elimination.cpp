#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toricfan/elimination.hpp"

using namespace toricfan;

namespace {

// Feasibility of a bounded system by trying every vertex candidate.
bool vertex_oracle(const InequalitySystem& sys) {
  const std::size_t n = sys.variables();
  const auto& rows = sys.rows();
  std::vector<std::size_t> pick(n);
  std::vector<bool> mask(rows.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
  do {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask[i]) {
        a.push_back(rows[i].coefficients);
        b.push_back(rows[i].rhs);
      }
    Rational d = oracle::laplace_det(a);
    if (d == 0) continue;
    RatVector x(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto ak = a;
      for (std::size_t i = 0; i < n; ++i) ak[i][k] = b[i];
      x[k] = oracle::laplace_det(ak) / d;
    }
    if (sys.satisfied_by(x)) return true;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

InequalitySystem random_bounded(std::mt19937& rng, std::size_t n, std::size_t extra) {
  InequalitySystem sys(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> up(n, 0), down(n, 0);
    up[i] = 1;
    down[i] = -1;
    sys.add_at_least(up, -5);
    sys.add_at_least(down, -5);
  }
  std::uniform_int_distribution<int> coef(-4, 4), rhs(-8, 8);
  for (std::size_t r = 0; r < extra; ++r) {
    std::vector<Rational> a(n);
    for (auto& x : a) x = coef(rng);
    sys.add_at_least(a, rhs(rng));
  }
  return sys;
}

}  // namespace

TEST_SUITE("elimination") {
  TEST_CASE("tiny systems") {
    InequalitySystem sys(1);
    sys.add_at_least({Rational(1)}, 2);
    sys.add_at_least({Rational(-1)}, -3);
    auto x = find_feasible_point(sys);
    REQUIRE(x);
    CHECK((*x)[0] >= 2);
    CHECK((*x)[0] <= 3);

    sys.add_at_least({Rational(-1)}, -1);
    CHECK_FALSE(is_feasible(sys));
  }

  TEST_CASE("constant rows") {
    InequalitySystem ok(2);
    ok.add_at_least({Rational(0), Rational(0)}, -1);
    CHECK(is_feasible(ok));
    InequalitySystem bad(2);
    bad.add_at_least({Rational(0), Rational(0)}, 1);
    CHECK_FALSE(is_feasible(bad));
  }

  TEST_CASE("unbounded systems have witnesses") {
    InequalitySystem sys(3);
    sys.add_at_least({Rational(1), Rational(1), Rational(1)}, 10);
    sys.add_nonnegative(0);
    sys.add_nonnegative(1);
    auto x = find_feasible_point(sys);
    REQUIRE(x);
    CHECK(sys.satisfied_by(*x));
  }

  TEST_CASE("agrees with vertex enumeration on random bounded systems") {
    std::mt19937 rng(2024);
    int feasible = 0, infeasible = 0;
    for (int t = 0; t < 600; ++t) {
      std::size_t n = 2 + t % 3;
      auto sys = random_bounded(rng, n, 3 + t % 5);
      auto x = find_feasible_point(sys);
      bool expected = vertex_oracle(sys);
      CHECK(x.has_value() == expected);
      if (x) {
        CHECK(sys.satisfied_by(*x));
        ++feasible;
      } else {
        ++infeasible;
      }
    }
    // Both outcomes must actually be exercised.
    CHECK(feasible > 20);
    CHECK(infeasible > 20);
  }
}
