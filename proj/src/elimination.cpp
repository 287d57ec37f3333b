#include "toricfan/elimination.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <utility>

namespace toricfan {

void InequalitySystem::add_at_least(std::vector<Rational> a, Rational b) {
  if (a.size() != variables_)
    throw Error(ErrorCode::DimensionMismatch, "inequality has wrong number of coefficients");
  rows_.push_back({std::move(a), std::move(b)});
}

void InequalitySystem::add_nonnegative(std::size_t i) {
  std::vector<Rational> a(variables_);
  a.at(i) = 1;
  add_at_least(std::move(a), 0);
}

bool InequalitySystem::satisfied_by(const RatVector& x) const {
  if (x.dim() != variables_) return false;
  for (const auto& row : rows_) {
    Rational s = 0;
    for (std::size_t i = 0; i < variables_; ++i) s += row.coefficients[i] * x[i];
    if (s < row.rhs) return false;
  }
  return true;
}

namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  boost::dynamic_bitset<> history;
};

// Scale so the first nonzero coefficient has magnitude 1. Keeps entries
// small; parallel rows are deliberately not merged, since replacing a row by
// a stronger parallel one with a different history breaks the pruning rule.
void normalise(Row& r) {
  for (const auto& c : r.a) {
    if (c != 0) {
      Rational s = c < 0 ? Rational(-c) : c;
      for (auto& x : r.a) x /= s;
      r.b /= s;
      return;
    }
  }
}

// Rows in which the eliminated variable appeared, kept for back substitution.
struct Stage {
  std::size_t variable;
  std::vector<Row> rows;
};

}  // namespace

std::optional<RatVector> find_feasible_point(const InequalitySystem& system) {
  const std::size_t n = system.variables();
  const std::size_t m = system.rows().size();

  std::vector<Row> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Row r{system.rows()[i].coefficients, system.rows()[i].rhs, boost::dynamic_bitset<>(m)};
    r.history.set(i);
    normalise(r);
    rows.push_back(std::move(r));
  }

  std::vector<bool> eliminated(n, false);
  std::vector<Stage> stages;

  for (std::size_t step = 0; step < n; ++step) {
    // Cheapest variable first: fewest produced rows.
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.a[v] > 0) ++pos;
        else if (r.a[v] < 0) ++neg;
      }
      std::size_t cost = pos * neg;
      if (best == n || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    const std::size_t v = best;
    eliminated[v] = true;

    std::vector<Row> pos, neg, keep;
    for (auto& r : rows) {
      if (r.a[v] > 0) pos.push_back(std::move(r));
      else if (r.a[v] < 0) neg.push_back(std::move(r));
      else keep.push_back(std::move(r));
    }

    // Chernikov: after k eliminations a row combining more than k+1 originals
    // is implied by the others.
    const std::size_t history_limit = step + 2;
    std::vector<Row> produced = std::move(keep);
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        auto h = p.history | q.history;
        if (h.count() > history_limit) continue;
        // Scale so the coefficients of v become +1 and -1.
        const Rational sp = 1 / p.a[v], sq = -1 / q.a[v];
        Row c{std::vector<Rational>(n), p.b * sp + q.b * sq, std::move(h)};
        for (std::size_t i = 0; i < n; ++i) c.a[i] = p.a[i] * sp + q.a[i] * sq;
        c.a[v] = 0;
        normalise(c);
        produced.push_back(std::move(c));
      }
    }

    Stage stage{v, {}};
    stage.rows.reserve(pos.size() + neg.size());
    for (auto& r : pos) stage.rows.push_back(std::move(r));
    for (auto& r : neg) stage.rows.push_back(std::move(r));
    stages.push_back(std::move(stage));

    rows.clear();
    for (auto& r : produced) {
      bool all_zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
      if (all_zero) {
        if (r.b > 0) return std::nullopt;  // 0 >= b with b > 0
        continue;
      }
      rows.push_back(std::move(r));
    }
  }

  // Back substitution: each stage's rows bound its variable once the later
  // variables are fixed.
  RatVector x(n);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->variable;
    std::optional<Rational> lower, upper;
    for (const auto& r : it->rows) {
      Rational rest = r.b;
      for (std::size_t i = 0; i < n; ++i)
        if (i != v) rest -= r.a[i] * x[i];
      Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      if (*lower > *upper) throw Error(ErrorCode::Internal, "elimination back substitution failed");
      x[v] = (*lower + *upper) / 2;
    } else if (lower) {
      x[v] = *lower;
    } else if (upper) {
      x[v] = *upper;
    } else {
      x[v] = 0;
    }
  }
  if (!system.satisfied_by(x))
    throw Error(ErrorCode::Internal, "elimination produced a point violating the system");
  return x;
}

}  // namespace toricfan
