#include "toricfan/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace toricfan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::UnpairedFacet: return "UnpairedFacet";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::NonGenericWitness: return "NonGenericWitness";
    case ErrorCode::PointIsRay: return "PointIsRay";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::FaceNotPresent: return "FaceNotPresent";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

IntVector::IntVector(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long e : entries) entries_.emplace_back(e);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (other.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVector operator-(const IntVector& a) {
  IntVector out = a;
  for (auto& e : out.entries_) e = -e;
  return out;
}

IntVector operator*(const Integer& s, IntVector v) {
  for (auto& e : v.entries_) e *= s;
  return v;
}

std::string IntVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

RatVector::RatVector(const IntVector& v) {
  entries_.reserve(v.dim());
  for (const auto& e : v.entries()) entries_.emplace_back(e);
}

std::string RatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << format_rational(entries_[i]);
  }
  os << ')';
  return os.str();
}

SquareMatrix::SquareMatrix(std::vector<IntVector> columns) : columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (c.dim() != columns_.size())
      throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
}

IntVector SquareMatrix::apply(std::span<const Integer> coefficients) const {
  if (coefficients.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from matrix size");
  IntVector out(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) out[i] += coefficients[j] * columns_[j][i];
  return out;
}

RatVector SquareMatrix::apply(const RatVector& coefficients) const {
  if (coefficients.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from matrix size");
  RatVector out(dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i)
      out[i] += coefficients[j] * Rational(columns_[j][i]);
  return out;
}

Integer determinant(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  // det(M) = det(M^T): eliminate on the columns as rows.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(c, r);

  int swaps = 0;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  Integer det = a[n - 1][n - 1];
  return swaps % 2 ? Integer(-det) : det;
}

RatVector solve_coefficients(const SquareMatrix& basis, const IntVector& p) {
  const std::size_t n = basis.dim();
  if (p.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "point dimension differs from basis size");

  // Augmented system [B | p] with B's columns as given.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(basis.at(r, c));
    a[r][n] = Rational(p[r]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::SingularBasis, "basis has determinant 0");
    std::swap(a[k], a[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  RatVector lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = a[i][n] / a[i][i];
  return lambda;
}

IntVector make_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v.entries()) g = boost::multiprecision::gcd(g, e);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot make the zero vector primitive");
  if (g < 0) g = -g;
  IntVector out = v;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] /= g;
  return out;
}

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& e : v.entries()) g = boost::multiprecision::gcd(g, e);
  return g == 1 || g == -1;
}

IntVector orthogonal_complement(std::span<const IntVector> vectors) {
  const std::size_t n = vectors.size() + 1;
  for (const auto& v : vectors)
    if (v.dim() != n)
      throw Error(ErrorCode::DimensionMismatch, "need n-1 vectors in dimension n");
  // n_k = (-1)^k det(rows without coordinate k); then n . v = det[v | vectors]
  // expanded along the first column, which vanishes for every listed v.
  IntVector normal(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<IntVector> cols;
    cols.reserve(n - 1);
    for (const auto& v : vectors) {
      IntVector c(n - 1);
      for (std::size_t i = 0, r = 0; i < n; ++i)
        if (i != k) c[r++] = v[i];
      cols.push_back(std::move(c));
    }
    Integer minor = n == 1 ? Integer(1) : determinant(SquareMatrix(std::move(cols)));
    normal[k] = (k % 2 == 0) ? minor : Integer(-minor);
  }
  return normal;
}

std::vector<IntVector> adjugate_rows(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  // Row i of adj(m) is orthogonal to every column except column i, and its
  // product with column i is det(m).
  std::vector<IntVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(m.column(j));
    IntVector r = n == 1 ? IntVector{1} : orthogonal_complement(others);
    // Fix the sign so that r . column(i) = det(m).
    // r . column(i) = det[column(i) | others] = (-1)^i det(m).
    if (i % 2 == 1) r = -r;
    rows.push_back(std::move(r));
  }
  return rows;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal dimensions");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "dot of unequal dimensions");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

int sign(const Integer& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view t = trim(text);
  std::string_view digits = t;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
  std::string s(t);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t));
  Integer num = parse_integer(t.substr(0, slash));
  Integer den = parse_integer(t.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

IntVector parse_int_vector(std::string_view text) {
  std::vector<Integer> entries;
  std::string_view rest = trim(text);
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  while (true) {
    auto comma = rest.find(',');
    entries.push_back(parse_integer(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return IntVector(std::move(entries));
}

}  // namespace toricfan
