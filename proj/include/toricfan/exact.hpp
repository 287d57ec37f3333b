#pragma once

// Exact lattice and rational linear algebra.
//
// Every geometric predicate in the library reduces to determinants and
// linear solves over arbitrary-precision integers, so nothing here ever
// touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toricfan/error.hpp"

namespace toricfan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of the lattice Z^n.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim) {}
  explicit IntVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<long long> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Integer> entries() const noexcept { return entries_; }

  bool is_zero() const;

  IntVector& operator+=(const IntVector& other);
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(const IntVector& a);
  friend IntVector operator*(const Integer& s, IntVector v);

  friend bool operator==(const IntVector&, const IntVector&) = default;
  // Lexicographic order, used for sorted point listings.
  friend bool operator<(const IntVector& a, const IntVector& b) {
    return a.entries_ < b.entries_;
  }

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

/// A point of Q^n; entries are always in lowest terms with positive
/// denominator (boost normalises on construction).
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : entries_(dim) {}
  explicit RatVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  explicit RatVector(const IntVector& v);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const RatVector&, const RatVector&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> entries_;
};

/// Square integer matrix stored by columns. The columns are the ray vectors
/// of a cone in their listed order, so the determinant sign follows that
/// order.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::vector<IntVector> columns);

  std::size_t dim() const noexcept { return columns_.size(); }
  const IntVector& column(std::size_t j) const { return columns_[j]; }
  const Integer& at(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  std::span<const IntVector> columns() const noexcept { return columns_; }

  IntVector apply(std::span<const Integer> coefficients) const;
  RatVector apply(const RatVector& coefficients) const;

 private:
  std::vector<IntVector> columns_;
};

/// Fraction-free (Bareiss) elimination; exact for any size.
Integer determinant(const SquareMatrix& m);

/// Solves basis * lambda = p exactly. Throws SingularBasis when det = 0.
RatVector solve_coefficients(const SquareMatrix& basis, const IntVector& p);

/// Divides by the gcd of the entries, keeping the sign. Throws ZeroVector.
IntVector make_primitive(const IntVector& v);

bool is_primitive(const IntVector& v);

/// Integer vector orthogonal to the n-1 given vectors in Z^n, computed from
/// signed maximal minors (generalised cross product). Zero iff the vectors
/// are linearly dependent.
IntVector orthogonal_complement(std::span<const IntVector> vectors);

/// Adjugate of m, returned by rows: adj(m) * m = det(m) * I.
std::vector<IntVector> adjugate_rows(const SquareMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

int sign(const Integer& x);
int sign(const Rational& x);

Integer parse_integer(std::string_view text);
/// Accepts "a" or "a/b" with integers a, b (b != 0).
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Parses comma separated integers such as "1,-1,0,0" (whitespace allowed).
IntVector parse_int_vector(std::string_view text);

}  // namespace toricfan
