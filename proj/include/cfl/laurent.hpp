#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//
// A LaurentPoly lives in a fixed number of variables x1..xr (the rank) and is
// kept in canonical form: no stored coefficient is zero, so two polynomials
// are equal exactly when their term maps are equal. Cluster variables are
// identified by this canonical form.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cfl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a division that must be exact leaves a remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector of a Laurent monomial. Entries may be negative.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// vectors compared lexicographically. Polynomials store and print their
/// terms from the largest monomial down.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t rank) : exps_(rank, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t rank() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  long degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exps_;
};

/// A point of the positive orthant with exact rational coordinates.
class RationalPoint {
 public:
  explicit RationalPoint(std::vector<Rational> coords);
  static RationalPoint ones(std::size_t rank);
  static RationalPoint from_integers(std::span<const long> values);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

class LaurentPoly {
 public:
  struct DescendingMonomial {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
  };
  using TermMap = std::map<Monomial, Integer, DescendingMonomial>;

  /// The zero polynomial in `rank` variables.
  explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

  static LaurentPoly constant(std::size_t rank, const Integer& c);
  static LaurentPoly one(std::size_t rank) { return constant(rank, 1); }
  /// The variable x_{index+1}.
  static LaurentPoly variable(std::size_t rank, std::size_t index);
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1);

  /// Parses the rendered form, e.g. "3*x1^-1*x2^2 + 1". Throws
  /// std::invalid_argument on malformed input or out-of-range variables.
  static LaurentPoly parse(std::string_view text, std::size_t rank);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_monomial() const { return terms_.size() == 1; }
  /// True iff the polynomial is nonzero and every coefficient is positive.
  bool is_positive() const;
  Integer coefficient_sum() const;
  Integer coefficient(const Monomial& m) const;

  /// The set of variable indices that occur with a nonzero exponent.
  std::vector<std::size_t> support() const;
  /// Componentwise minimum of the exponent vectors (the monomial content).
  Monomial min_exponents() const;
  /// Componentwise maximum of the exponent vectors.
  Monomial max_exponents() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned exponent) const;
  LaurentPoly times_monomial(const Monomial& m) const;

  Rational evaluate(const RationalPoint& point) const;
  /// Evaluates at a point with integer coordinates; the result is rational.
  Rational evaluate(std::span<const Integer> point) const;

  /// Sets the listed variables to 1 and drops them, keeping the remaining
  /// variables in their original order.
  LaurentPoly specialize_to_one(std::span<const std::size_t> indices) const;

  /// Renders as "3*x1^-1*x2^2 + 1".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  void check_rank(const LaurentPoly& other) const;

  std::size_t rank_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Returns q with q * den == num. Throws InexactDivision if no such Laurent
/// polynomial exists and std::domain_error if den is zero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

Rational evaluate(const LaurentPoly& p, const RationalPoint& point);
Integer coefficient_sum(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

/// A Laurent polynomial split as numerator / monomial, with the numerator an
/// ordinary polynomial. Used for fast integrality checks at integer points.
struct SplitLaurent {
  std::vector<std::pair<std::vector<unsigned>, Integer>> numerator;
  std::vector<unsigned> denominator;

  explicit SplitLaurent(const LaurentPoly& p);
  /// Value at an integer point, if it is an integer.
  bool evaluate_integral(std::span<const Integer> point, Integer& out) const;
};

}  // namespace cfl
