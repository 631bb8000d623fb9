#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rogers {

using Integer = mpz_class;
using Rational = mpq_class;

/**
 * QPoly: a polynomial in the single indeterminate q with arbitrary-precision
 * integer coefficients.
 *
 * Stored densely in ascending degree. The representation is always canonical:
 * the last stored coefficient is nonzero, and the zero polynomial holds no
 * coefficients at all. Every constructor and operator re-establishes this.
 */
class QPoly {
public:
  QPoly() = default;
  QPoly(long c);
  explicit QPoly(Integer c);
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  /// c * q^power
  static QPoly monomial(const Integer &c, std::size_t power);
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t num_terms() const;

  /// Coefficient of q^power; zero past the degree.
  Integer coeff(std::size_t power) const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  QPoly &operator+=(const QPoly &rhs);
  QPoly &operator-=(const QPoly &rhs);
  QPoly &operator*=(const QPoly &rhs);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
  friend QPoly operator*(const QPoly &a, const QPoly &b);
  friend bool operator==(const QPoly &a, const QPoly &b) = default;

  /// Multiply by q^power.
  QPoly shifted(std::size_t power) const;

  Integer evaluate(const Integer &x) const;
  Rational evaluate(const Rational &x) const;
  /// Sum of coefficients, i.e. the value at q = 1.
  Integer at_one() const;

  /// Human-readable form, ascending in q: "1 - q + 3q^2".
  std::string to_string() const;

private:
  void trim();

  std::vector<Integer> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const QPoly &p);

// JSON: array of decimal strings in ascending degree; zero is [].
void to_json(nlohmann::json &j, const QPoly &p);
void from_json(const nlohmann::json &j, QPoly &p);

/// (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1.
QPoly pochhammer(int n);

/**
 * Gaussian binomial [n choose r]_q for n >= 0.
 *
 * Returns zero when r < 0 or r > n; the product formulas and their proofs
 * rely on that vanishing. Values come from a shared Pascal table
 * [n,r] = [n-1,r-1] + q^r [n-1,r] that grows on demand and is guarded by a
 * mutex, so the function may be called from any thread.
 */
QPoly qbinomial(int n, int r);

/// (q)_n / prod (q)_{r_i}; throws std::invalid_argument unless the parts
/// are non-negative and sum to n.
QPoly qmultinomial(int n, std::span<const int> parts);

/// Ordinary binomial coefficient, zero outside 0 <= r <= n.
Integer binomial(int n, int r);

/// Ordinary multinomial n! / prod r_i!; zero if any part is negative.
Integer multinomial(std::span<const int> parts);

} // namespace rogers
