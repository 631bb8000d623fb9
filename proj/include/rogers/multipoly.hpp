#pragma once

#include "rogers/qpoly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rogers {

using Exponents = std::vector<unsigned>;

/**
 * MultiPoly: a polynomial in t_1..t_l whose coefficients are QPolys.
 *
 * Sparse: a map from exponent vectors (all of length l) to nonzero
 * coefficients. Iteration and serialization follow the lexicographic order
 * of the exponent vectors.
 */
class MultiPoly {
public:
  using Terms = std::map<Exponents, QPoly>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const QPoly &c);
  /// t_{var+1}, i.e. var is zero-based.
  static MultiPoly variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coeff(const Exponents &exps) const;

  /// Adds c * t^exps; exps must have length nvars().
  void add_term(const Exponents &exps, const QPoly &c);

  MultiPoly &operator+=(const MultiPoly &rhs);
  MultiPoly &operator-=(const MultiPoly &rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(const QPoly &c, const MultiPoly &a);
  friend bool operator==(const MultiPoly &a, const MultiPoly &b) = default;

  MultiPoly pow(unsigned e) const;

  /// Total degree of every term is d (true for zero).
  bool is_homogeneous(unsigned d) const;

  /// Permutes variables: t_i is sent to t_{perm[i]}.
  MultiPoly permuted(const std::vector<std::size_t> &perm) const;

  /// Sets variable `var` to `value` (0 or 1), dropping it from the result.
  MultiPoly substitute(std::size_t var, int value) const;

  /// Pads with `extra` further variables that do not occur.
  MultiPoly with_extra_vars(std::size_t extra) const;

  /// "t1^2 + (1 + q)*t1*t2 + t2^2", highest exponent vector first.
  std::string to_string() const;

private:
  void check_same(const MultiPoly &other) const;

  std::size_t nvars_;
  Terms terms_;
};

MultiPoly mp_add(const MultiPoly &a, const MultiPoly &b);
MultiPoly mp_mul(const MultiPoly &a, const MultiPoly &b);
MultiPoly mp_scale(const QPoly &c, const MultiPoly &a);

/// e_i(t_1..t_l); e_0 = 1 and e_i = 0 for i > l.
MultiPoly elementary(int i, std::size_t l);

/// Calls visit for every composition r_1 + ... + r_l = n, in lexicographic
/// order of (r_1, ..., r_l).
void for_each_composition(int n, std::size_t l, const std::function<void(const std::vector<int> &)> &visit);

/// Homogeneous Rogers-Szego polynomial from its defining sum over
/// compositions with q-multinomial coefficients.
MultiPoly htilde_direct(int n, std::size_t l);

/// Sum of all coefficients, i.e. every t_i set to 1.
QPoly specialize_all_ones(const MultiPoly &a);

// JSON: [{"exponents": [...], "coeff": QPoly-JSON}, ...] in lexicographic order.
void to_json(nlohmann::json &j, const MultiPoly &p);

} // namespace rogers
