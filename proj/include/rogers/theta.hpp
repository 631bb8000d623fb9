#pragma once

#include "rogers/qpoly.hpp"

#include <compare>
#include <map>
#include <tuple>
#include <vector>

namespace rogers {

/**
 * MVec: the index vector [m_2, ..., m_l] of a theta coefficient.
 *
 * entries()[i] holds m_{i+2}, so an MVec for l variables has l-1 entries.
 * The vector is never trimmed; two MVecs of different length are different
 * keys even if they differ only by trailing zeros.
 */
class MVec {
public:
  MVec() = default;
  explicit MVec(std::vector<int> entries);
  static MVec zero(std::size_t l);
  /// u_j: 1 in coordinate j (1-based, storing m_{j+1}), zero elsewhere.
  static MVec unit(std::size_t j, std::size_t l);

  const std::vector<int> &entries() const { return entries_; }
  std::size_t nvars() const { return entries_.size() + 1; }
  /// m_i for 2 <= i <= l.
  int mult(std::size_t i) const { return entries_.at(i - 2); }

  /// |m| = sum m_i
  int size() const;
  /// wt(m) = sum i * m_i
  int weight() const;
  bool is_zero() const;
  bool has_negative() const;

  MVec operator+(const MVec &rhs) const;
  MVec operator-(const MVec &rhs) const;
  MVec scaled(int r) const;

  friend auto operator<=>(const MVec &, const MVec &) = default;
  friend bool operator==(const MVec &, const MVec &) = default;

private:
  std::vector<int> entries_;
};

/// Every MVec of length l-1 with wt(m) <= max_weight, lexicographic order.
std::vector<MVec> mvecs_up_to_weight(std::size_t l, int max_weight);

/**
 * Memo cache for theta_{m,k,n}(q) in a fixed number of variables l >= 2.
 *
 * Base cases: theta_{0,k,n} = 1; theta vanishes if |m| > min(k,n),
 * wt(m) > k+n, or any of k, n, m_i is negative. Otherwise
 *
 *   theta_{m,k,n} = theta_{m,k-1,n}
 *     + sum_j [n+k-wt(m)+j choose j]_q (q)_j theta_{m-u_j,k-1,n}
 *     - sum_j [k-1 choose j]_q (q)_j theta_{m-u_j,k-1-j,n}
 *
 * with j = 1..l-1. The table is not synchronized; give each thread its own.
 */
class ThetaTable {
public:
  explicit ThetaTable(std::size_t l);

  std::size_t nvars() const { return l_; }
  std::size_t cached() const { return memo_.size(); }

  /// Throws std::invalid_argument if m.nvars() != nvars().
  QPoly theta(const MVec &m, int k, int n);

private:
  using Key = std::tuple<std::vector<int>, int, int>;

  QPoly compute(const MVec &m, int k, int n);

  std::size_t l_;
  std::vector<QPoly> poch_;
  std::map<Key, QPoly> memo_;
};

/// True exactly when the vanishing rules force theta_{m,k,n} = 0.
bool theta_vanishes(const MVec &m, int k, int n);

/// (q)_j sum_{i<k} ([n+i choose j]_q - [i choose j]_q)
QPoly theta_closed_uj(int j, int k, int n);

/// Closed form for |m| = k:
/// multinomial(k; m_2..m_l) [n choose wt-k]_q (q)_{wt-k}.
/// Throws std::invalid_argument if |m| != k.
QPoly theta_closed_full(const MVec &m, int k, int n);

/// [k choose r]_q [n choose r]_q (q)_r
QPoly theta_closed_ru1(int r, int k, int n);

} // namespace rogers
