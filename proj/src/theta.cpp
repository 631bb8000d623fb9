#include "rogers/theta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rogers {

MVec::MVec(std::vector<int> entries) : entries_(std::move(entries)) {}

MVec MVec::zero(std::size_t l) {
  if (l < 1)
    throw std::invalid_argument("MVec: l must be positive");
  return MVec(std::vector<int>(l - 1, 0));
}

MVec MVec::unit(std::size_t j, std::size_t l) {
  if (j < 1 || j + 1 > l)
    throw std::invalid_argument("MVec::unit: need 1 <= j <= l-1");
  MVec m = zero(l);
  m.entries_[j - 1] = 1;
  return m;
}

int MVec::size() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int MVec::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    w += static_cast<int>(i + 2) * entries_[i];
  return w;
}

bool MVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
}

bool MVec::has_negative() const {
  return std::any_of(entries_.begin(), entries_.end(), [](int x) { return x < 0; });
}

MVec MVec::operator+(const MVec &rhs) const {
  if (rhs.entries_.size() != entries_.size())
    throw std::invalid_argument("MVec: length mismatch");
  MVec out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += rhs.entries_[i];
  return out;
}

MVec MVec::operator-(const MVec &rhs) const { return *this + rhs.scaled(-1); }

MVec MVec::scaled(int r) const {
  MVec out = *this;
  for (auto &x : out.entries_)
    x *= r;
  return out;
}

std::vector<MVec> mvecs_up_to_weight(std::size_t l, int max_weight) {
  std::vector<MVec> out;
  if (l < 1 || max_weight < 0)
    return out;
  std::vector<int> e(l - 1, 0);
  auto rec = [&](auto &self, std::size_t pos, int left) -> void {
    if (pos == e.size()) {
      out.emplace_back(e);
      return;
    }
    const int part = static_cast<int>(pos) + 2;
    for (int c = 0; c * part <= left; ++c) {
      e[pos] = c;
      self(self, pos + 1, left - c * part);
    }
    e[pos] = 0;
  };
  rec(rec, 0, max_weight);
  return out;
}

bool theta_vanishes(const MVec &m, int k, int n) {
  if (k < 0 || n < 0 || m.has_negative())
    return true;
  if (m.is_zero())
    return false;
  return m.size() > std::min(k, n) || m.weight() > k + n;
}

ThetaTable::ThetaTable(std::size_t l) : l_(l) {
  if (l < 2)
    throw std::invalid_argument("ThetaTable: need at least two variables");
  for (std::size_t j = 0; j < l; ++j)
    poch_.push_back(pochhammer(static_cast<int>(j)));
}

QPoly ThetaTable::theta(const MVec &m, int k, int n) {
  if (m.nvars() != l_)
    throw std::invalid_argument("ThetaTable: MVec length does not match table");
  if (theta_vanishes(m, k, n))
    return {};
  if (m.is_zero())
    return 1;
  Key key{m.entries(), k, n};
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;
  QPoly value = compute(m, k, n);
  memo_.emplace(std::move(key), value);
  return value;
}

QPoly ThetaTable::compute(const MVec &m, int k, int n) {
  // Unwind one step k-1 -> k. Not vanishing implies k >= |m| >= 1.
  const int kp = k - 1;
  const int wt = m.weight();
  QPoly acc = theta(m, kp, n);
  for (std::size_t j = 1; j < l_; ++j) {
    const int ji = static_cast<int>(j);
    if (m.entries()[j - 1] == 0)
      continue; // m - u_j has a negative coordinate
    MVec down = m - MVec::unit(j, l_);
    QPoly up_term = theta(down, kp, n);
    if (!up_term.is_zero())
      acc += qbinomial(n + kp - wt + ji + 1, ji) * poch_[j] * up_term;
    QPoly back_term = theta(down, kp - ji, n);
    if (!back_term.is_zero())
      acc -= qbinomial(kp, ji) * poch_[j] * back_term;
  }
  return acc;
}

QPoly theta_closed_uj(int j, int k, int n) {
  if (j < 1)
    throw std::invalid_argument("theta_closed_uj: j must be positive");
  QPoly sum;
  for (int i = 0; i < k; ++i)
    sum += qbinomial(n + i, j) - qbinomial(i, j);
  return pochhammer(j) * sum;
}

QPoly theta_closed_full(const MVec &m, int k, int n) {
  if (m.size() != k)
    throw std::invalid_argument("theta_closed_full: requires |m| = k");
  const int drop = m.weight() - k;
  return QPoly(multinomial(m.entries())) * qbinomial(n, drop) * pochhammer(drop);
}

QPoly theta_closed_ru1(int r, int k, int n) {
  if (r < 0)
    return {};
  return qbinomial(k, r) * qbinomial(n, r) * pochhammer(r);
}

} // namespace rogers
