#include "rogers/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rogers {

QPoly::QPoly(long c) {
  if (c != 0)
    coeffs_.emplace_back(c);
}

QPoly::QPoly(Integer c) {
  if (c != 0)
    coeffs_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs)
    coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Integer &c, std::size_t power) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(power + 1, Integer(0));
    p.coeffs_[power] = c;
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

std::size_t QPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c != 0; }));
}

Integer QPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

QPoly &QPoly::operator+=(const QPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly &QPoly::operator-=(const QPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly &QPoly::operator*=(const QPoly &rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

QPoly operator*(const QPoly &a, const QPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::shifted(std::size_t power) const {
  if (is_zero() || power == 0)
    return *this;
  QPoly r;
  r.coeffs_.assign(power, Integer(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Integer QPoly::evaluate(const Integer &x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rational QPoly::evaluate(const Rational &x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
    acc.canonicalize();
  }
  return acc;
}

Integer QPoly::at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), Integer(0));
}

std::string QPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer &c = coeffs_[i];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1)
      os << mag.get_str();
    if (i >= 1)
      os << 'q';
    if (i >= 2)
      os << '^' << i;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const QPoly &p) { return os << p.to_string(); }

void to_json(nlohmann::json &j, const QPoly &p) {
  j = nlohmann::json::array();
  for (const auto &c : p.coeffs())
    j.push_back(c.get_str());
}

void from_json(const nlohmann::json &j, QPoly &p) {
  if (!j.is_array())
    throw std::invalid_argument("QPoly JSON must be an array");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto &c : j) {
    if (!c.is_string())
      throw std::invalid_argument("QPoly coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0)
      throw std::invalid_argument("malformed QPoly coefficient: " + c.get<std::string>());
    coeffs.push_back(std::move(v));
  }
  if (!coeffs.empty() && coeffs.back() == 0)
    throw std::invalid_argument("QPoly JSON is not canonical (trailing zero)");
  p = QPoly(std::move(coeffs));
}

QPoly pochhammer(int n) {
  if (n < 0)
    throw std::invalid_argument("pochhammer: n must be non-negative");
  QPoly acc = 1;
  for (int i = 1; i <= n; ++i)
    acc *= QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(i));
  return acc;
}

namespace {

class BinomialTable {
public:
  QPoly get(int n, int r) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n)
      extend();
    return rows_[n][r];
  }

private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<QPoly> row(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (int r = 1; r < n; ++r)
      row[r] = rows_[n - 1][r - 1] + rows_[n - 1][r].shifted(static_cast<std::size_t>(r));
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

BinomialTable &binomial_table() {
  static BinomialTable table;
  return table;
}

} // namespace

QPoly qbinomial(int n, int r) {
  if (n < 0)
    throw std::invalid_argument("qbinomial: n must be non-negative");
  if (r < 0 || r > n)
    return {};
  return binomial_table().get(n, r);
}

QPoly qmultinomial(int n, std::span<const int> parts) {
  long total = 0;
  for (int p : parts) {
    if (p < 0)
      throw std::invalid_argument("qmultinomial: negative part");
    total += p;
  }
  if (n < 0 || total != n)
    throw std::invalid_argument("qmultinomial: parts must sum to n");
  // [n; r1,...,rl] = [n, r1] [n-r1, r2] ...
  QPoly acc = 1;
  int remaining = n;
  for (int p : parts) {
    acc *= qbinomial(remaining, p);
    remaining -= p;
  }
  return acc;
}

Integer binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer multinomial(std::span<const int> parts) {
  Integer acc = 1;
  int total = 0;
  for (int p : parts) {
    if (p < 0)
      return 0;
    total += p;
    acc *= binomial(total, p);
  }
  return acc;
}

} // namespace rogers
