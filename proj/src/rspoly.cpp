#include "rogers/rspoly.hpp"

#include <sstream>
#include <stdexcept>

namespace rogers {

TPoly::TPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::from_multipoly(const MultiPoly &p) {
  if (p.nvars() != 1)
    throw std::invalid_argument("TPoly::from_multipoly: expected one variable");
  std::vector<QPoly> coeffs;
  for (const auto &[e, c] : p.terms()) {
    if (coeffs.size() <= e[0])
      coeffs.resize(e[0] + 1);
    coeffs[e[0]] += c;
  }
  return TPoly(std::move(coeffs));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

QPoly TPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : QPoly{};
}

TPoly &TPoly::operator+=(const TPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly &a, const TPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<QPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return TPoly(std::move(out));
}

TPoly operator*(const QPoly &c, const TPoly &a) {
  std::vector<QPoly> out;
  out.reserve(a.coeffs_.size());
  for (const auto &x : a.coeffs_)
    out.push_back(c * x);
  return TPoly(std::move(out));
}

TPoly TPoly::shifted(std::size_t power) const {
  if (is_zero())
    return {};
  std::vector<QPoly> out(power);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return TPoly(std::move(out));
}

std::string TPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const QPoly &c = coeffs_[i];
    if (c.is_zero())
      continue;
    bool negative = c.num_terms() == 1 && c.coeffs().back() < 0;
    QPoly mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string t = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (i == 0)
      os << (mag.num_terms() > 1 ? "(" + mag.to_string() + ")" : mag.to_string());
    else if (mag == QPoly(1))
      os << t;
    else if (mag.num_terms() > 1)
      os << '(' << mag.to_string() << ")*" << t;
    else
      os << mag.to_string() << '*' << t;
  }
  return os.str();
}

void to_json(nlohmann::json &j, const TPoly &p) {
  j = nlohmann::json::array();
  for (const auto &c : p.coeffs())
    j.push_back(c);
}

TPoly h_univariate(int n) {
  std::vector<QPoly> coeffs;
  for (int r = 0; r <= n; ++r)
    coeffs.push_back(qbinomial(n, r));
  return TPoly(std::move(coeffs));
}

TPoly product_classical(int k, int n) {
  TPoly acc;
  for (int r = 0; r <= k; ++r) {
    QPoly c = qbinomial(k, r) * qbinomial(n, r) * pochhammer(r);
    if (c.is_zero())
      continue;
    acc += c * h_univariate(k + n - 2 * r).shifted(static_cast<std::size_t>(r));
  }
  return acc;
}

RSContext::RSContext(std::size_t l) : l_(l) {
  if (l < 1)
    throw std::invalid_argument("RSContext: l must be positive");
  h_cache_.push_back(MultiPoly::constant(l, 1));
}

const MultiPoly &RSContext::elementary(int i) {
  auto it = e_cache_.find(i);
  if (it == e_cache_.end())
    it = e_cache_.emplace(i, rogers::elementary(i, l_)).first;
  return it->second;
}

MultiPoly RSContext::htilde(int n) {
  if (n < 0)
    return MultiPoly(l_);
  while (static_cast<int>(h_cache_.size()) <= n) {
    const int m = static_cast<int>(h_cache_.size()) - 1; // building H~_{m+1}
    MultiPoly next(l_);
    for (int j = 0; j < static_cast<int>(l_) && j <= m; ++j) {
      QPoly c = qbinomial(m, j) * pochhammer(j);
      if (j % 2 == 1)
        c = -c;
      next += c * (elementary(j + 1) * h_cache_[m - j]);
    }
    h_cache_.push_back(std::move(next));
  }
  return h_cache_[n];
}

MultiPoly RSContext::elementary_power(const MVec &m) {
  MultiPoly acc = MultiPoly::constant(l_, 1);
  for (std::size_t i = 0; i < m.entries().size(); ++i)
    if (m.entries()[i] > 0)
      acc = acc * elementary(static_cast<int>(i + 2)).pow(static_cast<unsigned>(m.entries()[i]));
  return acc;
}

std::vector<ProductTerm> product_general_terms(int k, int n, ThetaTable &table) {
  std::vector<ProductTerm> out;
  for (const MVec &m : mvecs_up_to_weight(table.nvars(), k + n)) {
    QPoly th = table.theta(m, k, n);
    if (th.is_zero())
      continue;
    if (m.weight() % 2 == 1)
      th = -th;
    out.push_back({m, std::move(th)});
  }
  return out;
}

MultiPoly product_general(int k, int n, RSContext &ctx, ThetaTable &table) {
  if (ctx.nvars() != table.nvars())
    throw std::invalid_argument("product_general: context and theta table disagree on l");
  MultiPoly acc(ctx.nvars());
  for (const auto &[m, c] : product_general_terms(k, n, table))
    acc += c * (ctx.elementary_power(m) * ctx.htilde(k + n - m.weight()));
  return acc;
}

QPoly galois(int n, std::size_t l) {
  QPoly sum;
  for_each_composition(n, l, [&](const std::vector<int> &parts) { sum += qmultinomial(n, parts); });
  return sum;
}

QPoly galois_alternating_sum(int k, int n, ThetaTable &table) {
  const std::size_t l = table.nvars();
  const int il = static_cast<int>(l);
  QPoly acc;
  for (const auto &[m, c] : product_general_terms(k, n, table)) {
    Integer e_at_ones = 1;
    for (std::size_t i = 0; i < m.entries().size(); ++i)
      for (int p = 0; p < m.entries()[i]; ++p)
        e_at_ones *= binomial(il, static_cast<int>(i + 2));
    acc += c * QPoly(e_at_ones) * galois(k + n - m.weight(), l);
  }
  return acc;
}

} // namespace rogers
