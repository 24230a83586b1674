#include "chowlab/qseries.hpp"

#include <algorithm>

#include "chowlab/error.hpp"

namespace chowlab {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

QPoly QPoly::monomial(const Integer& coeff, int exponent) {
  QPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Integer QPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Integer QPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void QPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QPoly operator-(const QPoly& a) {
  QPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) fail(Errc::BadRange, "division by the zero polynomial");
  const int dd = divisor.degree();
  const Integer& lead = divisor.terms_.rbegin()->second;
  QPoly rem = *this, quot;
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Integer& top = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      fail(Errc::IntegralityViolated, "non-integral polynomial quotient");
    const Integer c = top / lead;
    quot.add_term(shift, c);
    for (const auto& [e, k] : divisor.terms_) rem.add_term(e + shift, -c * k);
  }
  if (!rem.is_zero()) fail(Errc::IntegralityViolated, "polynomial division leaves a remainder");
  return quot;
}

// ---------------------------------------------------------------- TQSeries

TQSeries::TQSeries(int order) {
  if (order < 0) fail(Errc::BadRange, "series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TQSeries::TQSeries(int order, std::vector<QPoly> coeffs) : TQSeries(order) {
  for (std::size_t m = 0; m < coeffs.size() && m < coeffs_.size(); ++m) coeffs_[m] = std::move(coeffs[m]);
}

TQSeries TQSeries::truncated(int order) const {
  TQSeries out(std::min(order, this->order()));
  for (int m = 0; m <= out.order(); ++m) out.coeff(m) = coeff(m);
  return out;
}

TQSeries operator+(const TQSeries& a, const TQSeries& b) {
  TQSeries r(std::min(a.order(), b.order()));
  for (int m = 0; m <= r.order(); ++m) r.coeff(m) = a.coeff(m) + b.coeff(m);
  return r;
}

TQSeries operator-(const TQSeries& a, const TQSeries& b) {
  TQSeries r(std::min(a.order(), b.order()));
  for (int m = 0; m <= r.order(); ++m) r.coeff(m) = a.coeff(m) - b.coeff(m);
  return r;
}

TQSeries operator*(const TQSeries& a, const TQSeries& b) {
  TQSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return r;
}

// ---------------------------------------------------------------- TQPoly

TQPoly::TQPoly(std::vector<QPoly> by_t_degree) : coeffs_(std::move(by_t_degree)) { trim(); }

void TQPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly TQPoly::coeff(int t_degree) const {
  if (t_degree < 0 || t_degree >= static_cast<int>(coeffs_.size())) return QPoly();
  return coeffs_[static_cast<std::size_t>(t_degree)];
}

void TQPoly::add(int t_degree, const QPoly& c) {
  if (static_cast<int>(coeffs_.size()) <= t_degree) coeffs_.resize(static_cast<std::size_t>(t_degree) + 1);
  coeffs_[static_cast<std::size_t>(t_degree)] += c;
  trim();
}

TQSeries TQPoly::to_series(int order) const {
  TQSeries s(order);
  for (int m = 0; m <= order && m < static_cast<int>(coeffs_.size()); ++m) s.coeff(m) = coeffs_[static_cast<std::size_t>(m)];
  return s;
}

std::vector<Integer> TQPoly::at_q_one() const {
  std::vector<Integer> v;
  for (const auto& c : coeffs_) v.push_back(c.at_one());
  return v;
}

QPoly TQPoly::at_t_one() const {
  QPoly s;
  for (const auto& c : coeffs_) s += c;
  return s;
}

TQPoly operator+(const TQPoly& a, const TQPoly& b) {
  TQPoly r = a;
  for (int m = 0; m <= b.t_degree(); ++m) r.add(m, b.coeffs_[static_cast<std::size_t>(m)]);
  return r;
}

TQPoly operator*(const TQPoly& a, const TQPoly& b) {
  std::vector<QPoly> c(a.coeffs_.size() + b.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return TQPoly(std::move(c));
}

TQPoly operator*(const QPoly& a, const TQPoly& b) {
  std::vector<QPoly> c;
  for (const auto& x : b.coeffs_) c.push_back(a * x);
  return TQPoly(std::move(c));
}

// ---------------------------------------------------------------- q-analogues

QPoly qnumber(int m) {
  if (m < 0) fail(Errc::BadRange, "q-number of a negative integer");
  QPoly p;
  for (int i = 0; i < m; ++i) p.add_term(i, 1);
  return p;
}

QPoly qfactorial(int m) {
  if (m < 0) fail(Errc::BadRange, "q-factorial of a negative integer");
  QPoly p(1);
  for (int i = 2; i <= m; ++i) p = p * qnumber(i);
  return p;
}

QPoly qbinomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) fail(Errc::BadRange, "q-binomial needs 0 <= k <= m");
  return qfactorial(m).divide_exact(qfactorial(k) * qfactorial(m - k));
}

TQSeries expand_inv_qpochhammer(int d, int order) {
  if (d < 0) fail(Errc::BadRange, "negative degree");
  TQSeries acc(order);
  acc.coeff(0) = 1;
  for (int i = 0; i <= d; ++i) {
    TQSeries geometric(order);
    for (int m = 0; m <= order; ++m) geometric.coeff(m) = QPoly::monomial(1, i * m);
    acc = acc * geometric;
  }
  return acc;
}

TQPoly qpochhammer(int d) {
  TQPoly p(std::vector<QPoly>{QPoly(1)});
  for (int i = 0; i <= d; ++i) p = p * TQPoly({QPoly(1), -QPoly::monomial(1, i)});
  return p;
}

TQPoly carlitz_numerator(int d) {
  if (d > 9) fail(Errc::TooLarge, "carlitz_numerator enumerates S_d and is limited to d <= 9");
  if (d < 0) fail(Errc::BadRange, "negative degree");
  // counts[des][maj]
  const int max_maj = d * (d - 1) / 2;
  std::vector<std::vector<long>> counts(static_cast<std::size_t>(std::max(d, 1)),
                                        std::vector<long>(static_cast<std::size_t>(max_maj) + 1, 0));
  for_each_permutation(d, [&](const Permutation& sigma) {
    const auto s = descent_stats(sigma);
    ++counts[static_cast<std::size_t>(s.des)][static_cast<std::size_t>(s.maj)];
  });
  TQPoly out;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    QPoly c;
    for (std::size_t q = 0; q < counts[t].size(); ++q) c.add_term(static_cast<int>(q), counts[t][q]);
    out.add(static_cast<int>(t), c);
  }
  return out;
}

TQPoly syt_numerator(const Partition& lambda) {
  if (lambda.size() > 10) fail(Errc::TooLarge, "syt_numerator is limited to |lambda| <= 10");
  TQPoly out;
  for (const auto& t : enumerate_syt(lambda)) {
    const auto s = descent_stats(t);
    out.add(s.des, QPoly::monomial(1, s.maj));
  }
  return out;
}

// ---------------------------------------------------------------- printing

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      s += c.get_str();
    } else {
      s += c < 0 ? " - " : " + ";
      s += Integer(abs(c)).get_str();
    }
    s += "*q^" + std::to_string(e);
    first = false;
  }
  return s;
}

std::string to_string(const TQSeries& s) {
  std::string out;
  for (int m = 0; m <= s.order(); ++m) {
    if (s.coeff(m).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + to_string(s.coeff(m)) + "]*t^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

std::string to_compact_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    const Integer mag = abs(c);
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str();
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_compact_string(const TQPoly& p) {
  std::string out;
  for (int m = 0; m <= p.t_degree(); ++m) {
    const QPoly c = p.coeff(m);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += to_compact_string(c);
      continue;
    }
    out += m == 1 ? "t" : "t^" + std::to_string(m);
    if (c.terms().size() > 1)
      out += "(" + to_compact_string(c) + ")";
    else if (c != QPoly(1))
      out += " " + to_compact_string(c);
  }
  return out.empty() ? "0" : out;
}

}  // namespace chowlab
