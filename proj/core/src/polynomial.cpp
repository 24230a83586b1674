#include "chowlab/polynomial.hpp"

#include <numeric>

#include "chowlab/error.hpp"

namespace chowlab {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0) fail(Errc::BadRange, "negative variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) fail(Errc::BadRange, "variable index out of range");
  ExponentVector e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(e);
}

Poly Poly::monomial(const ExponentVector& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational Poly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const ExponentVector& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) fail(Errc::BadShape, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

bool Poly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int s = std::accumulate(e.begin(), e.end(), 0);
    if (deg >= 0 && s != deg) return false;
    deg = s;
  }
  return true;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) fail(Errc::BadRange, "variable index out of range");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    ExponentVector f = e;
    --f[static_cast<std::size_t>(var)];
    r.add_term(f, c * k);
  }
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) fail(Errc::BadShape, "evaluation point has the wrong length");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) fail(Errc::BadShape, "need one image per variable");
  const int target = images.empty() ? 0 : images.front().nvars();
  for (const auto& p : images)
    if (p.nvars() != target) fail(Errc::BadShape, "images disagree on the variable count");
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    r += t;
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) fail(Errc::BadShape, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) fail(Errc::BadShape, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(Errc::BadShape, "variable count mismatch");
  Poly r(a.nvars_);
  ExponentVector e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += chowlab::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += chowlab::to_string(mag) + "*" + mono;
  }
  return s;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(Errc::BadShape, "determinant of a non-square matrix");
  if (n == 0) return Poly::constant(0, 1);
  if (n == 1) return m[0][0];
  const int nv = m[0][0].nvars();
  Poly det(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * determinant(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace chowlab
