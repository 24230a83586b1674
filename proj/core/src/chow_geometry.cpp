#include "chowlab/chow_geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chowlab/error.hpp"

namespace chowlab {

// ---------------------------------------------------------------- Form

Form::Form(int nvars, int degree) : poly_(nvars), degree_(degree) {
  if (degree < 0) fail(Errc::BadDegree, "negative form degree");
}

Form::Form(Poly p, int degree) : poly_(std::move(p)), degree_(degree) {
  if (degree < 0) fail(Errc::BadDegree, "negative form degree");
  for (const auto& [e, c] : poly_.terms())
    if (std::accumulate(e.begin(), e.end(), 0) != degree)
      fail(Errc::NotHomogeneous, "term of degree other than " + std::to_string(degree));
}

void Form::set_coeff(const ExponentVector& e, const Rational& c) {
  if (std::accumulate(e.begin(), e.end(), 0) != degree_)
    fail(Errc::BadDegree, "exponent does not match the form degree");
  poly_.add_term(e, c - poly_.coeff(e));
}

Form form_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!j.is_object() || j.empty()) fail(Errc::ParseError, "form JSON must be a non-empty object");
  std::vector<std::pair<ExponentVector, Rational>> terms;
  for (const auto& [key, value] : j.items()) {
    ExponentVector e;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(part, &used);
        if (used != part.size() || v < 0) throw std::invalid_argument(part);
        e.push_back(v);
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad exponent key '" + key + "'");
      }
    }
    Rational c;
    if (value.is_string())
      c = parse_rational(value.get<std::string>());
    else if (value.is_number_integer())
      c = Rational(value.get<long>());
    else
      fail(Errc::ParseError, "coefficient of '" + key + "' must be a rational string");
    terms.emplace_back(std::move(e), c);
  }
  const int nvars = static_cast<int>(terms.front().first.size());
  const int degree = std::accumulate(terms.front().first.begin(), terms.front().first.end(), 0);
  Form f(nvars, degree);
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != nvars) fail(Errc::ParseError, "exponent keys disagree on length");
    if (std::accumulate(e.begin(), e.end(), 0) != degree) fail(Errc::NotHomogeneous, "form JSON is not homogeneous");
    f.set_coeff(e, f.coeff(e) + c);
  }
  return f;
}

std::string form_to_json(const Form& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : f.poly().terms()) {
    std::string key;
    for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
    j[key] = to_string(c);
  }
  return j.dump();
}

Form expand_product(const std::vector<LinearForm>& forms) {
  if (forms.empty()) fail(Errc::BadShape, "empty product");
  const int nvars = static_cast<int>(forms.front().size());
  Poly p = Poly::constant(nvars, 1);
  for (const auto& l : forms) {
    if (static_cast<int>(l.size()) != nvars) fail(Errc::BadShape, "linear forms disagree on the variable count");
    Poly lp(nvars);
    for (int j = 0; j < nvars; ++j) lp += Poly::variable(nvars, j) * l[static_cast<std::size_t>(j)];
    p = p * lp;
  }
  return Form(std::move(p), static_cast<int>(forms.size()));
}

LinearForm random_linear_form(std::mt19937_64& rng, int nvars, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  LinearForm l;
  for (int j = 0; j < nvars; ++j) l.push_back(make_rational(num(rng), den(rng)));
  return l;
}

// ---------------------------------------------------------------- coordinates

namespace {

// e_0..e_{len} of the given values.
std::vector<Rational> elementary(const std::vector<Rational>& values) {
  std::vector<Rational> e{1};
  for (const auto& v : values) {
    e.push_back(0);
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += e[k - 1] * v;
  }
  return e;
}

std::vector<Poly> elementary(const std::vector<Poly>& values, int nvars) {
  std::vector<Poly> e{Poly::constant(nvars, 1)};
  for (const auto& v : values) {
    e.emplace_back(nvars);
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += e[k - 1] * v;
  }
  return e;
}

}  // namespace

EMatrixReport e_matrix_det_check(int d) {
  if (d < 1) fail(Errc::BadRange, "e_matrix_det_check needs d >= 1");
  if (d > 5) fail(Errc::TooLarge, "symbolic determinant limited to d <= 5");
  std::vector<Poly> v;
  for (int i = 0; i < d; ++i) v.push_back(Poly::variable(d, i));
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Poly> others;
    for (int j = 0; j < d; ++j)
      if (j != i) others.push_back(v[static_cast<std::size_t>(j)]);
    const auto e = elementary(others, d);
    for (int k = 0; k < d; ++k) m[static_cast<std::size_t>(k)].push_back(e[static_cast<std::size_t>(k)]);
  }
  EMatrixReport r;
  r.d = d;
  r.determinant = determinant(m);
  ExponentVector lead(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) lead[static_cast<std::size_t>(i)] = d - 1 - i;
  r.leading_term_coefficient = r.determinant.coeff(lead);
  return r;
}

std::vector<LinearForm> recover_coordinates(int d, int n, const std::vector<Rational>& v1, const Form& f) {
  if (d < 1 || n < 1) fail(Errc::BadRange, "recover_coordinates needs d >= 1, n >= 1");
  if (static_cast<int>(v1.size()) != d) fail(Errc::BadShape, "need one v1 value per factor");
  if (f.nvars() != n + 1 || f.degree() != d) fail(Errc::BadShape, "form has the wrong degree or variable count");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (v1[static_cast<std::size_t>(i)] == v1[static_cast<std::size_t>(j)])
        fail(Errc::SingularM, "repeated v1 values make M singular");

  const auto ex = [&](int j, int k) {
    // exponent of x_j x_1^k x_0^(d-1-k), or x_1^k x_0^(d-k) when j < 0
    ExponentVector e(static_cast<std::size_t>(n) + 1, 0);
    e[1] = k;
    e[0] = d - k - (j >= 0 ? 1 : 0);
    if (j >= 0) ++e[static_cast<std::size_t>(j)];
    return e;
  };
  const auto ev1 = elementary(v1);
  for (int k = 0; k <= d; ++k)
    if (f.coeff(ex(-1, k)) != ev1[static_cast<std::size_t>(k)])
      fail(Errc::Inconsistent, "coefficients of x0, x1 do not match the given v1");

  // rows k = 0..d-1, column i: e_k of v1 without v1[i]; rows scaled to integers
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> others;
    for (int j = 0; j < d; ++j)
      if (j != i) others.push_back(v1[static_cast<std::size_t>(j)]);
    const auto e = elementary(others);
    for (int k = 0; k < d; ++k) m[static_cast<std::size_t>(k)].push_back(e[static_cast<std::size_t>(k)]);
  }
  std::vector<Integer> scale;
  std::vector<MatrixEntry> t;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Integer l = 1;
    for (const auto& x : m[k]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    scale.push_back(l);
    for (std::size_t i = 0; i < m[k].size(); ++i) {
      const Rational x = m[k][i] * l;
      if (x != 0) t.push_back({k, i, x.get_num()});
    }
  }
  const IntMatrix mat(static_cast<std::size_t>(d), static_cast<std::size_t>(d), std::move(t));

  std::vector<LinearForm> out(static_cast<std::size_t>(d), LinearForm(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i < d; ++i) {
    out[static_cast<std::size_t>(i)][0] = 1;
    out[static_cast<std::size_t>(i)][1] = v1[static_cast<std::size_t>(i)];
  }
  for (int j = 2; j <= n; ++j) {
    std::vector<Rational> rhs;
    for (int k = 0; k < d; ++k) rhs.push_back(f.coeff(ex(j, k)) * scale[static_cast<std::size_t>(k)]);
    const auto sol = solve_linear(mat, rhs);
    if (sol.underdetermined) fail(Errc::SingularM, "M is singular");
    for (int i = 0; i < d; ++i)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sol.solution[static_cast<std::size_t>(i)];
  }
  if (!(expand_product(out) == f)) fail(Errc::Inconsistent, "form is not a product of linear forms with the given v1");
  return out;
}

// ---------------------------------------------------------------- cubics

const std::vector<ExponentVector>& cubic_monomials() {
  static const std::vector<ExponentVector> mons = [] {
    auto c = std::vector<ExponentVector>{};
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) c.push_back({a, b, 3 - a - b});
    return c;
  }();
  return mons;
}

namespace {

void require_ternary_cubic(const Form& f) {
  if (f.nvars() != 3 || f.degree() != 3) fail(Errc::BadShape, "expected a ternary cubic");
}

std::size_t cubic_index(const ExponentVector& e) {
  const auto& mons = cubic_monomials();
  return static_cast<std::size_t>(std::find(mons.begin(), mons.end(), e) - mons.begin());
}

// 3x3 matrix of second partials
std::vector<std::vector<Poly>> hessian_matrix(const Poly& f, int first_var) {
  std::vector<std::vector<Poly>> h(3);
  for (int i = 0; i < 3; ++i) {
    const Poly fi = f.derivative(first_var + i);
    for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)].push_back(fi.derivative(first_var + j));
  }
  return h;
}

}  // namespace

std::vector<Rational> cubic_coefficients(const Form& f) {
  require_ternary_cubic(f);
  std::vector<Rational> a;
  for (const auto& e : cubic_monomials()) a.push_back(f.coeff(e));
  return a;
}

Form cubic_from_coefficients(const std::vector<Rational>& a) {
  if (a.size() != 10) fail(Errc::BadShape, "a ternary cubic has ten coefficients");
  Form f(3, 3);
  for (std::size_t p = 0; p < 10; ++p) f.set_coeff(cubic_monomials()[p], a[p]);
  return f;
}

Form hessian_cubic(const Form& f) {
  require_ternary_cubic(f);
  return Form(determinant(hessian_matrix(f.poly(), 0)), 3);
}

bool aronhold_test(const Form& f) {
  require_ternary_cubic(f);
  if (f.is_zero()) fail(Errc::ZeroForm, "the zero cubic has no projective class");
  const auto a = cubic_coefficients(f);
  const auto h = cubic_coefficients(hessian_cubic(f));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j)
      if (a[i] * h[j] != a[j] * h[i]) return false;
  return true;
}

// ---------------------------------------------------------------- d2

namespace {

constexpr const char* kD2Rows[10] = {
    "0 0 0 a003 0 0 -3a012 0 3a021 -a030",
    "0 0 -3a003 0 0 6a012 3a102 -3a021 -6a111 3a120",
    "0 3a003 0 0 -3a012 -6a102 0 6a111 3a201 -3a210",
    "-a003 0 0 0 3a102 0 0 -3a201 0 a300",
    "0 0 3a012 -3a102 0 -6a021 6a111 3a030 -3a120 0",
    "0 -6a012 6a102 0 6a021 0 -6a201 -6a120 6a210 0",
    "3a012 -3a102 0 0 -6a111 6a201 0 3a210 -3a300 0",
    "0 3a021 -6a111 3a201 -3a030 6a120 -3a210 0 0 0",
    "-3a021 6a111 -3a201 0 3a120 -6a210 3a300 0 0 0",
    "a030 -3a120 3a210 -a300 0 0 0 0 0 0",
};

int cubic_multinomial(const ExponentVector& e) {
  int w = 6;
  for (int x : e) w /= x == 3 ? 6 : x == 2 ? 2 : 1;
  return w;
}

D2Entry parse_entry(const std::string& tok) {
  if (tok == "0") return {};
  const auto pos = tok.find('a');
  std::string c = tok.substr(0, pos);
  int coeff = c.empty() ? 1 : c == "-" ? -1 : std::stoi(c);
  ExponentVector e;
  for (char ch : tok.substr(pos + 1)) e.push_back(ch - '0');
  return {coeff, static_cast<int>(cubic_index(e))};
}

}  // namespace

D2Matrix d2_matrix() {
  D2Matrix m;
  for (std::size_t i = 0; i < 10; ++i) {
    std::istringstream row(kD2Rows[i]);
    std::string tok;
    for (std::size_t j = 0; j < 10 && row >> tok; ++j) m.entries[i][j] = parse_entry(tok);
  }
  return m;
}

std::vector<std::vector<Rational>> D2Matrix::evaluate(const std::vector<Rational>& a) const {
  if (a.size() != 10) fail(Errc::BadShape, "d2 is evaluated at ten coefficients");
  std::vector<std::vector<Rational>> out(10, std::vector<Rational>(10, 0));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto& e = entries[i][j];
      if (e.var >= 0) out[i][j] = a[static_cast<std::size_t>(e.var)] * e.coeff;
    }
  return out;
}

std::vector<std::vector<Poly>> D2Matrix::symbolic() const {
  std::vector<std::vector<Poly>> out(10, std::vector<Poly>(10, Poly(10)));
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto& e = entries[i][j];
      if (e.var >= 0) out[i][j] = Poly::variable(10, e.var) * Rational(e.coeff);
    }
  return out;
}

bool D2Matrix::is_skew() const {
  const auto s = symbolic();
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      if (!(s[i][j] + s[j][i]).is_zero()) return false;
  return true;
}

std::vector<Rational> d2_coordinates(const Form& f) {
  auto a = cubic_coefficients(f);
  for (std::size_t p = 0; p < 10; ++p) a[p] /= cubic_multinomial(cubic_monomials()[p]);
  return a;
}

std::size_t d2_rank(const std::vector<Rational>& a) { return rank_exact(integer_rows(d2_matrix().evaluate(a))); }

namespace {

// Coefficients of the Hessian of the generic cubic sum 3!/(a!b!c!) a_abc
// x^a y^b z^c as cubics in the a's.
std::vector<Poly> generic_hessian() {
  // variables: a_0..a_9, then x, y, z
  Poly f(13);
  const auto& mons = cubic_monomials();
  for (std::size_t p = 0; p < 10; ++p) {
    ExponentVector e(13, 0);
    e[p] = 1;
    for (std::size_t k = 0; k < 3; ++k) e[10 + k] = mons[p][k];
    f.add_term(e, cubic_multinomial(mons[p]));
  }
  const Poly h = determinant(hessian_matrix(f, 10));
  std::vector<Poly> out(10, Poly(10));
  for (const auto& [e, c] : h.terms()) {
    const ExponentVector x(e.begin() + 10, e.end());
    out[cubic_index(x)].add_term(ExponentVector(e.begin(), e.begin() + 10), c);
  }
  return out;
}

// Solves for w_i = sum_p c_{i,p} g_p with w * d2 = 0 identically and checks
// the solution space is one-dimensional with each w_i a nonzero multiple of
// a single generator, distinct generators for distinct i.
Syzygy solve_syzygy(const D2Matrix& d2, const std::vector<Poly>& gens, const std::string& label) {
  std::map<std::pair<std::size_t, ExponentVector>, std::size_t> row_of;
  std::vector<MatrixEntry> t;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      const auto& e = d2.entries[i][j];
      if (e.var < 0) continue;
      for (std::size_t p = 0; p < 10; ++p)
        for (const auto& [mono, c] : gens[p].terms()) {
          ExponentVector key = mono;
          ++key[static_cast<std::size_t>(e.var)];
          auto [it, fresh] = row_of.emplace(std::make_pair(j, key), row_of.size());
          const Rational v = c * e.coeff;
          if (v.get_den() != 1) fail(Errc::CheckFailed, label + ": non-integral generator coefficient");
          t.push_back({it->second, i * 10 + p, v.get_num()});
        }
    }
  const IntMatrix sys(row_of.size(), 100, std::move(t));
  const auto ker = kernel_basis(sys, Rationals{});
  if (ker.size() != 1)
    fail(Errc::CheckFailed, label + " syzygy space has dimension " + std::to_string(ker.size()) + ", expected 1");
  Syzygy s;
  std::set<int> used;
  for (std::size_t i = 0; i < 10; ++i) {
    int var = -1;
    for (std::size_t p = 0; p < 10; ++p) {
      if (ker[0][i * 10 + p] == 0) continue;
      if (var >= 0) fail(Errc::CheckFailed, label + " syzygy entry mixes several generators");
      var = static_cast<int>(p);
    }
    if (var < 0) fail(Errc::CheckFailed, label + " syzygy has a zero entry");
    used.insert(var);
    s.var.push_back(var);
    s.scalar.emplace_back(ker[0][i * 10 + static_cast<std::size_t>(var)]);
  }
  if (used.size() != 10) fail(Errc::CheckFailed, label + " syzygy repeats a generator");
  return s;
}

bool annihilates(const Syzygy& s, const std::vector<Poly>& gens, const std::vector<std::vector<Poly>>& d2) {
  for (std::size_t j = 0; j < 10; ++j) {
    Poly acc(10);
    for (std::size_t i = 0; i < 10; ++i) acc += gens[static_cast<std::size_t>(s.var[i])] * s.scalar[i] * d2[i][j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

ComplexReport complex_checks(std::uint64_t seed) {
  ComplexReport r;
  const D2Matrix d2 = d2_matrix();
  r.skew = d2.is_skew();
  if (!r.skew) fail(Errc::CheckFailed, "skew: d2 is not skew-symmetric");

  std::vector<Poly> linear;
  for (int p = 0; p < 10; ++p) linear.push_back(Poly::variable(10, p));
  const auto hess = generic_hessian();
  r.linear = solve_syzygy(d2, linear, "linear");
  r.hessian = solve_syzygy(d2, hess, "hessian");
  const auto sym = d2.symbolic();
  r.composition_zero = annihilates(r.linear, linear, sym) && annihilates(r.hessian, hess, sym);
  if (!r.composition_zero) fail(Errc::CheckFailed, "composition: d1 * d2 is not zero");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<Rational> a;
  for (int p = 0; p < 10; ++p) a.push_back(make_rational(num(rng), den(rng)));
  r.generic_rank = d2_rank(a);
  if (r.generic_rank != 8)
    fail(Errc::CheckFailed, "generic rank: rank d2 = " + std::to_string(r.generic_rank) + " at a random point");
  for (int s = 0; s < 10; ++s) {
    std::vector<LinearForm> ls;
    for (int k = 0; k < 3; ++k) ls.push_back(random_linear_form(rng, 3));
    const std::size_t rk = d2_rank(d2_coordinates(expand_product(ls)));
    r.decomposable_ranks.push_back(rk);
    if (rk > 6) fail(Errc::CheckFailed, "decomposable rank: rank d2 = " + std::to_string(rk) + " on a product of lines");
  }
  r.passed = true;
  return r;
}

}  // namespace chowlab
