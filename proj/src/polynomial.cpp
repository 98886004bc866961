#include "gpjac/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "gpjac/errors.hpp"

namespace gpjac {

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPolynomial::LaurentPolynomial(long min_exp, std::initializer_list<long> coeffs) : min_exp_(min_exp) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Integer& coefficient) {
  return {exponent, std::vector<Integer>{coefficient}};
}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead_zeros));
    min_exp_ += static_cast<long>(lead_zeros);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

std::size_t LaurentPolynomial::degree() const {
  if (!is_ordinary()) throw std::invalid_argument("degree: polynomial has negative exponents");
  return coeffs_.empty() ? 0 : static_cast<std::size_t>(max_exp());
}

Integer LaurentPolynomial::coefficient(long e) const {
  if (coeffs_.empty() || e < min_exp_ || e > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

bool LaurentPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::vector<Integer> LaurentPolynomial::ascending() const {
  if (!is_ordinary()) throw std::invalid_argument("ascending: polynomial has negative exponents");
  if (coeffs_.empty()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(max_exp()) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(min_exp_) + i] = coeffs_[i];
  return out;
}

Integer LaurentPolynomial::evaluate(const Integer& x) const {
  if (!is_ordinary()) throw std::invalid_argument("evaluate: integer evaluation needs an ordinary polynomial");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Integer scale = 1;
  for (long i = 0; i < min_exp_; ++i) scale *= x;
  return acc * scale;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  Rational scale = 1;
  Rational base = min_exp_ >= 0 ? x : Rational(1) / x;
  for (long i = 0; i < std::abs(min_exp_); ++i) scale *= base;
  return acc * scale;
}

double LaurentPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc * std::pow(x, static_cast<double>(min_exp_));
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc * std::pow(z, static_cast<double>(min_exp_));
}

LaurentPolynomial LaurentPolynomial::shifted(long e) const {
  if (coeffs_.empty()) return {};
  return {min_exp_ + e, coeffs_};
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  if (!is_ordinary()) throw std::invalid_argument("derivative: polynomial has negative exponents");
  std::vector<Integer> out;
  const auto asc = ascending();
  for (std::size_t i = 1; i < asc.size(); ++i) out.push_back(asc[i] * static_cast<unsigned long>(i));
  return from_ascending(std::move(out));
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: division by the zero polynomial");
  if (is_zero()) return {};
  // Long division from the top; exponents are tracked relative to each polynomial's support.
  std::vector<Integer> rem = coeffs_;
  const auto& dc = divisor.coeffs_;
  const std::size_t ds = dc.size();
  if (rem.size() < ds) throw InconsistencyError("divide_exact: divisor has larger span than dividend");
  std::vector<Integer> quot(rem.size() - ds + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Integer& top = rem[i + ds - 1];
    if (top == 0) continue;
    quot[i] = gpjac::divide_exact(top, dc.back(), "polynomial division");
    for (std::size_t j = 0; j < ds; ++j) rem[i + j] -= quot[i] * dc[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    throw InconsistencyError("divide_exact: nonzero remainder dividing " + to_string() + " by " + divisor.to_string());
  }
  return {min_exp_ - divisor.min_exp_, std::move(quot)};
}

std::string LaurentPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const long e = min_exp_ + static_cast<long>(i);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag.get_str();
    if (e != 0) {
      os << var;
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(min_exp_, o.min_exp_);
  const long hi = std::max(max_exp(), o.max_exp());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial& LaurentPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  std::vector<Integer> out = a.coeffs();
  for (auto& c : out) c = -c;
  return {a.min_exp(), std::move(out)};
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Integer> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  return {a.min_exp() + b.min_exp(), std::move(out)};
}

LaurentPolynomial operator*(LaurentPolynomial a, const Integer& c) { return a *= c; }
LaurentPolynomial operator*(const Integer& c, LaurentPolynomial a) { return a *= c; }

// ---------------------------------------------------------------------------
// Chebyshev and the GP(n,k) polynomials

namespace {

LaurentPolynomial chebyshev(unsigned k, const LaurentPolynomial& first) {
  const LaurentPolynomial two_w = LaurentPolynomial::monomial(1, 2);
  LaurentPolynomial prev = LaurentPolynomial::constant(1);
  if (k == 0) return prev;
  LaurentPolynomial cur = first;
  for (unsigned i = 1; i < k; ++i) {
    LaurentPolynomial next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

LaurentPolynomial cheb_T(unsigned k) { return chebyshev(k, LaurentPolynomial::monomial(1, 1)); }
LaurentPolynomial cheb_U(unsigned k) { return chebyshev(k, LaurentPolynomial::monomial(1, 2)); }

Integer cheb_T_value(unsigned n, const Integer& x) {
  Integer prev = 1;
  if (n == 0) return prev;
  Integer cur = x;
  for (unsigned i = 1; i < n; ++i) {
    Integer next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPolynomial build_P(unsigned k) {
  if (k == 0) throw std::invalid_argument("build_P: k must be positive");
  const long ek = static_cast<long>(k);
  const LaurentPolynomial outer{-1, {-1, 3, -1}};
  const LaurentPolynomial inner = LaurentPolynomial::constant(3) - LaurentPolynomial::monomial(ek) -
                                  LaurentPolynomial::monomial(-ek);
  return outer * inner - LaurentPolynomial::constant(1);
}

LaurentPolynomial cheb_T_quotient(unsigned k) {
  const LaurentPolynomial w_minus_one{0, {-1, 1}};
  return (cheb_T(k) - LaurentPolynomial::constant(1)).divide_exact(w_minus_one);
}

LaurentPolynomial build_h(unsigned k) {
  if (k == 0) throw std::invalid_argument("build_h: k must be positive");
  return Integer(2) * cheb_T(k) - cheb_T_quotient(k) - LaurentPolynomial::constant(3);
}

IntegerMatrix companion_matrix(const LaurentPolynomial& p) {
  if (!p.is_bimonic()) throw std::invalid_argument("companion_matrix: polynomial is not bimonic: " + p.to_string());
  const std::size_t s = p.span();
  if (s < 1) throw std::invalid_argument("companion_matrix: polynomial must have positive span");
  IntegerMatrix a(s, s);
  for (std::size_t i = 0; i + 1 < s; ++i) a(i, i + 1) = 1;
  for (std::size_t j = 0; j < s; ++j) a(s - 1, j) = -p.coeffs()[j];
  return a;
}

// ---------------------------------------------------------------------------
// Resultants

IntegerMatrix sylvester_matrix(const std::vector<Integer>& f_desc, const std::vector<Integer>& g_desc) {
  if (f_desc.empty() || g_desc.empty()) throw std::invalid_argument("sylvester_matrix: empty coefficient list");
  const std::size_t m = f_desc.size() - 1;
  const std::size_t n = g_desc.size() - 1;
  const std::size_t size = m + n;
  IntegerMatrix s(size, size);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = f_desc[j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = g_desc[j];
  return s;
}

namespace {

std::vector<Integer> descending(const LaurentPolynomial& p) {
  auto asc = p.ascending();
  std::reverse(asc.begin(), asc.end());
  return asc;
}

}  // namespace

Integer resultant(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  if (!f.is_ordinary() || !g.is_ordinary()) throw std::invalid_argument("resultant: negative exponents");
  if (f.degree() + g.degree() == 0) return 1;
  return det_bareiss(sylvester_matrix(descending(f), descending(g)));
}

bool is_squarefree(const LaurentPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return resultant(p, p.derivative()) != 0;
}

LaurentPolynomial recurrence_product(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("recurrence_product: zero polynomial");
  if (!p.is_ordinary() || !q.is_ordinary()) throw std::invalid_argument("recurrence_product: negative exponents");
  if (!is_squarefree(p)) throw std::invalid_argument("recurrence_product: P has a multiple root: " + p.to_string());
  if (!is_squarefree(q)) throw std::invalid_argument("recurrence_product: Q has a multiple root: " + q.to_string());

  const std::size_t dp = p.degree();
  const std::size_t dq = q.degree();
  const std::size_t out_degree = dp * dq;
  const auto p_desc = descending(p);
  const auto q_asc = q.ascending();

  // R(z) has degree <= dp*dq in z. Sample it at z = 0..dp*dq and interpolate.
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (std::size_t point = 0; point <= out_degree; ++point) {
    const Integer z = static_cast<unsigned long>(point);
    // xi^dq Q(z/xi) = sum_j q_j z^j xi^(dq-j); descending in xi: q_0, q_1 z, ..., q_dq z^dq.
    std::vector<Integer> g_desc(dq + 1);
    Integer zp = 1;
    for (std::size_t j = 0; j <= dq; ++j) {
      g_desc[j] = q_asc[j] * zp;
      zp *= z;
    }
    const Integer value = (dp + dq == 0) ? Integer(1) : det_bareiss(sylvester_matrix(p_desc, g_desc));
    xs.emplace_back(z);
    ys.emplace_back(value);
  }

  // Newton divided differences, then expand to the monomial basis.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < dd.size(); ++level)
    for (std::size_t i = dd.size() - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      dd[i].canonicalize();
    }
  std::vector<Rational> poly{dd.back()};
  for (std::size_t i = dd.size() - 1; i-- > 0;) {
    // poly = poly * (z - xs[i]) + dd[i]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw InconsistencyError("recurrence_product: interpolated coefficient is not integral");
    coeffs.push_back(c.get_num());
  }
  return LaurentPolynomial::from_ascending(std::move(coeffs));
}

LaurentPolynomial square_radical_relation(const LaurentPolynomial& a, const LaurentPolynomial& b, const Integer& c) {
  return a * a - c * (LaurentPolynomial::monomial(1) * b * b);
}

// ---------------------------------------------------------------------------
// Linear recurrences

LinearRecurrence LinearRecurrence::from_polynomial(const LaurentPolynomial& characteristic,
                                                   std::vector<Integer> initial_terms, long start_index) {
  return {characteristic.ascending(), std::move(initial_terms), start_index};
}

std::vector<Integer> recurrence_terms(const LinearRecurrence& r, long from, std::size_t count) {
  const std::size_t d = r.order();
  if (d == 0) throw std::invalid_argument("recurrence_terms: characteristic polynomial must have degree >= 1");
  if (r.initial_terms.size() < d) throw std::invalid_argument("recurrence_terms: fewer initial terms than the order");
  const auto& c = r.char_coeffs;
  if (c.back() == 0) throw std::invalid_argument("recurrence_terms: leading coefficient is zero");

  std::deque<Integer> window(r.initial_terms.begin(), r.initial_terms.end());
  long lo = r.start_index;

  // Seed terms beyond the first d must already satisfy the recurrence.
  for (std::size_t s = 0; s + d < window.size(); ++s) {
    Integer acc = 0;
    for (std::size_t j = 0; j <= d; ++j) acc += c[j] * window[s + j];
    if (acc != 0) throw std::invalid_argument("recurrence_terms: initial terms violate the recurrence");
  }

  if (count == 0) return {};
  const long last = from + static_cast<long>(count) - 1;

  while (lo > from) {
    if (c.front() != 1 && c.front() != -1) {
      throw std::invalid_argument("recurrence_terms: backward generation needs a trailing coefficient of ±1");
    }
    // c_0 u(lo-1) = -sum_{j>=1} c_j u(lo-1+j)
    Integer acc = 0;
    for (std::size_t j = 1; j <= d; ++j) acc += c[j] * window[j - 1];
    window.push_front(c.front() == 1 ? Integer(-acc) : acc);
    --lo;
  }
  while (lo + static_cast<long>(window.size()) - 1 < last) {
    const std::size_t base = window.size() - d;
    Integer acc = 0;
    for (std::size_t j = 0; j < d; ++j) acc += c[j] * window[base + j];
    window.push_back(divide_exact(-acc, c.back(), "recurrence_terms forward step"));
  }
  std::vector<Integer> out;
  out.reserve(count);
  for (long i = from; i <= last; ++i) out.push_back(window[static_cast<std::size_t>(i - lo)]);
  return out;
}

}  // namespace gpjac
