#include "gpjac/tree_count.hpp"

#include <stdexcept>

#include "gpjac/errors.hpp"
#include "gpjac/gp_graph.hpp"
#include "gpjac/int_matrix.hpp"

namespace gpjac {

// ---------------------------------------------------------------------------
// QuadExtElement

QuadExtElement::QuadExtElement(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw std::invalid_argument("QuadExtElement: d must be positive");
  a_.canonicalize();
  b_.canonicalize();
}

void QuadExtElement::check_same_field(const QuadExtElement& o) const {
  if (d_ != o.d_) throw std::invalid_argument("QuadExtElement: mixing sqrt(" + to_decimal(d_) + ") and sqrt(" +
                                              to_decimal(o.d_) + ")");
}

QuadExtElement& QuadExtElement::operator+=(const QuadExtElement& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExtElement& QuadExtElement::operator-=(const QuadExtElement& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExtElement& QuadExtElement::operator*=(const QuadExtElement& o) {
  check_same_field(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  a_.canonicalize();
  b_.canonicalize();
  return *this;
}

QuadExtElement& QuadExtElement::operator*=(const Rational& c) {
  a_ *= c;
  b_ *= c;
  a_.canonicalize();
  b_.canonicalize();
  return *this;
}

Rational QuadExtElement::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

// ---------------------------------------------------------------------------
// Kirchhoff and the resultant formula

Integer tau_kirchhoff(long n, long k) {
  const IntegerMatrix l = laplacian(build_gp(n, k));
  const std::size_t last = l.rows() - 1;
  Integer t = det_bareiss(l.without(last, last));
  if (t <= 0) {
    throw InconsistencyError("tau_kirchhoff: nonpositive cofactor " + to_decimal(t) + " for GP(" + std::to_string(n) +
                             "," + std::to_string(k) + ")");
  }
  return t;
}

Integer tau_theorem1_from_h(long n, const LaurentPolynomial& h) {
  if (n < 3) throw std::invalid_argument("tau_theorem1: n must be >= 3");
  const std::size_t k = h.degree();
  // prod_s g(w_s) = Res(h, g) / lc(h)^deg g with g = (T_n - 1)/(w - 1) of degree n - 1.
  const LaurentPolynomial g = cheb_T_quotient(static_cast<unsigned>(n));
  Integer lc_power;
  mpz_pow_ui(lc_power.get_mpz_t(), h.leading().get_mpz_t(), g.degree());
  Integer product = divide_exact(resultant(h, g), lc_power, "tau_theorem1 (lc(h)^(n-1))");
  product *= n;
  if (((n - 1) * (static_cast<long>(k) - 1)) % 2 != 0) product = -product;
  return product;
}

Integer tau_theorem1(long n, long k) {
  build_gp(n, k);
  return tau_theorem1_from_h(n, build_h(static_cast<unsigned>(reduced_step(n, k))));
}

// ---------------------------------------------------------------------------
// Closed forms

Integer tau_prism(long n) {
  if (n < 3) throw std::invalid_argument("tau_prism: n must be >= 3");
  return n * (cheb_T_value(static_cast<unsigned>(n), 2) - 1);
}

QuadraticTau tau_k2_quadratic(long n) {
  if (n < 3) throw std::invalid_argument("tau_k2_quadratic: n must be >= 3");
  const Integer d = 29;
  // w = (1 + sqrt 29)/4, root of 4w^2 - 2w - 7.
  const QuadExtElement w(Rational(1, 4), Rational(1, 4), d);
  const QuadExtElement two_w = w * Rational(2);
  QuadExtElement prev(1, 0, d);
  QuadExtElement cur = w;
  for (long i = 1; i < n; ++i) {
    QuadExtElement next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  const QuadExtElement t_minus_one = cur - QuadExtElement(1, 0, d);
  const Rational alpha_q = t_minus_one.a() * 4;
  const Rational beta_q = t_minus_one.b() * 4;
  if (alpha_q.get_den() != 1 || beta_q.get_den() != 1) {
    throw InconsistencyError("tau_k2_quadratic: T_n(w) - 1 is not of the form (alpha + beta sqrt29)/4 for n = " +
                             std::to_string(n));
  }
  QuadraticTau out;
  out.alpha = alpha_q.get_num();
  out.beta = beta_q.get_num();
  Integer numerator = n * (out.alpha * out.alpha - 29 * out.beta * out.beta);
  if (n % 2 != 0) numerator = -numerator;
  out.tau = divide_exact(numerator, 20, "tau_k2_quadratic (division by 20)");
  return out;
}

LinearRecurrence k2_sequence() {
  // a(n+4) - a(n+3) - 3a(n+2) + a(n+1) + a(n) = 0
  return {{1, 1, -3, -1, 1}, {0, 1, 1, 5}, 0};
}

LaurentPolynomial k3_characteristic() {
  // Squares of the roots eta of 1 + eta^2 + 11 eta^4 + eta^6 + eta^8 = sqrt6 eta (1 + 2 eta^2 + 2 eta^4 + eta^6).
  const LaurentPolynomial lhs{0, {1, 1, 11, 1, 1}};
  const LaurentPolynomial rhs{0, {1, 2, 2, 1}};
  return square_radical_relation(lhs, rhs, 6);
}

LinearRecurrence k3_even_sequence() {
  return LinearRecurrence::from_polynomial(k3_characteristic(), {0, 1, 4, 9, 72, 320, 1332, 6889}, 0);
}

LinearRecurrence k3_odd_sequence() {
  return LinearRecurrence::from_polynomial(k3_characteristic(), {1, 1, 20, 83, 289, 1693, 7775, 34820}, 0);
}

LinearRecurrence k4_sequence() {
  // T^16 - T^15 - 2T^13 - 16T^12 + 10T^11 - 2T^10 + 16T^9 + 50T^8 - 16T^7 - 2T^6 - 10T^5 - 16T^4 + 2T^3 + T + 1
  const LaurentPolynomial p{0, {1, 1, 0, 2, -16, -10, -2, -16, 50, 16, -2, 10, -16, -2, 0, -1, 1}};
  return LinearRecurrence::from_polynomial(p, {-83, 35, -19, 1, -5, 1, -1, 0, 1, 1, 5, 1, 19, 35, 83, 73}, -7);
}

namespace {

Integer term(const LinearRecurrence& r, long index) { return recurrence_terms(r, index, 1).front(); }

}  // namespace

Integer tau_k2_recurrence(long n) {
  if (n < 1) throw std::invalid_argument("tau_k2_recurrence: n must be >= 1");
  const Integer a = term(k2_sequence(), n);
  return n * a * a;
}

Integer tau_k3_recurrence(long n) {
  if (n < 4) throw std::invalid_argument("tau_k3_recurrence: n must be >= 4");
  const long m = n / 2;
  if (n % 2 == 0) {
    const Integer a = term(k3_even_sequence(), m);
    return 12 * m * a * a;
  }
  const Integer b = term(k3_odd_sequence(), m);
  return n * b * b;
}

Integer tau_k4_recurrence(long n) {
  if (n < 5) throw std::invalid_argument("tau_k4_recurrence: n must be >= 5");
  const Integer a = term(k4_sequence(), n);
  return n * a * a;
}

// ---------------------------------------------------------------------------
// Dispatch

TauMethod parse_tau_method(std::string_view name) {
  if (name == "auto") return TauMethod::Auto;
  if (name == "kirchhoff") return TauMethod::Kirchhoff;
  if (name == "theorem1") return TauMethod::Theorem1;
  if (name == "closed") return TauMethod::Closed;
  throw std::invalid_argument("unknown tau method '" + std::string(name) + "' (auto, kirchhoff, theorem1, closed)");
}

std::string to_string(TauMethod method) {
  switch (method) {
    case TauMethod::Auto: return "auto";
    case TauMethod::Kirchhoff: return "kirchhoff";
    case TauMethod::Theorem1: return "theorem1";
    case TauMethod::Closed: return "closed";
  }
  return "?";
}

bool has_closed_form(long n, long k) {
  const std::size_t step = reduced_step(n, k);
  return step >= 1 && step <= 4;
}

TauMethod resolve_tau_method(long n, long k, TauMethod method) {
  if (method != TauMethod::Auto) return method;
  if (has_closed_form(n, k)) return TauMethod::Closed;
  return n > 60 ? TauMethod::Theorem1 : TauMethod::Kirchhoff;
}

Integer tau(long n, long k, TauMethod method) {
  build_gp(n, k);
  switch (resolve_tau_method(n, k, method)) {
    case TauMethod::Kirchhoff: return tau_kirchhoff(n, k);
    case TauMethod::Theorem1: return tau_theorem1(n, k);
    case TauMethod::Closed: break;
    case TauMethod::Auto: break;
  }
  switch (reduced_step(n, k)) {
    case 1: return tau_prism(n);
    case 2: return tau_k2_recurrence(n);
    case 3: return tau_k3_recurrence(n);
    case 4: return tau_k4_recurrence(n);
    default:
      throw std::invalid_argument("no closed form for GP(" + std::to_string(n) + "," + std::to_string(k) +
                                  "): reduced k must be 1..4");
  }
}

}  // namespace gpjac
