#pragma once

#include <string>
#include <string_view>

#include "gpjac/integer.hpp"
#include "gpjac/polynomial.hpp"

namespace gpjac {

/// a + b·sqrt(d) with exact rational a, b and a fixed squarefree d > 0.
class QuadExtElement {
 public:
  QuadExtElement(Rational a, Rational b, Integer d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  QuadExtElement& operator+=(const QuadExtElement& o);
  QuadExtElement& operator-=(const QuadExtElement& o);
  QuadExtElement& operator*=(const QuadExtElement& o);
  QuadExtElement& operator*=(const Rational& c);

  friend QuadExtElement operator+(QuadExtElement x, const QuadExtElement& y) { return x += y; }
  friend QuadExtElement operator-(QuadExtElement x, const QuadExtElement& y) { return x -= y; }
  friend QuadExtElement operator*(QuadExtElement x, const QuadExtElement& y) { return x *= y; }
  friend QuadExtElement operator*(QuadExtElement x, const Rational& c) { return x *= c; }
  friend bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  /// a^2 - d b^2.
  Rational norm() const;

 private:
  void check_same_field(const QuadExtElement& o) const;

  Rational a_;
  Rational b_;
  Integer d_;
};

/// Matrix-tree count: determinant of the Laplacian with its last row and column removed.
Integer tau_kirchhoff(long n, long k);

/// Product formula over the roots w_s of h_k, carried out with the integer resultant
/// Res(h_k, (T_n - 1)/(w - 1)) divided by lc(h_k)^(n-1), sign (-1)^((n-1)(k-1)). k is reduced first.
Integer tau_theorem1(long n, long k);

/// Same assembly for an explicit h (k = deg h). Exposed so the verification sweep can be fed a perturbed h.
Integer tau_theorem1_from_h(long n, const LaurentPolynomial& h);

/// n (T_n(2) - 1).
Integer tau_prism(long n);

struct QuadraticTau {
  Integer tau;
  Integer alpha;
  Integer beta;
};

/// T_n((1 + sqrt 29)/4) - 1 = (alpha + beta sqrt 29)/4 and tau = (-1)^n n (alpha^2 - 29 beta^2) / 20.
QuadraticTau tau_k2_quadratic(long n);

/// a(n+4) = a(n+3) + 3a(n+2) - a(n+1) - a(n), a(0..3) = 0, 1, 1, 5.
LinearRecurrence k2_sequence();
/// Degree-8 recurrence shared by the even (a) and odd (b) branches for k = 3.
LaurentPolynomial k3_characteristic();
LinearRecurrence k3_even_sequence();
LinearRecurrence k3_odd_sequence();
/// Degree-16 recurrence seeded at indices -7..8.
LinearRecurrence k4_sequence();

/// n a(n)^2 with the k = 2 sequence.
Integer tau_k2_recurrence(long n);
/// 12 m a(m)^2 for n = 2m, (2m+1) b(m)^2 for n = 2m + 1; n >= 4.
Integer tau_k3_recurrence(long n);
/// n a(n)^2 with the k = 4 sequence; n >= 5.
Integer tau_k4_recurrence(long n);

enum class TauMethod { Auto, Kirchhoff, Theorem1, Closed };

TauMethod parse_tau_method(std::string_view name);
std::string to_string(TauMethod method);

/// Closed forms exist for reduced k in {1, 2, 3, 4}.
bool has_closed_form(long n, long k);

/// Auto: closed when available, else theorem1 for n > 60, else kirchhoff.
TauMethod resolve_tau_method(long n, long k, TauMethod method);

Integer tau(long n, long k, TauMethod method = TauMethod::Auto);

}  // namespace gpjac
