#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gpjac/int_matrix.hpp"
#include "gpjac/integer.hpp"

namespace gpjac {

/// Integer Laurent polynomial sum_i coeffs[i] * z^(min_exp + i).
/// Normalized: the zero polynomial has no coefficients, otherwise both end coefficients are nonzero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long min_exp, std::vector<Integer> coeffs);
  LaurentPolynomial(long min_exp, std::initializer_list<long> coeffs);

  /// Ordinary polynomial from ascending coefficients c_0, c_1, ...
  static LaurentPolynomial from_ascending(std::vector<Integer> coeffs) { return {0, std::move(coeffs)}; }
  static LaurentPolynomial monomial(long exponent, const Integer& coefficient = 1);
  static LaurentPolynomial constant(const Integer& c) { return monomial(0, c); }

  long min_exp() const { return min_exp_; }
  long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// max_exp - min_exp.
  std::size_t span() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Degree as an ordinary polynomial; requires min_exp >= 0.
  std::size_t degree() const;
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing() const { return coeffs_.front(); }

  /// Coefficient of z^e (zero outside the support).
  Integer coefficient(long e) const;

  bool is_bimonic() const { return !coeffs_.empty() && coeffs_.front() == 1 && coeffs_.back() == 1; }
  bool is_palindromic() const;
  bool is_ordinary() const { return coeffs_.empty() || min_exp_ >= 0; }

  /// Dense ascending coefficients c_0..c_deg of an ordinary polynomial.
  std::vector<Integer> ascending() const;

  Integer evaluate(const Integer& x) const;  // ordinary polynomials only
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  /// Multiply by z^e.
  LaurentPolynomial shifted(long e) const;
  LaurentPolynomial derivative() const;  // ordinary polynomials only

  /// Exact quotient by an ordinary divisor whose leading coefficient divides every step.
  /// Throws InconsistencyError on a nonzero remainder.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  std::string to_string(char var = 'z') const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Integer& c);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void normalize();

  long min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(LaurentPolynomial a, const Integer& c);
LaurentPolynomial operator*(const Integer& c, LaurentPolynomial a);

/// Chebyshev polynomial of the first kind T_k.
LaurentPolynomial cheb_T(unsigned k);
/// Chebyshev polynomial of the second kind U_k.
LaurentPolynomial cheb_U(unsigned k);

/// T_n(x) for integer x via the three-term recurrence, without building the polynomial.
Integer cheb_T_value(unsigned n, const Integer& x);

/// P(z) = (3 - z - z^-1)(3 - z^k - z^-k) - 1, bimonic and palindromic with min_exp = -(k+1).
LaurentPolynomial build_P(unsigned k);

/// (T_k(w) - 1) / (w - 1), exact since T_k(1) = 1. Degree k - 1.
LaurentPolynomial cheb_T_quotient(unsigned k);

/// h_k(w) = 2 T_k(w) - (T_k(w) - 1)/(w - 1) - 3; degree k, leading coefficient 2^k, h_k(1) = -(1 + k^2).
LaurentPolynomial build_h(unsigned k);

/// s x s companion matrix [[0 | I], [-1, -a_1, ..., -a_{s-1}]] of a bimonic P,
/// where z^-p P(z) = 1 + a_1 z + ... + a_{s-1} z^{s-1} + z^s.
IntegerMatrix companion_matrix(const LaurentPolynomial& p);

/// Sylvester matrix of dense descending-degree coefficient vectors (leading zeros allowed).
IntegerMatrix sylvester_matrix(const std::vector<Integer>& f_desc, const std::vector<Integer>& g_desc);

/// Res(f, g) = det Sylvester(f, g) = lc(f)^deg g * prod_{f(r)=0} g(r).
/// Both must be nonzero ordinary polynomials.
Integer resultant(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// True iff Res(p, p') != 0 (equivalently gcd(p, p') is constant). Constants count as squarefree.
bool is_squarefree(const LaurentPolynomial& p);

/// R(z) = Res_xi(P(xi), xi^deg Q * Q(z/xi)): its roots are the products of a root of P and a root of Q.
/// P and Q must be squarefree ordinary polynomials.
LaurentPolynomial recurrence_product(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Given a relation A(eta^2) = sqrt(c) * eta * B(eta^2), returns A(zeta)^2 - c * zeta * B(zeta)^2,
/// whose roots are the squares zeta = eta^2.
LaurentPolynomial square_radical_relation(const LaurentPolynomial& a, const LaurentPolynomial& b, const Integer& c);

/// Homogeneous linear recurrence sum_j char_coeffs[j] * u(n + j) = 0 with known terms
/// u(start_index), u(start_index + 1), ...
struct LinearRecurrence {
  std::vector<Integer> char_coeffs;  // ascending: c_0 .. c_d
  std::vector<Integer> initial_terms;
  long start_index = 0;

  static LinearRecurrence from_polynomial(const LaurentPolynomial& characteristic, std::vector<Integer> initial_terms,
                                          long start_index = 0);

  std::size_t order() const { return char_coeffs.empty() ? 0 : char_coeffs.size() - 1; }
  LaurentPolynomial characteristic() const { return LaurentPolynomial::from_ascending(char_coeffs); }
};

/// u(from), ..., u(from + count - 1). Forward steps divide by c_d, backward steps by c_0;
/// backward generation requires c_0 = ±1, and any inexact forward division throws.
std::vector<Integer> recurrence_terms(const LinearRecurrence& r, long from, std::size_t count);

}  // namespace gpjac
