#include "gpjac/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "gpjac/errors.hpp"

namespace gpjac {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer divide_exact(const Integer& a, const Integer& b, std::string_view context) {
  if (b == 0) throw InconsistencyError(std::string(context) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InconsistencyError(std::string(context) + ": " + to_decimal(a) + " is not divisible by " + to_decimal(b));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntegerMatrix IntegerMatrix::without(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntegerMatrix::without");
  IntegerMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntegerMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntegerMatrix& IntegerMatrix::operator+=(const IntegerMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntegerMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntegerMatrix& IntegerMatrix::operator-=(const IntegerMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("IntegerMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntegerMatrix& IntegerMatrix::operator*=(const Integer& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntegerMatrix operator+(IntegerMatrix lhs, const IntegerMatrix& rhs) { return lhs += rhs; }
IntegerMatrix operator-(IntegerMatrix lhs, const IntegerMatrix& rhs) { return lhs -= rhs; }

IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("IntegerMatrix: shape mismatch in *");
  IntegerMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t t = 0; t < lhs.cols(); ++t) {
      const Integer& a = lhs(i, t);
      if (a == 0) continue;
      auto rhs_row = rhs.row(t);
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (rhs_row[j] != 0) mpz_addmul(out_row[j].get_mpz_t(), a.get_mpz_t(), rhs_row[j].get_mpz_t());
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
  AbelianGroup g;
  std::vector<Integer> torsion;
  for (const auto& d : orders) {
    Integer a = abs(d);
    if (a == 0) {
      ++g.free_rank;
    } else if (a != 1) {
      torsion.push_back(a);
    }
  }
  // Pairwise (gcd, lcm) sweeps converge to a divisibility chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        if (torsion[j] % torsion[i] == 0) continue;
        Integer gcd_v = gcd(torsion[i], torsion[j]);
        Integer lcm_v = lcm(torsion[i], torsion[j]);
        torsion[i] = gcd_v;
        torsion[j] = lcm_v;
        changed = true;
      }
    }
  }
  std::erase_if(torsion, [](const Integer& d) { return d == 1; });
  g.invariant_factors = std::move(torsion);
  return g;
}

Integer AbelianGroup::torsion_order() const {
  Integer prod = 1;
  for (const auto& d : invariant_factors) prod *= d;
  return prod;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " ⊕ ";
    out += term;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) append("Z_" + to_decimal(d));
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Determinant

Integer det_bareiss(IntegerMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m(i, i) == 0) {
      std::size_t swap_row = i + 1;
      while (swap_row < n && m(swap_row, i) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap_ranges(m.row(i).begin(), m.row(i).end(), m.row(swap_row).begin());
      sign = -sign;
    }
    const Integer& pivot = m(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      const Integer factor = m(r, i);
      for (std::size_t c = i + 1; c < n; ++c) {
        Integer& target = m(r, c);
        // target = (target * pivot - factor * m(i, c)) / prev, the division being exact.
        mpz_mul(tmp.get_mpz_t(), target.get_mpz_t(), pivot.get_mpz_t());
        if (factor != 0) mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), m(i, c).get_mpz_t());
        mpz_divexact(target.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, i) = 0;
    }
    prev = pivot;
  }
  Integer det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// row_dst -= q * row_src over columns [from, cols).
void row_submul(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  auto d = m.row(dst);
  auto s = m.row(src);
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (s[c] != 0) mpz_submul(d[c].get_mpz_t(), q.get_mpz_t(), s[c].get_mpz_t());
  }
}

void col_submul(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t r = from; r < m.rows(); ++r) {
    const Integer& s = m(r, src);
    if (s != 0) mpz_submul(m(r, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
  }
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a != b) std::swap_ranges(m.row(a).begin(), m.row(a).end(), m.row(b).begin());
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) swap(m(r, a), m(r, b));
}

// Locates a nonzero entry of minimal absolute value in the block [t.., t..].
bool find_min_pivot(const IntegerMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  for (std::size_t r = t; r < m.rows(); ++r) {
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      if (v == 0) continue;
      if (!found || mpz_cmpabs(v.get_mpz_t(), m(pr, pc).get_mpz_t()) < 0) {
        pr = r;
        pc = c;
        found = true;
        if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) return true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Integer> smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> d(diag);
  Integer q;

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      std::size_t pr = t, pc = t;
      if (!find_min_pivot(m, t, pr, pc)) {
        // Remaining block is zero; d[t..] stay 0.
        return d;
      }
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0) row_submul(m, r, t, q, t);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        if (q != 0) col_submul(m, c, t, q, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder exists; it becomes the next pivot

      // Pivot must divide the whole remaining block; otherwise fold an offending row in.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m(r, c) != 0 && !mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t + 1; c < cols; ++c) m(t, c) += m(bad_row, c);
    }
    d[t] = abs(m(t, t));
  }
  return d;
}

AbelianGroup cokernel(const IntegerMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("cokernel: matrix is not square");
  const auto diagonal = smith_normal_form(m);
  return AbelianGroup::from_cyclic_orders(diagonal);
}

IntegerMatrix mat_pow(const IntegerMatrix& m, unsigned long e) {
  if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix is not square");
  IntegerMatrix result = IntegerMatrix::identity(m.rows());
  IntegerMatrix base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace gpjac
