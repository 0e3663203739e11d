#pragma once

// Dense matrices with polynomial entries, cofactor and fraction-free
// determinants, integer determinants and the join construction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "criticalis/error.hpp"
#include "criticalis/polyring.hpp"

namespace criticalis {

class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t rows, std::size_t cols, Ring ring = Ring::integers())
      : rows_(rows), cols_(cols), ring_(ring), e_(rows * cols, Polynomial(ring)) {}

  static SymbolicMatrix from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    SymbolicMatrix m(rows.size(), c, ring);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Ring ring() const { return ring_; }

  const Polynomial& operator()(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, Polynomial p) {
    if (!(p.ring() == ring_)) throw RingMismatch("matrix entry over " + p.ring().to_string());
    e_.at(i * cols_ + j) = std::move(p);
  }

  SymbolicMatrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
    SymbolicMatrix m(r.size(), c.size(), ring_);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) m.set(i, j, (*this)(r[i], c[j]));
    return m;
  }

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Ring ring_;
  std::vector<Polynomial> e_;
};

/// Laplace expansion along the first row. The 0x0 determinant is 1.
inline Polynomial cofactor_determinant(const SymbolicMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  Polynomial total(m.ring());
  std::vector<std::size_t> rest_rows;
  for (std::size_t i = 1; i < n; ++i) rest_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Polynomial term = m(0, j) * cofactor_determinant(m.submatrix(rest_rows, cols));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Exact quotient a / b over Z; throws when b does not divide a.
inline Polynomial exact_quotient(Polynomial a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Polynomial q(a.ring());
  const Term& lb = b.leading();
  while (!a.is_zero()) {
    const Term& la = a.leading();
    if (!lb.mono.divides(la.mono)) throw InvalidArgument("inexact polynomial division");
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : la.mono.factors()) {
      auto d = e - lb.mono.exponent(v);
      if (d) fs.emplace_back(v, d);
    }
    mpz_class c;
    if (a.ring().is_integers()) {
      if (!mpz_divisible_p(la.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) throw InvalidArgument("inexact polynomial division");
      mpz_divexact(c.get_mpz_t(), la.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    } else {
      mpz_class inv, mod(a.ring().modulus());
      mpz_invert(inv.get_mpz_t(), lb.coeff.get_mpz_t(), mod.get_mpz_t());
      c = la.coeff * inv;
    }
    Polynomial t = Polynomial::monomial(a.ring(), Monomial::from_factors(std::move(fs)), c);
    q += t;
    a -= t * b;
  }
  return q;
}

/// Fraction-free (Bareiss) elimination with row pivoting.
inline Polynomial bareiss_determinant(SymbolicMatrix m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Polynomial(m.ring());
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial t = m(k, j);
        m.set(k, j, m(p, j));
        m.set(p, j, std::move(t));
      }
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.set(i, j, exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev));
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Determinant of a small integer matrix (row-major, n x n).
inline mpz_class integer_determinant(std::vector<mpz_class> a, std::size_t n) {
  if (n == 0) return 1;
  mpz_class prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  return negate ? mpz_class(-a[n * n - 1]) : a[n * n - 1];
}

/// Fast path for small integer determinants: Bareiss in 128-bit arithmetic,
/// falling back to GMP when intermediate values grow past 2^62.
inline mpz_class small_integer_determinant(const std::int64_t* a, std::size_t n) {
  if (n == 0) return 1;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  std::vector<__int128> m(a, a + n * n);
  __int128 prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 t = (m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j]) / prev;
        if (t > kLimit || t < -kLimit) {
          std::vector<mpz_class> z(n * n);
          for (std::size_t q = 0; q < n * n; ++q) z[q] = static_cast<long>(a[q]);
          return integer_determinant(std::move(z), n);
        }
        m[i * n + j] = t;
      }
    prev = m[k * n + k];
  }
  __int128 d = negate ? -m[n * n - 1] : m[n * n - 1];
  return mpz_class(static_cast<long>(d));
}

/// The join J(P, a; Q, b) = [[P, 1^T b], [a^T 1, Q]]: the upper-right block
/// repeats b in every row, the lower-left block repeats a in every column.
inline SymbolicMatrix join_matrix(const SymbolicMatrix& P, const std::vector<Polynomial>& a, const SymbolicMatrix& Q,
                                  const std::vector<Polynomial>& b) {
  if (a.size() != Q.rows() || b.size() != Q.cols()) throw InvalidArgument("join vector sizes do not match Q");
  if (P.rows() + Q.rows() != P.cols() + Q.cols()) throw InvalidArgument("join is not square");
  Ring r = P.rows() + P.cols() ? P.ring() : Q.ring();
  std::size_t n = P.rows() + Q.rows();
  SymbolicMatrix J(n, n, r);
  for (std::size_t i = 0; i < P.rows(); ++i) {
    for (std::size_t j = 0; j < P.cols(); ++j) J.set(i, j, P(i, j));
    for (std::size_t j = 0; j < Q.cols(); ++j) J.set(i, P.cols() + j, b[j]);
  }
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    for (std::size_t j = 0; j < P.cols(); ++j) J.set(P.rows() + i, j, a[i]);
    for (std::size_t j = 0; j < Q.cols(); ++j) J.set(P.rows() + i, P.cols() + j, Q(i, j));
  }
  return J;
}

/// det J(P, a; Q, b) through the four-case block formula.
inline Polynomial join_determinant(const SymbolicMatrix& P, const std::vector<Polynomial>& a, const SymbolicMatrix& Q,
                                   const std::vector<Polynomial>& b) {
  if (a.size() != Q.rows() || b.size() != Q.cols()) throw InvalidArgument("join vector sizes do not match Q");
  std::size_t p1 = P.rows(), p2 = P.cols(), q1 = Q.rows(), q2 = Q.cols();
  if (p1 + q1 != p2 + q2) throw InvalidArgument("join is not square");
  Ring r = p1 + p2 ? P.ring() : Q.ring();
  Polynomial one = Polynomial::constant(r, 1), zero(r);
  auto det = [](const SymbolicMatrix& m) { return cofactor_determinant(m); };

  // [P 1^T] with a column of ones appended, [P; 1] with a row of ones.
  auto P_col = [&] {
    SymbolicMatrix m(p1, p2 + 1, r);
    for (std::size_t i = 0; i < p1; ++i) {
      for (std::size_t j = 0; j < p2; ++j) m.set(i, j, P(i, j));
      m.set(i, p2, one);
    }
    return m;
  };
  auto P_row = [&] {
    SymbolicMatrix m(p1 + 1, p2, r);
    for (std::size_t i = 0; i < p1; ++i)
      for (std::size_t j = 0; j < p2; ++j) m.set(i, j, P(i, j));
    for (std::size_t j = 0; j < p2; ++j) m.set(p1, j, one);
    return m;
  };
  // [b; Q] and [a^T Q].
  auto Q_row = [&] {
    SymbolicMatrix m(q1 + 1, q2, r);
    for (std::size_t j = 0; j < q2; ++j) m.set(0, j, b[j]);
    for (std::size_t i = 0; i < q1; ++i)
      for (std::size_t j = 0; j < q2; ++j) m.set(i + 1, j, Q(i, j));
    return m;
  };
  auto Q_col = [&] {
    SymbolicMatrix m(q1, q2 + 1, r);
    for (std::size_t i = 0; i < q1; ++i) {
      m.set(i, 0, a[i]);
      for (std::size_t j = 0; j < q2; ++j) m.set(i, j + 1, Q(i, j));
    }
    return m;
  };

  if (p1 == p2) {
    SymbolicMatrix bordered_P(p1 + 1, p2 + 1, r);
    for (std::size_t i = 0; i < p1; ++i) {
      for (std::size_t j = 0; j < p2; ++j) bordered_P.set(i, j, P(i, j));
      bordered_P.set(i, p2, one);
    }
    for (std::size_t j = 0; j < p2; ++j) bordered_P.set(p1, j, one);
    SymbolicMatrix bordered_Q(q1 + 1, q2 + 1, r);
    for (std::size_t j = 0; j < q2; ++j) bordered_Q.set(0, j + 1, b[j]);
    for (std::size_t i = 0; i < q1; ++i) {
      bordered_Q.set(i + 1, 0, a[i]);
      for (std::size_t j = 0; j < q2; ++j) bordered_Q.set(i + 1, j + 1, Q(i, j));
    }
    return det(P) * det(Q) - det(bordered_P) * det(bordered_Q);
  }
  if (p1 == p2 + 1) return det(P_col()) * det(Q_row());
  if (p2 == p1 + 1) return det(P_row()) * det(Q_col());
  return zero;
}

}  // namespace criticalis
