// Dense exact matrices over the integers (arbitrary precision) and over the
// boolean semiring, the Kronecker product, the structural matrices S/E/H,
// and the matrix representation of arrow terms at a dimension parameter p.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "brauerkit/arrow.hpp"
#include "brauerkit/errors.hpp"

namespace brauerkit {

struct IntSemiring {
  using value_type = mpz_class;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static void add_mul(value_type& acc, const value_type& a, const value_type& b) {
    acc += a * b;
  }
  static bool is_zero(const value_type& v) { return v == 0; }
};

// 0/1 entries with 1 + 1 = 1 (relation composition).
struct BoolSemiring {
  using value_type = std::uint8_t;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static void add_mul(value_type& acc, value_type a, value_type b) {
    acc = static_cast<value_type>(acc | (a & b));
  }
  static bool is_zero(value_type v) { return v == 0; }
};

template <class S>
struct Matrix {
  using value_type = typename S::value_type;
  int rows = 0;
  int cols = 0;
  std::vector<value_type> e;  // row-major; empty matrices have no entries

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c) {
    if (r < 0 || c < 0) throw input_error("negative matrix dimension");
    e.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), S::zero());
  }

  value_type& at(int r, int c) {
    return e[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  }
  const value_type& at(int r, int c) const {
    return e[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  }
  bool operator==(const Matrix&) const = default;
};

using IntMatrix = Matrix<IntSemiring>;
using BoolMatrix = Matrix<BoolSemiring>;

template <class S>
Matrix<S> id_matrix_t(int n) {
  Matrix<S> m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = S::one();
  return m;
}

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols != b.rows) throw input_error("matmul shape mismatch");
  Matrix<S> c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const auto& aik = a.at(i, k);
      if (S::is_zero(aik)) continue;
      for (int j = 0; j < b.cols; ++j) S::add_mul(c.at(i, j), aik, b.at(k, j));
    }
  return c;
}

// Block layout: entry ((i*b.rows+k), (j*b.cols+l)) = a(i,j) * b(k,l).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const auto& aij = a.at(i, j);
      if (S::is_zero(aij)) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          S::add_mul(c.at(i * b.rows + k, j * b.cols + l), aij, b.at(k, l));
    }
  return c;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

// The nm x mn permutation matrix with entry ((i-1)m+j, (j-1)n+i) = 1 for
// 1 <= i <= n, 1 <= j <= m; swaps the two factors of a Kronecker product.
template <class S>
Matrix<S> s_matrix_t(int m, int n) {
  Matrix<S> s(n * m, m * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) s.at((i - 1) * m + j - 1, (j - 1) * n + i - 1) = S::one();
  return s;
}

// E_{m,1} is the 1 x m^2 row with 1 at the (i-1)m+i positions; E_{m,n} is
// E_{m,1} (x) id_n (n x m^2 n).  H is its transpose.
template <class S>
Matrix<S> e_matrix_t(int m, int n) {
  if (m == 0) return Matrix<S>(n, 0);  // the empty matrix 0 -> n
  Matrix<S> e1(1, m * m);
  for (int i = 1; i <= m; ++i) e1.at(0, (i - 1) * m + i - 1) = S::one();
  return kron(e1, id_matrix_t<S>(n));
}

template <class S>
Matrix<S> h_matrix_t(int m, int n) {
  return transpose(e_matrix_t<S>(m, n));
}

inline IntMatrix id_matrix(int n) { return id_matrix_t<IntSemiring>(n); }
inline IntMatrix s_matrix(int m, int n) { return s_matrix_t<IntSemiring>(m, n); }
inline IntMatrix e_matrix(int m, int n) { return e_matrix_t<IntSemiring>(m, n); }
inline IntMatrix h_matrix(int m, int n) { return h_matrix_t<IntSemiring>(m, n); }

constexpr int kDefaultDimCap = 4096;

// p^n, refusing with resource_error once the value passes dim_cap.
int checked_power(int p, int n, int dim_cap);

// The representation at dimension p >= 2:
//   id n    -> identity of size p^n
//   phi n   -> E_{p, p^n}
//   gamma n -> H_{p, p^n}
//   chi n   -> S_{p,p} (x) id_{p^n}
//   F f     -> id_p (x) rep(f)
//   g o f   -> rep(g) rep(f)
// Throws resource_error when any object of the arrow exceeds dim_cap.
template <class S>
Matrix<S> rep(const ArrowPtr& f, int p, int dim_cap = kDefaultDimCap) {
  if (p < 2) throw input_error("dimension parameter must be >= 2");
  checked_power(p, std::max(f->src, f->tgt), dim_cap);
  switch (f->kind) {
    case Arrow::Kind::Id: return id_matrix_t<S>(checked_power(p, f->index, dim_cap));
    case Arrow::Kind::Phi: return e_matrix_t<S>(p, checked_power(p, f->index, dim_cap));
    case Arrow::Kind::Gamma:
      return h_matrix_t<S>(p, checked_power(p, f->index, dim_cap));
    case Arrow::Kind::Chi:
      return kron(s_matrix_t<S>(p, p),
                  id_matrix_t<S>(checked_power(p, f->index, dim_cap)));
    case Arrow::Kind::Fap: return kron(id_matrix_t<S>(p), rep<S>(f->left, p, dim_cap));
    case Arrow::Kind::Comp:
      return matmul(rep<S>(f->left, p, dim_cap), rep<S>(f->right, p, dim_cap));
  }
  throw internal_error("unknown arrow kind");
}

inline IntMatrix rep_k(const ArrowPtr& f, int p, int dim_cap = kDefaultDimCap) {
  return rep<IntSemiring>(f, p, dim_cap);
}
inline BoolMatrix rep_j(const ArrowPtr& f, int p, int dim_cap = kDefaultDimCap) {
  return rep<BoolSemiring>(f, p, dim_cap);
}

// {"rows": r, "cols": c, "entries": [["...", ...], ...]} with decimal
// integer strings.
std::string matrix_json(const IntMatrix& m);
std::string matrix_json(const BoolMatrix& m);

}  // namespace brauerkit
