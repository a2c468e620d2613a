#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "alcove/numeric.hpp"

namespace alcove::linalg {

// Field objects in the runtime-parameter style: the field is a small value
// passed alongside the data, so one elimination routine serves both the
// rationals and every prime field.

struct RationalField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem neg(const Elem& x) const { return -x; }
  Elem add(const Elem& x, const Elem& y) const { return x + y; }
  Elem sub(const Elem& x, const Elem& y) const { return x - y; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  Elem inv(const Elem& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    return Rat(1) / x;
  }
  Elem from_long(long long v) const { return Rat(v); }
  Rat lift(const Elem& x) const { return x; }
};

struct PrimeField {
  long long p;
  using Elem = long long;  // canonical representative in [0, p)
  explicit PrimeField(long long prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem neg(const Elem& x) const { return x == 0 ? 0 : p - x; }
  Elem add(const Elem& x, const Elem& y) const { return (x + y) % p; }
  Elem sub(const Elem& x, const Elem& y) const { return (x - y + p) % p; }
  Elem mul(const Elem& x, const Elem& y) const { return (x * y) % p; }
  Elem inv(const Elem& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    // extended Euclid
    long long a = x, b = p, u = 1, v = 0;
    while (b != 0) {
      long long q = a / b;
      a -= q * b; std::swap(a, b);
      u -= q * v; std::swap(u, v);
    }
    return ((u % p) + p) % p;
  }
  Elem from_long(long long v) const { return ((v % p) + p) % p; }
  Rat lift(const Elem& x) const { return Rat(x); }
};

template <class F>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  DenseMatrix() = default;
  DenseMatrix(const F& field, std::size_t r, std::size_t c)
      : rows(r), cols(c), a(r * c, field.zero()) {}

  typename F::Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const typename F::Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form. Returns the pivot columns (their count
// is the rank). Pivot choice is first nonzero in column order, so the result
// is canonical for a given column order.
template <class F>
std::vector<std::size_t> rref(const F& field, DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && field.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    auto piv_inv = field.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c)
      m.at(row, c) = field.mul(m.at(row, c), piv_inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || field.is_zero(m.at(r, col))) continue;
      auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& field, DenseMatrix<F> m) {
  return rref(field, m).size();
}

// Canonical kernel basis from the RREF: one vector per free column, with 1
// in the free slot and the negated pivot-row entries above.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field, DenseMatrix<F> m) {
  std::vector<std::size_t> pivots = rref(field, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = field.neg(m.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Matrix-vector product; used to certify claimed kernel/syzygy elements.
template <class F>
std::vector<typename F::Elem> apply(const F& field, const DenseMatrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
  std::vector<typename F::Elem> out(m.rows, field.zero());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (!field.is_zero(m.at(r, c)) && !field.is_zero(v[c]))
        out[r] = field.add(out[r], field.mul(m.at(r, c), v[c]));
  return out;
}

}  // namespace alcove::linalg
