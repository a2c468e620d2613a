#pragma once

#include <vector>

#include "alcove/exact_linalg.hpp"
#include "alcove/numeric.hpp"

namespace alcove {

inline bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Working ring B = (k[t]/(t^N))[t0, t1], graded by total degree in t0, t1;
// k is the rationals (characteristic 0) or a prime field. The kernel module
// of the evaluation map below is generated by
//   E0 = (-t1, t0), E1 = (t, 0), E2 = (0, t),
// subject to the single relation t*E0 + t1*E1 - t0*E2 = 0; the operations
// here certify both claims degreewise by exact linear algebra.
struct TruncatedRing {
  int trunc;                 // N >= 1
  long long characteristic;  // 0 or prime

  TruncatedRing(int n, long long ch) : trunc(n), characteristic(ch) {
    if (trunc < 1) throw std::invalid_argument("truncation order must be >= 1");
    if (characteristic != 0 && !is_prime_ll(characteristic))
      throw std::invalid_argument("characteristic must be 0 or prime");
  }
};

// One graded slice of the kernel of (B + B)_d -> k[t0,t1]_{d+1},
// (h0, h1) |-> h0bar*t0 + h1bar*t1. Basis vectors are written over the
// monomial basis of (B + B)_d (prime-field entries lifted to integers).
struct GradedKernelSlice {
  int degree;
  std::size_t dimension;
  std::vector<std::vector<Rat>> basis;
};

struct HilbertRow {
  int degree;
  std::size_t computed;
  long long closed_form;  // 2N(d+1) - (d+2)
};

namespace kerdetail {

// Monomial order for B_d: t-exponent ascending, then t1-exponent ascending.
// idx(a, i) addresses t^a * t0^(d-i) * t1^i.
struct Layout {
  int N, d;
  std::size_t dim() const { return d < 0 ? 0 : std::size_t(N) * (d + 1); }
  std::size_t idx(int a, int i) const { return std::size_t(a) * (d + 1) + i; }
};

// Evaluation matrix of (B + B)_d -> k[t0,t1]_{d+1}. Rows are indexed by the
// t1-exponent of the target monomial; only t-free source monomials survive.
template <class F>
linalg::DenseMatrix<F> evaluation_matrix(const F& field, int N, int d) {
  Layout L{N, d};
  linalg::DenseMatrix<F> m(field, std::size_t(d + 2), 2 * L.dim());
  for (int i = 0; i <= d; ++i) {
    m.at(std::size_t(i), L.idx(0, i)) = field.one();                // h0 |-> h0bar * t0
    m.at(std::size_t(i + 1), L.dim() + L.idx(0, i)) = field.one();  // h1 |-> h1bar * t1
  }
  return m;
}

// Columns spanning every monomial multiple of E0, E1, E2 inside (B + B)_d.
// Multiples of E1, E2 by monomials with t-exponent N-1 vanish and are skipped.
template <class F>
linalg::DenseMatrix<F> generator_span(const F& field, int N, int d) {
  Layout Lm{N, d - 1}, L{N, d};
  std::size_t cols = (d >= 1 ? Lm.dim() : 0) + 2 * std::size_t(N - 1) * (d + 1);
  linalg::DenseMatrix<F> g(field, 2 * L.dim(), cols);
  std::size_t col = 0;
  if (d >= 1) {
    for (int a = 0; a < N; ++a)
      for (int i = 0; i < d; ++i) {  // m = t^a t0^(d-1-i) t1^i, m*E0
        g.at(L.idx(a, i + 1), col) = field.neg(field.one());
        g.at(L.dim() + L.idx(a, i), col) = field.one();
        ++col;
      }
  }
  for (int a = 0; a + 1 < N; ++a)
    for (int i = 0; i <= d; ++i) {  // m = t^a t0^(d-i) t1^i, m*E1 = (t*m, 0)
      g.at(L.idx(a + 1, i), col) = field.one();
      ++col;
    }
  for (int a = 0; a + 1 < N; ++a)
    for (int i = 0; i <= d; ++i) {  // m*E2 = (0, t*m)
      g.at(L.dim() + L.idx(a + 1, i), col) = field.one();
      ++col;
    }
  return g;
}

// Matrix of (A, B, C) |-> A*E0 + B*E1 + C*E2 from B_{d-1} + B_d + B_d into
// (B + B)_d. Its kernel is the degree-d syzygy space of the generators.
template <class F>
linalg::DenseMatrix<F> syzygy_matrix(const F& field, int N, int d) {
  Layout Lm{N, d - 1}, L{N, d};
  std::size_t cols = Lm.dim() + 2 * L.dim();
  linalg::DenseMatrix<F> z(field, 2 * L.dim(), cols);
  if (d >= 1) {
    for (int a = 0; a < N; ++a)
      for (int i = 0; i < d; ++i) {
        std::size_t c = Lm.idx(a, i);
        z.at(L.idx(a, i + 1), c) = field.neg(field.one());
        z.at(L.dim() + L.idx(a, i), c) = field.one();
      }
  }
  for (int a = 0; a < N; ++a)
    for (int i = 0; i <= d; ++i) {
      std::size_t cB = Lm.dim() + L.idx(a, i);
      std::size_t cC = Lm.dim() + L.dim() + L.idx(a, i);
      if (a + 1 < N) {
        z.at(L.idx(a + 1, i), cB) = field.one();
        z.at(L.dim() + L.idx(a + 1, i), cC) = field.one();
      }
    }
  return z;
}

template <class F>
bool all_zero(const F& field, const std::vector<typename F::Elem>& v) {
  for (const auto& e : v)
    if (!field.is_zero(e)) return false;
  return true;
}

template <class F>
GradedKernelSlice kernel_slice_impl(const F& field, int N, int d) {
  auto eval = evaluation_matrix(field, N, d);
  auto basis = linalg::kernel_basis(field, eval);
  GradedKernelSlice s;
  s.degree = d;
  s.dimension = basis.size();
  for (const auto& v : basis) {
    std::vector<Rat> lifted;
    lifted.reserve(v.size());
    for (const auto& e : v) lifted.push_back(field.lift(e));
    s.basis.push_back(std::move(lifted));
  }
  return s;
}

template <class F>
bool check_generators_impl(const F& field, int N, int max_degree) {
  for (int d = 0; d <= max_degree; ++d) {
    auto eval = evaluation_matrix(field, N, d);
    std::size_t kernel_dim = 2 * std::size_t(N) * (d + 1) - linalg::rank(field, eval);
    auto span = generator_span(field, N, d);
    // Containment: every generator multiple maps to zero.
    for (std::size_t c = 0; c < span.cols; ++c) {
      std::vector<typename F::Elem> col(span.rows);
      for (std::size_t r = 0; r < span.rows; ++r) col[r] = span.at(r, c);
      if (!all_zero(field, linalg::apply(field, eval, col))) return false;
    }
    // Equality: the multiples already fill the kernel.
    if (linalg::rank(field, span) != kernel_dim) return false;
  }
  return true;
}

// Syzygy verification, stable under t-truncation. Over the untruncated ring
// the relation t*E0 + t1*E1 - t0*E2 generates every syzygy; truncating at
// t^N adds the inevitable torsion syzygies (0, t^(N-1)u, t^(N-1)v), which
// vanish in the inverse limit. The degreewise claim certified here is
//   Syz_d = B.(t, t1, -t0) + torsion,
// by containment plus exact rank comparison.
template <class F>
bool check_syzygy_impl(const F& field, int N, int max_degree) {
  Layout L1{N, 1}, L0{N, 0};
  // Symbolic check at degree 1: the relation evaluates to the zero element.
  {
    auto z = syzygy_matrix(field, N, 1);
    std::vector<typename F::Elem> sigma(z.cols, field.zero());
    if (N >= 2) sigma[L0.idx(1, 0)] = field.one();                 // A = t
    sigma[L0.dim() + L1.idx(0, 1)] = field.one();                  // B = t1
    sigma[L0.dim() + L1.dim() + L1.idx(0, 0)] = field.neg(field.one());  // C = -t0
    if (!all_zero(field, linalg::apply(field, z, sigma))) return false;
  }
  for (int d = 0; d <= max_degree; ++d) {
    Layout Lm{N, d - 1}, L{N, d};
    auto z = syzygy_matrix(field, N, d);
    std::size_t syz_dim = linalg::kernel_basis(field, z).size();

    // Expected spanning set: m*(t, t1, -t0) over monomials m of B_{d-1},
    // plus the torsion triples.
    std::size_t n_sigma = Lm.dim();
    std::size_t n_torsion = 2 * std::size_t(d + 1);
    linalg::DenseMatrix<F> span(field, z.cols, n_sigma + n_torsion);
    std::size_t col = 0;
    if (d >= 1) {
      for (int a = 0; a < N; ++a)
        for (int i = 0; i < d; ++i) {  // m = t^a t0^(d-1-i) t1^i
          if (a + 1 < N) span.at(Lm.idx(a + 1, i), col) = field.one();      // t*m
          span.at(Lm.dim() + L.idx(a, i + 1), col) = field.one();           // t1*m
          span.at(Lm.dim() + L.dim() + L.idx(a, i), col) = field.neg(field.one());  // -t0*m
          ++col;
        }
    }
    for (int i = 0; i <= d; ++i) {
      span.at(Lm.dim() + L.idx(N - 1, i), col++) = field.one();             // (0, t^(N-1)u, 0)
    }
    for (int i = 0; i <= d; ++i) {
      span.at(Lm.dim() + L.dim() + L.idx(N - 1, i), col++) = field.one();   // (0, 0, t^(N-1)v)
    }

    for (std::size_t c = 0; c < span.cols; ++c) {
      std::vector<typename F::Elem> v(span.rows);
      for (std::size_t r = 0; r < span.rows; ++r) v[r] = span.at(r, c);
      if (!all_zero(field, linalg::apply(field, z, v))) return false;
    }
    if (linalg::rank(field, span) != syz_dim) return false;
  }
  return true;
}

template <class R>
R dispatch(const TruncatedRing& ring, R (*rational)(const linalg::RationalField&, int, int),
           R (*prime)(const linalg::PrimeField&, int, int), int arg) {
  if (ring.characteristic == 0) {
    linalg::RationalField f;
    return rational(f, ring.trunc, arg);
  }
  linalg::PrimeField f(ring.characteristic);
  return prime(f, ring.trunc, arg);
}

}  // namespace kerdetail

inline GradedKernelSlice kernel_slice(const TruncatedRing& ring, int d) {
  if (d < 0) throw std::domain_error("degree must be >= 0");
  return kerdetail::dispatch<GradedKernelSlice>(
      ring, &kerdetail::kernel_slice_impl<linalg::RationalField>,
      &kerdetail::kernel_slice_impl<linalg::PrimeField>, d);
}

inline bool check_generators(const TruncatedRing& ring, int max_degree) {
  if (max_degree < 0) throw std::domain_error("max degree must be >= 0");
  return kerdetail::dispatch<bool>(ring, &kerdetail::check_generators_impl<linalg::RationalField>,
                                   &kerdetail::check_generators_impl<linalg::PrimeField>,
                                   max_degree);
}

inline bool check_syzygy(const TruncatedRing& ring, int max_degree = 6) {
  if (max_degree < 0) throw std::domain_error("max degree must be >= 0");
  return kerdetail::dispatch<bool>(ring, &kerdetail::check_syzygy_impl<linalg::RationalField>,
                                   &kerdetail::check_syzygy_impl<linalg::PrimeField>, max_degree);
}

inline std::vector<HilbertRow> hilbert_table(const TruncatedRing& ring, int max_degree) {
  if (max_degree < 0) throw std::domain_error("max degree must be >= 0");
  std::vector<HilbertRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    long long formula = 2LL * ring.trunc * (d + 1) - (d + 2);
    rows.push_back({d, kernel_slice(ring, d).dimension, formula});
  }
  return rows;
}

}  // namespace alcove
