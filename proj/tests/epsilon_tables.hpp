#pragma once

// Test-only oracle: the classical root constructions in epsilon coordinates,
// independent of the Cartan-matrix/reflection route used by the library.
// All coordinates are doubled so the E-family half-integer roots and the F4
// half-sum roots stay integral.

#include <set>
#include <stdexcept>
#include <vector>

namespace epsilon_oracle {

using Vec = std::vector<long long>;

struct EpsilonData {
  int ambient = 0;
  std::vector<Vec> simples;  // doubled Bourbaki simple roots
  std::vector<Vec> roots;    // doubled full root set
};

namespace detail {

inline Vec unit(int dim, int i, long long scale) {
  Vec v(dim, 0);
  v[i] = scale;
  return v;
}

inline Vec diff(int dim, int i, int j, long long scale) {
  Vec v(dim, 0);
  v[i] = scale;
  v[j] = -scale;
  return v;
}

inline void plus_minus_pairs(std::vector<Vec>& out, int dim, int upto, long long scale) {
  for (int i = 0; i < upto; ++i)
    for (int j = i + 1; j < upto; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(dim, 0);
          v[i] = si * scale;
          v[j] = sj * scale;
          out.push_back(v);
        }
}

inline std::vector<Vec> e_series_simples(int rank) {
  std::vector<Vec> s;
  Vec a1(8, -1);
  a1[0] = 1;
  a1[7] = 1;
  s.push_back(a1);                      // (e1 + e8 - e2 - ... - e7)/2, doubled
  Vec a2(8, 0);
  a2[0] = 2;
  a2[1] = 2;
  s.push_back(a2);                      // e1 + e2
  for (int k = 0; k + 3 <= rank; ++k) s.push_back(diff(8, k + 1, k, 2));  // e_{k+2} - e_{k+1}
  return s;
}

}  // namespace detail

inline EpsilonData epsilon_data(char family, int n) {
  using namespace detail;
  EpsilonData d;
  switch (family) {
    case 'A': {
      d.ambient = n + 1;
      for (int i = 0; i < n; ++i) d.simples.push_back(diff(d.ambient, i, i + 1, 2));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) d.roots.push_back(diff(d.ambient, i, j, 2));
      break;
    }
    case 'B': {
      d.ambient = n;
      for (int i = 0; i + 1 < n; ++i) d.simples.push_back(diff(n, i, i + 1, 2));
      d.simples.push_back(unit(n, n - 1, 2));
      for (int i = 0; i < n; ++i)
        for (long long s : {2LL, -2LL}) d.roots.push_back(unit(n, i, s));
      plus_minus_pairs(d.roots, n, n, 2);
      break;
    }
    case 'C': {
      d.ambient = n;
      for (int i = 0; i + 1 < n; ++i) d.simples.push_back(diff(n, i, i + 1, 2));
      d.simples.push_back(unit(n, n - 1, 4));
      for (int i = 0; i < n; ++i)
        for (long long s : {4LL, -4LL}) d.roots.push_back(unit(n, i, s));
      plus_minus_pairs(d.roots, n, n, 2);
      break;
    }
    case 'D': {
      d.ambient = n;
      for (int i = 0; i + 1 < n; ++i) d.simples.push_back(diff(n, i, i + 1, 2));
      Vec last(n, 0);
      last[n - 2] = 2;
      last[n - 1] = 2;
      d.simples.push_back(last);
      plus_minus_pairs(d.roots, n, n, 2);
      break;
    }
    case 'G': {
      d.ambient = 3;
      d.simples.push_back(diff(3, 0, 1, 2));
      d.simples.push_back(Vec{-4, 2, 2});
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          d.roots.push_back(diff(3, i, j, 2));  // e_i - e_j
          int k = 3 - i - j;
          Vec v(3, 0);
          v[i] = 4;
          v[j] = -2;
          v[k] = -2;
          d.roots.push_back(v);  // 2e_i - e_j - e_k
          Vec w(3, 0);
          w[i] = -4;
          w[j] = 2;
          w[k] = 2;
          d.roots.push_back(w);
        }
      std::set<Vec> uniq(d.roots.begin(), d.roots.end());
      d.roots.assign(uniq.begin(), uniq.end());
      break;
    }
    case 'F': {
      d.ambient = 4;
      d.simples = {diff(4, 1, 2, 2), diff(4, 2, 3, 2), unit(4, 3, 2), Vec{1, -1, -1, -1}};
      for (int i = 0; i < 4; ++i)
        for (long long s : {2LL, -2LL}) d.roots.push_back(unit(4, i, s));
      plus_minus_pairs(d.roots, 4, 4, 2);
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        d.roots.push_back(v);
      }
      break;
    }
    case 'E': {
      d.ambient = 8;
      d.simples = e_series_simples(n);
      if (n == 8) {
        plus_minus_pairs(d.roots, 8, 8, 2);
        for (int mask = 0; mask < 256; ++mask) {
          Vec v(8);
          int minus = 0;
          for (int i = 0; i < 8; ++i) {
            v[i] = (mask >> i) & 1 ? -1 : 1;
            minus += (mask >> i) & 1;
          }
          if (minus % 2 == 0) d.roots.push_back(v);
        }
      } else if (n == 7) {
        plus_minus_pairs(d.roots, 8, 6, 2);
        d.roots.push_back(Vec{0, 0, 0, 0, 0, 0, 2, -2});
        d.roots.push_back(Vec{0, 0, 0, 0, 0, 0, -2, 2});
        for (int mask = 0; mask < 64; ++mask) {
          Vec v(8);
          int minus = 0;
          for (int i = 0; i < 6; ++i) {
            v[i] = (mask >> i) & 1 ? -1 : 1;
            minus += (mask >> i) & 1;
          }
          if (minus % 2 != 1) continue;  // odd sign count among the first six
          v[6] = -1;
          v[7] = 1;
          d.roots.push_back(v);
          Vec w(8);
          for (int i = 0; i < 8; ++i) w[i] = -v[i];
          d.roots.push_back(w);
        }
      } else {
        plus_minus_pairs(d.roots, 8, 5, 2);
        for (int mask = 0; mask < 32; ++mask) {
          Vec v(8);
          int minus = 0;
          for (int i = 0; i < 5; ++i) {
            v[i] = (mask >> i) & 1 ? -1 : 1;
            minus += (mask >> i) & 1;
          }
          if (minus % 2 != 0) continue;  // even sign count among the first five
          v[5] = -1;
          v[6] = -1;
          v[7] = 1;
          d.roots.push_back(v);
          Vec w(8);
          for (int i = 0; i < 8; ++i) w[i] = -v[i];
          d.roots.push_back(w);
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("no epsilon table for this family");
  }
  return d;
}

inline long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace epsilon_oracle
