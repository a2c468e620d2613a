#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "alcove/parahoric.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

// A facet of the closed fundamental alcove, named by the set of affine
// simple roots whose walls contain it. Wall labels: 0 is the affine wall,
// 1..rank are the finite simple walls. The barycenter averages the alcove
// vertices not cut out by those walls and is the canonical interior point.
struct Facet {
  std::vector<int> vanishing;  // sorted, no duplicates, size <= rank
  Coweight barycenter;
};

// Root data of the reductive quotient at a facet: the roots where the depth
// pair sum vanishes, plus their Dynkin classification (possibly several
// components, possibly none).
struct FacetRootData {
  std::vector<Root> roots;
  std::vector<SimpleType> quotient_type;
};

inline Facet facet_from_subset(const RootSystem& rs, std::vector<int> labels) {
  const std::size_t n = rs.rank();
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] > static_cast<int>(n))
      throw std::domain_error("wall label out of range");
    if (i > 0 && labels[i] == labels[i - 1])
      throw std::domain_error("duplicate wall label");
  }
  if (labels.size() > n)
    throw std::domain_error("all walls selected: the facet would be empty");

  // Vertex opposite wall 0 is the origin; opposite wall i it is theta_{alpha_i}.
  std::vector<Rat> sum(n, Rat(0));
  long kept = 0;
  for (int label = 0; label <= static_cast<int>(n); ++label) {
    if (std::binary_search(labels.begin(), labels.end(), label)) continue;
    ++kept;
    if (label > 0) {
      std::size_t a = static_cast<std::size_t>(label - 1);
      sum[a] += Rat(1) / Rat(rs.marks()[a]);
    }
  }
  Coweight b(std::move(sum));
  for (auto& c : b.coords) c /= kept;
  return Facet{std::move(labels), std::move(b)};
}

// Depth function of the facet, evaluated at its barycenter. For a vertex
// facet this coincides with concave_from_point at that vertex; the facet
// {1..rank} \ {i} together with 0 removed gives back m_std at alpha_i.
inline ConcaveFunction facet_concave(const RootSystem& rs, const Facet& f) {
  return concave_from_point(rs, f.barycenter);
}

namespace detail {

inline bool cartan_isomorphic(const std::vector<std::vector<Int>>& m,
                              const std::vector<std::vector<int>>& target) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i)
      for (std::size_t j = 0; ok && j < k; ++j)
        if (m[perm[i]][perm[j]] != target[i][j]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Classify one connected Cartan matrix. The ambient family breaks the one
// genuine tie, B2 vs C2 (isomorphic diagrams with swapped numbering);
// otherwise candidates are tried in family order, so a stray rank-2 double
// bond reads as B2.
inline SimpleType classify_component(const std::vector<std::vector<Int>>& m, Family ambient) {
  const int k = static_cast<int>(m.size());
  std::vector<Family> order{ambient, Family::A, Family::B, Family::C,
                            Family::D, Family::E, Family::F, Family::G};
  for (Family fam : order) {
    SimpleType cand(Family::A, 1);
    try {
      cand = SimpleType(fam, k);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (cartan_isomorphic(m, cartan_matrix(cand))) return cand;
  }
  throw std::logic_error("component matches no simple Cartan matrix");
}

}  // namespace detail

// Dynkin classification of a closed subsystem given by an explicit root list
// (closed under negation). Selects the indecomposable positives as a simple
// system, splits into components, and matches Cartan matrices by brute force.
inline std::vector<SimpleType> classify_subsystem(const RootSystem& rs,
                                                  const std::vector<Root>& subsystem) {
  std::set<std::vector<Int>> members;
  std::vector<Root> pos;
  for (const auto& r : subsystem) members.insert(r.coeffs);
  for (const auto& r : subsystem)
    if (r.is_positive()) pos.push_back(r);

  // Simple system: positives not expressible as a sum of two positives.
  std::vector<Root> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& s : pos) {
      if (s == r) continue;
      Root t = r;
      for (std::size_t i = 0; i < t.coeffs.size(); ++i) t.coeffs[i] -= s.coeffs[i];
      if (t.is_positive() && members.count(t.coeffs)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }

  const std::size_t k = simple.size();
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = coroot_eval(rs, simple[j], simple[i]);  // <simple_i, simple_j^vee>

  // Connected components of the sub-diagram.
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t seed = 0; seed < k; ++seed) {
    if (comp[seed] >= 0) continue;
    std::vector<std::size_t> stack{seed};
    comp[seed] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < k; ++w)
        if (comp[w] < 0 && m[v][w] != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  std::vector<SimpleType> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (comp[i] == c) idx.push_back(i);
    std::vector<std::vector<Int>> sub(idx.size(), std::vector<Int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = m[idx[i]][idx[j]];
    out.push_back(detail::classify_component(sub, rs.type().family));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Roots r with f_F(r) + f_F(-r) = 0, i.e. integral barycenter pairing, plus
// the type of the subsystem they form.
inline FacetRootData phi_f(const RootSystem& rs, const Facet& f) {
  ConcaveFunction fc = facet_concave(rs, f);
  FacetRootData data;
  for (const auto& r : rs.all_roots())
    if (fc.at(rs, r) + fc.at(rs, -r) == 0) data.roots.push_back(r);
  data.quotient_type = classify_subsystem(rs, data.roots);
  return data;
}

// The star of F: every facet whose closure contains F, i.e. every vanishing
// set J' contained in J. Ordered by reverse inclusion, linearised as
// (|J'| descending, then label sequence lexicographic). F itself comes first.
inline std::vector<Facet> star(const RootSystem& rs, const Facet& f) {
  const std::size_t k = f.vanishing.size();
  std::vector<std::vector<int>> subsets;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) labels.push_back(f.vanishing[i]);
    subsets.push_back(std::move(labels));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Facet> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.push_back(facet_from_subset(rs, std::move(s)));
  return out;
}

}  // namespace alcove
