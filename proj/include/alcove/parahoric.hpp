#pragma once

#include <optional>
#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

// Integer-valued function on the full root set, stored in all_roots() order.
// Encodes the root-group depths of a bounded subgroup; the pair condition
// f(r) + f(-r) >= 0 holds for every function produced here.
struct ConcaveFunction {
  std::vector<Int> values;

  const Int& at_index(std::size_t i) const { return values[i]; }
  const Int& at(const RootSystem& rs, const Root& r) const { return values[rs.index_of(r)]; }

  bool pairwise_concave(const RootSystem& rs) const {
    for (const auto& r : rs.positives())
      if (at(rs, r) + at(rs, -r) < 0) return false;
    return true;
  }
};

// Vertex of the fundamental alcove: the origin (alpha = nullopt) or
// theta_alpha = alpha^* / c_alpha.
struct AlcoveVertex {
  std::optional<std::size_t> alpha;
  Coweight point;
};

struct QuotientRootSets {
  std::size_t alpha;
  std::vector<Root> pi_side;  // subset of the positives
  std::vector<Root> h_side;   // subset of the negatives
  bool hyperspecial;          // c_alpha == 1
};

inline void require_simple_index(const RootSystem& rs, std::size_t alpha) {
  if (alpha >= rs.rank())
    throw std::domain_error("simple-root index out of range for " + rs.type().label());
}

// theta_alpha: the fundamental coweight of alpha divided by its mark.
inline Coweight vertex_point(const RootSystem& rs, std::size_t alpha) {
  require_simple_index(rs, alpha);
  Coweight c = Coweight::zero(rs.rank());
  c.coords[alpha] = Rat(1) / Rat(rs.marks()[alpha]);
  return c;
}

// The rank+1 alcove vertices: the origin followed by theta_alpha for each
// simple root, in simple-root order.
inline std::vector<AlcoveVertex> alcove_vertices(const RootSystem& rs) {
  std::vector<AlcoveVertex> out;
  out.push_back({std::nullopt, Coweight::zero(rs.rank())});
  for (std::size_t a = 0; a < rs.rank(); ++a) out.push_back({a, vertex_point(rs, a)});
  return out;
}

// f(r) = -floor((theta, r)) over the whole root set. theta = 0 recovers the
// identically-zero function of the maximal bounded subgroup.
inline ConcaveFunction concave_from_point(const RootSystem& rs, const Coweight& theta) {
  ConcaveFunction f;
  f.values.reserve(rs.all_roots().size());
  for (const auto& r : rs.all_roots()) f.values.push_back(-rat_floor(pairing(rs, theta, r)));
  return f;
}

// Phi_{S - alpha}: roots not involving alpha.
inline std::vector<Root> roots_avoiding(const RootSystem& rs, std::size_t alpha) {
  require_simple_index(rs, alpha);
  std::vector<Root> out;
  for (const auto& r : rs.all_roots())
    if (r.coeffs[alpha] == 0) out.push_back(r);
  return out;
}

// Depth function of the standard parahoric at alpha: 1 on the negatives
// involving alpha, 0 on the positives and on Phi_{S - alpha}.
inline ConcaveFunction m_std(const RootSystem& rs, std::size_t alpha) {
  require_simple_index(rs, alpha);
  ConcaveFunction f;
  f.values.reserve(rs.all_roots().size());
  for (const auto& r : rs.all_roots())
    f.values.push_back(Int(!r.is_positive() && r.coeffs[alpha] != 0 ? 1 : 0));
  return f;
}

// mu(alpha): positive roots whose alpha-coefficient attains the mark c_alpha.
inline std::vector<Root> mu_set(const RootSystem& rs, std::size_t alpha) {
  require_simple_index(rs, alpha);
  std::vector<Root> out;
  for (const auto& r : rs.positives())
    if (r.coeffs[alpha] == rs.marks()[alpha]) out.push_back(r);
  return out;
}

// Root sets of the two quotients sitting over the standard parahoric at
// alpha: mu(alpha) on the theta_alpha leg, Phi^- minus Phi_{S - alpha} on
// the hyperspecial leg.
inline QuotientRootSets quotient_root_sets(const RootSystem& rs, std::size_t alpha) {
  require_simple_index(rs, alpha);
  QuotientRootSets q;
  q.alpha = alpha;
  q.pi_side = mu_set(rs, alpha);
  for (const auto& r : rs.all_roots())
    if (!r.is_positive() && r.coeffs[alpha] != 0) q.h_side.push_back(r);
  q.hyperspecial = rs.marks()[alpha] == 1;
  return q;
}

// True iff the pi-side set equals the negated h-side set. Guaranteed when
// c_alpha = 1; fails for every alpha with c_alpha >= 2 since alpha itself
// then lies in -h_side but not in mu(alpha).
inline bool check_duality(const RootSystem& rs, std::size_t alpha) {
  QuotientRootSets q = quotient_root_sets(rs, alpha);
  std::set<std::vector<Int>> pi, neg_h;
  for (const auto& r : q.pi_side) pi.insert(r.coeffs);
  for (const auto& r : q.h_side) neg_h.insert((-r).coeffs);
  return pi == neg_h;
}

// Number of hyperspecial vertices among {0} union {theta_alpha}: the origin
// always qualifies, theta_alpha exactly when c_alpha = 1.
inline int hyperspecial_census(SimpleType t) {
  RootSystem rs(t);
  int count = 1;
  for (const auto& m : rs.marks())
    if (m == 1) ++count;
  return count;
}

}  // namespace alcove
