#pragma once

#include <algorithm>
#include <vector>

#include "alcove/parahoric.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

struct CohomologyTriple {
  Int h0, h1, h2;
  friend bool operator==(const CohomologyTriple& a, const CohomologyTriple& b) {
    return a.h0 == b.h0 && a.h1 == b.h1 && a.h2 == b.h2;
  }
};

// Numeric core of the P^1 pushforward computation for G2, F4, E8: attachment
// data, mu(alpha), the line-bundle degrees over the h-side roots, and the
// resulting R^0/R^1 ranks.
struct Key2Report {
  std::size_t attachment;
  Int c_alpha;
  Int coroot_at_attachment;   // <alpha, alpha_max^vee>
  std::vector<Root> mu;
  std::vector<Root> h_side;   // canonical order
  std::vector<Int> degrees;   // aligned with h_side
  Int r0_rank, r1_rank;
};

enum class DemazureFlag { nonexceptional, exceptional, unknown };

struct HypothesisGate {
  bool genus_ok;
  bool char_ok;
  Int codim_bound;
  bool pass() const { return genus_ok && char_ok; }
};

namespace detail {

inline std::vector<std::size_t> normalize_subset(const RootSystem& rs,
                                                 std::vector<std::size_t> subset) {
  for (auto i : subset)
    if (i >= rs.rank()) throw std::domain_error("subset contains a non-simple index");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

}  // namespace detail

// Number of simple reflections s_gamma sending every beta in I to a positive
// root, found by applying each reflection directly. (Always |S - I|; the
// tests check that, the implementation does not assume it.)
inline std::size_t ell_count(const RootSystem& rs, std::vector<std::size_t> I) {
  I = detail::normalize_subset(rs, std::move(I));
  std::size_t count = 0;
  for (std::size_t gamma = 0; gamma < rs.rank(); ++gamma) {
    bool keeps_positive = true;
    for (auto beta : I) {
      if (!rs.reflect(rs.simples()[beta], gamma).is_positive()) {
        keeps_positive = false;
        break;
      }
    }
    if (keeps_positive) ++count;
  }
  return count;
}

// Whether the flag fibration attached to the parabolic P_I falls into one of
// the three exceptional pushforward cases. Equal root lengths rule them out,
// F4 and E8 escape them, and the unique G2 case sits at the maximal parabolic
// of the simple root not joined to the affine node. The short-root families
// hide their exceptional cases among unspecified non-maximal parabolics, so
// those report unknown.
inline DemazureFlag demazure_flag(const RootSystem& rs, std::vector<std::size_t> I) {
  I = detail::normalize_subset(rs, std::move(I));
  const SimpleType& t = rs.type();
  if (t.simply_laced()) return DemazureFlag::nonexceptional;
  if (t.family == Family::F || (t.family == Family::E && t.rank == 8))
    return DemazureFlag::nonexceptional;
  if (t.family == Family::G) {
    if (I.size() != 1) return DemazureFlag::nonexceptional;  // only a maximal parabolic can be exceptional
    std::size_t removed = (I[0] == 0) ? 1 : 0;
    std::vector<std::size_t> attach = extended_diagram(rs).attachment;
    bool removed_is_attachment =
        std::find(attach.begin(), attach.end(), removed) != attach.end();
    return removed_is_attachment ? DemazureFlag::nonexceptional : DemazureFlag::exceptional;
  }
  // B or C: maximal parabolics (and P_S = G) are safe, the rest unresolved.
  if (I.size() + 1 >= rs.rank()) return DemazureFlag::nonexceptional;
  return DemazureFlag::unknown;
}

// Dimensions of the cohomology of O(d) on the projective line.
inline Int p1_h0(const Int& d) { return d + 1 > 0 ? d + 1 : Int(0); }
inline Int p1_h1(const Int& d) { return -d - 1 > 0 ? -d - 1 : Int(0); }

inline Key2Report key2_report(SimpleType t) {
  bool eligible = t.family == Family::G || t.family == Family::F ||
                  (t.family == Family::E && t.rank == 8);
  if (!eligible) throw std::domain_error("report only defined for G2, F4, E8");
  RootSystem rs(t);
  ExtendedDiagram ed = extended_diagram(rs);
  if (ed.attachment.size() != 1)
    throw std::logic_error("affine node attaches to more than one simple root");
  Key2Report rep;
  rep.attachment = ed.attachment[0];
  rep.c_alpha = rs.marks()[rep.attachment];
  rep.coroot_at_attachment = coroot_eval(rs, rs.highest(), rs.simples()[rep.attachment]);
  rep.mu = mu_set(rs, rep.attachment);
  rep.h_side = quotient_root_sets(rs, rep.attachment).h_side;
  rep.r0_rank = rep.r1_rank = 0;
  for (const auto& beta : rep.h_side) {
    Int d = coroot_eval(rs, rs.highest(), beta);
    rep.degrees.push_back(d);
    rep.r0_rank += p1_h0(d);
    rep.r1_rank += p1_h1(d);
  }
  return rep;
}

// Tangent and structure-sheaf cohomology of a smooth projective curve of
// genus g >= 2: (0, 3g-3, 0) and (1, g, 0).
inline std::pair<CohomologyTriple, CohomologyTriple> curve_cohomology(long long g) {
  if (g < 2) throw std::domain_error("genus must be at least 2");
  return {CohomologyTriple{0, Int(g) * 3 - 3, 0}, CohomologyTriple{1, Int(g), 0}};
}

// Genus bound of the deformation theorems: 5 for A1, 4 otherwise.
inline bool genus_gate(long long g, SimpleType t) {
  long long bound = (t.family == Family::A && t.rank == 1) ? 5 : 4;
  return g >= bound;
}

inline void require_genus_gate(long long g, SimpleType t) {
  if (!genus_gate(g, t)) {
    long long bound = (t.family == Family::A && t.rank == 1) ? 5 : 4;
    throw HypothesisError("genus bound violated: type " + t.label() + " requires g >= " +
                          std::to_string(bound) + ", got " + std::to_string(g));
  }
}

inline CohomologyTriple stack_tangent_cohomology(long long g, SimpleType t) {
  require_genus_gate(g, t);
  return CohomologyTriple{0, Int(g) * 3 - 3, 0};
}

// Cotangent cohomology shifts the curve's structure cohomology one degree up.
inline CohomologyTriple stack_cotangent_cohomology(long long g, SimpleType t) {
  require_genus_gate(g, t);
  return CohomologyTriple{0, 1, Int(g)};
}

// (g - 1) times the smallest h-side size over maximal parabolics: the lower
// bound for the codimension of the unstable locus.
inline Int codim_bound(long long g, SimpleType t) {
  if (g < 1) throw std::domain_error("genus must be at least 1");
  RootSystem rs(t);
  Int min_size = -1;
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    Int sz = 0;
    for (const auto& r : rs.positives())
      if (r.coeffs[a] != 0) ++sz;
    if (min_size < 0 || sz < min_size) min_size = sz;
  }
  return Int(g - 1) * min_size;
}

// Order of the centre of the simply-connected group; standard structure
// theory, equal to the determinant of the Cartan matrix.
inline Int centre_order(SimpleType t) {
  switch (t.family) {
    case Family::A: return Int(t.rank + 1);
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
    case Family::F: return 1;
    case Family::G: return 1;
  }
  throw std::invalid_argument("unknown family");
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Genus and characteristic hypotheses of the deformation theorems: the
// characteristic must avoid the centre order and every mark of the highest
// root. p = 0 always passes the characteristic test.
inline HypothesisGate hypothesis_gate(long long g, long long p, SimpleType t) {
  if (p != 0 && !is_prime(p))
    throw std::domain_error("characteristic must be 0 or prime, got " + std::to_string(p));
  HypothesisGate gate;
  gate.genus_ok = genus_gate(g, t);
  gate.char_ok = true;
  if (p != 0) {
    if (centre_order(t) % p == 0) gate.char_ok = false;
    RootSystem rs(t);
    for (const auto& m : rs.marks())
      if (m % p == 0) gate.char_ok = false;
  }
  gate.codim_bound = codim_bound(g, t);
  return gate;
}

}  // namespace alcove
