#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/cohomology.hpp"
#include "alcove/facets.hpp"
#include "alcove/graded_kernel.hpp"
#include "alcove/parahoric.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

struct CheckFailure {
  std::string check;     // section name, e.g. "census"
  std::string subject;   // e.g. "E8 alpha=3"
  std::string expected;
  std::string got;
};

struct VerifyReport {
  long long checks = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& check, const std::string& subject,
              const std::string& expected, const std::string& got) {
    ++checks;
    if (!cond) failures.push_back({check, subject, expected, got});
  }
};

// Every simple type of rank <= max_rank, in label order (A1, A2, ..., G2).
inline std::vector<SimpleType> types_up_to(int max_rank) {
  if (max_rank < 1) throw std::domain_error("max rank must be >= 1");
  std::vector<SimpleType> out;
  int top = std::min(max_rank, 8);
  for (int n = 1; n <= top; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= top; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= top; ++n) out.emplace_back(Family::C, n);
  for (int n = 4; n <= top; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= top; ++n) out.emplace_back(Family::E, n);
  if (top >= 4) out.emplace_back(Family::F, 4);
  if (top >= 2) out.emplace_back(Family::G, 2);
  std::sort(out.begin(), out.end(),
            [](const SimpleType& a, const SimpleType& b) { return a.label() < b.label(); });
  return out;
}

// The classical hyperspecial counts per family.
inline long long expected_census(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : (t.rank == 7 ? 2 : 1);
    case Family::F: return 1;
    case Family::G: return 1;
  }
  throw std::invalid_argument("unknown family");
}

inline void check_census(VerifyReport& rep, SimpleType t, long long expected) {
  long long got = hyperspecial_census(t);
  rep.expect(got == expected, "census", t.label(), std::to_string(expected),
             std::to_string(got));
}

// Hyperspecial vertices and only they satisfy the pi-side / h-side duality.
inline void check_duality(VerifyReport& rep, const RootSystem& rs) {
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    bool hyper = rs.marks()[a] == 1;
    bool dual = check_duality(rs, a);
    rep.expect(dual == hyper, "duality", rs.type().label() + " alpha=" + std::to_string(a + 1),
               hyper ? "sets negate to each other" : "duality fails",
               dual ? "sets negate to each other" : "duality fails");
  }
}

namespace verifydetail {

inline std::set<std::vector<Int>> key_set(const std::vector<Root>& v) {
  std::set<std::vector<Int>> s;
  for (const auto& r : v) s.insert(r.coeffs);
  return s;
}

}  // namespace verifydetail

// The value trichotomy of the vertex concave function f_{theta_alpha}:
// -1 exactly on mu(alpha), +1 exactly on the negatives involving alpha, 0 on
// Phi_{S-alpha} (exactly so when c_alpha = 1), nothing outside {-1, 0, 1},
// and the strict drop below the standard-parahoric depth happens exactly on
// mu(alpha).
inline void check_trichotomy(VerifyReport& rep, const RootSystem& rs) {
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    ConcaveFunction f = concave_from_point(rs, vertex_point(rs, a));
    ConcaveFunction m = m_std(rs, a);
    auto mu = verifydetail::key_set(mu_set(rs, a));
    std::string subject = rs.type().label() + " alpha=" + std::to_string(a + 1);
    std::string problem;
    bool hyper = rs.marks()[a] == 1;
    for (std::size_t i = 0; i < rs.all_roots().size() && problem.empty(); ++i) {
      const Root& r = rs.all_roots()[i];
      const Int& v = f.at_index(i);
      bool in_mu = mu.count(r.coeffs) != 0;
      bool avoids = r.coeffs[a] == 0;
      bool neg_involving = !r.is_positive() && !avoids;
      if (v < -1 || v > 1) problem = "value outside {-1,0,1}";
      else if ((v == -1) != in_mu) problem = "-1 locus differs from mu(alpha)";
      else if ((v == 1) != neg_involving) problem = "+1 locus differs from negatives involving alpha";
      else if (avoids && v != 0) problem = "nonzero on Phi_{S-alpha}";
      else if (hyper && v == 0 && !avoids) problem = "extra zero outside Phi_{S-alpha}";
      else if ((f.at_index(i) < m.at_index(i)) != in_mu) problem = "strict-drop locus differs from mu(alpha)";
    }
    rep.expect(problem.empty(), "trichotomy", subject, "trichotomy holds", problem);
  }
}

// Brute-force reflection count against the size formula, plus the maximal
// parabolic case on its own.
inline void check_ell_counts(VerifyReport& rep, const RootSystem& rs, bool exhaustive) {
  const std::size_t n = rs.rank();
  if (exhaustive) {
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::vector<std::size_t> I;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) I.push_back(i);
      std::size_t got = ell_count(rs, I);
      std::size_t want = n - I.size();
      rep.expect(got == want, "ell",
                 rs.type().label() + " |I|=" + std::to_string(I.size()) + " mask=" +
                     std::to_string(mask),
                 std::to_string(want), std::to_string(got));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n; ++i)
      if (i != a) I.push_back(i);
    std::size_t got = ell_count(rs, I);
    rep.expect(got == 1, "ell-maximal", rs.type().label() + " alpha=" + std::to_string(a + 1),
               "1", std::to_string(got));
  }
}

// The exceptional-group pushforward data: attachment mark 2, coroot value 1,
// mu a singleton at the highest root, degree multiset all -1 with a single
// -2 at minus the highest root, ranks (0, 1).
inline void check_key2(VerifyReport& rep, SimpleType t) {
  Key2Report k = key2_report(t);
  RootSystem rs(t);
  std::string subject = t.label();
  std::string problem;
  if (k.c_alpha != 2) problem = "attachment mark is not 2";
  else if (k.coroot_at_attachment != 1) problem = "coroot value at attachment is not 1";
  else if (k.mu.size() != 1 || k.mu[0] != rs.highest()) problem = "mu(alpha) is not {highest}";
  else if (k.r0_rank != 0 || k.r1_rank != 1) problem = "pushforward ranks differ from (0,1)";
  else {
    std::size_t minus_twos = 0;
    for (std::size_t i = 0; i < k.degrees.size(); ++i) {
      if (k.degrees[i] == -2) {
        ++minus_twos;
        if (k.h_side[i] != -rs.highest()) problem = "-2 sits away from -highest";
      } else if (k.degrees[i] != -1) {
        problem = "degree outside {-1,-2}";
      }
    }
    if (problem.empty() && minus_twos != 1) problem = "-2 multiplicity differs from 1";
  }
  rep.expect(problem.empty(), "key2", subject, "pushforward data as computed from the tables",
             problem);
}

// Star/subset bijection and depth monotonicity over every facet of the
// alcove, plus the two degenerate reductive quotients.
inline void check_facets(VerifyReport& rep, const RootSystem& rs) {
  const std::size_t n = rs.rank();
  const std::string label = rs.type().label();
  for (unsigned long mask = 0; mask + 1 < (1ul << (n + 1)); ++mask) {
    std::vector<int> J;
    for (std::size_t i = 0; i <= n; ++i)
      if (mask & (1ul << i)) J.push_back(static_cast<int>(i));
    Facet f = facet_from_subset(rs, J);
    std::vector<Facet> st = star(rs, f);
    std::string subject = label + " J=" + std::to_string(mask);

    std::set<std::vector<int>> seen;
    bool subsets_ok = true;
    for (const auto& g : st) {
      seen.insert(g.vanishing);
      for (int l : g.vanishing)
        if (!std::binary_search(f.vanishing.begin(), f.vanishing.end(), l)) subsets_ok = false;
    }
    rep.expect(subsets_ok && seen.size() == st.size() &&
                   st.size() == (1ul << f.vanishing.size()),
               "facet-star", subject, "bijection with subsets of J",
               "star size " + std::to_string(st.size()));

    ConcaveFunction ff = facet_concave(rs, f);
    bool mono = true;
    for (const auto& g : st) {
      ConcaveFunction fg = facet_concave(rs, g);
      for (std::size_t i = 0; i < rs.all_roots().size(); ++i)
        if (ff.at_index(i) > fg.at_index(i)) mono = false;
    }
    rep.expect(mono, "facet-depth", subject, "f_F <= f_F' over the star", "violated");
  }

  std::vector<int> all_finite;
  for (std::size_t i = 1; i <= n; ++i) all_finite.push_back(static_cast<int>(i));
  FacetRootData at_origin = phi_f(rs, facet_from_subset(rs, all_finite));
  rep.expect(at_origin.roots.size() == rs.all_roots().size() &&
                 at_origin.quotient_type == std::vector<SimpleType>{rs.type()},
             "facet-quotient", label + " vertex 0", "full root system",
             std::to_string(at_origin.roots.size()) + " roots");
  FacetRootData open_alcove = phi_f(rs, facet_from_subset(rs, {}));
  rep.expect(open_alcove.roots.empty() && open_alcove.quotient_type.empty(), "facet-quotient",
             label + " open alcove", "empty", std::to_string(open_alcove.roots.size()) + " roots");
}

// Kernel dimensions, generation and the unique relation across the
// truncation/characteristic grid.
inline void check_graded_kernel(VerifyReport& rep, int max_trunc, int max_degree) {
  for (long long ch : {0LL, 2LL, 3LL, 5LL}) {
    for (int N = 1; N <= max_trunc; ++N) {
      TruncatedRing ring(N, ch);
      std::string subject = "N=" + std::to_string(N) + " char=" + std::to_string(ch);
      bool dims_ok = true;
      for (const auto& row : hilbert_table(ring, max_degree))
        if (static_cast<long long>(row.computed) != row.closed_form) dims_ok = false;
      rep.expect(dims_ok, "kernel-dimension", subject, "2N(d+1)-(d+2)",
                 dims_ok ? "match" : "mismatch");
      rep.expect(check_generators(ring, max_degree), "kernel-generators", subject,
                 "E0, E1, E2 generate", "span too small");
      rep.expect(check_syzygy(ring, max_degree), "kernel-syzygy", subject,
                 "single relation (mod truncation torsion)", "extra syzygies");
    }
  }
}

// The one-shot verification suite behind `verify-all`.
inline VerifyReport verify_all(int max_rank) {
  VerifyReport rep;
  for (SimpleType t : types_up_to(max_rank)) {
    RootSystem rs(t);
    check_census(rep, t, expected_census(t));
    check_duality(rep, rs);
    check_trichotomy(rep, rs);
    check_ell_counts(rep, rs, t.rank <= 6);
    if (t.rank <= 4) check_facets(rep, rs);
    bool exceptional_three = t.family == Family::G || t.family == Family::F ||
                             (t.family == Family::E && t.rank == 8);
    if (exceptional_three) check_key2(rep, t);
  }
  check_graded_kernel(rep, 3, 5);
  return rep;
}

}  // namespace alcove
