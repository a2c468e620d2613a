#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "alcove/facets.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

// Independent route to the vertex quotient: reflection-closure of the
// extended-diagram generators with alpha deleted (the simples other than
// alpha, plus minus the highest root).
std::set<std::vector<Int>> deletion_subsystem(const RootSystem& rs, std::size_t alpha) {
  std::vector<Root> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (i != alpha) gens.push_back(rs.simples()[i]);
  gens.push_back(-rs.highest());

  std::set<std::vector<Int>> members;
  std::vector<Root> work = gens;
  for (const auto& g : gens) members.insert(g.coeffs);
  while (!work.empty()) {
    Root r = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      // reflection of r in the wall of g
      Rat c = Rat(2) * rs.inner(r, g) / rs.inner(g, g);
      REQUIRE(is_integral(c));
      Int num = numerator(c);
      Root img = r;
      for (std::size_t i = 0; i < rs.rank(); ++i) img.coeffs[i] -= num * g.coeffs[i];
      if (members.insert(img.coeffs).second) work.push_back(img);
    }
  }
  return members;
}

std::vector<int> finite_labels(const RootSystem& rs) {
  std::vector<int> J;
  for (std::size_t i = 1; i <= rs.rank(); ++i) J.push_back(static_cast<int>(i));
  return J;
}

}  // namespace

TEST_CASE("facet construction and barycenters") {
  RootSystem a2(SimpleType::parse("A2"));

  Facet origin = facet_from_subset(a2, finite_labels(a2));  // J = S
  CHECK(origin.barycenter.coords == std::vector<Rat>{0, 0});

  Facet v1 = facet_from_subset(a2, {0, 2});  // all walls but alpha_1
  CHECK(v1.barycenter.coords == std::vector<Rat>{1, 0});

  Facet open_alcove = facet_from_subset(a2, {});  // interior barycenter
  CHECK(open_alcove.barycenter.coords == std::vector<Rat>{Rat(1, 3), Rat(1, 3)});

  RootSystem g2(SimpleType::parse("G2"));
  Facet gv = facet_from_subset(g2, {0, 1});  // vertex theta_{alpha_2}, c = 2
  CHECK(gv.barycenter.coords == std::vector<Rat>{0, Rat(1, 2)});
}

TEST_CASE("facet argument validation") {
  RootSystem a2(SimpleType::parse("A2"));
  CHECK_THROWS_AS(facet_from_subset(a2, {0, 1, 2}), std::domain_error);  // every wall
  CHECK_THROWS_AS(facet_from_subset(a2, {3}), std::domain_error);
  CHECK_THROWS_AS(facet_from_subset(a2, {1, 1}), std::domain_error);
}

TEST_CASE("facet depth functions") {
  for (std::string s : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs(SimpleType::parse(s));

    Facet origin = facet_from_subset(rs, finite_labels(rs));
    ConcaveFunction f0 = facet_concave(rs, origin);
    for (const auto& r : rs.all_roots()) CHECK(f0.at(rs, r) == 0);

    // Vertex facets reproduce the vertex concave functions.
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      std::vector<int> J;
      for (std::size_t l = 0; l <= rs.rank(); ++l)
        if (l != a + 1) J.push_back(static_cast<int>(l));
      ConcaveFunction fv = facet_concave(rs, facet_from_subset(rs, J));
      ConcaveFunction fp = concave_from_point(rs, vertex_point(rs, a));
      CHECK(fv.values == fp.values);
    }

    // The edge from the origin to theta_alpha carries the standard depths.
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      std::vector<int> J;
      for (std::size_t l = 1; l <= rs.rank(); ++l)
        if (l != a + 1) J.push_back(static_cast<int>(l));
      ConcaveFunction fe = facet_concave(rs, facet_from_subset(rs, J));
      CHECK(fe.values == m_std(rs, a).values);
    }

    // Iwahori: the open alcove pairs strictly positively.
    ConcaveFunction fi = facet_concave(rs, facet_from_subset(rs, {}));
    for (const auto& r : rs.positives()) CHECK(fi.at(rs, r) + fi.at(rs, -r) > 0);
  }
}

TEST_CASE("reductive quotient root data") {
  RootSystem a3(SimpleType::parse("A3"));
  FacetRootData at0 = phi_f(a3, facet_from_subset(a3, finite_labels(a3)));
  CHECK(at0.roots.size() == a3.all_roots().size());
  CHECK(at0.quotient_type == std::vector<SimpleType>{a3.type()});

  FacetRootData open_alcove = phi_f(a3, facet_from_subset(a3, {}));
  CHECK(open_alcove.roots.empty());
  CHECK(open_alcove.quotient_type.empty());

  // Hyperspecial vertex of A_n keeps the full count (and the type).
  FacetRootData v1 = phi_f(a3, facet_from_subset(a3, {0, 2, 3}));
  CHECK(v1.roots.size() == a3.all_roots().size());
  CHECK(v1.quotient_type == std::vector<SimpleType>{a3.type()});

  // B2 at the mark-2 vertex drops to A1 x A1.
  RootSystem b2(SimpleType::parse("B2"));
  FacetRootData vb = phi_f(b2, facet_from_subset(b2, {0, 1}));
  CHECK(vb.roots.size() == 4);
  CHECK(vb.quotient_type ==
        std::vector<SimpleType>{SimpleType(Family::A, 1), SimpleType(Family::A, 1)});
}

TEST_CASE("vertex quotients match extended-diagram deletion") {
  for (std::string s : {"A1", "A3", "B2", "B4", "C3", "D4", "F4", "G2"}) {
    INFO(s);
    RootSystem rs(SimpleType::parse(s));
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      std::vector<int> J;
      for (std::size_t l = 0; l <= rs.rank(); ++l)
        if (l != a + 1) J.push_back(static_cast<int>(l));
      FacetRootData data = phi_f(rs, facet_from_subset(rs, J));
      std::set<std::vector<Int>> via_concave;
      for (const auto& r : data.roots) via_concave.insert(r.coeffs);
      CHECK(via_concave == deletion_subsystem(rs, a));
    }
  }
}

TEST_CASE("stars are subset lattices") {
  for (std::string s : {"A1", "A2", "B2", "A3", "G2"}) {
    RootSystem rs(SimpleType::parse(s));
    const std::size_t n = rs.rank();

    Facet open_alcove = facet_from_subset(rs, {});
    CHECK(star(rs, open_alcove).size() == 1);

    for (std::size_t a = 0; a < n; ++a) {
      std::vector<int> J;
      for (std::size_t l = 0; l <= n; ++l)
        if (l != a + 1) J.push_back(static_cast<int>(l));
      CHECK(star(rs, facet_from_subset(rs, J)).size() == (1ul << n));
    }

    Facet origin = facet_from_subset(rs, finite_labels(rs));
    std::vector<Facet> st = star(rs, origin);
    REQUIRE(st.size() == (1ul << n));

    // First member is the facet itself, last is the open alcove; the listing
    // refines reverse inclusion.
    CHECK(st.front().vanishing == origin.vanishing);
    CHECK(st.back().vanishing.empty());
    for (std::size_t k = 1; k < st.size(); ++k)
      CHECK(st[k - 1].vanishing.size() >= st[k].vanishing.size());

    // The edge toward theta_alpha shows up with vanishing set S - alpha.
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<int> edge;
      for (std::size_t l = 1; l <= n; ++l)
        if (l != a + 1) edge.push_back(static_cast<int>(l));
      bool found = false;
      for (const auto& g : st)
        if (g.vanishing == edge) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("star bijection and monotone depths, exhaustively") {
  VerifyReport rep;
  for (SimpleType t : types_up_to(4)) {
    RootSystem rs(t);
    check_facets(rep, rs);
  }
  for (const auto& f : rep.failures)
    FAIL_CHECK(f.check << " " << f.subject << ": " << f.got);
  CHECK(rep.ok());
}
