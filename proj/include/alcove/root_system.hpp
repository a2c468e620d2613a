#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/numeric.hpp"

namespace alcove {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple Dynkin family plus rank, e.g. E8 or B4. Validated on construction:
//   A: n >= 1, B: n >= 2, C: n >= 2, D: n >= 4, E: n in {6,7,8}, F: n = 4, G: n = 2.
struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int n) : family(f), rank(n) { validate(); }

  void validate() const {
    auto fail = [&](const std::string& range) {
      throw std::invalid_argument("type " + std::string(1, char(family)) +
                                  " requires rank " + range + ", got " + std::to_string(rank));
    };
    switch (family) {
      case Family::A: if (rank < 1) fail(">= 1"); break;
      case Family::B: if (rank < 2) fail(">= 2"); break;
      case Family::C: if (rank < 2) fail(">= 2"); break;
      case Family::D: if (rank < 4) fail(">= 4"); break;
      case Family::E: if (rank < 6 || rank > 8) fail("in {6,7,8}"); break;
      case Family::F: if (rank != 4) fail("= 4"); break;
      case Family::G: if (rank != 2) fail("= 2"); break;
      default: throw std::invalid_argument("unknown family");
    }
  }

  std::string label() const { return std::string(1, char(family)) + std::to_string(rank); }

  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  // Parses "E8", "A3", ... Throws std::invalid_argument on anything else.
  static SimpleType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type string '" + s + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad family '" + std::string(1, f) + "'");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("bad rank in type string '" + s + "'");
    int n = std::stoi(s.substr(1));
    return SimpleType(static_cast<Family>(f), n);
  }

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

// A root written in the simple-root basis. Nonzero coefficients of a genuine
// root all share one sign.
struct Root {
  std::vector<Int> coeffs;

  Root() = default;
  explicit Root(std::vector<Int> c) : coeffs(std::move(c)) {}

  Int height() const {
    Int h = 0;
    for (const auto& c : coeffs) h += c;
    return h;
  }

  bool is_positive() const {
    for (const auto& c : coeffs)
      if (c != 0) return c > 0;
    return false;
  }

  Root operator-() const {
    Root r(coeffs);
    for (auto& c : r.coeffs) c = -c;
    return r;
  }

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }
};

// A point of the coweight space written in the fundamental-coweight basis
// dual to the simple roots, with exact rational coordinates.
struct Coweight {
  std::vector<Rat> coords;

  Coweight() = default;
  explicit Coweight(std::vector<Rat> c) : coords(std::move(c)) {}
  static Coweight zero(std::size_t rank) { return Coweight(std::vector<Rat>(rank, Rat(0))); }
};

struct DiagramEdge {
  std::size_t a, b;  // node ids; simples are 0..rank-1, the affine node is rank
  int bond;          // <a, b^vee> * <b, a^vee>
};

// Extended (affine) Dynkin diagram. The affine node carries -highest_root.
struct ExtendedDiagram {
  std::size_t rank;
  std::vector<DiagramEdge> edges;
  std::vector<std::size_t> attachment;  // simples adjacent to the affine node
  std::size_t affine_node() const { return rank; }
};

namespace detail {

// Cartan matrix in the convention cartan[i][j] = <alpha_i, alpha_j^vee>,
// Bourbaki numbering throughout. Classical families are generated, the
// exceptional ones are literal tables.
inline std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {  // single bonds alpha_i - alpha_{i+1} for i < upto
    for (int i = 0; i + 1 <= upto; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  switch (t.family) {
    case Family::A:
      chain(n - 1);
      break;
    case Family::B:
      chain(n - 2);
      c[n - 2][n - 1] = -2;  // alpha_n is short
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      chain(n - 2);
      c[n - 2][n - 1] = -1;  // alpha_n is long
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      chain(n - 3);
      c[n - 3][n - 2] = c[n - 2][n - 3] = -1;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case Family::E: {
      // Bourbaki: branch node alpha_4, spur alpha_2, chain 1-3-4-5-6[-7[-8]].
      auto bond = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
      bond(1, 3); bond(3, 4); bond(4, 5); bond(5, 6); bond(2, 4);
      if (n >= 7) bond(6, 7);
      if (n == 8) bond(7, 8);
      break;
    }
    case Family::F:
      c[0][1] = c[1][0] = -1;
      c[1][2] = -2;  // alpha_3, alpha_4 short
      c[2][1] = -1;
      c[2][3] = c[3][2] = -1;
      break;
    case Family::G:
      c[0][1] = -1;  // alpha_1 short
      c[1][0] = -3;
      break;
  }
  return c;
}

// Half squared lengths d_i = (alpha_i, alpha_i)/2, normalised so long roots
// have squared length 2.
inline std::vector<Rat> half_norms(const SimpleType& t) {
  const int n = t.rank;
  std::vector<Rat> d(n, Rat(1));
  switch (t.family) {
    case Family::B: d[n - 1] = Rat(1, 2); break;
    case Family::C: for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2); break;
    case Family::F: d[2] = d[3] = Rat(1, 2); break;
    case Family::G: d[0] = Rat(1, 3); break;
    default: break;
  }
  return d;
}

}  // namespace detail

// Immutable bundle of exact root-system data: the full root set generated by
// reflection closure from the simples, the positive system ordered by
// (height, then lexicographic), the highest root and its marks, and the
// normalised invariant form. All queries are pure; instances are safe for
// unrestricted concurrent reads.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t)
      : type_(t), cartan_(detail::cartan_matrix(t)), halves_(detail::half_norms(t)) {
    const std::size_t n = rank();
    form_.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        form_[i][j] = Rat(cartan_[i][j]) * halves_[j];

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> e(n, 0);
      e[i] = 1;
      simples_.push_back(Root(std::move(e)));
    }
    generate();
  }

  const SimpleType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& simples() const { return simples_; }
  const std::vector<Root>& positives() const { return positives_; }
  // Positives in canonical order followed by their negatives in the same order.
  const std::vector<Root>& all_roots() const { return all_; }
  const Root& highest() const { return highest_; }
  // marks()[i] = coefficient of alpha_i in the highest root.
  const std::vector<Int>& marks() const { return highest_.coeffs; }
  const std::vector<std::vector<Rat>>& form() const { return form_; }

  bool contains(const Root& r) const { return index_.count(r.coeffs) != 0; }

  std::size_t index_of(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end())
      throw std::domain_error("not a root of " + type_.label());
    return it->second;
  }

  // Invariant bilinear form (r, s), long roots normalised to (r, r) = 2.
  Rat inner(const Root& r, const Root& s) const {
    Rat acc = 0;
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
      if (r.coeffs[i] == 0) continue;
      Rat row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (s.coeffs[j] != 0) row += form_[i][j] * Rat(s.coeffs[j]);
      acc += Rat(r.coeffs[i]) * row;
    }
    return acc;
  }

  bool is_long(const Root& r) const { return inner(r, r) == 2; }

  // <r, alpha_j^vee>, an integer for any r in the root lattice.
  Int pair_with_simple_coroot(const Root& r, std::size_t j) const {
    Int v = 0;
    for (std::size_t i = 0; i < rank(); ++i) v += r.coeffs[i] * cartan_[i][j];
    return v;
  }

  // Simple reflection s_j applied to an arbitrary lattice vector.
  Root reflect(const Root& r, std::size_t j) const {
    Root out = r;
    out.coeffs[j] -= pair_with_simple_coroot(r, j);
    return out;
  }

 private:
  void generate() {
    std::set<std::vector<Int>> seen;
    std::vector<Root> work = simples_;
    for (const auto& s : simples_) seen.insert(s.coeffs);
    while (!work.empty()) {
      Root r = work.back();
      work.pop_back();
      for (std::size_t j = 0; j < rank(); ++j) {
        Root img = reflect(r, j);
        if (seen.insert(img.coeffs).second) work.push_back(img);
      }
    }
    for (const auto& v : seen) {
      Root r{v};
      bool pos = r.is_positive(), neg = (-r).is_positive();
      if (!pos && !neg)
        throw std::logic_error("mixed-sign vector escaped reflection closure");
      if (pos) positives_.push_back(std::move(r));
    }
    std::sort(positives_.begin(), positives_.end(), [](const Root& a, const Root& b) {
      Int ha = a.height(), hb = b.height();
      if (ha != hb) return ha < hb;
      return a.coeffs < b.coeffs;
    });

    highest_ = positives_.back();
    if (positives_.size() >= 2 &&
        positives_[positives_.size() - 2].height() == highest_.height())
      throw std::logic_error("highest root is not unique");

    all_ = positives_;
    for (const auto& r : positives_) all_.push_back(-r);
    for (std::size_t i = 0; i < all_.size(); ++i) index_.emplace(all_[i].coeffs, i);
  }

  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> halves_;
  std::vector<std::vector<Rat>> form_;
  std::vector<Root> simples_;
  std::vector<Root> positives_;
  std::vector<Root> all_;
  Root highest_;
  std::map<std::vector<Int>, std::size_t> index_;
};

inline RootSystem build_root_system(SimpleType t) { return RootSystem(t); }

// Canonical pairing of a coweight with a root, exact and bilinear. The
// fundamental-coweight basis is dual to the simples, so this is a coordinate
// dot product. r must be a root.
inline Rat pairing(const RootSystem& rs, const Coweight& theta, const Root& r) {
  rs.index_of(r);  // membership gate
  Rat acc = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (r.coeffs[i] != 0) acc += theta.coords[i] * Rat(r.coeffs[i]);
  return acc;
}

// <beta, r^vee> = 2(beta, r)/(r, r). Integral for roots r, beta.
inline Int coroot_eval(const RootSystem& rs, const Root& r, const Root& beta) {
  rs.index_of(r);
  rs.index_of(beta);
  Rat v = Rat(2) * rs.inner(beta, r) / rs.inner(r, r);
  if (!is_integral(v)) throw std::logic_error("coroot pairing not integral");
  return numerator(v);
}

// Affine node alpha_0 = -highest root, joined to every simple it pairs
// nontrivially with. Edge labels are products of the two Cartan pairings.
inline ExtendedDiagram extended_diagram(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  ExtendedDiagram ed;
  ed.rank = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rs.cartan()[i][j] != 0)
        ed.edges.push_back({i, j, rs.cartan()[i][j] * rs.cartan()[j][i]});
  Root a0 = -rs.highest();
  for (std::size_t j = 0; j < n; ++j) {
    Int down = rs.pair_with_simple_coroot(a0, j);
    if (down != 0) {
      Int up = coroot_eval(rs, a0, rs.simples()[j]);
      ed.edges.push_back({j, ed.affine_node(), static_cast<int>(to_ll(down * up))});
      ed.attachment.push_back(j);
    }
  }
  return ed;
}

}  // namespace alcove
