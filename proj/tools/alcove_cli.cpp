// Command-line front end: every library query plus the one-shot verification
// suite. Default output is JSON with sorted keys (stable byte-for-byte across
// runs); --table renders the same payload as aligned text.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alcove/alcove.hpp"
#include "alcove/report.hpp"

namespace {

using namespace alcove;

std::string vertex_label(const std::optional<std::size_t>& alpha) {
  return alpha ? "alpha" + std::to_string(*alpha + 1) : "0";
}

std::size_t to_alpha_index(const RootSystem& rs, int one_based) {
  if (one_based < 1 || one_based > static_cast<int>(rs.rank()))
    throw std::domain_error("alpha index must be in 1.." + std::to_string(rs.rank()));
  return static_cast<std::size_t>(one_based - 1);
}

// Comma-separated wall labels, 0 meaning the affine node; "-" is the empty set.
std::vector<int> parse_labels(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "-") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in label list '" + s + "'");
    for (char c : item)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad label '" + item + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

// Comma-separated 1-based simple-root indices; "-" is the empty set.
std::vector<std::size_t> parse_simple_subset(const RootSystem& rs, const std::string& s) {
  std::vector<std::size_t> out;
  for (int label : parse_labels(s)) out.push_back(to_alpha_index(rs, label));
  return out;
}

Json facet_json(const Facet& f) {
  Json j;
  j["vanishing"] = f.vanishing;
  j["barycenter"] = coweight_to_json(f.barycenter);
  return j;
}

Json triple_json(const CohomologyTriple& t) {
  return Json::array({to_ll(t.h0), to_ll(t.h1), to_ll(t.h2)});
}

Report cmd_roots(const std::string& type_str) {
  RootSystem rs(SimpleType::parse(type_str));
  Report rep;
  rep.command = "roots";
  rep.input["type"] = rs.type().label();
  rep.payload["roots"] = rs.all_roots().size();
  rep.payload["positives"] = rs.positives().size();
  rep.payload["highest"] = root_to_json(rs.highest());
  Json marks = Json::array();
  for (const auto& m : rs.marks()) marks.push_back(to_ll(m));
  rep.payload["marks"] = marks;
  return rep;
}

Report cmd_alcove(const std::string& type_str) {
  RootSystem rs(SimpleType::parse(type_str));
  Report rep;
  rep.command = "alcove";
  rep.input["type"] = rs.type().label();
  Json verts = Json::array();
  for (const auto& v : alcove_vertices(rs)) {
    Json jv;
    jv["label"] = vertex_label(v.alpha);
    jv["point"] = coweight_to_json(v.point);
    verts.push_back(jv);
  }
  rep.payload["vertices"] = verts;
  return rep;
}

Report cmd_mu(const std::string& type_str, int alpha) {
  RootSystem rs(SimpleType::parse(type_str));
  std::size_t a = to_alpha_index(rs, alpha);
  Report rep;
  rep.command = "mu";
  rep.input["type"] = rs.type().label();
  rep.input["alpha"] = alpha;
  auto mu = mu_set(rs, a);
  rep.payload["c_alpha"] = to_ll(rs.marks()[a]);
  rep.payload["mu"] = roots_to_json(mu);
  rep.payload["size"] = mu.size();
  return rep;
}

Report cmd_quotients(const std::string& type_str, int alpha) {
  RootSystem rs(SimpleType::parse(type_str));
  std::size_t a = to_alpha_index(rs, alpha);
  QuotientRootSets q = quotient_root_sets(rs, a);
  Report rep;
  rep.command = "quotients";
  rep.input["type"] = rs.type().label();
  rep.input["alpha"] = alpha;
  rep.payload["hyperspecial"] = q.hyperspecial;
  rep.payload["pi_side"] = roots_to_json(q.pi_side);
  rep.payload["h_side"] = roots_to_json(q.h_side);
  rep.payload["pi_size"] = q.pi_side.size();
  rep.payload["h_size"] = q.h_side.size();
  return rep;
}

Report cmd_duality(const std::string& type_str, int alpha) {
  RootSystem rs(SimpleType::parse(type_str));
  Report rep;
  rep.command = "duality";
  rep.input["type"] = rs.type().label();
  std::vector<std::size_t> which;
  if (alpha > 0) {
    which.push_back(to_alpha_index(rs, alpha));
    rep.input["alpha"] = alpha;
  } else {
    for (std::size_t a = 0; a < rs.rank(); ++a) which.push_back(a);
  }
  Json rows = Json::array();
  bool as_predicted = true;
  for (auto a : which) {
    bool dual = check_duality(rs, a);
    bool hyper = rs.marks()[a] == 1;
    if (dual != hyper) as_predicted = false;
    Json row;
    row["alpha"] = a + 1;
    row["c_alpha"] = to_ll(rs.marks()[a]);
    row["duality"] = dual;
    rows.push_back(row);
  }
  rep.payload["results"] = rows;
  rep.verified = as_predicted;
  return rep;
}

Report cmd_census(const std::string& type_str) {
  SimpleType t = SimpleType::parse(type_str);
  RootSystem rs(t);
  Report rep;
  rep.command = "census";
  rep.input["type"] = t.label();
  rep.payload["count"] = hyperspecial_census(t);
  Json verts = Json::array();
  verts.push_back("0");
  for (std::size_t a = 0; a < rs.rank(); ++a)
    if (rs.marks()[a] == 1) verts.push_back("alpha" + std::to_string(a + 1));
  rep.payload["hyperspecial_vertices"] = verts;
  return rep;
}

Report cmd_facets(const std::string& type_str, const std::string& j_spec) {
  RootSystem rs(SimpleType::parse(type_str));
  Facet f = facet_from_subset(rs, parse_labels(j_spec));
  FacetRootData data = phi_f(rs, f);
  Report rep;
  rep.command = "facets";
  rep.input["type"] = rs.type().label();
  rep.input["vanishing"] = j_spec.empty() ? "-" : j_spec;
  rep.payload = facet_json(f);
  rep.payload["phi_f"] = roots_to_json(data.roots);
  rep.payload["phi_f_size"] = data.roots.size();
  Json types = Json::array();
  for (const auto& t : data.quotient_type) types.push_back(t.label());
  rep.payload["quotient_type"] = types;
  return rep;
}

Report cmd_star(const std::string& type_str, const std::string& j_spec) {
  RootSystem rs(SimpleType::parse(type_str));
  Facet f = facet_from_subset(rs, parse_labels(j_spec));
  std::vector<Facet> st = star(rs, f);
  Report rep;
  rep.command = "star";
  rep.input["type"] = rs.type().label();
  rep.input["vanishing"] = j_spec.empty() ? "-" : j_spec;
  Json members = Json::array();
  for (const auto& g : st) members.push_back(facet_json(g));
  rep.payload["size"] = st.size();
  rep.payload["members"] = members;
  return rep;
}

Report cmd_ell(const std::string& type_str, const std::string& i_spec) {
  RootSystem rs(SimpleType::parse(type_str));
  std::vector<std::size_t> I = parse_simple_subset(rs, i_spec);
  Report rep;
  rep.command = "ell";
  rep.input["type"] = rs.type().label();
  rep.input["I"] = i_spec.empty() ? "-" : i_spec;
  rep.payload["ell"] = ell_count(rs, I);
  rep.payload["complement_size"] = rs.rank() - std::set<std::size_t>(I.begin(), I.end()).size();
  return rep;
}

Report cmd_key2(const std::string& type_str) {
  SimpleType t = SimpleType::parse(type_str);
  Key2Report k = key2_report(t);
  Report rep;
  rep.command = "key2";
  rep.input["type"] = t.label();
  rep.payload["attachment"] = "alpha" + std::to_string(k.attachment + 1);
  rep.payload["c_alpha"] = to_ll(k.c_alpha);
  rep.payload["coroot_at_attachment"] = to_ll(k.coroot_at_attachment);
  rep.payload["mu"] = roots_to_json(k.mu);
  Json degree_multiset = Json::object();
  for (const auto& d : k.degrees) {
    std::string key = d.str();
    degree_multiset[key] = degree_multiset.value(key, 0) + 1;
  }
  rep.payload["degrees"] = degree_multiset;
  rep.payload["h_side_size"] = k.h_side.size();
  rep.payload["r0_rank"] = to_ll(k.r0_rank);
  rep.payload["r1_rank"] = to_ll(k.r1_rank);
  VerifyReport vr;
  check_key2(vr, t);
  rep.verified = vr.ok();
  return rep;
}

Report cmd_cohomology(const std::string& type_str, long long genus, long long p) {
  SimpleType t = SimpleType::parse(type_str);
  HypothesisGate gate = hypothesis_gate(genus, p, t);
  Report rep;
  rep.command = "cohomology";
  rep.input["type"] = t.label();
  rep.input["genus"] = genus;
  rep.input["char"] = p;
  Json jg;
  jg["genus_ok"] = gate.genus_ok;
  jg["char_ok"] = gate.char_ok;
  jg["codim_bound"] = to_ll(gate.codim_bound);
  rep.payload["gate"] = jg;
  rep.verified = gate.pass();
  if (gate.pass()) {
    rep.payload["tangent"] = triple_json(stack_tangent_cohomology(genus, t));
    rep.payload["cotangent"] = triple_json(stack_cotangent_cohomology(genus, t));
  }
  return rep;
}

Report cmd_codim(const std::string& type_str, long long genus) {
  SimpleType t = SimpleType::parse(type_str);
  RootSystem rs(t);
  Report rep;
  rep.command = "codim";
  rep.input["type"] = t.label();
  rep.input["genus"] = genus;
  rep.payload["codim_bound"] = to_ll(codim_bound(genus, t));
  Int min_size = -1;
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    Int sz = 0;
    for (const auto& r : rs.positives())
      if (r.coeffs[a] != 0) ++sz;
    if (min_size < 0 || sz < min_size) min_size = sz;
  }
  rep.payload["min_h_side"] = to_ll(min_size);
  return rep;
}

Report cmd_elemtrans(int trunc, int max_degree, long long p) {
  TruncatedRing ring(trunc, p);
  Report rep;
  rep.command = "elemtrans";
  rep.input["trunc"] = trunc;
  rep.input["max_degree"] = max_degree;
  rep.input["char"] = p;
  Json table = Json::array();
  bool dims_ok = true;
  for (const auto& row : hilbert_table(ring, max_degree)) {
    Json jr;
    jr["degree"] = row.degree;
    jr["dimension"] = row.computed;
    jr["closed_form"] = row.closed_form;
    if (static_cast<long long>(row.computed) != row.closed_form) dims_ok = false;
    table.push_back(jr);
  }
  bool gens = check_generators(ring, max_degree);
  bool syz = check_syzygy(ring, max_degree);
  rep.payload["table"] = table;
  rep.payload["generators_ok"] = gens;
  rep.payload["syzygy_ok"] = syz;
  rep.verified = dims_ok && gens && syz;
  return rep;
}

Report cmd_verify_all(int max_rank) {
  VerifyReport vr = verify_all(max_rank);
  Report rep;
  rep.command = "verify-all";
  rep.input["max_rank"] = max_rank;
  rep.payload["checks"] = vr.checks;
  rep.payload["failed"] = vr.failures.size();
  rep.verified = vr.ok();
  Json fails = Json::array();
  for (const auto& f : vr.failures) {
    Json jf;
    jf["check"] = f.check;
    jf["subject"] = f.subject;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    fails.push_back(jf);
  }
  rep.failures = fails;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system, alcove and parahoric combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();
  bool table = false, json_flag = false;
  app.add_flag("--table", table, "render aligned text instead of JSON");
  app.add_flag("--json", json_flag, "emit JSON (the default)");

  std::string type_str, j_spec = "-", i_spec = "-";
  int alpha = 0, trunc = 2, max_degree = 5, max_rank = 8;
  long long genus = 4, charp = 0;

  auto* roots = app.add_subcommand("roots", "root count, highest root, marks");
  roots->add_option("type", type_str, "simple type, e.g. E8")->required();
  auto* alc = app.add_subcommand("alcove", "alcove vertices");
  alc->add_option("type", type_str)->required();
  auto* mu = app.add_subcommand("mu", "positive roots with extremal alpha-coefficient");
  mu->add_option("type", type_str)->required();
  mu->add_option("alpha", alpha, "simple root index (1-based)")->required();
  auto* quot = app.add_subcommand("quotients", "quotient root sets at a simple root");
  quot->add_option("type", type_str)->required();
  quot->add_option("alpha", alpha)->required();
  auto* dual = app.add_subcommand("duality", "pi-side vs negated h-side");
  dual->add_option("type", type_str)->required();
  dual->add_option("alpha", alpha, "simple root index; omit for all");
  auto* census = app.add_subcommand("census", "hyperspecial vertex count");
  census->add_option("type", type_str)->required();
  auto* fac = app.add_subcommand("facets", "facet data and reductive quotient type");
  fac->add_option("type", type_str)->required();
  fac->add_option("vanishing", j_spec, "wall labels, e.g. 0,2 ('-' = open alcove)");
  auto* st = app.add_subcommand("star", "facets whose closure contains the facet");
  st->add_option("type", type_str)->required();
  st->add_option("vanishing", j_spec);
  auto* ell = app.add_subcommand("ell", "length-one elements preserving positivity on I");
  ell->add_option("type", type_str)->required();
  ell->add_option("I", i_spec, "simple root indices, e.g. 1,3 ('-' = empty)");
  auto* key2 = app.add_subcommand("key2", "pushforward report for G2, F4, E8");
  key2->add_option("type", type_str)->required();
  auto* coh = app.add_subcommand("cohomology", "hypothesis gate and cohomology triples");
  coh->add_option("type", type_str)->required();
  coh->add_option("--genus", genus, "curve genus")->required();
  coh->add_option("--char", charp, "field characteristic (0 or prime)");
  auto* codim = app.add_subcommand("codim", "codimension bound for the unstable locus");
  codim->add_option("type", type_str)->required();
  codim->add_option("--genus", genus)->required();
  auto* elem = app.add_subcommand("elemtrans", "graded kernel table and generator checks");
  elem->add_option("--trunc", trunc, "truncation order N");
  elem->add_option("--max-degree", max_degree, "largest graded degree");
  elem->add_option("--char", charp, "field characteristic (0 or prime)");
  auto* verify = app.add_subcommand("verify-all", "run every identity check");
  verify->add_option("--max-rank", max_rank, "largest rank to cover");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  Report rep;
  try {
    if (roots->parsed()) rep = cmd_roots(type_str);
    else if (alc->parsed()) rep = cmd_alcove(type_str);
    else if (mu->parsed()) rep = cmd_mu(type_str, alpha);
    else if (quot->parsed()) rep = cmd_quotients(type_str, alpha);
    else if (dual->parsed()) rep = cmd_duality(type_str, alpha);
    else if (census->parsed()) rep = cmd_census(type_str);
    else if (fac->parsed()) rep = cmd_facets(type_str, j_spec);
    else if (st->parsed()) rep = cmd_star(type_str, j_spec);
    else if (ell->parsed()) rep = cmd_ell(type_str, i_spec);
    else if (key2->parsed()) rep = cmd_key2(type_str);
    else if (coh->parsed()) rep = cmd_cohomology(type_str, genus, charp);
    else if (codim->parsed()) rep = cmd_codim(type_str, genus);
    else if (elem->parsed()) rep = cmd_elemtrans(trunc, max_degree, charp);
    else if (verify->parsed()) {
      rep = cmd_verify_all(max_rank);
      if (!rep.verified.value_or(false)) code = 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return 2;
  }

  if (table)
    std::cout << render_table(rep);
  else
    std::cout << rep.to_json().dump(2) << "\n";
  return code;
}
