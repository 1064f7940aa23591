#include "garside/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace garside {

Json to_json(const PermutationBraid& s) { return s.images(); }

PermutationBraid permutation_from_json(const Json& j) {
  return PermutationBraid::from_images(j.get<std::vector<int>>());
}

Json to_json(const NormalForm& x) {
  Json factors = Json::array();
  for (const auto& f : x.factors()) factors.push_back(to_json(f));
  return {{"n", x.strands()}, {"inf", x.inf()}, {"sup", x.sup()}, {"factors", factors}, {"key", to_string(x)}};
}

NormalForm normal_form_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int p = j.at("inf").get<int>();
  std::vector<PermutationBraid> factors;
  for (const auto& f : j.at("factors")) factors.push_back(permutation_from_json(f));
  for (const auto& f : factors) {
    if (f.strands() != n) throw std::invalid_argument("factor on the wrong strand count");
  }
  const NormalForm x = NormalForm::from_factors(n, p, factors);
  if (x.factors() != factors || x.inf() != p) {
    throw std::invalid_argument("recorded factors are not in left normal form");
  }
  if (j.contains("sup") && j.at("sup").get<int>() != x.sup()) {
    throw std::invalid_argument("recorded sup disagrees with the factors");
  }
  if (j.contains("key") && j.at("key").get<std::string>() != to_string(x)) {
    throw std::invalid_argument("recorded key disagrees with the factors");
  }
  return x;
}

Json to_json(const RoundCurve& c) { return Json::array({c.first, c.last}); }

Json to_json(const BgnTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"prefix", s.label}, {"image", s.image ? to_json(*s.image) : Json(nullptr)}});
  }
  const auto final_image = t.final_image();
  return {{"curve", to_json(t.start)},
          {"steps", steps},
          {"exited_early", t.exited_early},
          {"final_round", final_image.has_value()},
          {"lines", t.render()}};
}

Json to_json(const ConjugacySet& set) {
  Json members = Json::array();
  for (const auto& m : set.members) members.push_back(to_json(m));
  Json edges = Json::array();
  for (const auto& e : set.edges) {
    edges.push_back({{"from", e.from}, {"conjugator", to_json(e.conjugator)}, {"to", e.to}});
  }
  return {{"kind", to_string(set.kind)},
          {"n", set.base.strands()},
          {"base", to_json(set.base)},
          {"inf", set.inf},
          {"sup", set.sup},
          {"size", set.members.size()},
          {"members", members},
          {"edges", edges}};
}

Json to_json(const SingleOrbitCertificate& cert) {
  Json prefixes = Json::array();
  for (const auto& p : cert.prefixes) {
    prefixes.push_back({{"source", p.source == PrefixConjugate::Source::InitialFactor ? "iota" : "dphi"},
                        {"prefix", to_json(p.prefix)},
                        {"prefix_word", p.prefix.positive_word()},
                        {"conjugate", to_json(p.conjugate)},
                        {"canonical_length", p.canonical_length},
                        {"rigid", p.rigid},
                        {"same_inf_sup", p.same_inf_sup},
                        {"excluded", p.excluded}});
  }
  return {{"base", to_json(cert.base)},
          {"iota", to_json(cert.initial)},
          {"dphi", to_json(cert.complement_of_final)},
          {"prefixes", prefixes},
          {"iota_conjugate_in_orbit", cert.initial_conjugate_in_orbit},
          {"dphi_conjugate_in_orbit", cert.complement_conjugate_in_orbit},
          {"orbit_size", cert.orbit_size},
          {"failures", cert.failures},
          {"pass", cert.pass}};
}

Json to_json(const NTVerdict& v) {
  Json out = {{"verdict", to_string(v.verdict)}, {"sc_size", v.sc_size}, {"reason", v.reason}};
  out["power"] = v.power ? Json{{"m", v.power->m}, {"l", v.power->l}} : Json(nullptr);
  Json scans = Json::array();
  for (const auto& s : v.scans) {
    Json images = Json::array();
    for (const auto& ci : s.images) {
      images.push_back({{"curve", to_json(ci.curve)}, {"image", ci.image ? to_json(*ci.image) : Json(nullptr)}});
    }
    scans.push_back({{"representative", to_json(s.representative)},
                     {"orbit_size", s.orbit_size},
                     {"images", images},
                     {"any_round", s.any_round}});
  }
  out["scans"] = scans;
  if (v.reducing) {
    Json curves = Json::array();
    for (const auto& c : v.reducing->curves) curves.push_back(to_json(c));
    out["reducing"] = {{"member", to_json(v.reducing->member)}, {"curves", curves}};
  } else {
    out["reducing"] = nullptr;
  }
  return out;
}

Json to_json(const family::FamilyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"k", report.k}, {"checks", checks}, {"pass", report.pass()}};
}

std::string to_dot(const ConjugacySet& set) {
  std::ostringstream out;
  out << "digraph " << to_string(set.kind) << " {\n";
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    out << "  m" << i << " [label=\"" << to_string(set.members[i]) << "\"];\n";
  }
  for (const auto& e : set.edges) {
    out << "  m" << e.from << " -> m" << e.to << " [label=\"" << to_string(e.conjugator) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const family::FamilyReport& report) {
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  out << "braid family checks, k = " << report.k << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size(), ' ');
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (report.pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

}  // namespace garside
