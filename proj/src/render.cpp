#include "qfca/render.hpp"

#include <sstream>

#include "json.hpp"

namespace qfca {

namespace {

using nlohmann::ordered_json;

ordered_json values_json(const Presheaf& p) {
  ordered_json v = ordered_json::object();
  for (std::size_t x = 0; x < p.values.size(); ++x) v[p.base->label(x)] = p.base->Q().label(p.values[x]);
  return v;
}

std::string node_label(const Presheaf& p) {
  std::string s;
  for (std::size_t x = 0; x < p.values.size(); ++x) {
    if (x) s += ", ";
    s += p.base->label(x) + ":" + p.base->Q().label(p.values[x]);
  }
  return s;
}

std::string quoted(const std::string& s) { return ordered_json(s).dump(); }

const Quantaloid& quantaloid_of(const ConceptLattice& L) { return L.lattice.base->Q(); }

}  // namespace

std::string report_json(const Report& r) {
  ordered_json j;
  j["report"] = r.title();
  j["ok"] = r.ok();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : r.notes()) notes[k] = v;
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string lattice_json(const ConceptLattice& L, const std::string& name) {
  const auto& Q = quantaloid_of(L);
  ordered_json j;
  j["distributor"] = name;
  j["mode"] = L.kind == ConceptKind::FCA ? "fca" : "rst";
  j["size"] = L.size();
  ordered_json types = ordered_json::array();
  for (ObjectId q = 0; q < Q.size(); ++q) {
    auto members = L.of_type(q);
    if (members.empty()) continue;
    ordered_json concepts = ordered_json::array();
    for (auto i : members) concepts.push_back({{"id", i}, {"values", values_json(L.concepts()[i])}});
    ordered_json hasse = ordered_json::array();
    for (auto [lo, hi] : L.hasse(q)) hasse.push_back({lo, hi});
    types.push_back({{"type", Q.object_label(q)}, {"concepts", concepts}, {"hasse", hasse}});
  }
  j["types"] = types;
  return j.dump(2) + "\n";
}

std::string lattice_dot(const ConceptLattice& L, const std::string& name) {
  const auto& Q = quantaloid_of(L);
  std::ostringstream out;
  for (ObjectId q = 0; q < Q.size(); ++q) {
    auto members = L.of_type(q);
    if (members.empty()) continue;
    out << "digraph " << quoted(name + " " + Q.object_label(q)) << " {\n  rankdir=BT;\n";
    for (auto i : members) out << "  c" << i << " [label=" << quoted(node_label(L.concepts()[i])) << "];\n";
    for (auto [lo, hi] : L.hasse(q)) out << "  c" << lo << " -> c" << hi << ";\n";
    out << "}\n";
  }
  return out.str();
}

std::string abar_json(const AbarCategory& abar, const QDistributor& phi_tr, const std::string& name) {
  const auto& Q = phi_tr.Q();
  const auto& A = *abar.base;
  ordered_json j;
  j["distributor"] = name;
  ordered_json objs = ordered_json::array();
  for (std::size_t m = 0; m < abar.cat.objects.size(); ++m) {
    const auto& mu = abar.cat.objects[m];
    ordered_json prov = ordered_json::array();
    for (const auto& [a, u] : abar.provenance[m]) prov.push_back({{"a", A.label(a)}, {"u", Q.label(u)}});
    objs.push_back({{"id", m},
                    {"type", Q.object_label(mu.type)},
                    {"values", values_json(mu)},
                    {"from", prov}});
  }
  j["abar"] = objs;
  ordered_json entries = ordered_json::array();
  const auto& B = phi_tr.dom();
  for (std::size_t b = 0; b < B.size(); ++b)
    for (std::size_t m = 0; m < phi_tr.cod().size(); ++m)
      entries.push_back({B.label(b), phi_tr.cod().label(m), Q.label(phi_tr(b, m))});
  j["phi_tr"] = entries;
  return j.dump(2) + "\n";
}

}  // namespace qfca
