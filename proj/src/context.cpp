#include "qfca/context.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qfca/errors.hpp"

namespace qfca {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where));
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad(where + ": expected [a, b]");
    out.emplace_back(str(e[0], where), str(e[1], where));
  }
  return out;
}

FiniteLatticeSpec lattice_spec(const json& j) {
  if (j.is_string()) {
    auto l = named_lattice(j.get<std::string>());
    if (!l) raise(ErrorKind::InvalidParams, "unknown lattice " + j.get<std::string>());
    return *l;
  }
  return FiniteLatticeSpec{strings(field(j, "elements", "lattice"), "lattice elements"),
                           pairs(field(j, "leq", "lattice"), "lattice leq")};
}

QuantaloidPtr preset_quantaloid(const json& q) {
  const auto name = str(q.at("preset"), "quantaloid preset");
  PresetParams params;
  if (q.contains("n")) {
    if (!q.at("n").is_number_integer()) bad("quantaloid: n must be an integer");
    params.n = q.at("n").get<int>();
  }
  if (q.contains("lattice")) params.lattice = lattice_spec(q.at("lattice"));
  if (q.contains("product")) {
    QuantaleTable t;
    t.elements = strings(field(q, "elements", "quantaloid"), "elements");
    t.leq = pairs(field(q, "leq", "quantaloid"), "leq");
    t.unit = str(field(q, "unit", "quantaloid"), "unit");
    for (const auto& row : q.at("product")) t.product.push_back(strings(row, "product row"));
    params.table = std::move(t);
  }
  return build_preset(name, params);
}

std::pair<ObjectId, ObjectId> hom_key(const std::vector<std::string>& objects, const std::string& key) {
  auto arrow = key.find("->");
  if (arrow == std::string::npos) bad("hom key \"" + key + "\" is not of the form p->q");
  auto find = [&](const std::string& o) {
    for (ObjectId i = 0; i < objects.size(); ++i)
      if (objects[i] == o) return i;
    bad("unknown object " + o + " in hom key " + key);
  };
  return {find(key.substr(0, arrow)), find(key.substr(arrow + 2))};
}

QuantaloidPtr inline_quantaloid(const json& q) {
  const auto objects = strings(field(q, "objects", "quantaloid"), "objects");
  const auto n = static_cast<ObjectId>(objects.size());
  const auto& homs_j = field(q, "homs", "quantaloid");
  std::vector<HomLattice> homs(static_cast<std::size_t>(n) * n);
  std::vector<bool> seen(homs.size(), false);
  for (const auto& [key, h] : homs_j.items()) {
    auto [p, r] = hom_key(objects, key);
    auto elements = strings(field(h, "elements", key), key + " elements");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
    for (const auto& [a, b] : pairs(field(h, "leq", key), key + " leq")) {
      auto ia = std::find(elements.begin(), elements.end(), a);
      auto ib = std::find(elements.begin(), elements.end(), b);
      if (ia == elements.end() || ib == elements.end()) bad(key + ": leq mentions an unknown element");
      leq.emplace_back(ia - elements.begin(), ib - elements.begin());
    }
    homs[p * n + r] = HomLattice(std::move(elements), leq);
    seen[p * n + r] = true;
  }
  for (ObjectId p = 0; p < n; ++p)
    for (ObjectId r = 0; r < n; ++r)
      if (!seen[p * n + r]) bad("missing hom " + objects[p] + "->" + objects[r]);

  // "p->q:label", or a bare label when there is one object.
  auto arrow_ref = [&](const std::string& ref) -> Arrow {
    ObjectId p = 0, r = 0;
    std::string label = ref;
    auto colon = ref.rfind(':');
    if (colon != std::string::npos && ref.find("->") != std::string::npos && ref.find("->") < colon) {
      std::tie(p, r) = hom_key(objects, ref.substr(0, colon));
      label = ref.substr(colon + 1);
    } else if (n != 1) {
      bad("arrow \"" + ref + "\" must be qualified as p->q:label");
    }
    auto i = homs[p * n + r].find(label);
    if (!i) bad("unknown arrow " + ref);
    return Arrow{p, r, *i};
  };

  std::map<std::tuple<ObjectId, ObjectId, ObjectId, std::uint32_t, std::uint32_t>, std::uint32_t> table;
  if (q.contains("compose"))
    for (const auto& row : q.at("compose")) {
      auto t = strings(row, "compose row");
      if (t.size() != 3) bad("compose rows are [v, u, v.u]");
      Arrow v = arrow_ref(t[0]), u = arrow_ref(t[1]), w = arrow_ref(t[2]);
      if (u.dst != v.src || w.src != u.src || w.dst != v.dst) bad("compose row " + t[0] + " . " + t[1] + " is ill-typed");
      table[{u.src, u.dst, v.dst, v.index, u.index}] = w.index;
    }
  std::vector<std::uint32_t> units(n, 0);
  const auto& units_j = field(q, "units", "quantaloid");
  for (ObjectId p = 0; p < n; ++p) {
    std::string label;
    if (units_j.is_string() && n == 1) label = units_j.get<std::string>();
    else label = str(field(units_j, objects[p].c_str(), "units"), "unit");
    auto i = homs[p * n + p].find(label);
    if (!i) bad("unknown unit " + label + " for " + objects[p]);
    units[p] = *i;
  }
  // Missing composites are ⊥ (0 when the hom has no bottom; validation reports it).
  return Quantaloid::make(objects, homs,
                          [&](ObjectId p, ObjectId q2, ObjectId r, std::uint32_t v, std::uint32_t u) {
                            auto it = table.find({p, q2, r, v, u});
                            if (it != table.end()) return it->second;
                            auto b = homs[p * n + r].bottom();
                            return b == kNone ? 0u : b;
                          },
                          units);
}

ObjectId object_type(const Quantaloid& Q, const json& o, const std::string& where) {
  if (!o.contains("type")) {
    if (Q.size() == 1) return 0;
    bad(where + ": object type required");
  }
  auto t = Q.find_object(str(o.at("type"), where));
  if (!t) bad(where + ": unknown type " + o.at("type").get<std::string>());
  return *t;
}

Arrow resolve(const Quantaloid& Q, ObjectId p, ObjectId q, const std::string& label,
              const std::string& where) {
  auto i = Q.hom(p, q).find(label);
  if (!i) bad(where + ": no arrow " + label + " in " + Q.object_label(p) + "->" + Q.object_label(q));
  return Arrow{p, q, *i};
}

std::size_t object_of(const QCategory& A, const json& j, const std::string& where) {
  auto x = A.find(str(j, where));
  if (!x) bad(where + ": unknown object " + j.get<std::string>());
  return *x;
}

CategoryPtr parse_category(const QuantaloidPtr& Q, const std::string& name, const json& c) {
  const std::string where = "category " + name;
  std::vector<std::string> labels;
  std::vector<ObjectId> types;
  for (const auto& o : field(c, "objects", where)) {
    auto l = str(field(o, "label", where), where);
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) bad(where + ": duplicate object " + l);
    labels.push_back(l);
    types.push_back(object_type(*Q, o, where));
  }
  const std::size_t n = labels.size();
  std::vector<Arrow> hom;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom.push_back(Q->bottom(types[x], types[y]));
  auto index = [&](const json& j) {
    auto l = str(j, where);
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) bad(where + ": unknown object " + l);
    return static_cast<std::size_t>(it - labels.begin());
  };
  if (c.contains("hom"))
    for (const auto& e : c.at("hom")) {
      if (!e.is_array() || e.size() != 3) bad(where + ": hom entries are [x, y, arrow]");
      auto x = index(e[0]), y = index(e[1]);
      hom[x * n + y] = resolve(*Q, types[x], types[y], str(e[2], where), where);
    }
  return QCategory::make(Q, std::move(labels), std::move(types), std::move(hom));
}

json arrow_rows(const QCategory& A, const QCategory& B, const std::function<Arrow(std::size_t, std::size_t)>& at) {
  json rows = json::array();
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < B.size(); ++y)
      rows.push_back({A.label(x), B.label(y), A.Q().label(at(x, y))});
  return rows;
}

}  // namespace

const QDistributor& ContextDocument::distributor(std::string_view name) const {
  auto it = distributors.find(std::string(name));
  if (it == distributors.end()) raise(ErrorKind::InvalidParams, "no distributor " + std::string(name));
  return it->second;
}

const std::pair<const std::string, QDistributor>& ContextDocument::pick_distributor(
    std::string_view name) const {
  if (!name.empty()) {
    auto it = distributors.find(std::string(name));
    if (it == distributors.end()) raise(ErrorKind::InvalidParams, "no distributor " + std::string(name));
    return *it;
  }
  if (distributors.size() != 1)
    raise(ErrorKind::InvalidParams, "the document has " + std::to_string(distributors.size()) +
                                        " distributors; choose one with --dist");
  return *distributors.begin();
}

std::string ContextDocument::category_name(const CategoryPtr& A) const {
  for (const auto& [name, c] : categories)
    if (c == A) return name;
  for (const auto& [name, c] : categories)
    if (same_category(c, A)) return name;
  return {};
}

bool operator==(const ContextDocument& a, const ContextDocument& b) {
  if (a.quantaloid_source != b.quantaloid_source || !(*a.Q == *b.Q)) return false;
  if (a.categories.size() != b.categories.size() || a.distributors.size() != b.distributors.size() ||
      a.functors.size() != b.functors.size())
    return false;
  for (auto i = a.categories.begin(), j = b.categories.begin(); i != a.categories.end(); ++i, ++j)
    if (i->first != j->first || !same_category(i->second, j->second)) return false;
  for (auto i = a.distributors.begin(), j = b.distributors.begin(); i != a.distributors.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  for (auto i = a.functors.begin(), j = b.functors.begin(); i != a.functors.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

ContextDocument parse_context(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("the document must be a JSON object");
  ContextDocument doc;
  const auto& q = field(j, "quantaloid", "document");
  doc.quantaloid_source = q.dump();
  doc.Q = q.contains("preset") ? preset_quantaloid(q) : inline_quantaloid(q);

  auto category = [&](const json& ref, const std::string& where) {
    auto it = doc.categories.find(str(ref, where));
    if (it == doc.categories.end()) bad(where + ": unknown category " + ref.get<std::string>());
    return it->second;
  };
  if (j.contains("categories"))
    for (const auto& [name, c] : j.at("categories").items())
      doc.categories.emplace(name, parse_category(doc.Q, name, c));
  if (j.contains("distributors"))
    for (const auto& [name, d] : j.at("distributors").items()) {
      const std::string where = "distributor " + name;
      auto A = category(field(d, "from", where), where);
      auto B = category(field(d, "to", where), where);
      std::vector<Arrow> m;
      for (std::size_t x = 0; x < A->size(); ++x)
        for (std::size_t y = 0; y < B->size(); ++y) m.push_back(doc.Q->bottom(A->type(x), B->type(y)));
      if (d.contains("entries"))
        for (const auto& e : d.at("entries")) {
          if (!e.is_array() || e.size() != 3) bad(where + ": entries are [x, y, arrow]");
          auto x = object_of(*A, e[0], where), y = object_of(*B, e[1], where);
          m[x * B->size() + y] = resolve(*doc.Q, A->type(x), B->type(y), str(e[2], where), where);
        }
      doc.distributors.emplace(name, QDistributor(A, B, std::move(m)));
    }
  if (j.contains("functors"))
    for (const auto& [name, f] : j.at("functors").items()) {
      const std::string where = "functor " + name;
      auto A = category(field(f, "from", where), where);
      auto B = category(field(f, "to", where), where);
      std::vector<std::size_t> map(A->size(), B->size());
      for (const auto& [x, y] : field(f, "map", where).items())
        map[object_of(*A, json(x), where)] = object_of(*B, y, where);
      for (std::size_t x = 0; x < map.size(); ++x)
        if (map[x] == B->size()) bad(where + ": " + A->label(x) + " is not mapped");
      doc.functors.emplace(name, QFunctor(A, B, std::move(map)));
    }
  return doc;
}

ContextDocument load_context(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_context(ss.str());
}

std::string serialize_context(const ContextDocument& doc) {
  json j;
  j["quantaloid"] = json::parse(doc.quantaloid_source);
  json cats = json::object();
  for (const auto& [name, A] : doc.categories) {
    json objs = json::array();
    for (std::size_t x = 0; x < A->size(); ++x)
      objs.push_back({{"label", A->label(x)}, {"type", doc.Q->object_label(A->type(x))}});
    cats[name] = {{"objects", objs},
                  {"hom", arrow_rows(*A, *A, [&](std::size_t x, std::size_t y) { return (*A)(x, y); })}};
  }
  j["categories"] = cats;
  json dists = json::object();
  for (const auto& [name, phi] : doc.distributors)
    dists[name] = {{"from", doc.category_name(phi.dom_ptr())},
                   {"to", doc.category_name(phi.cod_ptr())},
                   {"entries", arrow_rows(phi.dom(), phi.cod(), [&](std::size_t x, std::size_t y) { return phi(x, y); })}};
  j["distributors"] = dists;
  if (!doc.functors.empty()) {
    json fs = json::object();
    for (const auto& [name, F] : doc.functors) {
      json map = json::object();
      for (std::size_t x = 0; x < F.dom().size(); ++x) map[F.dom().label(x)] = F.cod().label(F(x));
      fs[name] = {{"from", doc.category_name(F.dom_ptr())}, {"to", doc.category_name(F.cod_ptr())}, {"map", map}};
    }
    j["functors"] = fs;
  }
  return j.dump(2) + "\n";
}

Report validate_document(const ContextDocument& doc) {
  Report r("document");
  auto q = validate_quantaloid(*doc.Q);
  r.merge(q, "quantaloid");
  if (!q.ok()) return r;  // nothing downstream is meaningful
  for (const auto& [name, A] : doc.categories) r.merge(validate_category(*A), "category " + name);
  for (const auto& [name, phi] : doc.distributors) r.merge(validate_distributor(phi), "distributor " + name);
  for (const auto& [name, F] : doc.functors) r.merge(validate_functor(F), "functor " + name);
  return r;
}

}  // namespace qfca
