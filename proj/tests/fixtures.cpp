#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

Arrow arrow(const Quantaloid& Q, ObjectId p, ObjectId q, std::string_view label) {
  auto i = Q.hom(p, q).find(label);
  if (!i) throw std::invalid_argument("no arrow " + std::string(label));
  return Arrow{p, q, *i};
}

Arrow arrow(const Quantaloid& Q, std::string_view label) { return arrow(Q, 0, 0, label); }

CategoryPtr category(const QuantaloidPtr& Q, std::vector<std::string> labels,
                     std::vector<ObjectId> types,
                     const std::vector<std::vector<std::string>>& homs) {
  std::vector<Arrow> m;
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y)
      m.push_back(arrow(*Q, types[x], types[y], homs[x][y]));
  return QCategory::make(Q, std::move(labels), std::move(types), std::move(m));
}

QDistributor distributor(const CategoryPtr& A, const CategoryPtr& B,
                         const std::vector<std::vector<std::string>>& entries) {
  return QDistributor::from_function(A, B, [&](std::size_t a, std::size_t b) {
    return arrow(A->Q(), A->type(a), B->type(b), entries[a][b]);
  });
}

CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> labels,
                     std::vector<ObjectId> types) {
  return discrete_category(Q, TypedSet{std::move(labels), std::move(types)});
}

CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> labels) {
  std::vector<ObjectId> types(labels.size(), 0);
  return discrete(Q, std::move(labels), std::move(types));
}

QuantaloidPtr two() { return preset_two(); }
QuantaloidPtr l3() { return preset_lukasiewicz(3); }
QuantaloidPtr g3() { return preset_godel(3); }
QuantaloidPtr dl3() { return preset_frame_diagonal(chain_lattice(3)); }
QuantaloidPtr d_boolean4() { return preset_frame_diagonal(boolean_lattice(4)); }

Context fix_2id() {
  auto Q = two();
  auto A = discrete(Q, {"a1", "a2"});
  auto B = discrete(Q, {"b1", "b2"});
  return {Q, A, B, distributor(A, B, {{"1", "0"}, {"0", "1"}})};
}

Context fix_l3() {
  auto Q = l3();
  auto A = discrete(Q, {"a"});
  auto B = discrete(Q, {"b"});
  return {Q, A, B, distributor(A, B, {{"1/2"}})};
}

Context godel3() {
  auto Q = g3();
  auto A = discrete(Q, {"a"});
  auto B = discrete(Q, {"b"});
  return {Q, A, B, distributor(A, B, {{"1/2"}})};
}

Context fix_dl3() {
  auto Q = dl3();
  const ObjectId m = *Q->find_object("1/2");
  const ObjectId t = *Q->find_object("1");
  auto A = category(Q, {"x", "y", "z"}, {m, t, t},
                    {{"1/2", "1/2", "1/2"}, {"0", "1", "0"}, {"1/2", "1/2", "1"}});
  auto B = discrete(Q, {"b0", "b1"}, {t, m});
  auto phi = distributor(A, B, {{"1/2", "1/2"}, {"1", "0"}, {"1/2", "1/2"}});
  return {Q, A, B, phi};
}

Context crisp(const std::vector<std::vector<int>>& rel) {
  auto Q = two();
  std::vector<std::string> as, bs;
  for (std::size_t i = 0; i < rel.size(); ++i) as.push_back("a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < rel.at(0).size(); ++j) bs.push_back("b" + std::to_string(j + 1));
  auto A = discrete(Q, as);
  auto B = discrete(Q, bs);
  std::vector<std::vector<std::string>> e(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (int v : rel[i]) e[i].push_back(v ? "1" : "0");
  return {Q, A, B, distributor(A, B, e)};
}

std::vector<QDistributor> all_distributors(const CategoryPtr& A, const CategoryPtr& B,
                                           std::size_t cap) {
  const auto& Q = A->Q();
  const std::size_t na = A->size(), nb = B->size();
  std::vector<std::vector<Arrow>> choices;
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) choices.push_back(Q.arrows(A->type(x), B->type(y)));
  std::vector<QDistributor> out;
  std::vector<std::size_t> odometer(choices.size(), 0);
  for (;;) {
    std::vector<Arrow> m;
    for (std::size_t i = 0; i < choices.size(); ++i) m.push_back(choices[i][odometer[i]]);
    QDistributor phi(A, B, std::move(m));
    if (validate_distributor(phi).ok()) {
      out.push_back(std::move(phi));
      if (out.size() >= cap) return out;
    }
    std::size_t i = choices.size();
    while (i > 0 && ++odometer[i - 1] == choices[i - 1].size()) odometer[--i] = 0;
    if (i == 0) return out;
  }
}

std::vector<QFunctor> all_functors(const CategoryPtr& A, const CategoryPtr& B) {
  std::vector<QFunctor> out;
  std::vector<std::size_t> map(A->size(), 0);
  if (B->size() == 0 && A->size() > 0) return out;
  for (;;) {
    bool typed = true;
    for (std::size_t x = 0; x < map.size(); ++x)
      if (A->type(x) != B->type(map[x])) typed = false;
    if (typed) {
      QFunctor F(A, B, map);
      if (validate_functor(F).ok()) out.push_back(std::move(F));
    }
    std::size_t i = map.size();
    while (i > 0 && ++map[i - 1] == B->size()) map[--i] = 0;
    if (i == 0) return out;
  }
}

std::vector<ChuTransform> all_chu(const QDistributor& phi, const QDistributor& psi) {
  std::vector<ChuTransform> out;
  for (const auto& F : all_functors(phi.dom_ptr(), psi.dom_ptr()))
    for (const auto& G : all_functors(psi.cod_ptr(), phi.cod_ptr())) {
      ChuTransform c{phi, psi, F, G};
      if (validate_chu(c).ok()) out.push_back(std::move(c));
    }
  return out;
}

std::vector<std::uint32_t> classical_extents(const std::vector<std::vector<int>>& rel) {
  const std::size_t na = rel.size(), nb = rel.at(0).size();
  auto up = [&](std::uint32_t U) {
    std::uint32_t V = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      bool all = true;
      for (std::size_t a = 0; a < na; ++a)
        if ((U >> a & 1u) && !rel[a][b]) all = false;
      if (all) V |= 1u << b;
    }
    return V;
  };
  auto down = [&](std::uint32_t V) {
    std::uint32_t U = 0;
    for (std::size_t a = 0; a < na; ++a) {
      bool all = true;
      for (std::size_t b = 0; b < nb; ++b)
        if ((V >> b & 1u) && !rel[a][b]) all = false;
      if (all) U |= 1u << a;
    }
    return U;
  };
  std::vector<std::uint32_t> out;
  for (std::uint32_t U = 0; U < (1u << na); ++U)
    if (down(up(U)) == U) out.push_back(U);
  return out;
}

std::vector<std::uint32_t> classical_rst(const std::vector<std::vector<int>>& rel) {
  const std::size_t na = rel.size(), nb = rel.at(0).size();
  auto star = [&](std::uint32_t V) {
    std::uint32_t U = 0;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        if ((V >> b & 1u) && rel[a][b]) U |= 1u << a;
    return U;
  };
  auto lower = [&](std::uint32_t U) {
    std::uint32_t V = 0;
    for (std::size_t b = 0; b < nb; ++b) {
      bool ok = true;
      for (std::size_t a = 0; a < na; ++a)
        if (rel[a][b] && !(U >> a & 1u)) ok = false;
      if (ok) V |= 1u << b;
    }
    return V;
  };
  std::vector<std::uint32_t> out;
  for (std::uint32_t V = 0; V < (1u << nb); ++V)
    if (lower(star(V)) == V) out.push_back(V);
  return out;
}

std::uint32_t mask_of(const Presheaf& p) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < p.values.size(); ++i)
    if (p.base->Q().label(p.values[i]) == "1") m |= 1u << i;
  return m;
}

std::vector<Named> presets() {
  return {{"two", two()},
          {"lukasiewicz-3", l3()},
          {"godel-3", g3()},
          {"D(chain-3)", dl3()},
          {"D(boolean-4)", d_boolean4()}};
}

}  // namespace fixtures
