#include "qfca/concept.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hash.hpp"
#include "qfca/errors.hpp"

namespace qfca {

namespace {

void require_base(const CategoryPtr& got, const CategoryPtr& want, const char* what) {
  if (!same_category(got, want)) raise(ErrorKind::BaseMismatch, what);
}

std::vector<std::uint32_t> key_of(const Presheaf& p) {
  std::vector<std::uint32_t> k{p.type};
  for (auto a : p.values) k.push_back(a.index);
  return k;
}

bool canonical_less(const Presheaf& a, const Presheaf& b) {
  if (a.type != b.type) return a.type < b.type;
  return a.values < b.values;
}

template <class From, class To, class Fn>
QFunctor materialized_map(const Materialized<From>& from, const Materialized<To>& to, Fn fn,
                          const char* what) {
  std::vector<std::size_t> map;
  map.reserve(from.size());
  for (const auto& x : from.objects) {
    auto i = to.index_of(fn(x));
    if (!i) raise(ErrorKind::InvalidStructure, std::string(what) + ": image outside the target");
    map.push_back(*i);
  }
  return QFunctor(from.category, to.category, std::move(map));
}

std::string type_name(const Quantaloid& Q, ObjectId q) { return Q.object_label(q); }

// Generators for one target type, in (object, arrow) order.
std::vector<Presheaf> generators(const QDistributor& phi, ConceptKind kind, ObjectId q) {
  const auto& Q = phi.Q();
  std::vector<Presheaf> gens;
  if (kind == ConceptKind::FCA) {
    const auto& B = phi.cod();
    for (std::size_t b = 0; b < B.size(); ++b)
      for (auto v : Q.arrows(q, B.type(b))) {
        Presheaf p{phi.dom_ptr(), q, {}};
        for (std::size_t a = 0; a < phi.dom().size(); ++a)
          p.values.push_back(Q.right_imp(v, phi(a, b)));
        gens.push_back(std::move(p));
      }
  } else {
    const auto& A = phi.dom();
    for (std::size_t a = 0; a < A.size(); ++a)
      for (auto u : Q.arrows(A.type(a), q)) {
        Presheaf p{phi.cod_ptr(), q, {}};
        for (std::size_t b = 0; b < phi.cod().size(); ++b)
          p.values.push_back(Q.left_imp(u, phi(a, b)));
        gens.push_back(std::move(p));
      }
  }
  return gens;
}

ConceptLattice compute_fixed(const QDistributor& phi, ConceptKind kind,
                             const ConceptOptions& options) {
  const auto& Q = phi.Q();
  const CategoryPtr& base = kind == ConceptKind::FCA ? phi.dom_ptr() : phi.cod_ptr();
  std::vector<Presheaf> all;
  for (ObjectId q = 0; q < Q.size(); ++q) {
    if (options.only_type && *options.only_type != q) continue;
    std::vector<Presheaf> closed{top_presheaf(base, q)};
    std::unordered_set<std::vector<std::uint32_t>, IndexVectorHash> seen{key_of(closed[0])};
    for (const auto& g : generators(phi, kind, q)) {
      if (seen.contains(key_of(g))) continue;
      // Invariant: closed holds all meets of the generators seen so far.
      const std::size_t n = closed.size();
      for (std::size_t i = 0; i < n; ++i) {
        Presheaf m = entrywise_meet(closed[i], g);
        if (seen.insert(key_of(m)).second) {
          closed.push_back(std::move(m));
          if (closed.size() > options.budget.closure_size)
            raise(ErrorKind::ClosureBudgetExceeded,
                  "meet closure exceeds " + std::to_string(options.budget.closure_size) +
                      " elements at type " + type_name(Q, q));
        }
      }
    }
    std::sort(closed.begin(), closed.end(), canonical_less);
    if (options.verify_fixed)
      for (const auto& p : closed)
        if (!(closure(phi, kind, p) == p))
          raise(ErrorKind::InvalidStructure, "closure element {" + render(p) + "} is not fixed");
    for (auto& p : closed) all.push_back(std::move(p));
  }
  ConceptLattice out;
  out.kind = kind;
  out.lattice = presheaf_subcategory(base, std::move(all));
  return out;
}

}  // namespace

Copresheaf isbell_up(const QDistributor& phi, const Presheaf& mu) {
  require_base(mu.base, phi.dom_ptr(), "isbell_up needs a presheaf on the domain");
  const auto& Q = phi.Q();
  Copresheaf out{phi.cod_ptr(), mu.type, {}};
  for (std::size_t b = 0; b < phi.cod().size(); ++b) {
    Arrow acc = Q.top(mu.type, phi.cod().type(b));
    for (std::size_t a = 0; a < phi.dom().size(); ++a)
      acc = Q.meet(acc, Q.left_imp(phi(a, b), mu.values[a]));
    out.values.push_back(acc);
  }
  return out;
}

Presheaf isbell_down(const QDistributor& phi, const Copresheaf& lambda) {
  require_base(lambda.base, phi.cod_ptr(), "isbell_down needs a copresheaf on the codomain");
  const auto& Q = phi.Q();
  Presheaf out{phi.dom_ptr(), lambda.type, {}};
  for (std::size_t a = 0; a < phi.dom().size(); ++a) {
    Arrow acc = Q.top(phi.dom().type(a), lambda.type);
    for (std::size_t b = 0; b < phi.cod().size(); ++b)
      acc = Q.meet(acc, Q.right_imp(lambda.values[b], phi(a, b)));
    out.values.push_back(acc);
  }
  return out;
}

Presheaf kan_star(const QDistributor& phi, const Presheaf& lambda) {
  require_base(lambda.base, phi.cod_ptr(), "kan_star needs a presheaf on the codomain");
  const auto& Q = phi.Q();
  Presheaf out{phi.dom_ptr(), lambda.type, {}};
  for (std::size_t a = 0; a < phi.dom().size(); ++a) {
    Arrow acc = Q.bottom(phi.dom().type(a), lambda.type);
    for (std::size_t b = 0; b < phi.cod().size(); ++b)
      acc = Q.join(acc, Q.compose(lambda.values[b], phi(a, b)));
    out.values.push_back(acc);
  }
  return out;
}

Presheaf kan_lower(const QDistributor& phi, const Presheaf& mu) {
  require_base(mu.base, phi.dom_ptr(), "kan_lower needs a presheaf on the domain");
  const auto& Q = phi.Q();
  Presheaf out{phi.cod_ptr(), mu.type, {}};
  for (std::size_t b = 0; b < phi.cod().size(); ++b) {
    Arrow acc = Q.top(phi.cod().type(b), mu.type);
    for (std::size_t a = 0; a < phi.dom().size(); ++a)
      acc = Q.meet(acc, Q.left_imp(mu.values[a], phi(a, b)));
    out.values.push_back(acc);
  }
  return out;
}

Copresheaf kan_dag(const QDistributor& phi, const Copresheaf& mu) {
  require_base(mu.base, phi.dom_ptr(), "kan_dag needs a copresheaf on the domain");
  const auto& Q = phi.Q();
  Copresheaf out{phi.cod_ptr(), mu.type, {}};
  for (std::size_t b = 0; b < phi.cod().size(); ++b) {
    Arrow acc = Q.bottom(mu.type, phi.cod().type(b));
    for (std::size_t a = 0; a < phi.dom().size(); ++a)
      acc = Q.join(acc, Q.compose(phi(a, b), mu.values[a]));
    out.values.push_back(acc);
  }
  return out;
}

Copresheaf kan_lower_dag(const QDistributor& phi, const Copresheaf& lambda) {
  require_base(lambda.base, phi.cod_ptr(), "kan_lower_dag needs a copresheaf on the codomain");
  const auto& Q = phi.Q();
  Copresheaf out{phi.dom_ptr(), lambda.type, {}};
  for (std::size_t a = 0; a < phi.dom().size(); ++a) {
    Arrow acc = Q.top(lambda.type, phi.dom().type(a));
    for (std::size_t b = 0; b < phi.cod().size(); ++b)
      acc = Q.meet(acc, Q.right_imp(phi(a, b), lambda.values[b]));
    out.values.push_back(acc);
  }
  return out;
}

Presheaf closure(const QDistributor& phi, ConceptKind kind, const Presheaf& p) {
  return kind == ConceptKind::FCA ? isbell_down(phi, isbell_up(phi, p))
                                  : kan_lower(phi, kan_star(phi, p));
}

std::vector<std::size_t> ConceptLattice::of_type(ObjectId q) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.objects.size(); ++i)
    if (lattice.objects[i].type == q) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::hasse(ObjectId q) const {
  const auto order = underlying_order(*lattice.category);
  const auto xs = of_type(q);
  auto lt = [&](std::size_t x, std::size_t y) { return order(x, y) && !order(y, x); };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto x : xs)
    for (auto y : xs) {
      if (!lt(x, y)) continue;
      bool cover = true;
      for (auto z : xs)
        if (lt(x, z) && lt(z, y)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

ConceptLattice compute_M(const QDistributor& phi, const ConceptOptions& options) {
  return compute_fixed(phi, ConceptKind::FCA, options);
}

ConceptLattice compute_K(const QDistributor& phi, const ConceptOptions& options) {
  return compute_fixed(phi, ConceptKind::RST, options);
}

std::vector<Presheaf> brute_force_fixed(const QDistributor& phi, ConceptKind kind, ObjectId q,
                                        const Budget& budget) {
  const CategoryPtr& base = kind == ConceptKind::FCA ? phi.dom_ptr() : phi.cod_ptr();
  std::vector<Presheaf> out;
  for_each_presheaf(base, q, budget, [&](const Presheaf& p) {
    if (closure(phi, kind, p) == p) out.push_back(p);
  });
  return out;
}

ConceptLattice macneille(const CategoryPtr& A, const ConceptOptions& options) {
  return compute_M(identity_dist(A), options);
}

bool same_concepts(const std::vector<Presheaf>& a, const std::vector<Presheaf>& b) {
  if (a.size() != b.size()) return false;
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end(), canonical_less);
  std::sort(sb.begin(), sb.end(), canonical_less);
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i].type != sb[i].type || sa[i].values != sb[i].values) return false;
  return true;
}

AbarCategory build_Abar(const CategoryPtr& A) {
  const auto& Q = A->Q();
  std::vector<Presheaf> objects;
  std::vector<std::vector<std::pair<std::size_t, Arrow>>> provenance;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, IndexVectorHash> seen;
  for (std::size_t a = 0; a < A->size(); ++a)
    for (ObjectId q = 0; q < Q.size(); ++q)
      for (auto u : Q.arrows(A->type(a), q)) {
        Presheaf mu{A, q, {}};
        for (std::size_t x = 0; x < A->size(); ++x) mu.values.push_back(Q.left_imp(u, (*A)(a, x)));
        auto [it, fresh] = seen.emplace(key_of(mu), objects.size());
        if (fresh) {
          objects.push_back(std::move(mu));
          provenance.emplace_back();
        }
        provenance[it->second].emplace_back(a, u);
      }
  auto cat = presheaf_subcategory(A, std::move(objects));
  auto atr = QDistributor::from_function(A, cat.category, [&](std::size_t x, std::size_t m) {
    return cat.objects[m].values[x];
  });
  AbarCategory out{A, std::move(cat), std::move(provenance), std::move(atr)};
  return out;
}

QFunctor abar_inclusion(const AbarCategory& abar, const PresheafCategory& PA) {
  return materialized_map(abar.cat, PA, [](const Presheaf& p) { return p; }, "Abar inclusion");
}

QDistributor phi_tr(const QDistributor& phi, const AbarCategory& abar) {
  require_base(phi.dom_ptr(), abar.base, "phi_tr needs the Abar of the domain");
  const auto& Q = phi.Q();
  auto tr = QDistributor::from_function(
      phi.cod_ptr(), abar.cat.category, [&](std::size_t b, std::size_t m) {
        auto [a, u] = abar.provenance[m].front();
        return Q.left_imp(u, phi(a, b));
      });
  if (!(tr == dist_left_imp(abar.atr, phi)))
    raise(ErrorKind::InvalidStructure, "closed form of phi^tr disagrees with A^tr / phi");
  return tr;
}

QDistributor phi_tr(const QDistributor& phi) { return phi_tr(phi, build_Abar(phi.dom_ptr())); }

Report verify_K_eq_M_tr(const QDistributor& phi, const Budget& budget) {
  Report r("K(phi) = M(phi^tr)");
  const auto abar = build_Abar(phi.dom_ptr());
  const auto tr = phi_tr(phi, abar);
  r.check("phi = (A^tr / phi) \\ A^tr", dist_right_imp(tr, abar.atr) == phi);
  ConceptOptions opts;
  opts.budget = budget;
  const auto K = compute_K(phi, opts);
  const auto M = compute_M(tr, opts);
  const auto& Q = phi.Q();
  for (ObjectId q = 0; q < Q.size(); ++q) {
    std::vector<Presheaf> k, m;
    for (auto i : K.of_type(q)) k.push_back(K.concepts()[i]);
    for (auto i : M.of_type(q)) m.push_back(M.concepts()[i]);
    r.check("K(phi) = M(phi^tr) at type " + Q.object_label(q), same_concepts(k, m),
            std::to_string(k.size()) + " vs " + std::to_string(m.size()) + " elements");
  }
  r.note("abar objects", std::to_string(abar.cat.size()));
  return r;
}

QDistributor complement_dist(const QDistributor& phi, const CyclicDualizingFamily& fam) {
  if (!fam.girard()) raise(ErrorKind::NotGirard, "complement needs a cyclic dualizing family");
  const auto& Q = phi.Q();
  return QDistributor::from_function(phi.cod_ptr(), phi.dom_ptr(), [&](std::size_t b, std::size_t a) {
    return complement_arrow(Q, fam, phi(a, b));
  });
}

Report verify_K_eq_M_neg(const QDistributor& phi, const CyclicDualizingFamily& fam,
                         const Budget& budget) {
  Report r("K(phi) = M(not phi)");
  const auto neg = complement_dist(phi, fam);
  const auto& Q = phi.Q();
  ConceptOptions opts;
  opts.budget = budget;
  const auto K = compute_K(phi, opts);
  const auto M = compute_M(neg, opts);
  for (ObjectId q = 0; q < Q.size(); ++q) {
    std::vector<Presheaf> k, m;
    for (auto i : K.of_type(q)) k.push_back(K.concepts()[i]);
    for (auto i : M.of_type(q)) m.push_back(M.concepts()[i]);
    r.check("K(phi) = M(not phi) at type " + Q.object_label(q), same_concepts(k, m),
            std::to_string(k.size()) + " vs " + std::to_string(m.size()) + " elements");
  }

  const auto& A = phi.dom_ptr();
  try {
    const auto PA = materialize_PA(A, budget);
    const auto PdA = materialize_PdA(A, budget);
    std::vector<std::size_t> map;
    bool defined = true;
    for (const auto& mu : PA.objects) {
      Copresheaf c{A, mu.type, {}};
      for (auto v : mu.values) c.values.push_back(complement_arrow(Q, fam, v));
      auto i = PdA.index_of(c);
      if (!i) {
        defined = false;
        break;
      }
      map.push_back(*i);
    }
    r.check("not maps PA into PdA", defined);
    if (defined) {
      auto sorted = map;
      std::sort(sorted.begin(), sorted.end());
      bool bijective = sorted.size() == PdA.size() &&
                       std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      r.check("not: PA -> PdA bijective", bijective);
      QFunctor negf(PA.category, PdA.category, map);
      r.check("not: PA -> PdA fully faithful", is_fully_faithful(negf));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    r.note("isomorphism check", "skipped, presheaf enumeration over budget");
  }
  return r;
}

CodenseProbe codense_girard_probe(const QuantaloidPtr& Qp, ObjectId q, const Budget& budget) {
  const auto& Q = *Qp;
  if (q >= Q.size()) raise(ErrorKind::InvalidParams, "no such object");
  std::vector<Arrow> bottoms;
  for (ObjectId p = 0; p < Q.size(); ++p) {
    if (Q.unit(p) != Q.top(p, p))
      raise(ErrorKind::HypothesesNotMet, "unit of " + Q.object_label(p) + " is not the top");
    bottoms.push_back(Q.bottom(p, p));
  }
  if (!is_cyclic(Q, bottoms)) raise(ErrorKind::HypothesesNotMet, "bottom family is not cyclic");

  CodenseProbe out;
  out.report = Report("codense functor {q} -> P{q}");
  out.bottom_family_dualizing = is_dualizing(Q, bottoms);
  const auto single = singleton_category(Qp, q);
  const auto P = materialize_PA(single, budget);
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P.objects[i].type != q) continue;
    QFunctor F(single, P.category, {i});
    if (is_codense(F)) out.targets.push_back(P.objects[i].values[0]);
  }
  out.exists = !out.targets.empty();
  // The proof's local content: F targets w forces u = (w↙u)↘w and w = ⊥_q.
  out.local_double_negation = true;
  for (ObjectId p = 0; p < Q.size(); ++p)
    for (auto u : Q.arrows(q, p))
      if (Q.right_imp(Q.left_imp(bottoms[q], u), bottoms[q]) != u) out.local_double_negation = false;
  std::string ts;
  for (auto w : out.targets) ts += (ts.empty() ? "" : ", ") + Q.label(w);
  out.report.note("codense targets", ts.empty() ? "none" : ts);
  out.report.note("bottom family dualizing", out.bottom_family_dualizing ? "yes" : "no");
  out.report.check("codense exists iff u = (bot / u) \\ bot for every u out of q",
                   out.exists == out.local_double_negation);
  out.report.check("every codense target is bot",
                   std::all_of(out.targets.begin(), out.targets.end(),
                               [&](Arrow w) { return w == bottoms[q]; }));
  if (out.bottom_family_dualizing) out.report.check("dualizing implies codense exists", out.exists);
  return out;
}

Report codense_girard_probe_all(const QuantaloidPtr& Q, const Budget& budget) {
  Report r("codense functors {q} -> P{q}, all q");
  bool all = true, dualizing = false;
  for (ObjectId q = 0; q < Q->size(); ++q) {
    auto p = codense_girard_probe(Q, q, budget);
    r.merge(p.report, Q->object_label(q));
    all = all && p.exists;
    dualizing = p.bottom_family_dualizing;
  }
  r.check("codense at every q iff bottom family dualizing", all == dualizing);
  return r;
}

QFunctor isbell_up_functor(const QDistributor& phi, const PresheafCategory& PA,
                           const CopresheafCategory& PdB) {
  return materialized_map(PA, PdB, [&](const Presheaf& p) { return isbell_up(phi, p); },
                          "isbell_up");
}

QFunctor isbell_down_functor(const QDistributor& phi, const CopresheafCategory& PdB,
                             const PresheafCategory& PA) {
  return materialized_map(PdB, PA, [&](const Copresheaf& p) { return isbell_down(phi, p); },
                          "isbell_down");
}

QFunctor kan_star_functor(const QDistributor& phi, const PresheafCategory& PB,
                          const PresheafCategory& PA) {
  return materialized_map(PB, PA, [&](const Presheaf& p) { return kan_star(phi, p); }, "kan_star");
}

QFunctor kan_lower_functor(const QDistributor& phi, const PresheafCategory& PA,
                           const PresheafCategory& PB) {
  return materialized_map(PA, PB, [&](const Presheaf& p) { return kan_lower(phi, p); },
                          "kan_lower");
}

QFunctor kan_dag_functor(const QDistributor& phi, const CopresheafCategory& PdA,
                         const CopresheafCategory& PdB) {
  return materialized_map(PdA, PdB, [&](const Copresheaf& p) { return kan_dag(phi, p); },
                          "kan_dag");
}

QFunctor kan_lower_dag_functor(const QDistributor& phi, const CopresheafCategory& PdB,
                               const CopresheafCategory& PdA) {
  return materialized_map(PdB, PdA, [&](const Copresheaf& p) { return kan_lower_dag(phi, p); },
                          "kan_lower_dag");
}

QFunctor transpose_ol(const QDistributor& phi, const PresheafCategory& PA) {
  require_base(phi.dom_ptr(), PA.base, "transpose_ol needs PA of the domain");
  std::vector<std::size_t> map;
  for (std::size_t b = 0; b < phi.cod().size(); ++b) {
    auto i = PA.index_of(column_presheaf(phi, b));
    if (!i) raise(ErrorKind::InvalidStructure, "column presheaf missing from PA");
    map.push_back(*i);
  }
  return QFunctor(phi.cod_ptr(), PA.category, std::move(map));
}

QFunctor transpose_hat(const QDistributor& phi, const CopresheafCategory& PdB) {
  require_base(phi.cod_ptr(), PdB.base, "transpose_hat needs PdB of the codomain");
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < phi.dom().size(); ++a) {
    auto i = PdB.index_of(row_copresheaf(phi, a));
    if (!i) raise(ErrorKind::InvalidStructure, "row copresheaf missing from PdB");
    map.push_back(*i);
  }
  return QFunctor(phi.dom_ptr(), PdB.category, std::move(map));
}

Report verify_transpose_identities(const QDistributor& phi, const Budget& budget) {
  Report r("transposes");
  const auto PA = materialize_PA(phi.dom_ptr(), budget);
  const auto PB = materialize_PA(phi.cod_ptr(), budget);
  const auto PdA = materialize_PdA(phi.dom_ptr(), budget);
  const auto PdB = materialize_PdA(phi.cod_ptr(), budget);
  const auto ol = transpose_ol(phi, PA);
  const auto hat = transpose_hat(phi, PdB);
  const auto YA = yoneda_functor(PA);
  const auto YB = yoneda_functor(PB);
  const auto YdA = coyoneda_functor(PdA);
  const auto YdB = coyoneda_functor(PdB);
  r.check("phi = (Y^dag_B)^# . phi_hat#", dist_compose(cograph(YdB), graph(hat)) == phi);
  r.check("phi = phi_ol^# . (Y_A)#", dist_compose(cograph(ol), graph(YA)) == phi);
  r.check("phi_hat = phi_up . Y_A", hat == compose_functors(isbell_up_functor(phi, PA, PdB), YA));
  r.check("phi_hat = phi_dag . Y^dag_A",
          hat == compose_functors(kan_dag_functor(phi, PdA, PdB), YdA));
  r.check("phi_ol = phi_down . Y^dag_B",
          ol == compose_functors(isbell_down_functor(phi, PdB, PA), YdB));
  r.check("phi_ol = phi_star . Y_B", ol == compose_functors(kan_star_functor(phi, PB, PA), YB));
  return r;
}

QFunctor M_on_chu(const ChuTransform& c, const ConceptLattice& Mphi, const ConceptLattice& Mpsi) {
  if (!validate_chu(c).ok()) raise(ErrorKind::InvalidChu, "not a Chu transform");
  std::vector<std::size_t> map;
  for (const auto& mu : Mphi.concepts()) {
    auto i = Mpsi.lattice.index_of(closure(c.to, ConceptKind::FCA, pushforward(c.F, mu)));
    if (!i) raise(ErrorKind::InvalidStructure, "M(F,G) leaves the concept lattice");
    map.push_back(*i);
  }
  return QFunctor(Mphi.lattice.category, Mpsi.lattice.category, std::move(map));
}

QFunctor K_on_chu(const ChuTransform& c, const ConceptLattice& Kpsi, const ConceptLattice& Kphi) {
  if (!validate_chu(c).ok()) raise(ErrorKind::InvalidChu, "not a Chu transform");
  std::vector<std::size_t> map;
  for (const auto& lam : Kpsi.concepts()) {
    auto i = Kphi.lattice.index_of(closure(c.from, ConceptKind::RST, pushforward(c.G, lam)));
    if (!i) raise(ErrorKind::InvalidStructure, "K(F,G) leaves the concept lattice");
    map.push_back(*i);
  }
  return QFunctor(Kpsi.lattice.category, Kphi.lattice.category, std::move(map));
}

TrChu tr_on_chu(const ChuTransform& c) {
  if (!validate_chu(c).ok()) raise(ErrorKind::InvalidChu, "not a Chu transform");
  auto from = build_Abar(c.from.dom_ptr());
  auto to = build_Abar(c.to.dom_ptr());
  const auto& Q = c.from.Q();
  const auto& A2 = c.to.dom();
  // (F♮)_*: μ ↦ μ↙F♮, (μ↙F♮)(a') = ⋀_a μ(a)↙A'(Fa,a').
  std::vector<std::size_t> map;
  for (const auto& mu : from.cat.objects) {
    Presheaf out{c.to.dom_ptr(), mu.type, {}};
    for (std::size_t x = 0; x < A2.size(); ++x) {
      Arrow acc = Q.top(A2.type(x), mu.type);
      for (std::size_t a = 0; a < c.F.dom().size(); ++a)
        acc = Q.meet(acc, Q.left_imp(mu.values[a], A2(c.F(a), x)));
      out.values.push_back(acc);
    }
    auto i = to.cat.index_of(out);
    if (!i) raise(ErrorKind::InvalidStructure, "(F#)_* leaves Abar'");
    map.push_back(*i);
  }
  auto psi_tr = phi_tr(c.to, to);
  auto phi_tr_ = phi_tr(c.from, from);
  QFunctor down(from.cat.category, to.cat.category, std::move(map));
  ChuTransform chu{std::move(psi_tr), std::move(phi_tr_), c.G, std::move(down)};
  if (!validate_chu(chu).ok()) raise(ErrorKind::InvalidStructure, "tr of a Chu transform is not Chu");
  return TrChu{std::move(from), std::move(to), std::move(chu)};
}

std::optional<std::size_t> underlying_join(const CategoryPtr& X, ObjectId type,
                                           const std::vector<std::size_t>& xs) {
  Presheaf joined = bottom_presheaf(X, type);
  for (auto x : xs) {
    if (X->type(x) != type) raise(ErrorKind::TypeMismatch, "join of objects of different types");
    joined = entrywise_join(joined, yoneda(X, x));
  }
  return sup(*X, joined);
}

bool preserves_joins(const QFunctor& f) {
  const auto& X = f.dom_ptr();
  const auto& Y = f.cod_ptr();
  for (ObjectId q = 0; q < X->Q().size(); ++q) {
    auto bx = underlying_join(X, q, {});
    auto by = underlying_join(Y, q, {});
    if (!bx || !by) return false;
    if (!is_isomorphic(*Y, f(*bx), *by)) return false;
  }
  for (std::size_t x = 0; x < X->size(); ++x)
    for (std::size_t y = x + 1; y < X->size(); ++y) {
      if (X->type(x) != X->type(y)) continue;
      auto j = underlying_join(X, X->type(x), {x, y});
      auto k = underlying_join(Y, X->type(x), {f(x), f(y)});
      if (!j || !k || !is_isomorphic(*Y, f(*j), *k)) return false;
    }
  return true;
}

}  // namespace qfca
