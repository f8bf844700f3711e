#include "qfca/represent.hpp"

#include "qfca/errors.hpp"

namespace qfca {

namespace {

// "" when equal, else the first differing coordinate.
std::string first_difference(const QDistributor& a, const QDistributor& b) {
  if (a.dom().size() != b.dom().size() || a.cod().size() != b.cod().size()) return "shapes differ";
  for (std::size_t x = 0; x < a.dom().size(); ++x)
    for (std::size_t y = 0; y < a.cod().size(); ++y)
      if (a(x, y) != b(x, y))
        return "differs at (" + a.dom().label(x) + ", " + a.cod().label(y) + "): " +
               a.Q().label(a(x, y)) + " vs " + a.Q().label(b(x, y));
  return {};
}

void check_equal(Report& r, const std::string& name, const QDistributor& lhs,
                 const QDistributor& rhs) {
  bool same = same_category(lhs.dom_ptr(), rhs.dom_ptr()) &&
              same_category(lhs.cod_ptr(), rhs.cod_ptr());
  if (!same) {
    r.fail(name, "distributors are not parallel");
    return;
  }
  auto diff = first_difference(lhs, rhs);
  r.check(name, diff.empty(), diff);
}

std::size_t position(const std::vector<std::size_t>& members, const QCategory& A, std::size_t x) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == x) return i;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (is_isomorphic(A, members[i], x)) return i;
  raise(ErrorKind::InvalidStructure, "object " + A.label(x) + " is not a fixed point");
}

bool types_preserved(const QCategory& from, const QCategory& to,
                     const std::vector<std::size_t>& map) {
  if (map.size() != from.size()) return false;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] >= to.size() || to.type(map[i]) != from.type(i)) return false;
  return true;
}

}  // namespace

Subcategory fix_points(const QFunctor& F) {
  if (!same_category(F.dom_ptr(), F.cod_ptr()))
    raise(ErrorKind::TypeMismatch, "fixed points need an endofunctor");
  const auto& A = F.dom();
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < A.size(); ++x)
    if (is_isomorphic(A, F(x), x)) members.push_back(x);
  auto cat = full_subcategory(F.dom_ptr(), members);
  QFunctor inclusion(cat, F.dom_ptr(), members);
  return Subcategory{cat, members, inclusion};
}

AdjunctionData make_adjunction(QFunctor S, QFunctor T) {
  if (!same_category(S.dom_ptr(), T.cod_ptr()) || !same_category(S.cod_ptr(), T.dom_ptr()))
    raise(ErrorKind::NotAdjoint, "S: C -> D and T: D -> C expected");
  if (!is_adjoint_functor_pair(S, T)) raise(ErrorKind::NotAdjoint, "S is not left adjoint to T");
  auto fts = fix_points(compose_functors(T, S));
  auto fst = fix_points(compose_functors(S, T));
  return AdjunctionData{std::move(S), std::move(T), std::move(fts), std::move(fst)};
}

Report verify_fix_equivalence(const AdjunctionData& adj) {
  Report r("fixed point equivalence");
  const auto& C = adj.S.dom();
  const auto& D = adj.S.cod();
  const auto& fc = adj.fix_TS.members;
  const auto& fd = adj.fix_ST.members;
  bool into = true, back = true, round = true;
  for (auto c : fc) {
    auto s = adj.S(c);
    bool found = false;
    for (auto d : fd) found = found || is_isomorphic(D, d, s);
    into = into && found;
    round = round && is_isomorphic(C, adj.T(s), c);
  }
  for (auto d : fd) {
    auto t = adj.T(d);
    bool found = false;
    for (auto c : fc) found = found || is_isomorphic(C, c, t);
    back = back && found;
    round = round && is_isomorphic(D, adj.S(t), d);
  }
  r.check("S maps Fix(TS) into Fix(ST)", into);
  r.check("T maps Fix(ST) into Fix(TS)", back);
  r.check("TS and ST are isomorphic to identities on fixed points", round);
  if (into && back) {
    std::vector<std::size_t> smap, tmap;
    for (auto c : fc) smap.push_back(position(fd, D, adj.S(c)));
    for (auto d : fd) tmap.push_back(position(fc, C, adj.T(d)));
    QFunctor s(adj.fix_TS.cat, adj.fix_ST.cat, smap);
    r.check("restricted S fully faithful", is_fully_faithful(s));
    r.check("restricted S essentially surjective", is_essentially_surjective(s));
  }
  return r;
}

RepresentationPair canonical_general_data(const AdjunctionData& adj) {
  const auto& C = adj.S.dom();
  const auto& members = adj.fix_TS.members;
  std::vector<std::size_t> l, r;
  for (std::size_t c = 0; c < C.size(); ++c) l.push_back(position(members, C, adj.T(adj.S(c))));
  for (std::size_t d = 0; d < adj.T.dom().size(); ++d)
    r.push_back(position(members, C, adj.T(d)));
  return RepresentationPair{QFunctor(adj.S.dom_ptr(), adj.fix_TS.cat, std::move(l)),
                            QFunctor(adj.T.dom_ptr(), adj.fix_TS.cat, std::move(r))};
}

Report verify_general_representation(const AdjunctionData& adj, const QFunctor& L,
                                     const QFunctor& R) {
  Report r("general representation");
  bool shapes = same_category(L.dom_ptr(), adj.S.dom_ptr()) &&
                same_category(R.dom_ptr(), adj.S.cod_ptr()) &&
                same_category(L.cod_ptr(), R.cod_ptr());
  r.check("shapes", shapes, shapes ? "" : "L: C -> X and R: D -> X expected");
  if (!shapes) return r;
  r.check("L essentially surjective", is_essentially_surjective(L));
  r.check("R essentially surjective", is_essentially_surjective(R));
  check_equal(r, "S# = R^# . L#", graph(adj.S), dist_compose(cograph(R), graph(L)));
  if (!r.ok()) return r;
  QFunctor restricted = compose_functors(L, adj.fix_TS.inclusion);
  r.check("L' fully faithful", is_fully_faithful(restricted));
  r.check("L' essentially surjective", is_essentially_surjective(restricted));
  r.check("L is a left adjoint", find_right_adjoint(L).has_value());
  r.check("R is a right adjoint", find_left_adjoint(R).has_value());
  return r;
}

QFunctor construct_fix_equivalence(const AdjunctionData& adj, const QFunctor& L,
                                   const QFunctor& R) {
  auto report = verify_general_representation(adj, L, R);
  auto failed = report.failures();
  if (!failed.empty()) raise(ErrorKind::ConditionFailed, failed.front());
  return compose_functors(L, adj.fix_TS.inclusion);
}

Report verify_type_preserving_representation(const AdjunctionData& adj, const CategoryPtr& X,
                                             const std::vector<std::size_t>& L,
                                             const std::vector<std::size_t>& R) {
  Report r("type-preserving representation");
  const auto& C = adj.S.dom();
  const auto& D = adj.S.cod();
  bool lt = types_preserved(C, *X, L);
  bool rt = types_preserved(D, *X, R);
  r.check("L type-preserving", lt);
  r.check("R type-preserving", rt);
  if (!lt || !rt) return r;
  QFunctor Lf(adj.S.dom_ptr(), X, L);
  QFunctor Rf(adj.S.cod_ptr(), X, R);
  r.check("L essentially surjective", is_essentially_surjective(Lf));
  r.check("R essentially surjective", is_essentially_surjective(Rf));
  std::string diff;
  for (std::size_t c = 0; c < C.size() && diff.empty(); ++c)
    for (std::size_t d = 0; d < D.size() && diff.empty(); ++d)
      if (D(adj.S(c), d) != (*X)(L[c], R[d])) diff = "differs at (" + C.label(c) + ", " + D.label(d) + ")";
  r.check("D(S-,-) = X(L-,R-)", diff.empty(), diff);
  if (!r.ok()) return r;
  r.check("L is a Q-functor", validate_functor(Lf).ok());
  r.check("R is a Q-functor", validate_functor(Rf).ok());
  if (r.ok()) r.merge(verify_general_representation(adj, Lf, Rf), "functor form: ");
  return r;
}

Report verify_dense_representation(const AdjunctionData& adj, const QFunctor& F,
                                   const QFunctor& K, const QFunctor& G, const QFunctor& H,
                                   const DenseOptions& options) {
  Report r("dense representation");
  bool shapes = same_category(F.dom_ptr(), K.dom_ptr()) && same_category(G.dom_ptr(), H.dom_ptr()) &&
                same_category(F.cod_ptr(), G.cod_ptr()) &&
                same_category(K.cod_ptr(), adj.S.dom_ptr()) &&
                same_category(H.cod_ptr(), adj.S.cod_ptr());
  r.check("shapes", shapes, shapes ? "" : "F: A -> X, K: A -> C, G: B -> X, H: B -> D expected");
  if (!shapes) return r;
  if (options.assume_complete) {
    r.note("completeness", "assumed by caller");
  } else {
    r.check("C complete", is_complete(adj.S.dom()));
    r.check("D complete", is_complete(adj.S.cod()));
    r.check("X complete", is_complete(F.cod()));
  }
  r.check("F dense", is_dense(F));
  r.check("K dense", is_dense(K));
  r.check("G codense", is_codense(G));
  r.check("H codense", is_codense(H));
  check_equal(r, "H^# . S# . K# = G^# . F#",
              dist_compose(cograph(H), dist_compose(graph(adj.S), graph(K))),
              dist_compose(cograph(G), graph(F)));
  if (!options.construct || !r.ok()) return r;
  try {
    QFunctor L = lan(K, F);
    QFunctor R = ran(H, G);
    r.pass("Kan extensions exist");
    r.merge(verify_general_representation(adj, L, R), "sufficiency: ");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ColimitMissing) throw;
    r.fail("Kan extensions exist", e.what());
  }
  return r;
}

RepresentationData canonical_mphi_data(const QDistributor& phi, const ConceptLattice& M) {
  if (M.kind != ConceptKind::FCA) raise(ErrorKind::InvalidParams, "an FCA concept lattice is required");
  const auto& A = phi.dom_ptr();
  const auto& B = phi.cod_ptr();
  std::vector<std::size_t> f, g;
  for (std::size_t a = 0; a < A->size(); ++a) {
    auto i = M.lattice.index_of(closure(phi, ConceptKind::FCA, yoneda(A, a)));
    if (!i) raise(ErrorKind::InvalidStructure, "closure of a representable is not a concept");
    f.push_back(*i);
  }
  for (std::size_t b = 0; b < B->size(); ++b) {
    auto i = M.lattice.index_of(isbell_down(phi, coyoneda(B, b)));
    if (!i) raise(ErrorKind::InvalidStructure, "column of phi is not a concept");
    g.push_back(*i);
  }
  return RepresentationData{QFunctor(A, M.lattice.category, std::move(f)),
                            QFunctor(B, M.lattice.category, std::move(g))};
}

RepresentationData canonical_kphi_data(const QDistributor& phi, const ConceptLattice& K,
                                       const AbarCategory& abar) {
  if (K.kind != ConceptKind::RST) raise(ErrorKind::InvalidParams, "an RST concept lattice is required");
  const auto& B = phi.cod_ptr();
  std::vector<std::size_t> f, g;
  for (std::size_t b = 0; b < B->size(); ++b) {
    auto i = K.lattice.index_of(closure(phi, ConceptKind::RST, yoneda(B, b)));
    if (!i) raise(ErrorKind::InvalidStructure, "closure of a representable is not fixed");
    f.push_back(*i);
  }
  for (const auto& mu : abar.cat.objects) {
    auto i = K.lattice.index_of(kan_lower(phi, mu));
    if (!i) raise(ErrorKind::InvalidStructure, "image of Abar is not fixed");
    g.push_back(*i);
  }
  return RepresentationData{QFunctor(B, K.lattice.category, std::move(f)),
                            QFunctor(abar.cat.category, K.lattice.category, std::move(g))};
}

Report verify_mphi_representation(const QDistributor& phi, const QFunctor& F, const QFunctor& G) {
  Report r("M(phi) representation");
  bool shapes = same_category(F.dom_ptr(), phi.dom_ptr()) &&
                same_category(G.dom_ptr(), phi.cod_ptr()) && same_category(F.cod_ptr(), G.cod_ptr());
  r.check("shapes", shapes, shapes ? "" : "F: A -> X and G: B -> X expected");
  if (!shapes) return r;
  r.check("X separated", is_separated(F.cod()));
  r.check("X complete", is_complete(F.cod()));
  r.check("F dense", is_dense(F));
  r.check("G codense", is_codense(G));
  check_equal(r, "phi = G^# . F#", phi, dist_compose(cograph(G), graph(F)));
  return r;
}

Report verify_kphi_representation(const QDistributor& phi, const QFunctor& F, const QFunctor& G) {
  Report r("K(phi) representation");
  const auto abar = build_Abar(phi.dom_ptr());
  bool shapes = same_category(F.dom_ptr(), phi.cod_ptr()) &&
                same_category(G.dom_ptr(), abar.cat.category) &&
                same_category(F.cod_ptr(), G.cod_ptr());
  r.check("shapes", shapes, shapes ? "" : "F: B -> X and G: Abar -> X expected");
  if (!shapes) return r;
  r.check("X separated", is_separated(F.cod()));
  r.check("X complete", is_complete(F.cod()));
  r.check("F dense", is_dense(F));
  r.check("G codense", is_codense(G));
  check_equal(r, "phi^tr = G^# . F#", phi_tr(phi, abar), dist_compose(cograph(G), graph(F)));
  return r;
}

ProductTypedSet product_typed_set(const CategoryPtr& A, ProductFlavor flavor) {
  const auto& Q = A->Q();
  ProductTypedSet out;
  out.flavor = flavor;
  out.base = A;
  TypedSet set;
  for (std::size_t a = 0; a < A->size(); ++a)
    for (ObjectId q = 0; q < Q.size(); ++q) {
      auto arrows = flavor == ProductFlavor::Dom ? Q.arrows(A->type(a), q) : Q.arrows(q, A->type(a));
      for (auto u : arrows) {
        out.pairs.emplace_back(a, u);
        set.labels.push_back("(" + A->label(a) + "," + Q.qualified_label(u) + ")");
        set.types.push_back(q);
      }
    }
  out.category = discrete_category(A->quantaloid(), set);
  return out;
}

Presheaf generator_U(const CategoryPtr& A, std::size_t a, Arrow u) {
  Presheaf p{A, u.dst, {}};
  for (std::size_t x = 0; x < A->size(); ++x) p.values.push_back(A->Q().compose(u, (*A)(x, a)));
  return p;
}

Presheaf generator_N(const CategoryPtr& A, std::size_t a, Arrow u) {
  Presheaf p{A, u.dst, {}};
  for (std::size_t x = 0; x < A->size(); ++x) p.values.push_back(A->Q().left_imp(u, (*A)(a, x)));
  return p;
}

Copresheaf generator_Ud(const CategoryPtr& A, std::size_t a, Arrow u) {
  Copresheaf p{A, u.src, {}};
  for (std::size_t x = 0; x < A->size(); ++x) p.values.push_back(A->Q().compose((*A)(a, x), u));
  return p;
}

Copresheaf generator_Nd(const CategoryPtr& A, std::size_t a, Arrow u) {
  Copresheaf p{A, u.src, {}};
  for (std::size_t x = 0; x < A->size(); ++x) p.values.push_back(A->Q().right_imp((*A)(x, a), u));
  return p;
}

GeneratorMaps build_generator_maps(const CategoryPtr& A, const Budget& budget) {
  auto dom_set = product_typed_set(A, ProductFlavor::Dom);
  auto cod_set = product_typed_set(A, ProductFlavor::Cod);
  auto PA = materialize_PA(A, budget);
  auto PdA = materialize_PdA(A, budget);
  auto build = [](const auto& set, const auto& target, auto gen) {
    std::vector<std::size_t> map;
    for (auto [a, u] : set.pairs) {
      auto i = target.index_of(gen(set.base, a, u));
      if (!i) raise(ErrorKind::InvalidStructure, "generator image missing from the materialized category");
      map.push_back(*i);
    }
    return QFunctor(set.category, target.category, std::move(map));
  };
  QFunctor U = build(dom_set, PA, generator_U);
  QFunctor N = build(dom_set, PA, generator_N);
  QFunctor Ud = build(cod_set, PdA, generator_Ud);
  QFunctor Nd = build(cod_set, PdA, generator_Nd);
  Report density("generator maps");
  density.check("U_A join-dense", is_join_dense(U));
  density.check("N_A meet-dense", is_meet_dense(N));
  density.check("U^dag_A meet-dense", is_meet_dense(Ud));
  density.check("N^dag_A join-dense", is_join_dense(Nd));
  auto abar = build_Abar(A);
  std::vector<Presheaf> image;
  for (auto i : N.map()) {
    bool dup = false;
    for (const auto& p : image) dup = dup || p == PA.objects[i];
    if (!dup) image.push_back(PA.objects[i]);
  }
  density.check("Im N_A = Abar", same_concepts(image, abar.cat.objects));
  return GeneratorMaps{std::move(dom_set), std::move(cod_set), std::move(PA), std::move(PdA),
                       std::move(U), std::move(N), std::move(Ud), std::move(Nd), std::move(density)};
}

Report verify_elementary_identities(const QDistributor& phi) {
  Report r("elementary identities");
  const auto& Q = phi.Q();
  const auto& A = phi.dom_ptr();
  const auto& B = phi.cod_ptr();
  const auto Adom = product_typed_set(A, ProductFlavor::Dom);
  const auto Bdom = product_typed_set(B, ProductFlavor::Dom);
  const auto Bcod = product_typed_set(B, ProductFlavor::Cod);
  std::size_t n1 = 0, bad1 = 0, n2 = 0, bad2 = 0;
  std::string d1, d2;
  for (auto [a, u] : Adom.pairs) {
    const auto up = isbell_up(phi, generator_U(A, a, u));
    for (auto [b, v] : Bcod.pairs) {
      ++n1;
      Arrow lhs = copresheaf_hom(up, generator_Ud(B, b, v));
      Arrow rhs = Q.right_imp(v, Q.left_imp(phi(a, b), u));
      if (lhs != rhs && bad1++ == 0)
        d1 = "differs at a=" + A->label(a) + ", u=" + Q.label(u) + ", b=" + B->label(b) +
             ", v=" + Q.label(v);
    }
    const auto n = generator_N(A, a, u);
    for (auto [b, v] : Bdom.pairs) {
      ++n2;
      Arrow lhs = presheaf_hom(kan_star(phi, generator_U(B, b, v)), n);
      Arrow rhs = Q.left_imp(Q.left_imp(u, phi(a, b)), v);
      if (lhs != rhs && bad2++ == 0)
        d2 = "differs at a=" + A->label(a) + ", u=" + Q.label(u) + ", b=" + B->label(b) +
             ", v=" + Q.label(v);
    }
  }
  r.check("(phi_up)#(U(a,u), U^dag(b,v)) = v \\ (phi(a,b) / u)", bad1 == 0, d1);
  r.check("(phi^*)#(U(b,v), N(a,u)) = (u / phi(a,b)) / v", bad2 == 0, d2);
  r.note("isbell instances", std::to_string(n1));
  r.note("kan instances", std::to_string(n2));
  return r;
}

Report verify_elementary_representation(const QDistributor& phi, const CategoryPtr& X,
                                        const std::vector<std::size_t>& F,
                                        const std::vector<std::size_t>& G, ConceptKind kind) {
  const bool fca = kind == ConceptKind::FCA;
  Report r(fca ? "elementary M(phi) representation" : "elementary K(phi) representation");
  const auto& Q = phi.Q();
  const auto Fset = fca ? product_typed_set(phi.dom_ptr(), ProductFlavor::Dom)
                        : product_typed_set(phi.cod_ptr(), ProductFlavor::Dom);
  const auto Gset = fca ? product_typed_set(phi.cod_ptr(), ProductFlavor::Cod)
                        : product_typed_set(phi.dom_ptr(), ProductFlavor::Dom);
  bool ft = types_preserved(*Fset.category, *X, F);
  bool gt = types_preserved(*Gset.category, *X, G);
  r.check("F type-preserving", ft);
  r.check("G type-preserving", gt);
  if (!ft || !gt) return r;
  r.check("X separated", is_separated(*X));
  r.check("X complete", is_complete(*X));
  r.check("F join-dense", is_join_dense(QFunctor(Fset.category, X, F)));
  r.check("G meet-dense", is_meet_dense(QFunctor(Gset.category, X, G)));
  std::string diff;
  for (std::size_t i = 0; i < Fset.pairs.size() && diff.empty(); ++i)
    for (std::size_t j = 0; j < Gset.pairs.size() && diff.empty(); ++j) {
      Arrow expected;
      if (fca) {
        auto [a, u] = Fset.pairs[i];
        auto [b, v] = Gset.pairs[j];
        expected = Q.right_imp(v, Q.left_imp(phi(a, b), u));
      } else {
        auto [b, v] = Fset.pairs[i];
        auto [a, u] = Gset.pairs[j];
        expected = Q.left_imp(Q.left_imp(u, phi(a, b)), v);
      }
      if ((*X)(F[i], G[j]) != expected)
        diff = "differs at (" + Fset.category->label(i) + ", " + Gset.category->label(j) + ")";
    }
  r.check("hom identity", diff.empty(), diff);
  return r;
}

ElementaryData canonical_elementary_data(const QDistributor& phi, const ConceptLattice& X) {
  ElementaryData out;
  auto put = [&](std::vector<std::size_t>& m, const Presheaf& p) {
    auto i = X.lattice.index_of(p);
    if (!i) raise(ErrorKind::InvalidStructure, "generator image is not in the concept lattice");
    m.push_back(*i);
  };
  if (X.kind == ConceptKind::FCA) {
    const auto& A = phi.dom_ptr();
    const auto& B = phi.cod_ptr();
    for (auto [a, u] : product_typed_set(A, ProductFlavor::Dom).pairs)
      put(out.F, closure(phi, ConceptKind::FCA, generator_U(A, a, u)));
    for (auto [b, v] : product_typed_set(B, ProductFlavor::Cod).pairs)
      put(out.G, isbell_down(phi, generator_Ud(B, b, v)));
  } else {
    const auto& A = phi.dom_ptr();
    const auto& B = phi.cod_ptr();
    for (auto [b, v] : product_typed_set(B, ProductFlavor::Dom).pairs)
      put(out.F, closure(phi, ConceptKind::RST, generator_U(B, b, v)));
    for (auto [a, u] : product_typed_set(A, ProductFlavor::Dom).pairs)
      put(out.G, kan_lower(phi, generator_N(A, a, u)));
  }
  return out;
}

Report quantale_corollary_check(const QDistributor& phi, const CategoryPtr& X,
                                const std::vector<std::size_t>& F,
                                const std::vector<std::size_t>& G, ConceptKind kind) {
  const auto& Q = phi.Q();
  if (Q.size() != 1) raise(ErrorKind::NotAQuantale, "the quantaloid has more than one object");
  Report r("quantale corollary");
  r.merge(verify_elementary_representation(phi, X, F, G, kind));
  if (!r.checks().empty() && (r.has_failure("F type-preserving") || r.has_failure("G type-preserving")))
    return r;
  const bool fca = kind == ConceptKind::FCA;
  const auto Fset = product_typed_set(fca ? phi.dom_ptr() : phi.cod_ptr(), ProductFlavor::Dom);
  const auto Gset = fca ? product_typed_set(phi.cod_ptr(), ProductFlavor::Cod)
                        : product_typed_set(phi.dom_ptr(), ProductFlavor::Dom);
  std::string diff;
  for (std::size_t i = 0; i < Fset.pairs.size() && diff.empty(); ++i)
    for (std::size_t j = 0; j < Gset.pairs.size() && diff.empty(); ++j) {
      bool lhs;
      if (fca) {
        auto [a, u] = Fset.pairs[i];
        auto [b, v] = Gset.pairs[j];
        lhs = Q.leq(Q.compose(v, u), phi(a, b));
      } else {
        auto [b, v] = Fset.pairs[i];
        auto [a, u] = Gset.pairs[j];
        lhs = Q.leq(phi(a, b), Q.right_imp(v, u));
      }
      if (lhs != is_below(*X, F[i], G[j]))
        diff = "fails at (" + Fset.category->label(i) + ", " + Gset.category->label(j) + ")";
    }
  r.check(fca ? "v.u <= phi(a,b) iff F(a,u) <= G(b,v)" : "phi(a,b) <= v \\ u iff F(b,v) <= G(a,u)",
          diff.empty(), diff);
  return r;
}

}  // namespace qfca
