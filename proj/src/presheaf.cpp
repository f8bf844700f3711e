#include "qfca/presheaf.hpp"

#include "qfca/errors.hpp"

namespace qfca {

namespace {

std::string encode(ObjectId type, const std::vector<Arrow>& values) {
  std::string key = std::to_string(type) + ":";
  for (auto a : values) {
    key += std::to_string(a.index);
    key += ',';
  }
  return key;
}

void require_same_base(const CategoryPtr& a, const CategoryPtr& b) {
  if (!same_category(a, b)) raise(ErrorKind::BaseMismatch, "presheaves over different bases");
}

template <class P>
P combine(const P& a, const P& b, bool join) {
  require_same_base(a.base, b.base);
  if (a.type != b.type) raise(ErrorKind::TypeMismatch, "presheaves of different types");
  const auto& Q = a.base->Q();
  P out{a.base, a.type, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = join ? Q.join(a.values[i], b.values[i]) : Q.meet(a.values[i], b.values[i]);
  return out;
}

template <class P>
bool leq_values(const P& a, const P& b) {
  require_same_base(a.base, b.base);
  if (a.type != b.type) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!a.base->Q().leq(a.values[i], b.values[i])) return false;
  return true;
}

// Size of the raw vector space, saturated far above any cap.
unsigned __int128 space_size(const QCategory& A, ObjectId q, bool co) {
  unsigned __int128 total = 1;
  const unsigned __int128 ceiling = static_cast<unsigned __int128>(1) << 100;
  for (std::size_t a = 0; a < A.size() && total < ceiling; ++a)
    total *= co ? A.Q().hom(q, A.type(a)).size() : A.Q().hom(A.type(a), q).size();
  return total;
}

template <class P>
void enumerate(const CategoryPtr& A, ObjectId q, const Budget& budget, bool co,
               const std::function<void(const P&)>& visit) {
  const auto& Q = A->Q();
  const auto count = space_size(*A, q, co);
  if (count > budget.presheaf_enumeration) {
    const bool exact = count <= static_cast<unsigned __int128>(UINT64_MAX);
    raise(ErrorKind::BudgetExceeded,
          "enumeration space of " +
              (exact ? std::to_string(static_cast<std::uint64_t>(count)) : std::string("over 2^64")) +
              " vectors exceeds the cap of " + std::to_string(budget.presheaf_enumeration));
  }
  const std::size_t n = A->size();
  P cur{A, q, std::vector<Arrow>(n)};
  // Law between positions a and b, both assigned.
  auto consistent = [&](std::size_t a, std::size_t b) {
    if (!co) return Q.leq(Q.compose(cur.values[a], (*A)(b, a)), cur.values[b]);
    return Q.leq(Q.compose((*A)(a, b), cur.values[a]), cur.values[b]);
  };
  std::function<void(std::size_t)> go = [&](std::size_t a) {
    if (a == n) {
      visit(cur);
      return;
    }
    const ObjectId src = co ? q : A->type(a);
    const ObjectId dst = co ? A->type(a) : q;
    for (std::uint32_t i = 0; i < Q.hom(src, dst).size(); ++i) {
      cur.values[a] = Arrow{src, dst, i};
      bool ok = consistent(a, a);
      for (std::size_t b = 0; b < a && ok; ++b) ok = consistent(a, b) && consistent(b, a);
      if (ok) go(a + 1);
    }
  };
  go(0);
}

}  // namespace

bool operator==(const Presheaf& a, const Presheaf& b) {
  return a.type == b.type && a.values == b.values && same_category(a.base, b.base);
}

bool operator==(const Copresheaf& a, const Copresheaf& b) {
  return a.type == b.type && a.values == b.values && same_category(a.base, b.base);
}

Presheaf make_presheaf(CategoryPtr base, ObjectId type, std::vector<Arrow> values) {
  if (values.size() != base->size()) raise(ErrorKind::InvalidStructure, "presheaf length");
  for (std::size_t a = 0; a < values.size(); ++a)
    if (values[a].src != base->type(a) || values[a].dst != type)
      raise(ErrorKind::TypeMismatch, "presheaf value at " + base->label(a) + " is misplaced");
  return Presheaf{std::move(base), type, std::move(values)};
}

Copresheaf make_copresheaf(CategoryPtr base, ObjectId type, std::vector<Arrow> values) {
  if (values.size() != base->size()) raise(ErrorKind::InvalidStructure, "copresheaf length");
  for (std::size_t a = 0; a < values.size(); ++a)
    if (values[a].src != type || values[a].dst != base->type(a))
      raise(ErrorKind::TypeMismatch, "copresheaf value at " + base->label(a) + " is misplaced");
  return Copresheaf{std::move(base), type, std::move(values)};
}

bool satisfies_presheaf_law(const Presheaf& mu) {
  const auto& A = *mu.base;
  const auto& Q = A.Q();
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b)
      if (!Q.leq(Q.compose(mu.values[a], A(b, a)), mu.values[b])) return false;
  return true;
}

bool satisfies_copresheaf_law(const Copresheaf& lambda) {
  const auto& A = *lambda.base;
  const auto& Q = A.Q();
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b)
      if (!Q.leq(Q.compose(A(a, b), lambda.values[a]), lambda.values[b])) return false;
  return true;
}

std::string render_values(const QCategory& base, const std::vector<Arrow>& values) {
  std::string s;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (a) s += ", ";
    s += base.label(a) + ":" + base.Q().label(values[a]);
  }
  return s;
}

std::string render(const Presheaf& mu) { return render_values(*mu.base, mu.values); }
std::string render(const Copresheaf& lambda) { return render_values(*lambda.base, lambda.values); }

Arrow presheaf_hom(const Presheaf& mu, const Presheaf& nu) {
  require_same_base(mu.base, nu.base);
  const auto& Q = mu.base->Q();
  Arrow acc = Q.top(mu.type, nu.type);
  for (std::size_t a = 0; a < mu.values.size(); ++a)
    acc = Q.meet(acc, Q.left_imp(nu.values[a], mu.values[a]));
  return acc;
}

Arrow copresheaf_hom(const Copresheaf& l1, const Copresheaf& l2) {
  require_same_base(l1.base, l2.base);
  const auto& Q = l1.base->Q();
  Arrow acc = Q.top(l1.type, l2.type);
  for (std::size_t a = 0; a < l1.values.size(); ++a)
    acc = Q.meet(acc, Q.right_imp(l2.values[a], l1.values[a]));
  return acc;
}

Presheaf yoneda(const CategoryPtr& A, std::size_t a) {
  Presheaf mu{A, A->type(a), std::vector<Arrow>(A->size())};
  for (std::size_t x = 0; x < A->size(); ++x) mu.values[x] = (*A)(x, a);
  return mu;
}

Copresheaf coyoneda(const CategoryPtr& A, std::size_t a) {
  Copresheaf lam{A, A->type(a), std::vector<Arrow>(A->size())};
  for (std::size_t x = 0; x < A->size(); ++x) lam.values[x] = (*A)(a, x);
  return lam;
}

Presheaf top_presheaf(const CategoryPtr& A, ObjectId q) {
  Presheaf mu{A, q, {}};
  for (std::size_t a = 0; a < A->size(); ++a) mu.values.push_back(A->Q().top(A->type(a), q));
  return mu;
}

Presheaf bottom_presheaf(const CategoryPtr& A, ObjectId q) {
  Presheaf mu{A, q, {}};
  for (std::size_t a = 0; a < A->size(); ++a) mu.values.push_back(A->Q().bottom(A->type(a), q));
  return mu;
}

Copresheaf top_copresheaf(const CategoryPtr& A, ObjectId q) {
  Copresheaf l{A, q, {}};
  for (std::size_t a = 0; a < A->size(); ++a) l.values.push_back(A->Q().top(q, A->type(a)));
  return l;
}

Copresheaf bottom_copresheaf(const CategoryPtr& A, ObjectId q) {
  Copresheaf l{A, q, {}};
  for (std::size_t a = 0; a < A->size(); ++a) l.values.push_back(A->Q().bottom(q, A->type(a)));
  return l;
}

Presheaf entrywise_meet(const Presheaf& a, const Presheaf& b) { return combine(a, b, false); }
Presheaf entrywise_join(const Presheaf& a, const Presheaf& b) { return combine(a, b, true); }
Copresheaf entrywise_meet(const Copresheaf& a, const Copresheaf& b) { return combine(a, b, false); }
Copresheaf entrywise_join(const Copresheaf& a, const Copresheaf& b) { return combine(a, b, true); }
bool entrywise_leq(const Presheaf& a, const Presheaf& b) { return leq_values(a, b); }
bool entrywise_leq(const Copresheaf& a, const Copresheaf& b) { return leq_values(a, b); }

QDistributor as_distributor(const Presheaf& mu) {
  auto one = singleton_category(mu.base->quantaloid(), mu.type);
  return QDistributor(mu.base, one, mu.values);
}

QDistributor as_distributor(const Copresheaf& lam) {
  auto one = singleton_category(lam.base->quantaloid(), lam.type);
  return QDistributor(one, lam.base, lam.values);
}

Presheaf column_presheaf(const QDistributor& phi, std::size_t b) {
  Presheaf mu{phi.dom_ptr(), phi.cod().type(b), {}};
  for (std::size_t a = 0; a < phi.dom().size(); ++a) mu.values.push_back(phi(a, b));
  return mu;
}

Copresheaf row_copresheaf(const QDistributor& phi, std::size_t a) {
  Copresheaf lam{phi.cod_ptr(), phi.dom().type(a), {}};
  for (std::size_t b = 0; b < phi.cod().size(); ++b) lam.values.push_back(phi(a, b));
  return lam;
}

std::optional<std::size_t> weighted_colimit(const Presheaf& mu, const QFunctor& F) {
  require_same_base(mu.base, F.dom_ptr());
  const auto& X = F.dom();
  const auto& A = F.cod();
  const auto& Q = A.Q();
  std::vector<Arrow> row(A.size());
  for (std::size_t y = 0; y < A.size(); ++y) {
    Arrow acc = Q.top(mu.type, A.type(y));
    for (std::size_t x = 0; x < X.size(); ++x)
      acc = Q.meet(acc, Q.left_imp(A(F(x), y), mu.values[x]));
    row[y] = acc;
  }
  return A.find_row(row);
}

std::optional<std::size_t> weighted_limit(const Copresheaf& lambda, const QFunctor& F) {
  require_same_base(lambda.base, F.dom_ptr());
  const auto& X = F.dom();
  const auto& A = F.cod();
  const auto& Q = A.Q();
  std::vector<Arrow> col(A.size());
  for (std::size_t y = 0; y < A.size(); ++y) {
    Arrow acc = Q.top(A.type(y), lambda.type);
    for (std::size_t x = 0; x < X.size(); ++x)
      acc = Q.meet(acc, Q.right_imp(lambda.values[x], A(y, F(x))));
    col[y] = acc;
  }
  return A.find_column(col);
}

std::optional<std::size_t> sup(const QCategory& A, const Presheaf& mu) {
  if (mu.base.get() != &A && !same_category(*mu.base, A))
    raise(ErrorKind::BaseMismatch, "presheaf is not on this category");
  const auto& Q = A.Q();
  std::vector<Arrow> row(A.size());
  for (std::size_t y = 0; y < A.size(); ++y) {
    Arrow acc = Q.top(mu.type, A.type(y));
    for (std::size_t a = 0; a < A.size(); ++a)
      acc = Q.meet(acc, Q.left_imp(A(a, y), mu.values[a]));
    row[y] = acc;
  }
  return A.find_row(row);
}

std::optional<std::size_t> inf(const QCategory& A, const Copresheaf& lambda) {
  if (lambda.base.get() != &A && !same_category(*lambda.base, A))
    raise(ErrorKind::BaseMismatch, "copresheaf is not on this category");
  const auto& Q = A.Q();
  std::vector<Arrow> col(A.size());
  for (std::size_t y = 0; y < A.size(); ++y) {
    Arrow acc = Q.top(A.type(y), lambda.type);
    for (std::size_t a = 0; a < A.size(); ++a)
      acc = Q.meet(acc, Q.right_imp(lambda.values[a], A(y, a)));
    col[y] = acc;
  }
  return A.find_column(col);
}

Presheaf pushforward(const QFunctor& F, const Presheaf& mu) {
  require_same_base(mu.base, F.dom_ptr());
  const auto& A = F.cod();
  const auto& Q = A.Q();
  Presheaf out{F.cod_ptr(), mu.type, {}};
  for (std::size_t a = 0; a < A.size(); ++a) {
    Arrow acc = Q.bottom(A.type(a), mu.type);
    for (std::size_t x = 0; x < F.dom().size(); ++x)
      acc = Q.join(acc, Q.compose(mu.values[x], A(a, F(x))));
    out.values.push_back(acc);
  }
  return out;
}

Copresheaf copushforward(const QFunctor& F, const Copresheaf& lambda) {
  require_same_base(lambda.base, F.dom_ptr());
  const auto& A = F.cod();
  const auto& Q = A.Q();
  Copresheaf out{F.cod_ptr(), lambda.type, {}};
  for (std::size_t a = 0; a < A.size(); ++a) {
    Arrow acc = Q.bottom(lambda.type, A.type(a));
    for (std::size_t x = 0; x < F.dom().size(); ++x)
      acc = Q.join(acc, Q.compose(A(F(x), a), lambda.values[x]));
    out.values.push_back(acc);
  }
  return out;
}

QFunctor lan(const QFunctor& K, const QFunctor& F) {
  if (!same_category(K.dom_ptr(), F.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "Kan extension needs functors with a common domain");
  const auto& B = K.cod();
  std::vector<std::size_t> map(B.size());
  for (std::size_t b = 0; b < B.size(); ++b) {
    Presheaf weight{K.dom_ptr(), B.type(b), {}};
    for (std::size_t a = 0; a < K.dom().size(); ++a) weight.values.push_back(B(K(a), b));
    auto c = weighted_colimit(weight, F);
    if (!c) raise(ErrorKind::ColimitMissing, "no colimit at " + B.label(b));
    map[b] = *c;
  }
  QFunctor G(K.cod_ptr(), F.cod_ptr(), std::move(map));
  if (!(graph(G) == dist_left_imp(graph(F), graph(K))))
    raise(ErrorKind::InvalidStructure, "left Kan extension violates its graph identity");
  return G;
}

QFunctor ran(const QFunctor& H, const QFunctor& G) {
  if (!same_category(H.dom_ptr(), G.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "Kan extension needs functors with a common domain");
  const auto& B = H.cod();
  std::vector<std::size_t> map(B.size());
  for (std::size_t b = 0; b < B.size(); ++b) {
    Copresheaf weight{H.dom_ptr(), B.type(b), {}};
    for (std::size_t a = 0; a < H.dom().size(); ++a) weight.values.push_back(B(b, H(a)));
    auto l = weighted_limit(weight, G);
    if (!l) raise(ErrorKind::ColimitMissing, "no limit at " + B.label(b));
    map[b] = *l;
  }
  QFunctor R(H.cod_ptr(), G.cod_ptr(), std::move(map));
  if (!(cograph(R) == dist_right_imp(cograph(H), cograph(G))))
    raise(ErrorKind::InvalidStructure, "right Kan extension violates its cograph identity");
  return R;
}

bool is_dense(const QFunctor& F) {
  const auto& A = F.dom();
  const auto& B = F.cod();
  const auto& Q = B.Q();
  for (std::size_t y = 0; y < B.size(); ++y)
    for (std::size_t y2 = 0; y2 < B.size(); ++y2) {
      Arrow acc = Q.top(B.type(y), B.type(y2));
      for (std::size_t a = 0; a < A.size(); ++a)
        acc = Q.meet(acc, Q.left_imp(B(F(a), y2), B(F(a), y)));
      if (acc != B(y, y2)) return false;
    }
  return true;
}

bool is_codense(const QFunctor& F) {
  const auto& A = F.dom();
  const auto& B = F.cod();
  const auto& Q = B.Q();
  for (std::size_t y = 0; y < B.size(); ++y)
    for (std::size_t y2 = 0; y2 < B.size(); ++y2) {
      Arrow acc = Q.top(B.type(y), B.type(y2));
      for (std::size_t a = 0; a < A.size(); ++a)
        acc = Q.meet(acc, Q.right_imp(B(y2, F(a)), B(y, F(a))));
      if (acc != B(y, y2)) return false;
    }
  return true;
}

bool is_join_dense(const QFunctor& F) {
  const auto& X = F.cod_ptr();
  for (std::size_t y = 0; y < X->size(); ++y) {
    Presheaf joined = bottom_presheaf(X, X->type(y));
    for (std::size_t d = 0; d < F.dom().size(); ++d)
      if (is_below(*X, F(d), y)) joined = entrywise_join(joined, yoneda(X, F(d)));
    auto j = sup(*X, joined);
    if (!j || !is_isomorphic(*X, *j, y)) return false;
  }
  return true;
}

bool is_meet_dense(const QFunctor& F) {
  const auto& X = F.cod_ptr();
  for (std::size_t y = 0; y < X->size(); ++y) {
    Copresheaf joined = bottom_copresheaf(X, X->type(y));
    for (std::size_t d = 0; d < F.dom().size(); ++d)
      if (is_below(*X, y, F(d))) joined = entrywise_join(joined, coyoneda(X, F(d)));
    auto m = inf(*X, joined);
    if (!m || !is_isomorphic(*X, *m, y)) return false;
  }
  return true;
}

void for_each_presheaf(const CategoryPtr& A, ObjectId q, const Budget& budget,
                       const std::function<void(const Presheaf&)>& visit) {
  enumerate<Presheaf>(A, q, budget, false, visit);
}

void for_each_copresheaf(const CategoryPtr& A, ObjectId q, const Budget& budget,
                         const std::function<void(const Copresheaf&)>& visit) {
  enumerate<Copresheaf>(A, q, budget, true, visit);
}

std::vector<Presheaf> enumerate_presheaves(const CategoryPtr& A, ObjectId q,
                                           const Budget& budget) {
  std::vector<Presheaf> out;
  for_each_presheaf(A, q, budget, [&](const Presheaf& p) { out.push_back(p); });
  return out;
}

std::vector<Copresheaf> enumerate_copresheaves(const CategoryPtr& A, ObjectId q,
                                               const Budget& budget) {
  std::vector<Copresheaf> out;
  for_each_copresheaf(A, q, budget, [&](const Copresheaf& p) { out.push_back(p); });
  return out;
}

template <class P>
std::optional<std::size_t> Materialized<P>::index_of(const P& p) const {
  if (!same_category(p.base, base)) return std::nullopt;
  auto it = index.find(encode(p.type, p.values));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

template struct Materialized<Presheaf>;
template struct Materialized<Copresheaf>;

namespace {

template <class P, class HomFn>
Materialized<P> build_materialized(const CategoryPtr& base, std::vector<P> objects, HomFn hom) {
  Materialized<P> m;
  m.base = base;
  const auto& Q = base->Q();
  std::vector<std::string> labels;
  std::vector<ObjectId> types;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    require_same_base(objects[i].base, base);
    auto key = encode(objects[i].type, objects[i].values);
    if (!m.index.emplace(key, i).second)
      raise(ErrorKind::InvalidStructure, "duplicate object in materialized category");
    std::string label = "{" + render(objects[i]) + "}";
    if (Q.size() > 1) label += "@" + Q.object_label(objects[i].type);
    labels.push_back(std::move(label));
    types.push_back(objects[i].type);
  }
  std::vector<Arrow> homs;
  homs.reserve(objects.size() * objects.size());
  for (const auto& a : objects)
    for (const auto& b : objects) homs.push_back(hom(a, b));
  m.category = QCategory::make(base->quantaloid(), std::move(labels), std::move(types),
                               std::move(homs));
  m.objects = std::move(objects);
  return m;
}

}  // namespace

PresheafCategory presheaf_subcategory(const CategoryPtr& base, std::vector<Presheaf> objects) {
  return build_materialized(base, std::move(objects), presheaf_hom);
}

CopresheafCategory copresheaf_subcategory(const CategoryPtr& base,
                                          std::vector<Copresheaf> objects) {
  return build_materialized(base, std::move(objects), copresheaf_hom);
}

PresheafCategory materialize_PA(const CategoryPtr& A, const Budget& budget) {
  std::vector<Presheaf> all;
  for (ObjectId q = 0; q < A->Q().size(); ++q)
    for_each_presheaf(A, q, budget, [&](const Presheaf& p) { all.push_back(p); });
  return presheaf_subcategory(A, std::move(all));
}

CopresheafCategory materialize_PdA(const CategoryPtr& A, const Budget& budget) {
  std::vector<Copresheaf> all;
  for (ObjectId q = 0; q < A->Q().size(); ++q)
    for_each_copresheaf(A, q, budget, [&](const Copresheaf& p) { all.push_back(p); });
  return copresheaf_subcategory(A, std::move(all));
}

QFunctor yoneda_functor(const PresheafCategory& PA) {
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < PA.base->size(); ++a) {
    auto i = PA.index_of(yoneda(PA.base, a));
    if (!i) raise(ErrorKind::InvalidStructure, "representable missing from the presheaf category");
    map.push_back(*i);
  }
  return QFunctor(PA.base, PA.category, std::move(map));
}

QFunctor coyoneda_functor(const CopresheafCategory& PdA) {
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < PdA.base->size(); ++a) {
    auto i = PdA.index_of(coyoneda(PdA.base, a));
    if (!i) raise(ErrorKind::InvalidStructure, "representable missing from the copresheaf category");
    map.push_back(*i);
  }
  return QFunctor(PdA.base, PdA.category, std::move(map));
}

QFunctor sup_functor(const PresheafCategory& PA) {
  std::vector<std::size_t> map;
  for (const auto& mu : PA.objects) {
    auto s = sup(*PA.base, mu);
    if (!s) raise(ErrorKind::ColimitMissing, "no supremum for {" + render(mu) + "}");
    map.push_back(*s);
  }
  return QFunctor(PA.category, PA.base, std::move(map));
}

QFunctor inf_functor(const CopresheafCategory& PdA) {
  std::vector<std::size_t> map;
  for (const auto& lam : PdA.objects) {
    auto s = inf(*PdA.base, lam);
    if (!s) raise(ErrorKind::ColimitMissing, "no infimum for {" + render(lam) + "}");
    map.push_back(*s);
  }
  return QFunctor(PdA.category, PdA.base, std::move(map));
}

bool is_complete(const QCategory& A) {
  return A.cached_flag([&A] {
    const auto& Q = A.Q();
    const std::size_t n = A.size();
    std::vector<Arrow> row(n);
    auto found = [&]() { return A.find_row(row).has_value(); };
    for (ObjectId q = 0; q < Q.size(); ++q) {
      if (n == 0) return false;
      for (std::size_t y = 0; y < n; ++y) row[y] = Q.top(q, A.type(y));
      if (!found()) return false;
    }
    // Tensor u∘A(-,a): its sup has row A(a,-)↙u.
    for (std::size_t a = 0; a < n; ++a)
      for (ObjectId q = 0; q < Q.size(); ++q)
        for (auto u : Q.arrows(A.type(a), q)) {
          for (std::size_t y = 0; y < n; ++y) row[y] = Q.left_imp(A(a, y), u);
          if (!found()) return false;
        }
    // Join of two representables: row A(s,-)∧A(t,-).
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t) {
        if (A.type(s) != A.type(t)) continue;
        for (std::size_t y = 0; y < n; ++y) row[y] = Q.meet(A(s, y), A(t, y));
        if (!found()) return false;
      }
    return true;
  });
}

bool is_complete_exhaustive(const CategoryPtr& A, const Budget& budget) {
  bool ok = true;
  for (ObjectId q = 0; q < A->Q().size() && ok; ++q)
    for_each_presheaf(A, q, budget, [&](const Presheaf& mu) {
      if (ok && !sup(*A, mu)) ok = false;
    });
  return ok;
}

bool is_cocontinuous(const QFunctor& F, const Budget& budget) {
  const auto& A = F.dom_ptr();
  const auto& B = F.cod();
  bool ok = true;
  for (ObjectId q = 0; q < A->Q().size() && ok; ++q)
    for_each_presheaf(A, q, budget, [&](const Presheaf& mu) {
      if (!ok) return;
      auto s = sup(*A, mu);
      if (!s) {
        ok = false;
        return;
      }
      auto t = sup(B, pushforward(F, mu));
      ok = t && is_isomorphic(B, *t, F(*s));
    });
  return ok;
}

std::optional<QFunctor> find_left_adjoint(const QFunctor& F) {
  try {
    QFunctor G = ran(F, identity_functor(F.dom_ptr()));
    if (is_adjoint_functor_pair(G, F)) return G;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ColimitMissing) throw;
  }
  return std::nullopt;
}

std::optional<QFunctor> find_right_adjoint(const QFunctor& F) {
  try {
    QFunctor G = lan(F, identity_functor(F.dom_ptr()));
    if (is_adjoint_functor_pair(F, G)) return G;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ColimitMissing) throw;
  }
  return std::nullopt;
}

}  // namespace qfca
