#include "qfca/qcat.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "qfca/errors.hpp"
#include "hash.hpp"

namespace qfca {

namespace detail {

struct CategoryCache {
  std::once_flag rows_once, cols_once, flag_once;
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, IndexVectorHash> rows, cols;
  bool flag = false;
};

}  // namespace detail

namespace {

std::vector<std::uint32_t> key_of(std::span<const Arrow> v, ObjectId type) {
  std::vector<std::uint32_t> key;
  key.reserve(v.size() + 1);
  key.push_back(type);
  for (auto a : v) key.push_back(a.index);
  return key;
}

}  // namespace

QCategory::QCategory(QuantaloidPtr q, std::vector<std::string> labels,
                     std::vector<ObjectId> types, std::vector<Arrow> hom)
    : q_(std::move(q)),
      labels_(std::move(labels)),
      types_(std::move(types)),
      hom_(std::move(hom)),
      cache_(std::make_shared<detail::CategoryCache>()) {
  const std::size_t n = labels_.size();
  if (types_.size() != n || hom_.size() != n * n)
    raise(ErrorKind::InvalidStructure, "category shape mismatch");
  for (auto t : types_)
    if (t >= q_->size()) raise(ErrorKind::TypeMismatch, "object type outside the quantaloid");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Arrow a = hom_[x * n + y];
      if (a.src != types_[x] || a.dst != types_[y] || a.index >= q_->hom(a.src, a.dst).size())
        raise(ErrorKind::TypeMismatch,
              "hom(" + labels_[x] + ", " + labels_[y] + ") is not in the right hom-set");
    }
}

CategoryPtr QCategory::make(QuantaloidPtr q, std::vector<std::string> labels,
                            std::vector<ObjectId> types, std::vector<Arrow> hom) {
  return std::make_shared<const QCategory>(std::move(q), std::move(labels), std::move(types),
                                           std::move(hom));
}

std::optional<std::size_t> QCategory::find(std::string_view label) const {
  for (std::size_t x = 0; x < size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

std::optional<std::size_t> QCategory::find_row(std::span<const Arrow> row) const {
  if (row.size() != size() || size() == 0) return std::nullopt;
  std::call_once(cache_->rows_once, [&] {
    std::vector<Arrow> r(size());
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) r[y] = (*this)(x, y);
      cache_->rows.emplace(key_of(r, types_[x]), x);
    }
  });
  auto it = cache_->rows.find(key_of(row, row[0].src));
  if (it == cache_->rows.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> QCategory::find_column(std::span<const Arrow> col) const {
  if (col.size() != size() || size() == 0) return std::nullopt;
  std::call_once(cache_->cols_once, [&] {
    std::vector<Arrow> c(size());
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) c[y] = (*this)(y, x);
      cache_->cols.emplace(key_of(c, types_[x]), x);
    }
  });
  auto it = cache_->cols.find(key_of(col, col[0].dst));
  if (it == cache_->cols.end()) return std::nullopt;
  return it->second;
}

bool QCategory::cached_flag(const std::function<bool()>& compute) const {
  std::call_once(cache_->flag_once, [&] { cache_->flag = compute(); });
  return cache_->flag;
}

bool same_category(const QCategory& a, const QCategory& b) {
  if (&a == &b) return true;
  if (!same_quantaloid(a.quantaloid(), b.quantaloid())) return false;
  if (a.labels() != b.labels() || a.types() != b.types()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a(x, y) != b(x, y)) return false;
  return true;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && same_category(*a, *b));
}

Report validate_category(const QCategory& A) {
  Report r("category");
  const auto& Q = A.Q();
  std::size_t bad_refl = 0, bad_trans = 0;
  for (std::size_t x = 0; x < A.size(); ++x)
    if (!Q.leq(Q.unit(A.type(x)), A(x, x))) {
      ++bad_refl;
      r.fail("reflexivity", "1 <= A(" + A.label(x) + ", " + A.label(x) + ") fails");
    }
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < A.size(); ++y)
      for (std::size_t z = 0; z < A.size(); ++z)
        if (!Q.leq(Q.compose(A(y, z), A(x, y)), A(x, z))) {
          if (++bad_trans <= 50)
            r.fail("composition", "A(" + A.label(y) + "," + A.label(z) + ") o A(" + A.label(x) +
                                      "," + A.label(y) + ") <= A(" + A.label(x) + "," +
                                      A.label(z) + ") fails");
        }
  if (bad_trans > 50) r.fail("composition", "... " + std::to_string(bad_trans - 50) + " more");
  if (bad_refl == 0) r.pass("reflexivity");
  if (bad_trans == 0) r.pass("composition");
  return r;
}

bool is_below(const QCategory& A, std::size_t x, std::size_t y) {
  return A.type(x) == A.type(y) && A.Q().leq(A.Q().unit(A.type(x)), A(x, y));
}

bool is_isomorphic(const QCategory& A, std::size_t x, std::size_t y) {
  return is_below(A, x, y) && is_below(A, y, x);
}

Preorder underlying_order(const QCategory& A) {
  Preorder p;
  p.n = A.size();
  p.rel.assign(p.n * p.n, 0);
  for (std::size_t x = 0; x < p.n; ++x)
    for (std::size_t y = 0; y < p.n; ++y) p.rel[x * p.n + y] = is_below(A, x, y);
  return p;
}

bool is_separated(const QCategory& A) {
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = x + 1; y < A.size(); ++y)
      if (is_isomorphic(A, x, y)) return false;
  return true;
}

CategoryPtr discrete_category(QuantaloidPtr q, const TypedSet& set) {
  const std::size_t n = set.labels.size();
  if (set.types.size() != n) raise(ErrorKind::InvalidStructure, "typed set shape mismatch");
  std::vector<Arrow> hom;
  hom.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      hom.push_back(x == y ? q->unit(set.types[x]) : q->bottom(set.types[x], set.types[y]));
  return QCategory::make(std::move(q), set.labels, set.types, std::move(hom));
}

CategoryPtr singleton_category(QuantaloidPtr q, ObjectId type) {
  std::string label = q->object_label(type);
  return discrete_category(std::move(q), TypedSet{{label}, {type}});
}

CategoryPtr full_subcategory(const CategoryPtr& A, const std::vector<std::size_t>& objects) {
  std::vector<std::string> labels;
  std::vector<ObjectId> types;
  std::vector<Arrow> hom;
  for (auto x : objects) {
    labels.push_back(A->label(x));
    types.push_back(A->type(x));
  }
  for (auto x : objects)
    for (auto y : objects) hom.push_back((*A)(x, y));
  return QCategory::make(A->quantaloid(), std::move(labels), std::move(types), std::move(hom));
}

CategoryPtr dualize_category(const QCategory& A) {
  std::vector<Arrow> hom;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < A.size(); ++y) {
      const Arrow a = A(y, x);
      hom.push_back(Arrow{a.dst, a.src, a.index});
    }
  return QCategory::make(A.Q().opposite(), A.labels(), A.types(), std::move(hom));
}

QFunctor::QFunctor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!same_quantaloid(dom_->quantaloid(), cod_->quantaloid()))
    raise(ErrorKind::TypeMismatch, "functor between categories over different quantaloids");
  if (map_.size() != dom_->size()) raise(ErrorKind::InvalidStructure, "functor map shape");
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (map_[x] >= cod_->size()) raise(ErrorKind::InvalidStructure, "functor image out of range");
    if (dom_->type(x) != cod_->type(map_[x]))
      raise(ErrorKind::TypeMismatch, "map is not type-preserving at " + dom_->label(x));
  }
}

bool operator==(const QFunctor& F, const QFunctor& G) {
  return F.map() == G.map() && same_category(F.dom_ptr(), G.dom_ptr()) &&
         same_category(F.cod_ptr(), G.cod_ptr());
}

QFunctor identity_functor(const CategoryPtr& A) {
  std::vector<std::size_t> map(A->size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = x;
  return QFunctor(A, A, std::move(map));
}

QFunctor compose_functors(const QFunctor& G, const QFunctor& F) {
  if (!same_category(F.cod_ptr(), G.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "functors do not compose");
  std::vector<std::size_t> map(F.dom().size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = G(F(x));
  return QFunctor(F.dom_ptr(), G.cod_ptr(), std::move(map));
}

QFunctor dualize_functor(const QFunctor& F) {
  return QFunctor(dualize_category(F.dom()), dualize_category(F.cod()), F.map());
}

Report validate_functor(const QFunctor& F) {
  Report r("functor");
  const auto& A = F.dom();
  const auto& B = F.cod();
  const auto& Q = A.Q();
  std::size_t bad = 0;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < A.size(); ++y)
      if (!Q.leq(A(x, y), B(F(x), F(y))) && ++bad <= 50)
        r.fail("functoriality", "A(" + A.label(x) + ", " + A.label(y) + ") <= B(F" + A.label(x) +
                                    ", F" + A.label(y) + ") fails");
  if (bad > 50) r.fail("functoriality", "... " + std::to_string(bad - 50) + " more");
  if (bad == 0) r.pass("functoriality");
  return r;
}

bool functor_leq(const QFunctor& F, const QFunctor& G) {
  if (!same_category(F.dom_ptr(), G.dom_ptr()) || !same_category(F.cod_ptr(), G.cod_ptr()))
    raise(ErrorKind::TypeMismatch, "functors are not parallel");
  for (std::size_t x = 0; x < F.dom().size(); ++x)
    if (!is_below(F.cod(), F(x), G(x))) return false;
  return true;
}

bool functors_isomorphic(const QFunctor& F, const QFunctor& G) {
  return functor_leq(F, G) && functor_leq(G, F);
}

bool is_fully_faithful(const QFunctor& F) {
  for (std::size_t x = 0; x < F.dom().size(); ++x)
    for (std::size_t y = 0; y < F.dom().size(); ++y)
      if (F.dom()(x, y) != F.cod()(F(x), F(y))) return false;
  return true;
}

bool is_essentially_surjective(const QFunctor& F) {
  const auto& B = F.cod();
  std::vector<char> hit(B.size(), 0);
  for (std::size_t x = 0; x < F.dom().size(); ++x) hit[F(x)] = 1;
  for (std::size_t y = 0; y < B.size(); ++y) {
    if (hit[y]) continue;
    bool found = false;
    for (std::size_t x = 0; x < F.dom().size() && !found; ++x)
      found = is_isomorphic(B, F(x), y);
    if (!found) return false;
  }
  return true;
}

namespace {

// rep[x] = least ordinal isomorphic to x.
std::vector<std::size_t> representatives(const QCategory& A) {
  std::vector<std::size_t> rep(A.size());
  for (std::size_t x = 0; x < A.size(); ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (rep[y] == y && is_isomorphic(A, x, y)) {
        rep[x] = y;
        break;
      }
  }
  return rep;
}

}  // namespace

SkeletalQuotient skeletal_quotient(const CategoryPtr& A) {
  const auto rep = representatives(*A);
  std::vector<std::size_t> kept, position(A->size());
  for (std::size_t x = 0; x < A->size(); ++x)
    if (rep[x] == x) {
      position[x] = kept.size();
      kept.push_back(x);
    }
  auto quotient = full_subcategory(A, kept);
  std::vector<std::size_t> map(A->size());
  for (std::size_t x = 0; x < A->size(); ++x) map[x] = position[rep[x]];
  return SkeletalQuotient{quotient, QFunctor(A, quotient, std::move(map))};
}

std::optional<QFunctor> find_equivalence(const CategoryPtr& A, const CategoryPtr& B,
                                         const Budget& budget) {
  if (!same_quantaloid(A->quantaloid(), B->quantaloid())) return std::nullopt;
  const auto repA = representatives(*A);
  const auto repB = representatives(*B);
  std::vector<std::size_t> ra, rb;
  for (std::size_t x = 0; x < A->size(); ++x)
    if (repA[x] == x) ra.push_back(x);
  for (std::size_t y = 0; y < B->size(); ++y)
    if (repB[y] == y) rb.push_back(y);
  if (ra.size() != rb.size()) return std::nullopt;

  std::vector<std::size_t> image(ra.size());
  std::vector<char> used(rb.size(), 0);
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == ra.size()) return true;
    for (std::size_t k = 0; k < rb.size(); ++k) {
      if (used[k] || B->type(rb[k]) != A->type(ra[i])) continue;
      if (++nodes > budget.equivalence_nodes)
        raise(ErrorKind::SearchBudgetExceeded, "equivalence search exceeded its node budget");
      bool ok = (*A)(ra[i], ra[i]) == (*B)(rb[k], rb[k]);
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (*A)(ra[i], ra[j]) == (*B)(rb[k], image[j]) &&
             (*A)(ra[j], ra[i]) == (*B)(image[j], rb[k]);
      if (!ok) continue;
      used[k] = 1;
      image[i] = rb[k];
      if (extend(i + 1)) return true;
      used[k] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  std::vector<std::size_t> map(A->size());
  for (std::size_t x = 0; x < A->size(); ++x) {
    const auto i = static_cast<std::size_t>(std::find(ra.begin(), ra.end(), repA[x]) - ra.begin());
    map[x] = image[i];
  }
  return QFunctor(A, B, std::move(map));
}

}  // namespace qfca
