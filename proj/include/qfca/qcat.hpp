#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfca/quantaloid.hpp"

namespace qfca {

struct TypedSet {
  std::vector<std::string> labels;
  std::vector<ObjectId> types;
};

class QCategory;
using CategoryPtr = std::shared_ptr<const QCategory>;

namespace detail {
struct CategoryCache;
}

// A finite Q-category with a dense hom matrix. Objects are addressed by
// ordinal; "least" witnesses always mean least ordinal.
class QCategory {
 public:
  QCategory(QuantaloidPtr q, std::vector<std::string> labels, std::vector<ObjectId> types,
            std::vector<Arrow> hom);

  static CategoryPtr make(QuantaloidPtr q, std::vector<std::string> labels,
                          std::vector<ObjectId> types, std::vector<Arrow> hom);

  std::size_t size() const { return labels_.size(); }
  const Quantaloid& Q() const { return *q_; }
  const QuantaloidPtr& quantaloid() const { return q_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  ObjectId type(std::size_t x) const { return types_[x]; }
  const std::vector<ObjectId>& types() const { return types_; }
  Arrow operator()(std::size_t x, std::size_t y) const { return hom_[x * size() + y]; }
  std::optional<std::size_t> find(std::string_view label) const;

  // Least x with A(x,-) = row (resp. A(-,x) = col).
  std::optional<std::size_t> find_row(std::span<const Arrow> row) const;
  std::optional<std::size_t> find_column(std::span<const Arrow> col) const;

  // Memoises a per-category boolean (used for completeness).
  bool cached_flag(const std::function<bool()>& compute) const;

 private:
  QuantaloidPtr q_;
  std::vector<std::string> labels_;
  std::vector<ObjectId> types_;
  std::vector<Arrow> hom_;
  std::shared_ptr<detail::CategoryCache> cache_;
};

bool same_category(const QCategory& a, const QCategory& b);
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

Report validate_category(const QCategory& A);

struct Preorder {
  std::size_t n = 0;
  std::vector<char> rel;
  bool operator()(std::size_t x, std::size_t y) const { return rel[x * n + y] != 0; }
};

Preorder underlying_order(const QCategory& A);
bool is_below(const QCategory& A, std::size_t x, std::size_t y);
bool is_isomorphic(const QCategory& A, std::size_t x, std::size_t y);
bool is_separated(const QCategory& A);

CategoryPtr discrete_category(QuantaloidPtr q, const TypedSet& set);
CategoryPtr singleton_category(QuantaloidPtr q, ObjectId type);
CategoryPtr full_subcategory(const CategoryPtr& A, const std::vector<std::size_t>& objects);
CategoryPtr dualize_category(const QCategory& A);

class QFunctor {
 public:
  // Throws TypeMismatch unless the map is type-preserving.
  QFunctor(CategoryPtr dom, CategoryPtr cod, std::vector<std::size_t> map);

  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const QCategory& dom() const { return *dom_; }
  const QCategory& cod() const { return *cod_; }
  const CategoryPtr& dom_ptr() const { return dom_; }
  const CategoryPtr& cod_ptr() const { return cod_; }
  const std::vector<std::size_t>& map() const { return map_; }

 private:
  CategoryPtr dom_, cod_;
  std::vector<std::size_t> map_;
};

bool operator==(const QFunctor& F, const QFunctor& G);

QFunctor identity_functor(const CategoryPtr& A);
QFunctor compose_functors(const QFunctor& G, const QFunctor& F);  // G∘F
QFunctor dualize_functor(const QFunctor& F);
Report validate_functor(const QFunctor& F);
bool functor_leq(const QFunctor& F, const QFunctor& G);
bool functors_isomorphic(const QFunctor& F, const QFunctor& G);
bool is_fully_faithful(const QFunctor& F);
bool is_essentially_surjective(const QFunctor& F);

struct SkeletalQuotient {
  CategoryPtr quotient;
  QFunctor projection;
};
SkeletalQuotient skeletal_quotient(const CategoryPtr& A);

// Backtracking over injective type-preserving maps between skeleta,
// pruned by hom equality; extended to all of A through representatives.
std::optional<QFunctor> find_equivalence(const CategoryPtr& A, const CategoryPtr& B,
                                         const Budget& budget = {});

}  // namespace qfca
