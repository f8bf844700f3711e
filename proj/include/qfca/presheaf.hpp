#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qfca/qdist.hpp"

namespace qfca {

// μ: A ⇸ {q}, μ(a) in Q(|a|, q).
struct Presheaf {
  CategoryPtr base;
  ObjectId type = 0;
  std::vector<Arrow> values;
};

// λ: {q} ⇸ A, λ(a) in Q(q, |a|).
struct Copresheaf {
  CategoryPtr base;
  ObjectId type = 0;
  std::vector<Arrow> values;
};

bool operator==(const Presheaf& a, const Presheaf& b);
bool operator==(const Copresheaf& a, const Copresheaf& b);

// Shape-checked constructors (TypeMismatch on a misplaced value).
Presheaf make_presheaf(CategoryPtr base, ObjectId type, std::vector<Arrow> values);
Copresheaf make_copresheaf(CategoryPtr base, ObjectId type, std::vector<Arrow> values);

bool satisfies_presheaf_law(const Presheaf& mu);
bool satisfies_copresheaf_law(const Copresheaf& lambda);

// "a1:u, a2:v"
std::string render_values(const QCategory& base, const std::vector<Arrow>& values);
std::string render(const Presheaf& mu);
std::string render(const Copresheaf& lambda);

Arrow presheaf_hom(const Presheaf& mu, const Presheaf& nu);        // ν↙μ
Arrow copresheaf_hom(const Copresheaf& l1, const Copresheaf& l2);  // λ2↘λ1

Presheaf yoneda(const CategoryPtr& A, std::size_t a);      // A(-,a)
Copresheaf coyoneda(const CategoryPtr& A, std::size_t a);  // A(a,-)
Presheaf top_presheaf(const CategoryPtr& A, ObjectId q);
Presheaf bottom_presheaf(const CategoryPtr& A, ObjectId q);
Copresheaf top_copresheaf(const CategoryPtr& A, ObjectId q);
Copresheaf bottom_copresheaf(const CategoryPtr& A, ObjectId q);
// Entrywise lattice operations and order (the distributor order).
Presheaf entrywise_meet(const Presheaf& a, const Presheaf& b);
Presheaf entrywise_join(const Presheaf& a, const Presheaf& b);
Copresheaf entrywise_meet(const Copresheaf& a, const Copresheaf& b);
Copresheaf entrywise_join(const Copresheaf& a, const Copresheaf& b);
bool entrywise_leq(const Presheaf& a, const Presheaf& b);
bool entrywise_leq(const Copresheaf& a, const Copresheaf& b);

QDistributor as_distributor(const Presheaf& mu);      // A ⇸ {q}
QDistributor as_distributor(const Copresheaf& lam);   // {q} ⇸ A
Presheaf column_presheaf(const QDistributor& phi, std::size_t b);  // φ(-,b)
Copresheaf row_copresheaf(const QDistributor& phi, std::size_t a); // φ(a,-)

std::optional<std::size_t> sup(const QCategory& A, const Presheaf& mu);
std::optional<std::size_t> inf(const QCategory& A, const Copresheaf& lambda);
std::optional<std::size_t> weighted_colimit(const Presheaf& mu, const QFunctor& F);
std::optional<std::size_t> weighted_limit(const Copresheaf& lambda, const QFunctor& F);

Presheaf pushforward(const QFunctor& F, const Presheaf& mu);          // μ∘F^♮
Copresheaf copushforward(const QFunctor& F, const Copresheaf& lambda);  // F♮∘λ

// Pointwise Kan extensions; ColimitMissing names the offending object.
QFunctor lan(const QFunctor& K, const QFunctor& F);
QFunctor ran(const QFunctor& H, const QFunctor& G);

bool is_dense(const QFunctor& F);
bool is_codense(const QFunctor& F);
// The codomain must be complete; joins are taken as sup of joins of representables.
bool is_join_dense(const QFunctor& F);
bool is_meet_dense(const QFunctor& F);

// Lexicographic order, first object most significant.
void for_each_presheaf(const CategoryPtr& A, ObjectId q, const Budget& budget,
                       const std::function<void(const Presheaf&)>& visit);
void for_each_copresheaf(const CategoryPtr& A, ObjectId q, const Budget& budget,
                         const std::function<void(const Copresheaf&)>& visit);
std::vector<Presheaf> enumerate_presheaves(const CategoryPtr& A, ObjectId q,
                                           const Budget& budget = {});
std::vector<Copresheaf> enumerate_copresheaves(const CategoryPtr& A, ObjectId q,
                                               const Budget& budget = {});

// A full subcategory of PA (or P†A) together with its objects.
template <class P>
struct Materialized {
  CategoryPtr base;
  std::vector<P> objects;
  CategoryPtr category;
  std::unordered_map<std::string, std::size_t> index;  // keyed by value encoding

  std::optional<std::size_t> index_of(const P& p) const;
  std::size_t size() const { return objects.size(); }
};

using PresheafCategory = Materialized<Presheaf>;
using CopresheafCategory = Materialized<Copresheaf>;

PresheafCategory presheaf_subcategory(const CategoryPtr& base, std::vector<Presheaf> objects);
CopresheafCategory copresheaf_subcategory(const CategoryPtr& base,
                                          std::vector<Copresheaf> objects);
PresheafCategory materialize_PA(const CategoryPtr& A, const Budget& budget = {});
CopresheafCategory materialize_PdA(const CategoryPtr& A, const Budget& budget = {});

QFunctor yoneda_functor(const PresheafCategory& PA);      // A -> PA
QFunctor coyoneda_functor(const CopresheafCategory& PdA); // A -> P†A
QFunctor sup_functor(const PresheafCategory& PA);         // PA -> A; A must be complete
QFunctor inf_functor(const CopresheafCategory& PdA);      // P†A -> A; A must be complete

// Structural test: sups of tensors u∘A(-,a), of the bottom presheaf of each
// type and of binary joins of representables; these generate all sups.
bool is_complete(const QCategory& A);
// Oracle: sup exists for every enumerated presheaf of every type.
bool is_complete_exhaustive(const CategoryPtr& A, const Budget& budget = {});

// F(sup μ) is a sup of F→μ for every presheaf μ on the (complete) domain.
bool is_cocontinuous(const QFunctor& F, const Budget& budget = {});

std::optional<QFunctor> find_left_adjoint(const QFunctor& F);   // G ⊣ F
std::optional<QFunctor> find_right_adjoint(const QFunctor& F);  // F ⊣ G

}  // namespace qfca
