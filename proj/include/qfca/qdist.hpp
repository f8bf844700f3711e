#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qfca/qcat.hpp"

namespace qfca {

// φ: A ⇸ B with φ(x,y) in Q(|x|,|y|).
class QDistributor {
 public:
  QDistributor(CategoryPtr dom, CategoryPtr cod, std::vector<Arrow> matrix);

  static QDistributor from_function(CategoryPtr dom, CategoryPtr cod,
                                    const std::function<Arrow(std::size_t, std::size_t)>& f);

  Arrow operator()(std::size_t x, std::size_t y) const { return m_[x * cod_->size() + y]; }
  const QCategory& dom() const { return *dom_; }
  const QCategory& cod() const { return *cod_; }
  const CategoryPtr& dom_ptr() const { return dom_; }
  const CategoryPtr& cod_ptr() const { return cod_; }
  const Quantaloid& Q() const { return dom_->Q(); }
  const std::vector<Arrow>& matrix() const { return m_; }

 private:
  CategoryPtr dom_, cod_;
  std::vector<Arrow> m_;
};

bool operator==(const QDistributor& a, const QDistributor& b);
bool dist_leq(const QDistributor& a, const QDistributor& b);

Report validate_distributor(const QDistributor& phi);

QDistributor dist_compose(const QDistributor& psi, const QDistributor& phi);  // ψ∘φ
QDistributor dist_left_imp(const QDistributor& xi, const QDistributor& phi);  // ξ↙φ
QDistributor dist_right_imp(const QDistributor& psi, const QDistributor& xi); // ψ↘ξ
QDistributor identity_dist(const CategoryPtr& A);
QDistributor graph(const QFunctor& F);    // F♮(x,y) = B(Fx,y)
QDistributor cograph(const QFunctor& F);  // F^♮(y,x) = B(y,Fx)
QDistributor restrict_distributor(const QDistributor& phi, const QFunctor& F, const QFunctor& G);
QDistributor dualize_distributor(const QDistributor& phi);

bool dist_adjoint_pair(const QDistributor& phi, const QDistributor& psi);
bool is_adjoint_functor_pair(const QFunctor& F, const QFunctor& G);  // F ⊣ G

struct ChuTransform {
  QDistributor from;  // φ: A ⇸ B
  QDistributor to;    // ψ: A' ⇸ B'
  QFunctor F;         // A -> A'
  QFunctor G;         // B' -> B
};

Report validate_chu(const ChuTransform& c);

// Checks the eight graph/cograph residuation identities for every choice of
// φ, ψ from the pool whose shapes fit; counts the instances per identity.
Report adjoint_arrow_identities_suite(const QFunctor& F, std::span<const QDistributor> pool);
Report adjoint_arrow_identities_suite(const QFunctor& F, const QDistributor& phi,
                                      const QDistributor& psi);

}  // namespace qfca
