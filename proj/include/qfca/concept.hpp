#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qfca/presheaf.hpp"

namespace qfca {

enum class ConceptKind { FCA, RST };

// Isbell adjunction φ↑ ⊣ φ↓.
Copresheaf isbell_up(const QDistributor& phi, const Presheaf& mu);        // φ↙μ, on B
Presheaf isbell_down(const QDistributor& phi, const Copresheaf& lambda);  // λ↘φ, on A
// Kan adjunction φ* ⊣ φ_* and its dual φ_† ⊣ φ†.
Presheaf kan_star(const QDistributor& phi, const Presheaf& lambda);           // λ∘φ, on A
Presheaf kan_lower(const QDistributor& phi, const Presheaf& mu);              // μ↙φ, on B
Copresheaf kan_dag(const QDistributor& phi, const Copresheaf& mu);            // φ∘μ, on B
Copresheaf kan_lower_dag(const QDistributor& phi, const Copresheaf& lambda);  // φ↘λ, on A

// φ↓φ↑ on presheaves of A (FCA) or φ_*φ* on presheaves of B (RST).
Presheaf closure(const QDistributor& phi, ConceptKind kind, const Presheaf& p);

struct ConceptOptions {
  Budget budget{};
  bool verify_fixed = true;
  std::optional<ObjectId> only_type;
};

// Fixed presheaves sorted by (type, value ordinals), with the induced
// presheaf-category structure.
struct ConceptLattice {
  ConceptKind kind = ConceptKind::FCA;
  PresheafCategory lattice;

  const std::vector<Presheaf>& concepts() const { return lattice.objects; }
  std::size_t size() const { return lattice.objects.size(); }
  std::vector<std::size_t> of_type(ObjectId q) const;
  // Covering pairs (lower, upper) of the underlying order among objects of type q.
  std::vector<std::pair<std::size_t, std::size_t>> hasse(ObjectId q) const;
};

ConceptLattice compute_M(const QDistributor& phi, const ConceptOptions& options = {});
ConceptLattice compute_K(const QDistributor& phi, const ConceptOptions& options = {});
std::vector<Presheaf> brute_force_fixed(const QDistributor& phi, ConceptKind kind, ObjectId q,
                                        const Budget& budget = {});
ConceptLattice macneille(const CategoryPtr& A, const ConceptOptions& options = {});

// Same presheaves per type, ignoring order.
bool same_concepts(const std::vector<Presheaf>& a, const std::vector<Presheaf>& b);

struct AbarCategory {
  CategoryPtr base;
  PresheafCategory cat;  // objects u↙A(a,-), first-occurrence order
  std::vector<std::vector<std::pair<std::size_t, Arrow>>> provenance;  // (a, u) per object
  QDistributor atr;      // A^tr: A ⇸ Ā, A^tr(x, μ) = μ(x)
};

AbarCategory build_Abar(const CategoryPtr& A);
// Inclusion Ā -> PA inside a materialized PA.
QFunctor abar_inclusion(const AbarCategory& abar, const PresheafCategory& PA);

// φ^tr: B ⇸ Ā by φ^tr(b, u↙A(a,-)) = u↙φ(a,b); throws if A^tr↙φ disagrees.
QDistributor phi_tr(const QDistributor& phi, const AbarCategory& abar);
QDistributor phi_tr(const QDistributor& phi);

Report verify_K_eq_M_tr(const QDistributor& phi, const Budget& budget = {});

// (¬φ)(b,a) = ¬φ(a,b); NotGirard unless the family is cyclic and dualizing.
QDistributor complement_dist(const QDistributor& phi, const CyclicDualizingFamily& fam);
Report verify_K_eq_M_neg(const QDistributor& phi, const CyclicDualizingFamily& fam,
                         const Budget& budget = {});

struct CodenseProbe {
  bool exists = false;
  std::vector<Arrow> targets;  // w with {q} -> P{q}, q |-> w codense
  bool bottom_family_dualizing = false;
  bool local_double_negation = false;  // u = (⊥_q↙u)↘⊥_q for all u out of q
  Report report;
};
// HypothesesNotMet unless every 1_p is the top of Q(p,p) and {⊥_p} is cyclic.
CodenseProbe codense_girard_probe(const QuantaloidPtr& Q, ObjectId q, const Budget& budget = {});
// Runs every q; a codense functor exists at all of them iff {⊥_q} is dualizing.
Report codense_girard_probe_all(const QuantaloidPtr& Q, const Budget& budget = {});

// Functors between materialized (co)presheaf categories.
QFunctor isbell_up_functor(const QDistributor& phi, const PresheafCategory& PA,
                           const CopresheafCategory& PdB);
QFunctor isbell_down_functor(const QDistributor& phi, const CopresheafCategory& PdB,
                             const PresheafCategory& PA);
QFunctor kan_star_functor(const QDistributor& phi, const PresheafCategory& PB,
                          const PresheafCategory& PA);
QFunctor kan_lower_functor(const QDistributor& phi, const PresheafCategory& PA,
                           const PresheafCategory& PB);
QFunctor kan_dag_functor(const QDistributor& phi, const CopresheafCategory& PdA,
                         const CopresheafCategory& PdB);
QFunctor kan_lower_dag_functor(const QDistributor& phi, const CopresheafCategory& PdB,
                               const CopresheafCategory& PdA);

QFunctor transpose_ol(const QDistributor& phi, const PresheafCategory& PA);     // b |-> φ(-,b)
QFunctor transpose_hat(const QDistributor& phi, const CopresheafCategory& PdB); // a |-> φ(a,-)
Report verify_transpose_identities(const QDistributor& phi, const Budget& budget = {});

// M(F,G) = ψ↓ψ↑(F^♮)*: Mφ -> Mψ and K(F,G) = φ_*φ*(G^♮)*: Kψ -> Kφ.
QFunctor M_on_chu(const ChuTransform& c, const ConceptLattice& Mphi, const ConceptLattice& Mpsi);
QFunctor K_on_chu(const ChuTransform& c, const ConceptLattice& Kpsi, const ConceptLattice& Kphi);

struct TrChu {
  AbarCategory abar_from;  // Ā for dom φ
  AbarCategory abar_to;    // Ā' for dom ψ
  ChuTransform chu;        // (G, (F♮)_*): ψ^tr -> φ^tr
};
TrChu tr_on_chu(const ChuTransform& c);

// Binary and empty underlying joins are preserved, per type.
bool preserves_joins(const QFunctor& f);
std::optional<std::size_t> underlying_join(const CategoryPtr& X, ObjectId type,
                                           const std::vector<std::size_t>& xs);

}  // namespace qfca
