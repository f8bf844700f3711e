#pragma once

#include <vector>

#include "qfca/concept.hpp"

namespace qfca {

struct Subcategory {
  CategoryPtr cat;
  std::vector<std::size_t> members;  // ordinals in the ambient category
  QFunctor inclusion;
};

// Objects x with Fx ≅ x, for F: A -> A.
Subcategory fix_points(const QFunctor& F);

// S ⊣ T with S: C -> D, T: D -> C.
struct AdjunctionData {
  QFunctor S;
  QFunctor T;
  Subcategory fix_TS;  // inside C
  Subcategory fix_ST;  // inside D
};

// Throws NotAdjoint unless S ⊣ T.
AdjunctionData make_adjunction(QFunctor S, QFunctor T);
// S and T restrict to mutually inverse (up to ≅) functors between the fixed points.
Report verify_fix_equivalence(const AdjunctionData& adj);

struct RepresentationPair {
  QFunctor L;  // C -> X
  QFunctor R;  // D -> X
};

// X = Fix(TS), L and R the codomain restrictions of TS and T.
RepresentationPair canonical_general_data(const AdjunctionData& adj);

Report verify_general_representation(const AdjunctionData& adj, const QFunctor& L,
                                     const QFunctor& R);
// The restriction L': Fix(TS) -> X; ConditionFailed names the first failing condition.
QFunctor construct_fix_equivalence(const AdjunctionData& adj, const QFunctor& L,
                                   const QFunctor& R);

Report verify_type_preserving_representation(const AdjunctionData& adj, const CategoryPtr& X,
                                             const std::vector<std::size_t>& L,
                                             const std::vector<std::size_t>& R);

struct DenseOptions {
  bool assume_complete = false;
  bool construct = true;  // build Lan_K F, Ran_H G and run the general verifier
  Budget budget{};
};

// F: A -> X, K: A -> C dense; G: B -> X, H: B -> D codense.
Report verify_dense_representation(const AdjunctionData& adj, const QFunctor& F,
                                   const QFunctor& K, const QFunctor& G, const QFunctor& H,
                                   const DenseOptions& options = {});

struct RepresentationData {
  QFunctor F;
  QFunctor G;
};

// F = L∘Y_A: A -> Mφ and G = R∘Y†_B: B -> Mφ.
RepresentationData canonical_mphi_data(const QDistributor& phi, const ConceptLattice& M);
// F = L∘Y_B: B -> Kφ and G = R∘J: Ā -> Kφ.
RepresentationData canonical_kphi_data(const QDistributor& phi, const ConceptLattice& K,
                                       const AbarCategory& abar);

Report verify_mphi_representation(const QDistributor& phi, const QFunctor& F, const QFunctor& G);
Report verify_kphi_representation(const QDistributor& phi, const QFunctor& F, const QFunctor& G);

enum class ProductFlavor { Dom, Cod };

// A0 ×_dom Q1 (type cod u) or A0 ×_cod Q1 (type dom u) as a discrete category.
struct ProductTypedSet {
  ProductFlavor flavor = ProductFlavor::Dom;
  CategoryPtr base;
  std::vector<std::pair<std::size_t, Arrow>> pairs;
  CategoryPtr category;
};

ProductTypedSet product_typed_set(const CategoryPtr& A, ProductFlavor flavor);

Presheaf generator_U(const CategoryPtr& A, std::size_t a, Arrow u);    // u∘A(-,a)
Presheaf generator_N(const CategoryPtr& A, std::size_t a, Arrow u);    // u↙A(a,-)
Copresheaf generator_Ud(const CategoryPtr& A, std::size_t a, Arrow u); // A(a,-)∘u
Copresheaf generator_Nd(const CategoryPtr& A, std::size_t a, Arrow u); // A(-,a)↘u

struct GeneratorMaps {
  ProductTypedSet dom_set;
  ProductTypedSet cod_set;
  PresheafCategory PA;
  CopresheafCategory PdA;
  QFunctor U, N;    // dom_set -> PA
  QFunctor Ud, Nd;  // cod_set -> PdA
  Report density;
};

GeneratorMaps build_generator_maps(const CategoryPtr& A, const Budget& budget = {});

Report verify_elementary_identities(const QDistributor& phi);

// FCA: F on A0×dom Q1, G on B0×cod Q1, v\(φ(a,b)/u) = X(F(a,u), G(b,v)).
// RST: F on B0×dom Q1, G on A0×dom Q1, (u/φ(a,b))/v = X(F(b,v), G(a,u)).
// Maps are indexed by the pair order of product_typed_set.
Report verify_elementary_representation(const QDistributor& phi, const CategoryPtr& X,
                                        const std::vector<std::size_t>& F,
                                        const std::vector<std::size_t>& G, ConceptKind kind);

// F = L∘U, G = R∘Ǔ (FCA) or F = L∘U_B, G = R∘N_A (RST), into the concept lattice.
struct ElementaryData {
  std::vector<std::size_t> F;
  std::vector<std::size_t> G;
};
ElementaryData canonical_elementary_data(const QDistributor& phi, const ConceptLattice& X);

// One-object Q only (NotAQuantale otherwise); adds the order-level biconditional.
Report quantale_corollary_check(const QDistributor& phi, const CategoryPtr& X,
                                const std::vector<std::size_t>& F,
                                const std::vector<std::size_t>& G, ConceptKind kind);

}  // namespace qfca
