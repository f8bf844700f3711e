#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfca/concept.hpp"
#include "qfca/errors.hpp"

namespace fixtures {

using namespace qfca;

struct Context {
  QuantaloidPtr Q;
  CategoryPtr A, B;
  QDistributor phi;
};

Arrow arrow(const Quantaloid& Q, ObjectId p, ObjectId q, std::string_view label);
Arrow arrow(const Quantaloid& Q, std::string_view label);  // one-object Q

// homs[x][y] is a label in Q(|x|,|y|).
CategoryPtr category(const QuantaloidPtr& Q, std::vector<std::string> labels,
                     std::vector<ObjectId> types,
                     const std::vector<std::vector<std::string>>& homs);
QDistributor distributor(const CategoryPtr& A, const CategoryPtr& B,
                         const std::vector<std::vector<std::string>>& entries);
CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> labels,
                     std::vector<ObjectId> types);
CategoryPtr discrete(const QuantaloidPtr& Q, std::vector<std::string> labels);

QuantaloidPtr two();
QuantaloidPtr l3();
QuantaloidPtr g3();
QuantaloidPtr dl3();        // D(3-chain); objects 0, 1/2, 1
QuantaloidPtr d_boolean4();

Context fix_2id();  // identity relation on {a1,a2} x {b1,b2} over 2
Context fix_l3();   // {a} x {b}, phi = 1/2 over Łukasiewicz-3
Context fix_dl3();  // multi-typed context over D(3-chain)
Context godel3();   // {a} x {b}, phi = 1/2 over Gödel-3
// rel[a][b] in {0,1} over discrete sets
Context crisp(const std::vector<std::vector<int>>& rel);

// Every valid distributor A ⇸ B, lexicographic in the entries; stops after cap.
std::vector<QDistributor> all_distributors(const CategoryPtr& A, const CategoryPtr& B,
                                           std::size_t cap = 100000);

// Every functor A -> B (type-preserving maps passing validate_functor).
std::vector<QFunctor> all_functors(const CategoryPtr& A, const CategoryPtr& B);
// Every Chu transform φ -> ψ.
std::vector<ChuTransform> all_chu(const QDistributor& phi, const QDistributor& psi);

// Classical powerset oracle over bitmasks.
std::vector<std::uint32_t> classical_extents(const std::vector<std::vector<int>>& rel);
std::vector<std::uint32_t> classical_rst(const std::vector<std::vector<int>>& rel);
std::uint32_t mask_of(const Presheaf& p);  // values "1" -> bit set

// Every preset used by the acceptance runs.
struct Named {
  std::string name;
  QuantaloidPtr Q;
};
std::vector<Named> presets();

// Kind of the Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace fixtures
