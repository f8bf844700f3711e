#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfca/budget.hpp"
#include "qfca/report.hpp"

namespace qfca {

using ObjectId = std::uint32_t;

// An arrow u: src -> dst, named by its ordinal inside Q(src, dst).
struct Arrow {
  ObjectId src = 0;
  ObjectId dst = 0;
  std::uint32_t index = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline constexpr std::uint32_t kNone = 0xffffffffu;

// A finite poset given by generating pairs a <= b; reflexive-transitive
// closure is taken on construction. Joins and meets are found by scanning.
class HomLattice {
 public:
  HomLattice() = default;
  HomLattice(std::vector<std::string> labels,
             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& leq);

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
  const std::string& label(std::uint32_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::uint32_t> find(std::string_view label) const;

  bool leq(std::uint32_t a, std::uint32_t b) const { return leq_[a * size() + b] != 0; }
  // kNone when the bound does not exist.
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const { return join_[a * size() + b]; }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const { return meet_[a * size() + b]; }
  std::uint32_t bottom() const { return bottom_; }
  std::uint32_t top() const { return top_; }

  // Pairs (a,b), a != b, with a <= b <= a.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& antisymmetry_violations() const {
    return antisym_;
  }
  bool is_complete_lattice() const { return complete_; }

  friend bool operator==(const HomLattice& a, const HomLattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<std::uint32_t> join_, meet_;
  std::uint32_t bottom_ = kNone, top_ = kNone;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> antisym_;
  bool complete_ = false;
};

class Quantaloid;
using QuantaloidPtr = std::shared_ptr<const Quantaloid>;

// compose(p, q, r, v, u) for u in Q(p,q), v in Q(q,r) returns the index of v∘u in Q(p,r).
using ComposeFn = std::function<std::uint32_t(ObjectId, ObjectId, ObjectId, std::uint32_t,
                                              std::uint32_t)>;

class Quantaloid {
 public:
  // homs is row-major over (p,q). Residuation tables are derived from the
  // composition table whenever every hom is a complete lattice.
  Quantaloid(std::vector<std::string> objects, std::vector<HomLattice> homs,
             const ComposeFn& compose, std::vector<std::uint32_t> units);

  static QuantaloidPtr make(std::vector<std::string> objects, std::vector<HomLattice> homs,
                            const ComposeFn& compose, std::vector<std::uint32_t> units);

  std::uint32_t size() const { return static_cast<std::uint32_t>(objects_.size()); }
  const std::string& object_label(ObjectId q) const { return objects_[q]; }
  const std::vector<std::string>& objects() const { return objects_; }
  std::optional<ObjectId> find_object(std::string_view label) const;

  const HomLattice& hom(ObjectId p, ObjectId q) const { return homs_[p * size() + q]; }
  std::vector<Arrow> arrows(ObjectId p, ObjectId q) const;
  std::vector<Arrow> all_arrows() const;
  const std::string& label(Arrow a) const { return hom(a.src, a.dst).label(a.index); }
  // "p->q:label" unless Q has one object.
  std::string qualified_label(Arrow a) const;

  // Structural soundness: every hom is a complete lattice.
  bool lattices_ok() const { return lattices_ok_; }

  Arrow compose(Arrow v, Arrow u) const;
  Arrow left_imp(Arrow w, Arrow u) const;   // w↙u
  Arrow right_imp(Arrow v, Arrow w) const;  // v↘w
  bool leq(Arrow a, Arrow b) const;
  Arrow join(Arrow a, Arrow b) const;
  Arrow meet(Arrow a, Arrow b) const;
  Arrow hom_join(ObjectId p, ObjectId q, std::span<const Arrow> s) const;
  Arrow hom_meet(ObjectId p, ObjectId q, std::span<const Arrow> s) const;
  Arrow bottom(ObjectId p, ObjectId q) const;
  Arrow top(ObjectId p, ObjectId q) const;
  Arrow unit(ObjectId q) const { return Arrow{q, q, units_[q]}; }

  // Same objects, Q^op(p,q) = Q(q,p), composition reversed.
  QuantaloidPtr opposite() const;

  friend bool operator==(const Quantaloid& a, const Quantaloid& b);

 private:
  std::size_t triple(ObjectId p, ObjectId q, ObjectId r) const {
    return (static_cast<std::size_t>(p) * size() + q) * size() + r;
  }
  void check_arrow(Arrow a) const;

  std::vector<std::string> objects_;
  std::vector<HomLattice> homs_;
  std::vector<std::uint32_t> units_;
  // Per (p,q,r): [v * |Q(p,q)| + u] -> v∘u.
  std::vector<std::vector<std::uint32_t>> compose_;
  // Per (p,q,r): left_[w * |Q(p,q)| + u] = w↙u in Q(q,r), w in Q(p,r).
  std::vector<std::vector<std::uint32_t>> left_;
  // Per (p,q,r): right_[v * |Q(p,r)| + w] = v↘w in Q(p,q), v in Q(q,r).
  std::vector<std::vector<std::uint32_t>> right_;
  bool lattices_ok_ = false;
};

bool same_quantaloid(const QuantaloidPtr& a, const QuantaloidPtr& b);

Report validate_quantaloid(const Quantaloid& q);

struct CyclicDualizingFamily {
  std::vector<Arrow> d;  // d[q] in Q(q,q)
  bool cyclic = false;
  bool dualizing = false;
  bool girard() const { return cyclic && dualizing; }
};

bool is_cyclic(const Quantaloid& q, std::span<const Arrow> d);
bool is_dualizing(const Quantaloid& q, std::span<const Arrow> d);
CyclicDualizingFamily make_family(const Quantaloid& q, std::vector<Arrow> d);

// Families are enumerated lexicographically over (d_0, d_1, ...), the first
// object being most significant and arrows ordered by their hom ordinal.
// Returns the first Girard family, else the first cyclic one, else nothing.
std::optional<CyclicDualizingFamily> find_cyclic_dualizing_family(const Quantaloid& q,
                                                                  const Budget& budget = {});

// ¬u = d_p↙u : q -> p for u: p -> q.
Arrow complement_arrow(const Quantaloid& q, const CyclicDualizingFamily& fam, Arrow u);

// Finite lattice description used by the frame-diagonal preset.
struct FiniteLatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
};

// One-object commutative quantale given by its multiplication table.
struct QuantaleTable {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::vector<std::string>> product;  // [a, b, a*b]
  std::string unit;
};

FiniteLatticeSpec chain_lattice(int n);
FiniteLatticeSpec boolean_lattice(int n);  // n = 2^k elements
std::optional<FiniteLatticeSpec> named_lattice(std::string_view name);

QuantaloidPtr preset_two();
QuantaloidPtr preset_lukasiewicz(int n);
QuantaloidPtr preset_godel(int n);
QuantaloidPtr preset_frame_diagonal(const FiniteLatticeSpec& lattice);
QuantaloidPtr preset_commutative_quantale(const QuantaleTable& table);

struct PresetParams {
  std::optional<int> n;
  std::optional<FiniteLatticeSpec> lattice;
  std::optional<QuantaleTable> table;
};

// name in {two, lukasiewicz-chain, godel-chain, frame-diagonal,
// commutative-quantale-from-table}; throws InvalidParams otherwise.
QuantaloidPtr build_preset(std::string_view name, const PresetParams& params = {});

// "k/m" reduced, with "0" and "1" at the ends.
std::string fraction_label(int k, int m);

}  // namespace qfca
