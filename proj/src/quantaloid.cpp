#include "qfca/quantaloid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qfca/errors.hpp"

namespace qfca {

HomLattice::HomLattice(std::vector<std::string> labels,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs)
    : labels_(std::move(labels)) {
  const std::uint32_t n = size();
  leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) raise(ErrorKind::InvalidStructure, "order pair out of range");
    leq_[a * n + b] = 1;
  }
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::uint32_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i]) antisym_.emplace_back(i, j);

  auto least = [&](const std::vector<std::uint32_t>& s) {
    for (auto c : s)
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t d) { return leq(c, d); })) return c;
    return kNone;
  };
  auto greatest = [&](const std::vector<std::uint32_t>& s) {
    for (auto c : s)
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t d) { return leq(d, c); })) return c;
    return kNone;
  };

  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  bottom_ = least(all);
  top_ = greatest(all);

  join_.assign(static_cast<std::size_t>(n) * n, kNone);
  meet_.assign(static_cast<std::size_t>(n) * n, kNone);
  bool bounds_ok = true;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> up, down;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c)) up.push_back(c);
        if (leq(c, a) && leq(c, b)) down.push_back(c);
      }
      join_[a * n + b] = least(up);
      meet_[a * n + b] = greatest(down);
      if (join_[a * n + b] == kNone || meet_[a * n + b] == kNone) bounds_ok = false;
    }
  complete_ = n > 0 && antisym_.empty() && bounds_ok && bottom_ != kNone && top_ != kNone;
}

std::optional<std::uint32_t> HomLattice::find(std::string_view label) const {
  for (std::uint32_t i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Quantaloid::Quantaloid(std::vector<std::string> objects, std::vector<HomLattice> homs,
                       const ComposeFn& compose, std::vector<std::uint32_t> units)
    : objects_(std::move(objects)), homs_(std::move(homs)), units_(std::move(units)) {
  const std::uint32_t n = size();
  if (homs_.size() != static_cast<std::size_t>(n) * n)
    raise(ErrorKind::InvalidStructure, "expected one hom per ordered pair of objects");
  if (units_.size() != n) raise(ErrorKind::InvalidStructure, "expected one unit per object");
  for (ObjectId q = 0; q < n; ++q)
    if (units_[q] >= hom(q, q).size())
      raise(ErrorKind::InvalidStructure, "unit of " + objects_[q] + " is not in its hom");

  lattices_ok_ = std::all_of(homs_.begin(), homs_.end(),
                             [](const HomLattice& h) { return h.is_complete_lattice(); });

  compose_.resize(static_cast<std::size_t>(n) * n * n);
  for (ObjectId p = 0; p < n; ++p)
    for (ObjectId q = 0; q < n; ++q)
      for (ObjectId r = 0; r < n; ++r) {
        const auto nu = hom(p, q).size(), nv = hom(q, r).size(), nw = hom(p, r).size();
        auto& t = compose_[triple(p, q, r)];
        t.resize(static_cast<std::size_t>(nu) * nv);
        for (std::uint32_t v = 0; v < nv; ++v)
          for (std::uint32_t u = 0; u < nu; ++u) {
            auto w = compose(p, q, r, v, u);
            if (w >= nw)
              raise(ErrorKind::InvalidStructure, "composite out of range in " + objects_[p] +
                                                     "->" + objects_[r]);
            t[v * nu + u] = w;
          }
      }

  if (!lattices_ok_) return;
  left_.resize(compose_.size());
  right_.resize(compose_.size());
  for (ObjectId p = 0; p < n; ++p)
    for (ObjectId q = 0; q < n; ++q)
      for (ObjectId r = 0; r < n; ++r) {
        const auto& hu = hom(p, q);
        const auto& hv = hom(q, r);
        const auto& hw = hom(p, r);
        const auto& t = compose_[triple(p, q, r)];
        auto& lt = left_[triple(p, q, r)];
        auto& rt = right_[triple(p, q, r)];
        lt.assign(static_cast<std::size_t>(hw.size()) * hu.size(), hv.bottom());
        rt.assign(static_cast<std::size_t>(hv.size()) * hw.size(), hu.bottom());
        for (std::uint32_t w = 0; w < hw.size(); ++w)
          for (std::uint32_t u = 0; u < hu.size(); ++u)
            for (std::uint32_t v = 0; v < hv.size(); ++v)
              if (hw.leq(t[v * hu.size() + u], w)) {
                auto& l = lt[w * hu.size() + u];
                l = hv.join(l, v);
                auto& rr = rt[v * hw.size() + w];
                rr = hu.join(rr, u);
              }
      }
}

QuantaloidPtr Quantaloid::make(std::vector<std::string> objects, std::vector<HomLattice> homs,
                               const ComposeFn& compose, std::vector<std::uint32_t> units) {
  return std::make_shared<const Quantaloid>(std::move(objects), std::move(homs), compose,
                                            std::move(units));
}

std::optional<ObjectId> Quantaloid::find_object(std::string_view label) const {
  for (ObjectId q = 0; q < size(); ++q)
    if (objects_[q] == label) return q;
  return std::nullopt;
}

std::vector<Arrow> Quantaloid::arrows(ObjectId p, ObjectId q) const {
  std::vector<Arrow> out;
  for (std::uint32_t i = 0; i < hom(p, q).size(); ++i) out.push_back(Arrow{p, q, i});
  return out;
}

std::vector<Arrow> Quantaloid::all_arrows() const {
  std::vector<Arrow> out;
  for (ObjectId p = 0; p < size(); ++p)
    for (ObjectId q = 0; q < size(); ++q)
      for (std::uint32_t i = 0; i < hom(p, q).size(); ++i) out.push_back(Arrow{p, q, i});
  return out;
}

std::string Quantaloid::qualified_label(Arrow a) const {
  if (size() == 1) return label(a);
  return objects_[a.src] + "->" + objects_[a.dst] + ":" + label(a);
}

void Quantaloid::check_arrow(Arrow a) const {
  if (a.src >= size() || a.dst >= size() || a.index >= hom(a.src, a.dst).size())
    raise(ErrorKind::TypeMismatch, "arrow does not belong to this quantaloid");
}

Arrow Quantaloid::compose(Arrow v, Arrow u) const {
  check_arrow(v);
  check_arrow(u);
  if (u.dst != v.src)
    raise(ErrorKind::TypeMismatch, "cannot compose " + qualified_label(v) + " after " +
                                       qualified_label(u));
  const auto nu = hom(u.src, u.dst).size();
  return Arrow{u.src, v.dst, compose_[triple(u.src, u.dst, v.dst)][v.index * nu + u.index]};
}

Arrow Quantaloid::left_imp(Arrow w, Arrow u) const {
  check_arrow(w);
  check_arrow(u);
  if (w.src != u.src)
    raise(ErrorKind::TypeMismatch, "left implication needs a common domain");
  if (!lattices_ok_) raise(ErrorKind::InvalidStructure, "homs are not complete lattices");
  const ObjectId p = u.src, q = u.dst, r = w.dst;
  const auto nu = hom(p, q).size();
  return Arrow{q, r, left_[triple(p, q, r)][w.index * nu + u.index]};
}

Arrow Quantaloid::right_imp(Arrow v, Arrow w) const {
  check_arrow(v);
  check_arrow(w);
  if (v.dst != w.dst)
    raise(ErrorKind::TypeMismatch, "right implication needs a common codomain");
  if (!lattices_ok_) raise(ErrorKind::InvalidStructure, "homs are not complete lattices");
  const ObjectId p = w.src, q = v.src, r = v.dst;
  const auto nw = hom(p, r).size();
  return Arrow{p, q, right_[triple(p, q, r)][v.index * nw + w.index]};
}

bool Quantaloid::leq(Arrow a, Arrow b) const {
  check_arrow(a);
  check_arrow(b);
  if (a.src != b.src || a.dst != b.dst)
    raise(ErrorKind::TypeMismatch, "comparing arrows of different homs");
  return hom(a.src, a.dst).leq(a.index, b.index);
}

Arrow Quantaloid::join(Arrow a, Arrow b) const {
  if (a.src != b.src || a.dst != b.dst)
    raise(ErrorKind::TypeMismatch, "join of arrows of different homs");
  auto j = hom(a.src, a.dst).join(a.index, b.index);
  if (j == kNone) raise(ErrorKind::InvalidStructure, "join does not exist");
  return Arrow{a.src, a.dst, j};
}

Arrow Quantaloid::meet(Arrow a, Arrow b) const {
  if (a.src != b.src || a.dst != b.dst)
    raise(ErrorKind::TypeMismatch, "meet of arrows of different homs");
  auto m = hom(a.src, a.dst).meet(a.index, b.index);
  if (m == kNone) raise(ErrorKind::InvalidStructure, "meet does not exist");
  return Arrow{a.src, a.dst, m};
}

Arrow Quantaloid::bottom(ObjectId p, ObjectId q) const {
  auto b = hom(p, q).bottom();
  if (b == kNone) raise(ErrorKind::InvalidStructure, "hom has no bottom");
  return Arrow{p, q, b};
}

Arrow Quantaloid::top(ObjectId p, ObjectId q) const {
  auto t = hom(p, q).top();
  if (t == kNone) raise(ErrorKind::InvalidStructure, "hom has no top");
  return Arrow{p, q, t};
}

Arrow Quantaloid::hom_join(ObjectId p, ObjectId q, std::span<const Arrow> s) const {
  Arrow acc = bottom(p, q);
  for (auto a : s) acc = join(acc, a);
  return acc;
}

Arrow Quantaloid::hom_meet(ObjectId p, ObjectId q, std::span<const Arrow> s) const {
  Arrow acc = top(p, q);
  for (auto a : s) acc = meet(acc, a);
  return acc;
}

QuantaloidPtr Quantaloid::opposite() const {
  const std::uint32_t n = size();
  std::vector<HomLattice> homs;
  for (ObjectId p = 0; p < n; ++p)
    for (ObjectId q = 0; q < n; ++q) homs.push_back(hom(q, p));
  auto compose = [this](ObjectId p, ObjectId q, ObjectId r, std::uint32_t v, std::uint32_t u) {
    // u in Q(q,p), v in Q(r,q); the opposite composite is u∘v in Q(r,p).
    const auto nv = hom(r, q).size();
    return compose_[triple(r, q, p)][u * nv + v];
  };
  return make(objects_, std::move(homs), compose, units_);
}

bool operator==(const Quantaloid& a, const Quantaloid& b) {
  return a.objects_ == b.objects_ && a.homs_ == b.homs_ && a.units_ == b.units_ &&
         a.compose_ == b.compose_;
}

bool same_quantaloid(const QuantaloidPtr& a, const QuantaloidPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

// Collects violations of one law; long lists are truncated with a count.
class LawLog {
 public:
  LawLog(Report& r, std::string name) : r_(r), name_(std::move(name)) {}
  void add(const std::string& detail) {
    if (count_ < kShown) r_.fail(name_, detail);
    ++count_;
  }
  ~LawLog() {
    if (count_ == 0)
      r_.pass(name_);
    else if (count_ > kShown)
      r_.fail(name_, "... " + std::to_string(count_ - kShown) + " more");
  }

 private:
  static constexpr std::size_t kShown = 50;
  Report& r_;
  std::string name_;
  std::size_t count_ = 0;
};

}  // namespace

Report validate_quantaloid(const Quantaloid& Q) {
  Report report("quantaloid");
  const std::uint32_t n = Q.size();
  auto lbl = [&](Arrow a) { return Q.qualified_label(a); };

  {
    LawLog order(report, "hom partial order");
    LawLog complete(report, "hom complete lattice");
    for (ObjectId p = 0; p < n; ++p)
      for (ObjectId q = 0; q < n; ++q) {
        const auto& h = Q.hom(p, q);
        const std::string name = Q.object_label(p) + "->" + Q.object_label(q);
        for (auto [a, b] : h.antisymmetry_violations())
          order.add(name + ": " + h.label(a) + " and " + h.label(b) + " are mutually below");
        if (!h.is_complete_lattice()) complete.add(name + " is not a complete lattice");
      }
  }
  if (!Q.lattices_ok()) {
    report.note("skipped", "algebraic laws need complete hom lattices");
    return report;
  }

  {
    LawLog log(report, "associativity");
    for (ObjectId p = 0; p < n; ++p)
      for (ObjectId q = 0; q < n; ++q)
        for (ObjectId r = 0; r < n; ++r)
          for (ObjectId s = 0; s < n; ++s)
            for (auto u : Q.arrows(p, q))
              for (auto v : Q.arrows(q, r))
                for (auto w : Q.arrows(r, s))
                  if (Q.compose(w, Q.compose(v, u)) != Q.compose(Q.compose(w, v), u))
                    log.add("(w,v,u) = (" + lbl(w) + ", " + lbl(v) + ", " + lbl(u) + ")");
  }
  {
    LawLog log(report, "unit laws");
    for (ObjectId p = 0; p < n; ++p)
      for (ObjectId q = 0; q < n; ++q)
        for (auto u : Q.arrows(p, q)) {
          if (Q.compose(Q.unit(q), u) != u) log.add("1_" + Q.object_label(q) + " o " + lbl(u));
          if (Q.compose(u, Q.unit(p)) != u) log.add(lbl(u) + " o 1_" + Q.object_label(p));
        }
  }
  {
    // Exhaustive over subsets for homs of at most 12 elements; larger homs
    // fall back to binary and empty joins, which suffice for finite lattices.
    constexpr std::uint32_t kExhaustive = 12;
    auto subsets = [&](ObjectId a, ObjectId b) {
      std::vector<std::vector<Arrow>> out;
      const auto elems = Q.arrows(a, b);
      const auto m = static_cast<std::uint32_t>(elems.size());
      if (m <= kExhaustive) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
          std::vector<Arrow> s;
          for (std::uint32_t i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(elems[i]);
          out.push_back(std::move(s));
        }
      } else {
        out.push_back({});
        for (std::uint32_t i = 0; i < m; ++i)
          for (std::uint32_t j = i; j < m; ++j) out.push_back({elems[i], elems[j]});
      }
      return out;
    };
    auto show = [&](const std::vector<Arrow>& s) {
      std::string t = "{";
      for (std::size_t i = 0; i < s.size(); ++i) t += (i ? ", " : "") + lbl(s[i]);
      return t + "}";
    };
    LawLog left(report, "join preservation (left variable)");
    LawLog right(report, "join preservation (right variable)");
    for (ObjectId p = 0; p < n; ++p)
      for (ObjectId q = 0; q < n; ++q)
        for (ObjectId r = 0; r < n; ++r) {
          const auto vs = subsets(q, r);
          for (auto u : Q.arrows(p, q))
            for (const auto& s : vs) {
              std::vector<Arrow> images;
              for (auto v : s) images.push_back(Q.compose(v, u));
              if (Q.compose(Q.hom_join(q, r, s), u) != Q.hom_join(p, r, images))
                left.add("(V S) o " + lbl(u) + " with S = " + show(s));
            }
          const auto us = subsets(p, q);
          for (auto v : Q.arrows(q, r))
            for (const auto& s : us) {
              std::vector<Arrow> images;
              for (auto u : s) images.push_back(Q.compose(v, u));
              if (Q.compose(v, Q.hom_join(p, q, s)) != Q.hom_join(p, r, images))
                right.add(lbl(v) + " o (V S) with S = " + show(s));
            }
        }
  }
  {
    LawLog log(report, "residuation adjunction");
    for (ObjectId p = 0; p < n; ++p)
      for (ObjectId q = 0; q < n; ++q)
        for (ObjectId r = 0; r < n; ++r)
          for (auto u : Q.arrows(p, q))
            for (auto v : Q.arrows(q, r))
              for (auto w : Q.arrows(p, r)) {
                bool a = Q.leq(Q.compose(v, u), w);
                bool b = Q.leq(v, Q.left_imp(w, u));
                bool c = Q.leq(u, Q.right_imp(v, w));
                if (a != b || b != c)
                  log.add("(u,v,w) = (" + lbl(u) + ", " + lbl(v) + ", " + lbl(w) + ")");
              }
  }
  return report;
}

bool is_cyclic(const Quantaloid& Q, std::span<const Arrow> d) {
  for (ObjectId p = 0; p < Q.size(); ++p)
    for (ObjectId q = 0; q < Q.size(); ++q)
      for (auto u : Q.arrows(p, q))
        if (Q.left_imp(d[p], u) != Q.right_imp(u, d[q])) return false;
  return true;
}

bool is_dualizing(const Quantaloid& Q, std::span<const Arrow> d) {
  for (ObjectId p = 0; p < Q.size(); ++p)
    for (ObjectId q = 0; q < Q.size(); ++q)
      for (auto u : Q.arrows(p, q)) {
        if (Q.right_imp(Q.left_imp(d[p], u), d[p]) != u) return false;
        if (Q.left_imp(d[q], Q.right_imp(u, d[q])) != u) return false;
      }
  return true;
}

CyclicDualizingFamily make_family(const Quantaloid& Q, std::vector<Arrow> d) {
  if (d.size() != Q.size()) raise(ErrorKind::InvalidParams, "one arrow per object expected");
  for (ObjectId q = 0; q < Q.size(); ++q)
    if (d[q].src != q || d[q].dst != q || d[q].index >= Q.hom(q, q).size())
      raise(ErrorKind::TypeMismatch, "family member is not an endo-arrow of its object");
  CyclicDualizingFamily f;
  f.d = std::move(d);
  f.cyclic = is_cyclic(Q, f.d);
  f.dualizing = is_dualizing(Q, f.d);
  return f;
}

std::optional<CyclicDualizingFamily> find_cyclic_dualizing_family(const Quantaloid& Q,
                                                                  const Budget& budget) {
  if (!Q.lattices_ok()) raise(ErrorKind::InvalidStructure, "homs are not complete lattices");
  const std::uint32_t n = Q.size();
  std::uint64_t space = 1;
  for (ObjectId q = 0; q < n; ++q) {
    space *= Q.hom(q, q).size();
    if (space > budget.family_search)
      raise(ErrorKind::SearchBudgetExceeded,
            "family space exceeds the cap of " + std::to_string(budget.family_search));
  }
  std::vector<Arrow> d(n);
  for (ObjectId q = 0; q < n; ++q) d[q] = Arrow{q, q, 0};
  std::optional<CyclicDualizingFamily> first_cyclic;
  for (std::uint64_t step = 0; step < space; ++step) {
    if (is_cyclic(Q, d)) {
      bool dual = is_dualizing(Q, d);
      if (dual) return CyclicDualizingFamily{d, true, true};
      if (!first_cyclic) first_cyclic = CyclicDualizingFamily{d, true, false};
    }
    for (ObjectId k = n; k-- > 0;) {
      if (++d[k].index < Q.hom(k, k).size()) break;
      d[k].index = 0;
    }
  }
  return first_cyclic;
}

Arrow complement_arrow(const Quantaloid& Q, const CyclicDualizingFamily& fam, Arrow u) {
  if (!fam.girard()) raise(ErrorKind::NotGirard, "family is not cyclic and dualizing");
  return Q.left_imp(fam.d.at(u.src), u);
}

std::string fraction_label(int k, int m) {
  if (k == 0) return "0";
  if (k == m) return "1";
  int g = std::gcd(k, m);
  return std::to_string(k / g) + "/" + std::to_string(m / g);
}

FiniteLatticeSpec chain_lattice(int n) {
  if (n < 1) raise(ErrorKind::InvalidParams, "chain needs at least one element");
  FiniteLatticeSpec s;
  for (int k = 0; k < n; ++k) s.elements.push_back(n == 1 ? "0" : fraction_label(k, n - 1));
  for (int k = 0; k + 1 < n; ++k) s.leq.emplace_back(s.elements[k], s.elements[k + 1]);
  return s;
}

FiniteLatticeSpec boolean_lattice(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  if (n < 2 || (1 << k) != n || k > 4)
    raise(ErrorKind::InvalidParams, "Boolean lattice size must be 2, 4, 8 or 16");
  const unsigned full = (1u << k) - 1;
  FiniteLatticeSpec s;
  for (unsigned m = 0; m <= full; ++m) {
    std::string name;
    if (m == 0) name = "0";
    else if (m == full) name = "1";
    else
      for (int i = 0; i < k; ++i)
        if (m & (1u << i)) name += static_cast<char>('a' + i);
    s.elements.push_back(name);
  }
  for (unsigned m = 0; m <= full; ++m)
    for (int i = 0; i < k; ++i)
      if (!(m & (1u << i))) s.leq.emplace_back(s.elements[m], s.elements[m | (1u << i)]);
  return s;
}

std::optional<FiniteLatticeSpec> named_lattice(std::string_view name) {
  auto number = [](std::string_view digits) -> std::optional<int> {
    if (digits.empty() || digits.size() > 3) return std::nullopt;
    int v = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (name.rfind("chain-", 0) == 0) {
    if (auto n = number(name.substr(6)); n && *n >= 1) return chain_lattice(*n);
  } else if (name.rfind("boolean-", 0) == 0) {
    if (auto n = number(name.substr(8))) {
      try {
        return boolean_lattice(*n);
      } catch (const Error&) {
      }
    }
  }
  return std::nullopt;
}

namespace {

HomLattice lattice_from_spec(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& leq) {
  if (elements.empty()) raise(ErrorKind::InvalidParams, "lattice has no elements");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto index = [&](const std::string& l) {
    auto it = std::find(elements.begin(), elements.end(), l);
    if (it == elements.end()) raise(ErrorKind::InvalidParams, "unknown element " + l);
    return static_cast<std::uint32_t>(it - elements.begin());
  };
  for (const auto& [a, b] : leq) pairs.emplace_back(index(a), index(b));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j]) raise(ErrorKind::InvalidParams, "duplicate element");
  return HomLattice(elements, pairs);
}

QuantaloidPtr one_object(const std::vector<std::string>& labels, std::uint32_t unit,
                         const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chain;
  for (std::uint32_t k = 0; k + 1 < labels.size(); ++k) chain.emplace_back(k, k + 1);
  return Quantaloid::make({"*"}, {HomLattice(labels, chain)},
                          [&](ObjectId, ObjectId, ObjectId, std::uint32_t v, std::uint32_t u) {
                            return mul(v, u);
                          },
                          {unit});
}

std::vector<std::string> chain_labels(int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(fraction_label(k, n - 1));
  return out;
}

}  // namespace

QuantaloidPtr preset_two() {
  return one_object({"0", "1"}, 1, [](std::uint32_t v, std::uint32_t u) { return std::min(v, u); });
}

QuantaloidPtr preset_lukasiewicz(int n) {
  if (n < 2) raise(ErrorKind::InvalidParams, "lukasiewicz-chain needs n >= 2");
  const auto top = static_cast<std::uint32_t>(n - 1);
  return one_object(chain_labels(n), top, [top](std::uint32_t v, std::uint32_t u) {
    return v + u > top ? v + u - top : 0u;
  });
}

QuantaloidPtr preset_godel(int n) {
  if (n < 2) raise(ErrorKind::InvalidParams, "godel-chain needs n >= 2");
  return one_object(chain_labels(n), static_cast<std::uint32_t>(n - 1),
                    [](std::uint32_t v, std::uint32_t u) { return std::min(v, u); });
}

QuantaloidPtr preset_frame_diagonal(const FiniteLatticeSpec& spec) {
  const HomLattice L = lattice_from_spec(spec.elements, spec.leq);
  if (!L.is_complete_lattice()) raise(ErrorKind::InvalidParams, "L is not a lattice");
  const std::uint32_t n = L.size();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          raise(ErrorKind::InvalidParams, "L is not distributive, hence not a frame");

  // Hom (p,q) lists the elements below p∧q in the order of L.
  std::vector<std::vector<std::uint32_t>> members(static_cast<std::size_t>(n) * n);
  std::vector<HomLattice> homs;
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q) {
      auto& m = members[p * n + q];
      const auto pq = L.meet(p, q);
      for (std::uint32_t x = 0; x < n; ++x)
        if (L.leq(x, pq)) m.push_back(x);
      std::vector<std::string> labels;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
      for (std::uint32_t i = 0; i < m.size(); ++i) {
        labels.push_back(L.label(m[i]));
        for (std::uint32_t j = 0; j < m.size(); ++j)
          if (L.leq(m[i], m[j])) leq.emplace_back(i, j);
      }
      homs.emplace_back(std::move(labels), leq);
    }
  auto position = [&](std::uint32_t p, std::uint32_t q, std::uint32_t x) {
    const auto& m = members[p * n + q];
    return static_cast<std::uint32_t>(std::find(m.begin(), m.end(), x) - m.begin());
  };
  std::vector<std::uint32_t> units;
  for (std::uint32_t q = 0; q < n; ++q) units.push_back(position(q, q, q));
  auto compose = [&](ObjectId p, ObjectId q, ObjectId r, std::uint32_t v, std::uint32_t u) {
    auto x = L.meet(members[q * n + r][v], members[p * n + q][u]);
    return position(p, r, x);
  };
  return Quantaloid::make(spec.elements, std::move(homs), compose, std::move(units));
}

QuantaloidPtr preset_commutative_quantale(const QuantaleTable& table) {
  const HomLattice L = lattice_from_spec(table.elements, table.leq);
  const std::uint32_t n = L.size();
  std::vector<std::uint32_t> mul(static_cast<std::size_t>(n) * n, kNone);
  for (const auto& row : table.product) {
    if (row.size() != 3) raise(ErrorKind::InvalidParams, "product rows are [a, b, a*b]");
    auto a = L.find(row[0]), b = L.find(row[1]), c = L.find(row[2]);
    if (!a || !b || !c) raise(ErrorKind::InvalidParams, "product mentions an unknown element");
    auto& slot = mul[*a * n + *b];
    if (slot != kNone && slot != *c) raise(ErrorKind::InvalidParams, "conflicting products");
    slot = *c;
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      auto& ab = mul[a * n + b];
      auto& ba = mul[b * n + a];
      if (ab == kNone) ab = ba;
      if (ab == kNone)
        raise(ErrorKind::InvalidParams, "missing product " + L.label(a) + "*" + L.label(b));
      if (ba != kNone && ab != ba) raise(ErrorKind::InvalidParams, "table is not commutative");
    }
  auto unit = L.find(table.unit);
  if (!unit) raise(ErrorKind::InvalidParams, "unknown unit " + table.unit);
  return Quantaloid::make({"*"}, {L},
                          [&](ObjectId, ObjectId, ObjectId, std::uint32_t v, std::uint32_t u) {
                            return mul[v * n + u];
                          },
                          {*unit});
}

QuantaloidPtr build_preset(std::string_view name, const PresetParams& params) {
  auto need_n = [&]() {
    if (!params.n) raise(ErrorKind::InvalidParams, std::string(name) + " needs n");
    return *params.n;
  };
  if (name == "two") return preset_two();
  if (name == "lukasiewicz-chain") return preset_lukasiewicz(need_n());
  if (name == "godel-chain") return preset_godel(need_n());
  if (name == "frame-diagonal") {
    if (!params.lattice) raise(ErrorKind::InvalidParams, "frame-diagonal needs a lattice L");
    return preset_frame_diagonal(*params.lattice);
  }
  if (name == "commutative-quantale-from-table") {
    if (!params.table) raise(ErrorKind::InvalidParams, "missing multiplication table");
    return preset_commutative_quantale(*params.table);
  }
  raise(ErrorKind::InvalidParams, "unknown preset " + std::string(name));
}

}  // namespace qfca
