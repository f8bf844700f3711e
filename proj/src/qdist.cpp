#include "qfca/qdist.hpp"

#include "qfca/errors.hpp"

namespace qfca {

QDistributor::QDistributor(CategoryPtr dom, CategoryPtr cod, std::vector<Arrow> matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(matrix)) {
  if (!same_quantaloid(dom_->quantaloid(), cod_->quantaloid()))
    raise(ErrorKind::TypeMismatch, "distributor between categories over different quantaloids");
  if (m_.size() != dom_->size() * cod_->size())
    raise(ErrorKind::InvalidStructure, "distributor shape mismatch");
  const auto& Q = dom_->Q();
  for (std::size_t x = 0; x < dom_->size(); ++x)
    for (std::size_t y = 0; y < cod_->size(); ++y) {
      const Arrow a = (*this)(x, y);
      if (a.src != dom_->type(x) || a.dst != cod_->type(y) ||
          a.index >= Q.hom(a.src, a.dst).size())
        raise(ErrorKind::TypeMismatch,
              "entry (" + dom_->label(x) + ", " + cod_->label(y) + ") is in the wrong hom-set");
    }
}

QDistributor QDistributor::from_function(CategoryPtr dom, CategoryPtr cod,
                                         const std::function<Arrow(std::size_t, std::size_t)>& f) {
  std::vector<Arrow> m;
  m.reserve(dom->size() * cod->size());
  for (std::size_t x = 0; x < dom->size(); ++x)
    for (std::size_t y = 0; y < cod->size(); ++y) m.push_back(f(x, y));
  return QDistributor(std::move(dom), std::move(cod), std::move(m));
}

bool operator==(const QDistributor& a, const QDistributor& b) {
  return a.matrix() == b.matrix() && same_category(a.dom_ptr(), b.dom_ptr()) &&
         same_category(a.cod_ptr(), b.cod_ptr());
}

bool dist_leq(const QDistributor& a, const QDistributor& b) {
  if (!same_category(a.dom_ptr(), b.dom_ptr()) || !same_category(a.cod_ptr(), b.cod_ptr()))
    raise(ErrorKind::TypeMismatch, "distributors are not parallel");
  for (std::size_t i = 0; i < a.matrix().size(); ++i)
    if (!a.Q().leq(a.matrix()[i], b.matrix()[i])) return false;
  return true;
}

// The quadruple law B(y,y')∘φ(x,y)∘A(x',x) <= φ(x',y') is equivalent to the
// two one-sided action laws, since the diagonal homs dominate the units.
Report validate_distributor(const QDistributor& phi) {
  Report r("distributor");
  const auto& A = phi.dom();
  const auto& B = phi.cod();
  const auto& Q = phi.Q();
  std::size_t bad_a = 0, bad_b = 0;
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t x2 = 0; x2 < A.size(); ++x2)
      for (std::size_t y = 0; y < B.size(); ++y)
        if (!Q.leq(Q.compose(phi(x, y), A(x2, x)), phi(x2, y)) && ++bad_a <= 50)
          r.fail("domain action", "phi(" + A.label(x) + "," + B.label(y) + ") o A(" +
                                      A.label(x2) + "," + A.label(x) + ") <= phi(" +
                                      A.label(x2) + "," + B.label(y) + ") fails");
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < B.size(); ++y)
      for (std::size_t y2 = 0; y2 < B.size(); ++y2)
        if (!Q.leq(Q.compose(B(y, y2), phi(x, y)), phi(x, y2)) && ++bad_b <= 50)
          r.fail("codomain action", "B(" + B.label(y) + "," + B.label(y2) + ") o phi(" +
                                        A.label(x) + "," + B.label(y) + ") <= phi(" +
                                        A.label(x) + "," + B.label(y2) + ") fails");
  if (bad_a == 0) r.pass("domain action");
  if (bad_b == 0) r.pass("codomain action");
  return r;
}

QDistributor dist_compose(const QDistributor& psi, const QDistributor& phi) {
  if (!same_category(phi.cod_ptr(), psi.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "distributors do not compose");
  const auto& Q = phi.Q();
  const auto& A = phi.dom();
  const auto& B = phi.cod();
  const auto& C = psi.cod();
  return QDistributor::from_function(phi.dom_ptr(), psi.cod_ptr(), [&](std::size_t x,
                                                                       std::size_t z) {
    Arrow acc = Q.bottom(A.type(x), C.type(z));
    for (std::size_t y = 0; y < B.size(); ++y) acc = Q.join(acc, Q.compose(psi(y, z), phi(x, y)));
    return acc;
  });
}

QDistributor dist_left_imp(const QDistributor& xi, const QDistributor& phi) {
  if (!same_category(xi.dom_ptr(), phi.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "left implication needs a common domain");
  const auto& Q = phi.Q();
  const auto& A = phi.dom();
  const auto& B = phi.cod();
  const auto& C = xi.cod();
  return QDistributor::from_function(phi.cod_ptr(), xi.cod_ptr(), [&](std::size_t y,
                                                                      std::size_t z) {
    Arrow acc = Q.top(B.type(y), C.type(z));
    for (std::size_t x = 0; x < A.size(); ++x) acc = Q.meet(acc, Q.left_imp(xi(x, z), phi(x, y)));
    return acc;
  });
}

QDistributor dist_right_imp(const QDistributor& psi, const QDistributor& xi) {
  if (!same_category(psi.cod_ptr(), xi.cod_ptr()))
    raise(ErrorKind::TypeMismatch, "right implication needs a common codomain");
  const auto& Q = psi.Q();
  const auto& A = xi.dom();
  const auto& B = psi.dom();
  const auto& C = psi.cod();
  return QDistributor::from_function(xi.dom_ptr(), psi.dom_ptr(), [&](std::size_t x,
                                                                      std::size_t y) {
    Arrow acc = Q.top(A.type(x), B.type(y));
    for (std::size_t z = 0; z < C.size(); ++z) acc = Q.meet(acc, Q.right_imp(psi(y, z), xi(x, z)));
    return acc;
  });
}

QDistributor identity_dist(const CategoryPtr& A) {
  return QDistributor::from_function(A, A, [&](std::size_t x, std::size_t y) { return (*A)(x, y); });
}

QDistributor graph(const QFunctor& F) {
  const auto& B = F.cod();
  return QDistributor::from_function(F.dom_ptr(), F.cod_ptr(),
                                     [&](std::size_t x, std::size_t y) { return B(F(x), y); });
}

QDistributor cograph(const QFunctor& F) {
  const auto& B = F.cod();
  return QDistributor::from_function(F.cod_ptr(), F.dom_ptr(),
                                     [&](std::size_t y, std::size_t x) { return B(y, F(x)); });
}

QDistributor restrict_distributor(const QDistributor& phi, const QFunctor& F, const QFunctor& G) {
  if (!same_category(F.cod_ptr(), phi.dom_ptr()) || !same_category(G.cod_ptr(), phi.cod_ptr()))
    raise(ErrorKind::TypeMismatch, "restriction functors do not land in the distributor's ends");
  return QDistributor::from_function(F.dom_ptr(), G.dom_ptr(), [&](std::size_t x, std::size_t y) {
    return phi(F(x), G(y));
  });
}

QDistributor dualize_distributor(const QDistributor& phi) {
  auto Aop = dualize_category(phi.dom());
  auto Bop = dualize_category(phi.cod());
  return QDistributor::from_function(Bop, Aop, [&](std::size_t y, std::size_t x) {
    const Arrow a = phi(x, y);
    return Arrow{a.dst, a.src, a.index};
  });
}

bool dist_adjoint_pair(const QDistributor& phi, const QDistributor& psi) {
  if (!same_category(phi.dom_ptr(), psi.cod_ptr()) || !same_category(phi.cod_ptr(), psi.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "distributors are not opposed");
  return dist_leq(identity_dist(phi.dom_ptr()), dist_compose(psi, phi)) &&
         dist_leq(dist_compose(phi, psi), identity_dist(phi.cod_ptr()));
}

bool is_adjoint_functor_pair(const QFunctor& F, const QFunctor& G) {
  if (!same_category(F.dom_ptr(), G.cod_ptr()) || !same_category(F.cod_ptr(), G.dom_ptr()))
    raise(ErrorKind::TypeMismatch, "functors are not opposed");
  const auto& A = F.dom();
  const auto& B = F.cod();
  for (std::size_t x = 0; x < A.size(); ++x)
    for (std::size_t y = 0; y < B.size(); ++y)
      if (B(F(x), y) != A(x, G(y))) return false;
  return true;
}

Report validate_chu(const ChuTransform& c) {
  Report r("chu transform");
  const auto& phi = c.from;
  const auto& psi = c.to;
  bool shapes = same_category(c.F.dom_ptr(), phi.dom_ptr()) &&
                same_category(c.F.cod_ptr(), psi.dom_ptr()) &&
                same_category(c.G.dom_ptr(), psi.cod_ptr()) &&
                same_category(c.G.cod_ptr(), phi.cod_ptr());
  r.check("shapes", shapes, shapes ? "" : "F: A -> A' and G: B' -> B expected");
  if (!shapes) return r;
  std::size_t bad = 0;
  for (std::size_t a = 0; a < phi.dom().size(); ++a)
    for (std::size_t b = 0; b < psi.cod().size(); ++b)
      if (psi(c.F(a), b) != phi(a, c.G(b)) && ++bad <= 50)
        r.fail("psi(F-,-) = phi(-,G-)", "differs at (" + phi.dom().label(a) + ", " +
                                            psi.cod().label(b) + ")");
  if (bad == 0) r.pass("psi(F-,-) = phi(-,G-)");
  return r;
}

Report adjoint_arrow_identities_suite(const QFunctor& F, std::span<const QDistributor> pool) {
  Report r("graph and cograph calculus");
  const QDistributor Fg = graph(F);
  const QDistributor Fc = cograph(F);
  const auto& A = F.dom_ptr();
  const auto& B = F.cod_ptr();
  auto same = [](const CategoryPtr& x, const CategoryPtr& y) { return same_category(x, y); };

  struct Tally {
    std::size_t instances = 0, failures = 0;
  };
  auto finish = [&](const std::string& name, const Tally& t) {
    r.check(name, t.failures == 0,
            std::to_string(t.instances) + " instances" +
                (t.failures ? ", " + std::to_string(t.failures) + " failing" : ""));
  };
  auto run = [&](Tally& t, const QDistributor& lhs, const QDistributor& rhs) {
    ++t.instances;
    if (!(lhs == rhs)) ++t.failures;
  };

  Tally t1a, t1b, t2a, t2b, t3a, t3b, t4a, t4b;
  for (const auto& phi : pool) {
    if (same(phi.dom_ptr(), B)) run(t1a, dist_compose(phi, Fg), dist_left_imp(phi, Fc));
    if (same(phi.cod_ptr(), B)) run(t1b, dist_compose(Fc, phi), dist_right_imp(Fg, phi));
    for (const auto& psi : pool) {
      if (same(phi.cod_ptr(), A) && same(psi.cod_ptr(), B))
        run(t2a, dist_right_imp(dist_compose(Fg, phi), psi),
            dist_right_imp(phi, dist_compose(Fc, psi)));
      if (same(psi.dom_ptr(), B) && same(phi.dom_ptr(), A))
        run(t2b, dist_left_imp(dist_compose(psi, Fg), phi),
            dist_left_imp(psi, dist_compose(phi, Fc)));
      if (same(psi.dom_ptr(), B) && same(phi.cod_ptr(), psi.cod_ptr()))
        run(t3a, dist_compose(dist_right_imp(phi, psi), Fg),
            dist_right_imp(phi, dist_compose(psi, Fg)));
      if (same(psi.cod_ptr(), B) && same(phi.dom_ptr(), psi.dom_ptr()))
        run(t3b, dist_compose(Fc, dist_left_imp(psi, phi)),
            dist_left_imp(dist_compose(Fc, psi), phi));
      if (same(phi.dom_ptr(), B) && same(psi.cod_ptr(), phi.cod_ptr()))
        run(t4a, dist_compose(Fc, dist_right_imp(phi, psi)),
            dist_right_imp(dist_compose(phi, Fg), psi));
      if (same(phi.cod_ptr(), B) && same(psi.dom_ptr(), phi.dom_ptr()))
        run(t4b, dist_compose(dist_left_imp(psi, phi), Fg),
            dist_left_imp(psi, dist_compose(Fc, phi)));
    }
  }
  finish("phi o F# = phi / F^#", t1a);
  finish("F^# o phi = F# \\ phi", t1b);
  finish("(F# o phi) \\ psi = phi \\ (F^# o psi)", t2a);
  finish("(psi o F#) / phi = psi / (phi o F^#)", t2b);
  finish("(phi \\ psi) o F# = phi \\ (psi o F#)", t3a);
  finish("F^# o (psi / phi) = (F^# o psi) / phi", t3b);
  finish("F^# o (phi \\ psi) = (phi o F#) \\ psi", t4a);
  finish("(psi / phi) o F# = psi / (F^# o phi)", t4b);
  return r;
}

Report adjoint_arrow_identities_suite(const QFunctor& F, const QDistributor& phi,
                                      const QDistributor& psi) {
  const QDistributor pool[] = {phi, psi};
  return adjoint_arrow_identities_suite(F, pool);
}

}  // namespace qfca
