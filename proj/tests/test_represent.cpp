#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "qfca/represent.hpp"

using namespace qfca;
using fixtures::arrow;
using fixtures::error_of;

namespace {

struct Isbell {
  PresheafCategory PA;
  CopresheafCategory PdB;
  AdjunctionData adj;
};

Isbell isbell(const QDistributor& phi) {
  auto PA = materialize_PA(phi.dom_ptr());
  auto PdB = materialize_PdA(phi.cod_ptr());
  auto adj = make_adjunction(isbell_up_functor(phi, PA, PdB), isbell_down_functor(phi, PdB, PA));
  return {std::move(PA), std::move(PdB), std::move(adj)};
}

struct Kan {
  PresheafCategory PB;
  PresheafCategory PA;
  AdjunctionData adj;
};

Kan kan(const QDistributor& phi) {
  auto PB = materialize_PA(phi.cod_ptr());
  auto PA = materialize_PA(phi.dom_ptr());
  auto adj = make_adjunction(kan_star_functor(phi, PB, PA), kan_lower_functor(phi, PA, PB));
  return {std::move(PB), std::move(PA), std::move(adj)};
}

std::vector<fixtures::Context> contexts() {
  return {fixtures::fix_2id(), fixtures::fix_l3(), fixtures::fix_dl3()};
}

QFunctor remap(const QFunctor& F, const CategoryPtr& cod, const std::vector<std::size_t>& to) {
  std::vector<std::size_t> m;
  for (auto x : F.map()) m.push_back(to[x]);
  return QFunctor(F.dom_ptr(), cod, m);
}

using Rel = std::vector<std::vector<int>>;
const std::vector<Rel> kCrisp = {
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
    {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}},
    {{1, 1, 1}, {1, 0, 0}, {0, 0, 0}},
    {{0, 1, 0}, {1, 1, 1}, {0, 1, 0}},
};

}  // namespace

TEST_CASE("fixed points") {
  auto ctx = fixtures::fix_2id();
  auto PA = materialize_PA(ctx.A);
  CHECK(fix_points(identity_functor(PA.category)).members.size() == PA.size());
  auto top = *PA.index_of(top_presheaf(ctx.A, 0));
  QFunctor c(PA.category, PA.category, std::vector<std::size_t>(PA.size(), top));
  CHECK(fix_points(c).members == std::vector<std::size_t>{top});

  for (const auto& x : contexts()) {
    auto i = isbell(x.phi);
    auto M = compute_M(x.phi);
    std::vector<Presheaf> fixed;
    for (auto m : i.adj.fix_TS.members) fixed.push_back(i.PA.objects[m]);
    CHECK(same_concepts(fixed, M.concepts()));
    auto k = kan(x.phi);
    std::vector<Presheaf> kf;
    for (auto m : k.adj.fix_TS.members) kf.push_back(k.PB.objects[m]);
    CHECK(same_concepts(kf, compute_K(x.phi).concepts()));
    CHECK(verify_fix_equivalence(i.adj).ok());
    CHECK(verify_fix_equivalence(k.adj).ok());
  }
}

TEST_CASE("non-adjoint pairs are rejected") {
  // on the identity context up and down are inverse isomorphisms, so use L3
  auto ctx = fixtures::fix_l3();
  auto PA = materialize_PA(ctx.A);
  auto PdB = materialize_PdA(ctx.B);
  auto up = isbell_up_functor(ctx.phi, PA, PdB);
  auto down = isbell_down_functor(ctx.phi, PdB, PA);
  CHECK(error_of([&] { make_adjunction(down, up); }) == ErrorKind::NotAdjoint);
  auto id = identity_functor(PA.category);
  CHECK(error_of([&] { make_adjunction(up, id); }) == ErrorKind::NotAdjoint);
}

TEST_CASE("general representation: canonical data") {
  for (const auto& x : contexts()) {
    for (const auto& adj : {isbell(x.phi).adj, kan(x.phi).adj}) {
      auto [L, R] = canonical_general_data(adj);
      auto r = verify_general_representation(adj, L, R);
      CHECK(r.ok());
      auto Lp = construct_fix_equivalence(adj, L, R);
      CHECK(is_fully_faithful(Lp));
      CHECK(is_essentially_surjective(Lp));
      CHECK(find_equivalence(adj.fix_TS.cat, L.cod_ptr()));
      CHECK(verify_type_preserving_representation(adj, L.cod_ptr(), L.map(), R.map()).ok());
    }
  }
}

TEST_CASE("general representation: Isbell instance into M(phi)") {
  auto ctx = fixtures::fix_2id();
  auto i = isbell(ctx.phi);
  auto M = compute_M(ctx.phi);
  auto X = M.lattice.category;
  std::vector<std::size_t> l, r;
  for (std::size_t c = 0; c < i.PA.size(); ++c)
    l.push_back(*M.lattice.index_of(closure(ctx.phi, ConceptKind::FCA, i.PA.objects[c])));
  for (std::size_t d = 0; d < i.PdB.size(); ++d)
    r.push_back(*M.lattice.index_of(isbell_down(ctx.phi, i.PdB.objects[d])));
  QFunctor L(i.PA.category, X, l), R(i.PdB.category, X, r);
  CHECK(verify_general_representation(i.adj, L, R).ok());
  auto Lp = construct_fix_equivalence(i.adj, L, R);
  CHECK(find_equivalence(i.adj.fix_TS.cat, X));
  CHECK(is_essentially_surjective(Lp));
}

TEST_CASE("general representation: mutations are named") {
  auto ctx = fixtures::fix_l3();
  auto i = isbell(ctx.phi);
  auto [L, R] = canonical_general_data(i.adj);
  QFunctor Rc(R.dom_ptr(), R.cod_ptr(), std::vector<std::size_t>(R.dom().size(), R(0)));
  auto r = verify_general_representation(i.adj, L, Rc);
  CHECK(r.has_failure("R essentially surjective"));
  try {
    construct_fix_equivalence(i.adj, L, Rc);
    FAIL("expected ConditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionFailed);
    CHECK(std::string(e.what()).find("R essentially surjective") != std::string::npos);
  }
  QFunctor Lc(L.dom_ptr(), L.cod_ptr(), std::vector<std::size_t>(L.dom().size(), L(0)));
  CHECK(verify_general_representation(i.adj, Lc, R).has_failure("L essentially surjective"));

  auto bad = verify_type_preserving_representation(i.adj, L.cod_ptr(), L.map(),
                                                   std::vector<std::size_t>(R.dom().size(), R(0)));
  CHECK(bad.has_failure("R essentially surjective"));
}

TEST_CASE("poset Galois connection (two-valued)") {
  auto Q = fixtures::two();
  // C = 3-chain, D = 2-chain, s = (0,1,1), t = (0,2)
  auto C = fixtures::category(Q, {"c0", "c1", "c2"}, {0, 0, 0},
                              {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "0", "1"}});
  auto D = fixtures::category(Q, {"d0", "d1"}, {0, 0}, {{"1", "1"}, {"0", "1"}});
  std::vector<int> s = {0, 1, 1}, t = {0, 2};
  auto adj = make_adjunction(QFunctor(C, D, {0, 1, 1}), QFunctor(D, C, {0, 2}));
  // classical oracle: Fix(ts) by brute force
  std::vector<int> fix;
  for (int c = 0; c < 3; ++c)
    if (t[s[c]] == c) fix.push_back(c);
  CHECK(adj.fix_TS.members.size() == fix.size());
  auto X = fixtures::category(Q, {"lo", "hi"}, {0, 0}, {{"1", "1"}, {"0", "1"}});
  auto pos = [&](int c) { return std::find(fix.begin(), fix.end(), c) - fix.begin(); };
  std::vector<std::size_t> l, r;
  for (int c = 0; c < 3; ++c) l.push_back(pos(t[s[c]]));
  for (int d = 0; d < 2; ++d) r.push_back(pos(t[d]));
  for (int c = 0; c < 3; ++c)
    for (int d = 0; d < 2; ++d) CHECK((s[c] <= d) == (l[c] <= r[d]));
  CHECK(verify_type_preserving_representation(adj, X, l, r).ok());
}

TEST_CASE("dense representation") {
  for (const auto& x : contexts()) {
    CAPTURE(x.A->size());
    auto i = isbell(x.phi);
    auto [L, R] = canonical_general_data(i.adj);
    auto rn = verify_dense_representation(i.adj, L, identity_functor(i.PA.category), R,
                                          identity_functor(i.PdB.category));
    CHECK(rn.ok());

    auto YA = yoneda_functor(i.PA);
    auto YdB = coyoneda_functor(i.PdB);
    auto F = compose_functors(L, YA);
    auto G = compose_functors(R, YdB);
    CHECK(verify_dense_representation(i.adj, F, YA, G, YdB).ok());

    auto k = kan(x.phi);
    auto [Lk, Rk] = canonical_general_data(k.adj);
    CHECK(verify_dense_representation(k.adj, Lk, identity_functor(k.PB.category), Rk,
                                      identity_functor(k.PA.category))
              .ok());
  }
}

TEST_CASE("dense representation: mutations are named") {
  auto ctx = fixtures::fix_2id();
  auto i = isbell(ctx.phi);
  auto [L, R] = canonical_general_data(i.adj);
  auto YA = yoneda_functor(i.PA);
  auto YdB = coyoneda_functor(i.PdB);
  auto F = compose_functors(L, YA);
  auto G = compose_functors(R, YdB);
  auto bottom = *i.PA.index_of(bottom_presheaf(ctx.A, 0));
  QFunctor Kbad(ctx.A, i.PA.category, {bottom, bottom});
  auto r = verify_dense_representation(i.adj, F, Kbad, G, YdB);
  CHECK(r.has_failure("K dense"));

  auto bottom_d = *i.PdB.index_of(bottom_copresheaf(ctx.B, 0));
  QFunctor Hbad(ctx.B, i.PdB.category, {bottom_d, bottom_d});
  CHECK(verify_dense_representation(i.adj, F, YA, G, Hbad).has_failure("H codense"));

  DenseOptions o;
  o.assume_complete = true;
  auto ra = verify_dense_representation(i.adj, F, YA, G, YdB, o);
  CHECK(ra.ok());
  bool noted = false;
  for (const auto& [k, v] : ra.notes()) noted = noted || k == "completeness";
  CHECK(noted);
}

TEST_CASE("M(phi) representation") {
  for (const auto& x : contexts()) {
    auto M = compute_M(x.phi);
    auto [F, G] = canonical_mphi_data(x.phi, M);
    CHECK(verify_mphi_representation(x.phi, F, G).ok());
  }
  // MacNeille: A = (A / Y^dag_A)^# . (Y_A)#, realised by M of the identity
  auto Q = fixtures::two();
  auto n = fixtures::category(Q, {"a", "b", "c"}, {0, 0, 0},
                              {{"1", "1", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  auto id = identity_dist(n);
  auto mc = macneille(n);
  auto [F, G] = canonical_mphi_data(id, mc);
  CHECK(verify_mphi_representation(id, F, G).ok());

  // drop the top concept of FIX-2ID
  auto ctx = fixtures::fix_2id();
  auto M = compute_M(ctx.phi);
  auto [F2, G2] = canonical_mphi_data(ctx.phi, M);
  auto topi = *M.lattice.index_of(top_presheaf(ctx.A, 0));
  std::vector<std::size_t> keep, to(M.size());
  for (std::size_t j = 0; j < M.size(); ++j)
    if (j != topi) {
      to[j] = keep.size();
      keep.push_back(j);
    }
  auto X = full_subcategory(M.lattice.category, keep);
  auto r = verify_mphi_representation(ctx.phi, remap(F2, X, to), remap(G2, X, to));
  CHECK(r.has_failure("X complete"));
}

TEST_CASE("K(phi) representation") {
  for (const auto& x : contexts()) {
    auto K = compute_K(x.phi);
    auto abar = build_Abar(x.A);
    auto [F, G] = canonical_kphi_data(x.phi, K, abar);
    CHECK(verify_kphi_representation(x.phi, F, G).ok());
  }
  // Girard consistency on FIX-2ID
  auto ctx = fixtures::fix_2id();
  auto fam = *find_cyclic_dualizing_family(*ctx.Q);
  CHECK(verify_K_eq_M_neg(ctx.phi, fam).ok());

  auto l3 = fixtures::fix_l3();
  auto K = compute_K(l3.phi);
  auto abar = build_Abar(l3.A);
  auto [F, G] = canonical_kphi_data(l3.phi, K, abar);
  QFunctor collapsed(G.dom_ptr(), G.cod_ptr(), std::vector<std::size_t>(G.dom().size(), G(0)));
  auto r = verify_kphi_representation(l3.phi, F, collapsed);
  CHECK_FALSE(r.ok());
  CHECK(r.has_failure("phi^tr = G^# . F#"));
}

TEST_CASE("generator maps") {
  for (const auto& x : contexts()) {
    for (const auto& A : {x.A, x.B}) {
      auto g = build_generator_maps(A);
      CHECK(g.density.ok());
      for (std::size_t i = 0; i < g.dom_set.pairs.size(); ++i)
        CHECK(g.dom_set.category->type(i) == g.dom_set.pairs[i].second.dst);
      for (std::size_t i = 0; i < g.cod_set.pairs.size(); ++i)
        CHECK(g.cod_set.category->type(i) == g.cod_set.pairs[i].second.src);
    }
  }
  auto two = build_generator_maps(fixtures::discrete(fixtures::two(), {"x", "y"}));
  CHECK(two.density.ok());
  CHECK(two.dom_set.pairs.size() == 4);
}

TEST_CASE("elementary identities") {
  for (const auto& x : contexts()) CHECK(verify_elementary_identities(x.phi).ok());
  auto r = verify_elementary_identities(fixtures::fix_2id().phi);
  std::string isb, kn;
  for (const auto& [k, v] : r.notes()) (k == "isbell instances" ? isb : kn) = v;
  CHECK(isb == "16");
  CHECK(kn == "16");
  auto r3 = verify_elementary_identities(fixtures::fix_l3().phi);
  for (const auto& [k, v] : r3.notes()) CHECK(v == "9");

  // units reduce both identities to phi itself
  auto ctx = fixtures::fix_dl3();
  const auto& Q = *ctx.Q;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      auto ua = Q.unit(ctx.A->type(a));
      auto vb = Q.unit(ctx.B->type(b));
      CHECK(Q.right_imp(vb, Q.left_imp(ctx.phi(a, b), ua)) == ctx.phi(a, b));
    }
}

TEST_CASE("elementary representation") {
  for (const auto& x : contexts()) {
    auto M = compute_M(x.phi);
    auto m = canonical_elementary_data(x.phi, M);
    CHECK(verify_elementary_representation(x.phi, M.lattice.category, m.F, m.G, ConceptKind::FCA).ok());
    auto K = compute_K(x.phi);
    auto k = canonical_elementary_data(x.phi, K);
    CHECK(verify_elementary_representation(x.phi, K.lattice.category, k.F, k.G, ConceptKind::RST).ok());
  }
  auto ctx = fixtures::fix_l3();
  auto K = compute_K(ctx.phi);
  auto k = canonical_elementary_data(ctx.phi, K);
  auto F2 = k.F;
  std::fill(F2.begin(), F2.end(), F2[0]);
  auto r = verify_elementary_representation(ctx.phi, K.lattice.category, F2, k.G, ConceptKind::RST);
  CHECK(r.has_failure("F join-dense"));
}

TEST_CASE("two-valued FCA and RST reproduce the classical conditions") {
  for (const auto& rel : kCrisp) {
    auto ctx = fixtures::crisp(rel);
    auto M = compute_M(ctx.phi);
    auto m = canonical_elementary_data(ctx.phi, M);
    auto K = compute_K(ctx.phi);
    auto k = canonical_elementary_data(ctx.phi, K);
    CHECK(quantale_corollary_check(ctx.phi, M.lattice.category, m.F, m.G, ConceptKind::FCA).ok());
    CHECK(quantale_corollary_check(ctx.phi, K.lattice.category, k.F, k.G, ConceptKind::RST).ok());

    // powerset oracle: f(a) = least extent containing a, g(b) = {a : a phi b}
    auto ext = fixtures::classical_extents(rel);
    auto rst = fixtures::classical_rst(rel);
    auto least = [](const std::vector<std::uint32_t>& sets, std::uint32_t bit) {
      std::uint32_t best = ~0u;
      for (auto s : sets)
        if ((s & bit) && (best == ~0u || (s & best) == s)) best = s;
      return best;
    };
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        // (a,1) and (b,1) sit at odd positions of the product sets
        auto fa = fixtures::mask_of(M.concepts()[m.F[2 * a + 1]]);
        auto gb = fixtures::mask_of(M.concepts()[m.G[2 * b + 1]]);
        std::uint32_t col = 0;
        for (std::size_t x = 0; x < 3; ++x)
          if (rel[x][b]) col |= 1u << x;
        CHECK(fa == least(ext, 1u << a));
        CHECK(gb == col);
        CHECK((rel[a][b] == 1) == ((fa & gb) == fa));

        auto fb = fixtures::mask_of(K.concepts()[k.F[2 * b + 1]]);
        // N_A(a,0) is the complement of {a}
        auto ga = fixtures::mask_of(K.concepts()[k.G[2 * a]]);
        CHECK(fb == least(rst, 1u << b));
        CHECK((rel[a][b] == 0) == ((fb & ga) == fb));
      }
  }
}

TEST_CASE("quantale corollary") {
  auto Q = fixtures::l3();
  auto A = fixtures::discrete(Q, {"a1", "a2"});
  auto B = fixtures::discrete(Q, {"b1", "b2"});
  auto phi = fixtures::distributor(A, B, {{"1/2", "1/2"}, {"1/2", "1/2"}});
  auto M = compute_M(phi);
  auto m = canonical_elementary_data(phi, M);
  CHECK(quantale_corollary_check(phi, M.lattice.category, m.F, m.G, ConceptKind::FCA).ok());
  auto K = compute_K(phi);
  auto k = canonical_elementary_data(phi, K);
  CHECK(quantale_corollary_check(phi, K.lattice.category, k.F, k.G, ConceptKind::RST).ok());

  // a one-point X cannot carry a non-degenerate context
  auto pt = singleton_category(Q, 0);
  std::vector<std::size_t> zF(k.F.size(), 0), zG(k.G.size(), 0);
  CHECK_FALSE(quantale_corollary_check(phi, pt, zF, zG, ConceptKind::RST).ok());

  auto d = fixtures::fix_dl3();
  auto Md = compute_M(d.phi);
  auto md = canonical_elementary_data(d.phi, Md);
  CHECK(error_of([&] {
          quantale_corollary_check(d.phi, Md.lattice.category, md.F, md.G, ConceptKind::FCA);
        }) == ErrorKind::NotAQuantale);
}
