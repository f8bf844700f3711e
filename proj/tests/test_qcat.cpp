#include "doctest.h"
#include "fixtures.hpp"

using namespace qfca;
using fixtures::arrow;

TEST_CASE("category axioms") {
  auto Q = fixtures::two();
  CHECK(validate_category(*fixtures::discrete(Q, {"x", "y"})).ok());
  CHECK(validate_category(*fixtures::fix_dl3().A).ok());

  auto bad = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"0", "0"}, {"0", "1"}});
  auto r = validate_category(*bad);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.checks().empty());
  CHECK(r.checks()[0].detail.find("x") != std::string::npos);
}

TEST_CASE("underlying order") {
  auto Q = fixtures::l3();
  auto A = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "1/2"}, {"1", "1"}});
  REQUIRE(validate_category(*A).ok());
  auto le = underlying_order(*A);
  CHECK(le(1, 0));
  CHECK_FALSE(le(0, 1));
  CHECK(le(0, 0));

  auto codisc = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "1"}, {"1", "1"}});
  CHECK(is_isomorphic(*codisc, 0, 1));
  CHECK_FALSE(is_separated(*codisc));

  auto disc = underlying_order(*fixtures::discrete(Q, {"x", "y"}));
  CHECK_FALSE(disc(0, 1));
  CHECK_FALSE(disc(1, 0));

  // different types are never comparable
  auto D = fixtures::dl3();
  auto X = fixtures::discrete(D, {"p", "q"}, {1, 2});
  CHECK_FALSE(is_below(*X, 0, 1));
}

TEST_CASE("underlying order agrees with a transitive-closure oracle") {
  for (const auto& [name, Q] : fixtures::presets()) {
    CAPTURE(name);
    auto PA = materialize_PA(singleton_category(Q, 0));
    const auto& C = *PA.category;
    auto le = underlying_order(C);
    for (std::size_t x = 0; x < C.size(); ++x)
      for (std::size_t y = 0; y < C.size(); ++y) {
        bool direct = C.type(x) == C.type(y) && Q->leq(Q->unit(C.type(x)), C(x, y));
        CHECK(le(x, y) == direct);
        for (std::size_t z = 0; z < C.size(); ++z)
          if (le(x, y) && le(y, z)) CHECK(le(x, z));
      }
  }
}

TEST_CASE("skeletal quotient") {
  auto Q = fixtures::l3();
  auto twins = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "1"}, {"1", "1"}});
  auto sq = skeletal_quotient(twins);
  CHECK(sq.quotient->size() == 1);
  CHECK(is_separated(*sq.quotient));
  CHECK(is_essentially_surjective(sq.projection));
  CHECK(is_fully_faithful(sq.projection));

  auto PA = materialize_PA(singleton_category(Q, 0));
  CHECK(PA.size() == 3);
  CHECK(is_separated(*PA.category));
  CHECK(skeletal_quotient(PA.category).quotient->size() == 3);
}

TEST_CASE("discrete categories") {
  auto Q = fixtures::dl3();
  auto s = singleton_category(Q, 2);
  CHECK((*s)(0, 0) == Q->unit(2));
  auto empty = discrete_category(Q, TypedSet{});
  CHECK(empty->size() == 0);
  CHECK(validate_category(*empty).ok());
  auto X = fixtures::discrete(Q, {"p", "q"}, {1, 2});
  CHECK((*X)(0, 1) == Q->bottom(1, 2));
}

TEST_CASE("dualization is an involution") {
  auto ctx = fixtures::fix_dl3();
  auto Aop = dualize_category(*ctx.A);
  CHECK(validate_category(*Aop).ok());
  CHECK((*Aop)(0, 1).index == (*ctx.A)(1, 0).index);
  CHECK(same_category(dualize_category(*Aop), ctx.A));

  auto pop = dualize_distributor(ctx.phi);
  CHECK(validate_distributor(pop).ok());
  CHECK(dualize_distributor(pop) == ctx.phi);

  auto l3 = fixtures::fix_l3();
  auto lop = dualize_distributor(l3.phi);
  CHECK(l3.Q->label(lop(0, 0)) == "1/2");

  auto F = identity_functor(ctx.A);
  CHECK(dualize_functor(dualize_functor(F)) == F);
}

TEST_CASE("functor order and validation") {
  auto Q = fixtures::l3();
  auto A = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "1/2"}, {"1/2", "1"}});
  auto idA = identity_functor(A);
  CHECK(functor_leq(idA, idA));
  CHECK(validate_functor(idA).ok());
  QFunctor toX(A, A, {0, 0}), toY(A, A, {1, 1});
  CHECK_FALSE(functor_leq(toX, toY));  // A(x,y) = 1/2

  auto B = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "1"}, {"0", "1"}});
  auto C = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "0"}, {"0", "1"}});
  CHECK_FALSE(validate_functor(QFunctor(B, C, {0, 1})).ok());

  auto D = fixtures::dl3();
  auto X = fixtures::discrete(D, {"p"}, {1});
  auto Y = fixtures::discrete(D, {"q"}, {2});
  CHECK_THROWS_AS(QFunctor(X, Y, {0}), Error);
}

TEST_CASE("Yoneda is fully faithful but not surjective on FIX-2ID") {
  auto ctx = fixtures::fix_2id();
  auto PA = materialize_PA(ctx.A);
  CHECK(PA.size() == 4);
  auto Y = yoneda_functor(PA);
  CHECK(is_fully_faithful(Y));
  CHECK_FALSE(is_essentially_surjective(Y));
  CHECK(is_fully_faithful(identity_functor(ctx.A)));
  CHECK(is_essentially_surjective(identity_functor(ctx.A)));
}

TEST_CASE("equivalence search") {
  auto Q = fixtures::l3();
  auto twins = fixtures::category(Q, {"x", "y", "z"}, {0, 0, 0},
                                  {{"1", "1", "1/2"}, {"1", "1", "1/2"}, {"0", "0", "1"}});
  REQUIRE(validate_category(*twins).ok());
  auto sq = skeletal_quotient(twins);
  auto e1 = find_equivalence(twins, sq.quotient);
  auto e2 = find_equivalence(sq.quotient, twins);
  REQUIRE(e1);
  REQUIRE(e2);
  CHECK(is_fully_faithful(*e1));
  CHECK(is_essentially_surjective(*e2));
  auto self = find_equivalence(twins, twins);
  REQUIRE(self);
  CHECK(is_essentially_surjective(*self));

  auto chain = fixtures::category(Q, {"x", "y"}, {0, 0}, {{"1", "0"}, {"1", "1"}});
  auto anti = fixtures::discrete(Q, {"x", "y"});
  CHECK_FALSE(find_equivalence(chain, anti));
  CHECK_FALSE(find_equivalence(anti, chain));
}
