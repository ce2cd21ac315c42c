#include <cstdlib>
#include <set>

#include "doctest.h"
#include "hermitian/oracle.hpp"

using namespace hermitian;

namespace {

// second opinion for brute_count: walk the q^3 curve points and test y = ax^2+bx+c
unsigned naive_point_count(const FieldCtx& ctx, const Parabola& par) {
  unsigned cnt = 0;
  for (const CurvePoint& pt : curve_points(ctx)) {
    Elem rhs = ctx.add(ctx.add(ctx.mul(par.a, ctx.mul(pt.x, pt.x)), ctx.mul(par.b, pt.x)), par.c);
    if (pt.y == rhs) ++cnt;
  }
  return cnt;
}

}  // namespace

TEST_CASE("brute counting against a pointwise scan") {
  auto f4 = FieldCtx::build(2, 1);
  CHECK(brute_count(f4, {f4.one(), Elem::zero(), Elem::zero()}) == 3);
  CHECK_THROWS_AS(brute_count(f4, {Elem::zero(), f4.one(), f4.one()}), Error);

  for (auto pe : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}}) {
    auto ctx = FieldCtx::build(pe.first, pe.second);
    std::set<unsigned> attained;
    for (std::uint32_t la = 0; la < ctx.mult_order(); ++la)
      for (std::uint32_t ib = 0; ib < ctx.q2(); ++ib)
        for (std::uint32_t ic = 0; ic < ctx.q2(); ++ic) {
          Parabola par{Elem::from_log(la), ctx.element_at(ib), ctx.element_at(ic)};
          unsigned cnt = brute_count(ctx, par);
          CHECK(cnt == naive_point_count(ctx, par));
          CHECK(cnt <= 2 * ctx.q());
          attained.insert(cnt);
        }
    // no count outside the classified set ever occurs
    std::uint32_t q = ctx.q();
    std::set<unsigned> allowed = ctx.p() == 2
                                     ? std::set<unsigned>{1, q - 1, q + 1, 2 * q - 1}
                                     : std::set<unsigned>{0, 1, q - 1, q, q + 1, 2 * q - 1, 2 * q};
    for (unsigned c : attained) CHECK(allowed.count(c) == 1);
  }
}

TEST_CASE("counts depend on c only through its trace") {
  auto ctx = FieldCtx::build(3, 1);
  for (std::uint32_t la = 0; la < ctx.mult_order(); ++la)
    for (std::uint32_t ib = 0; ib < ctx.q2(); ++ib) {
      Elem a = Elem::from_log(la), b = ctx.element_at(ib);
      std::map<std::uint32_t, unsigned> per_class;
      for (std::uint32_t ic = 0; ic < ctx.q2(); ++ic) {
        Elem c = ctx.element_at(ic);
        unsigned cnt = brute_count(ctx, {a, b, c});
        auto [it, fresh] = per_class.emplace(ctx.gfq_index(ctx.trace(c)), cnt);
        if (!fresh) CHECK(it->second == cnt);
      }
    }
}

TEST_CASE("brute census tables") {
  auto f4 = FieldCtx::build(2, 1);
  auto t4 = brute_census(f4, 1);
  CHECK(t4.rows == std::map<std::uint32_t, std::uint64_t>{{1, 24}, {3, 24}});

  auto f9 = FieldCtx::build(3, 1);
  CHECK(brute_census(f9, 1).same_rows(census_closed(f9)));

  // worker count never changes the result
  auto t1 = brute_census(f9, 1);
  auto t3 = brute_census(f9, 3);
  auto t8 = brute_census(f9, 8);
  CHECK(t1.to_json() == t3.to_json());
  CHECK(t1.to_json() == t8.to_json());
}

TEST_CASE("enumeration bound") {
  unsetenv("HERMITIAN_MAX_Q");
  CHECK(max_enum_q() == 16);
  auto f25 = FieldCtx::build(5, 1);
  setenv("HERMITIAN_MAX_Q", "4", 1);
  CHECK(max_enum_q() == 4);
  CHECK_THROWS_AS(brute_census(f25, 1), Error);
  CHECK_THROWS_AS(census_by_classifier(f25), Error);
  setenv("HERMITIAN_MAX_Q", "5", 1);
  CHECK(brute_census(f25, 1).same_rows(census_closed(f25)));
  unsetenv("HERMITIAN_MAX_Q");
}

TEST_CASE("orbit invariance of brute counts") {
  auto f4 = FieldCtx::build(2, 1);
  auto report = orbit_check(f4, 0);
  CHECK(report.pairs_checked == 48 * 8);
  CHECK(report.violations.empty());

  // sampled mode is deterministic and clean at q = 4
  auto f16 = FieldCtx::build(2, 2);
  auto r1 = orbit_check(f16, 5);
  auto r2 = orbit_check(f16, 5);
  CHECK(r1.pairs_checked == 5 * 64);
  CHECK(r1.violations.empty());
  CHECK(r2.pairs_checked == r1.pairs_checked);
}
