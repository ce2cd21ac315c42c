#include <algorithm>
#include <set>

#include "doctest.h"
#include "hermitian/curve.hpp"

using namespace hermitian;

namespace {

std::uint64_t point_key(const FieldCtx&, const CurvePoint& pt) {
  return ((std::uint64_t)pt.x.order_key() << 32) | pt.y.order_key();
}

LambdaAut compose(const FieldCtx& ctx, const LambdaAut& s2, const LambdaAut& s1) {
  // apply s1 first, then s2
  return {ctx.add(s1.gamma, s2.gamma),
          ctx.add(ctx.add(s1.delta, s2.delta), ctx.mul(ctx.frob(s2.gamma), s1.gamma))};
}

}  // namespace

TEST_CASE("curve points: counts at larger fields") {
  for (auto pe : {std::pair<unsigned, unsigned>{5, 1}, {2, 3}, {3, 2}}) {
    auto ctx = FieldCtx::build(pe.first, pe.second);
    CHECK(curve_points(ctx).size() == (std::size_t)ctx.q() * ctx.q() * ctx.q());
  }
}

TEST_CASE("curve points: counts, membership, order") {
  for (auto pe : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
    auto ctx = FieldCtx::build(pe.first, pe.second);
    auto pts = curve_points(ctx);
    CHECK(pts.size() == (std::size_t)ctx.q() * ctx.q() * ctx.q());
    std::set<std::uint64_t> seen;
    for (const CurvePoint& pt : pts) {
      CHECK(is_on_curve(ctx, pt.x, pt.y));
      seen.insert(point_key(ctx, pt));
    }
    CHECK(seen.size() == pts.size());
    CHECK(std::is_sorted(pts.begin(), pts.end(), [&](const CurvePoint& u, const CurvePoint& v) {
      return point_key(ctx, u) < point_key(ctx, v);
    }));
    // for each x there are exactly q fiber points
    for (std::uint32_t i = 0; i < ctx.q2(); ++i) {
      Elem x = ctx.element_at(i);
      auto cnt = std::count_if(pts.begin(), pts.end(), [&](const CurvePoint& pt) { return pt.x == x; });
      CHECK(cnt == ctx.q());
    }
  }
}

TEST_CASE("curve membership basics") {
  auto ctx = FieldCtx::build(2, 1);
  CHECK(is_on_curve(ctx, Elem::zero(), Elem::zero()));
  unsigned on = 0;
  for (std::uint32_t i = 0; i < ctx.q2(); ++i) {
    Elem c = ctx.element_at(i);
    bool member = is_on_curve(ctx, Elem::zero(), c);
    CHECK(member == ctx.trace(c).is_zero());
    if (is_on_curve(ctx, ctx.alpha(), c)) ++on;
  }
  CHECK(on == 2);  // exactly q fiber points over x = alpha
}

TEST_CASE("automorphisms act on points") {
  auto ctx = FieldCtx::build(2, 1);
  auto pts = curve_points(ctx);
  LambdaAut id{Elem::zero(), Elem::zero()};
  for (const CurvePoint& pt : pts) CHECK(act_on_point(ctx, id, pt) == pt);

  // the orbit of (0,0) under the whole subgroup is the whole point set
  auto auts = lambda_elements(ctx);
  CHECK(auts.size() == 8);
  std::set<std::uint64_t> orbit;
  for (const LambdaAut& s : auts) orbit.insert(point_key(ctx, act_on_point(ctx, s, {Elem::zero(), Elem::zero()})));
  CHECK(orbit.size() == pts.size());

  CHECK_THROWS_AS(act_on_point(ctx, id, {ctx.alpha(), Elem::zero()}), Error);
}

TEST_CASE("automorphism action preserves membership and composes") {
  for (auto pe : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}}) {
    auto ctx = FieldCtx::build(pe.first, pe.second);
    auto pts = curve_points(ctx);
    auto auts = lambda_elements(ctx);
    CHECK(auts.size() == pts.size());
    for (const LambdaAut& s : auts)
      for (const CurvePoint& pt : pts) {
        CurvePoint im = act_on_point(ctx, s, pt);
        CHECK(is_on_curve(ctx, im.x, im.y));
      }
  }

  // exhaustive composition check at q = 3
  auto ctx = FieldCtx::build(3, 1);
  auto auts = lambda_elements(ctx);
  auto pts = curve_points(ctx);
  std::set<std::pair<std::uint32_t, std::uint32_t>> group;
  for (const LambdaAut& s : auts) group.insert({s.gamma.order_key(), s.delta.order_key()});
  for (const LambdaAut& s1 : auts)
    for (const LambdaAut& s2 : auts) {
      LambdaAut s3 = compose(ctx, s2, s1);
      CHECK(group.count({s3.gamma.order_key(), s3.delta.order_key()}) == 1);  // closure
      for (std::size_t i = 0; i < pts.size(); i += 5)
        CHECK(act_on_point(ctx, s2, act_on_point(ctx, s1, pts[i])) == act_on_point(ctx, s3, pts[i]));
    }
}

TEST_CASE("automorphisms act on parabolas") {
  auto ctx = FieldCtx::build(3, 1);
  auto auts = lambda_elements(ctx);
  LambdaAut id{Elem::zero(), Elem::zero()};
  Parabola par{ctx.alpha(), ctx.beta(), ctx.one()};
  CHECK(act_on_parabola(ctx, id, par) == par);

  for (const LambdaAut& s : auts) {
    // against the b = c = 0 special form: (a, 2a·g - g^q, a·g^2 - d)
    for (std::uint32_t la = 0; la < ctx.mult_order(); ++la) {
      Elem a = Elem::from_log(la);
      Parabola image = act_on_parabola(ctx, s, {a, Elem::zero(), Elem::zero()});
      Elem two_a = ctx.mul(ctx.from_prime(2), a);
      CHECK(image.a == a);
      CHECK(image.b == ctx.sub(ctx.mul(two_a, s.gamma), ctx.frob(s.gamma)));
      CHECK(image.c == ctx.sub(ctx.mul(a, ctx.mul(s.gamma, s.gamma)), s.delta));
    }
  }

  CHECK(format_parabola(par) == "(a^1,a^4,a^0)");
  CHECK(format_point({Elem::zero(), ctx.alpha()}) == "(0,a^1)");

  // delta != 0 leading coefficients give maximal orbits: q^3 distinct parabolas
  for (std::uint32_t la = 0; la < ctx.mult_order(); ++la) {
    Elem a = Elem::from_log(la);
    if (ctx.norm(ctx.mul(ctx.from_prime(2), a)) == ctx.one()) continue;
    std::set<std::pair<std::uint32_t, std::uint32_t>> orbit;
    for (const LambdaAut& s : auts) {
      Parabola image = act_on_parabola(ctx, s, {a, Elem::zero(), Elem::zero()});
      orbit.insert({image.b.order_key(), image.c.order_key()});
    }
    CHECK(orbit.size() == 27);
  }
}
