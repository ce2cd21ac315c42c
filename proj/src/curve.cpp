#include "hermitian/curve.hpp"

#include <algorithm>

namespace hermitian {

bool is_on_curve(const FieldCtx& ctx, Elem x, Elem y) { return ctx.norm(x) == ctx.trace(y); }

std::vector<CurvePoint> curve_points(const FieldCtx& ctx) {
  // bucket every y by its trace; each fiber has exactly q elements
  std::vector<std::vector<Elem>> fiber(ctx.q());
  for (std::uint32_t i = 0; i < ctx.q2(); ++i) {
    Elem y = ctx.element_at(i);
    fiber[ctx.gfq_index(ctx.trace(y))].push_back(y);
  }
  std::vector<CurvePoint> pts;
  pts.reserve((std::size_t)ctx.q() * ctx.q2());
  for (std::uint32_t i = 0; i < ctx.q2(); ++i) {
    Elem x = ctx.element_at(i);
    for (Elem y : fiber[ctx.gfq_index(ctx.norm(x))]) pts.push_back({x, y});
  }
  return pts;
}

std::vector<LambdaAut> lambda_elements(const FieldCtx& ctx) {
  std::vector<LambdaAut> out;
  auto pts = curve_points(ctx);
  out.reserve(pts.size());
  for (const CurvePoint& pt : pts) out.push_back({pt.x, pt.y});
  return out;
}

CurvePoint act_on_point(const FieldCtx& ctx, const LambdaAut& s, const CurvePoint& pt) {
  assert(is_on_curve(ctx, s.gamma, s.delta));
  if (!is_on_curve(ctx, pt.x, pt.y)) throw Error(Error::Code::NotOnCurve, "point is not on the curve");
  Elem x = ctx.add(pt.x, s.gamma);
  Elem y = ctx.add(ctx.add(pt.y, ctx.mul(ctx.frob(s.gamma), pt.x)), s.delta);
  return {x, y};
}

Parabola act_on_parabola(const FieldCtx& ctx, const LambdaAut& s, const Parabola& par) {
  assert(is_on_curve(ctx, s.gamma, s.delta));
  Elem two_a = ctx.mul(ctx.from_prime(2), par.a);
  Elem b = ctx.add(ctx.sub(ctx.mul(two_a, s.gamma), ctx.frob(s.gamma)), par.b);
  Elem c = ctx.add(ctx.sub(ctx.add(ctx.mul(par.a, ctx.mul(s.gamma, s.gamma)), ctx.mul(par.b, s.gamma)),
                           s.delta),
                   par.c);
  return {par.a, b, c};
}

std::string format_point(const CurvePoint& pt) {
  return "(" + FieldCtx::format(pt.x) + "," + FieldCtx::format(pt.y) + ")";
}

std::string format_parabola(const Parabola& par) {
  return "(" + FieldCtx::format(par.a) + "," + FieldCtx::format(par.b) + "," +
         FieldCtx::format(par.c) + ")";
}

}  // namespace hermitian
