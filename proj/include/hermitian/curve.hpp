// The Hermitian curve x^(q+1) = y^q + y over GF(q^2): affine point set,
// membership, and the q^3-element automorphism subgroup acting on points
// and parabolas.

#pragma once

#include <vector>

#include "hermitian/gf.hpp"

namespace hermitian {

struct CurvePoint {
  Elem x, y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// x -> x + gamma, y -> y + gamma^q x + delta, with (gamma, delta) a curve point
struct LambdaAut {
  Elem gamma, delta;
  friend bool operator==(const LambdaAut&, const LambdaAut&) = default;
};

// y = a x^2 + b x + c with a != 0
struct Parabola {
  Elem a, b, c;
  friend bool operator==(const Parabola&, const Parabola&) = default;
};

bool is_on_curve(const FieldCtx& ctx, Elem x, Elem y);

// all q^3 affine points, ordered by (x, y) with zero first
std::vector<CurvePoint> curve_points(const FieldCtx& ctx);

// one automorphism per curve point, same order as curve_points
std::vector<LambdaAut> lambda_elements(const FieldCtx& ctx);

CurvePoint act_on_point(const FieldCtx& ctx, const LambdaAut& s, const CurvePoint& pt);

// (a, b, c) -> (a, 2a·gamma - gamma^q + b, a·gamma^2 + b·gamma - delta + c)
Parabola act_on_parabola(const FieldCtx& ctx, const LambdaAut& s, const Parabola& par);

// text forms "(x,y)" and "(a,b,c)" in the element syntax
std::string format_point(const CurvePoint& pt);
std::string format_parabola(const Parabola& par);

}  // namespace hermitian
