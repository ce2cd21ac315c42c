#include "hermitian/classify.hpp"

#include <algorithm>

#include "hermitian/oracle.hpp"

namespace hermitian {

namespace {

// largest q for which the closed-form counts (~q^6) fit in 64 bits
constexpr std::uint32_t kClosedFormulaMaxQ = 1024;

std::uint64_t checked(unsigned __int128 v) {
  if (v > (unsigned __int128)UINT64_MAX) throw Error(Error::Code::TooLarge, "census count overflows 64 bits");
  return (std::uint64_t)v;
}

}  // namespace

std::uint64_t CensusTable::total() const {
  std::uint64_t s = 0;
  for (auto& [k, c] : rows) s += c;
  return s;
}

std::uint64_t CensusTable::incidence_sum() const {
  std::uint64_t s = 0;
  for (auto& [k, c] : rows) s += (std::uint64_t)k * c;
  return s;
}

std::string CensusTable::to_json() const {
  std::string s = "{\"q\":" + std::to_string(q) + ",\"mode\":\"" + mode + "\",\"rows\":[";
  bool first = true;
  for (auto& [k, c] : rows) {
    if (!first) s += ',';
    first = false;
    s += "{\"k\":" + std::to_string(k) + ",\"count\":" + std::to_string(c) + "}";
  }
  s += "],\"total\":" + std::to_string(total()) + "}";
  return s;
}

std::string CensusTable::to_csv() const {
  std::string s = "k,count\n";
  for (auto& [k, c] : rows) s += std::to_string(k) + "," + std::to_string(c) + "\n";
  return s;
}

void ensure_class_rows(const FieldCtx& ctx, CensusTable& table) {
  std::uint32_t q = ctx.q();
  if (ctx.p() == 2) {
    for (std::uint32_t k : {1u, q - 1, q + 1, 2 * q - 1}) table.rows.emplace(k, 0);
  } else {
    for (std::uint32_t k : {0u, 1u, q - 1, q, q + 1, 2 * q - 1, 2 * q}) table.rows.emplace(k, 0);
  }
}

Elem f_a(const FieldCtx& ctx, Elem a, Elem x) {
  if (a.is_zero()) throw Error(Error::Code::ZeroA, "F_a needs a != 0");
  Elem x2 = ctx.mul(x, x);
  Elem v = ctx.sub(ctx.sub(ctx.norm(x), ctx.mul(ctx.frob(a), ctx.frob(x2))), ctx.mul(a, x2));
  assert(ctx.in_subfield(v));
  return v;
}

DeltaClass delta_class(const FieldCtx& ctx, Elem a) {
  if (a.is_zero()) throw Error(Error::Code::ZeroA, "delta class needs a != 0");
  Elem delta = ctx.sub(ctx.one(), ctx.mul(ctx.from_prime(4), ctx.norm(a)));
  if (ctx.p() == 2) return {delta, DeltaKind::EvenChar, std::nullopt};
  if (delta.is_zero()) {
    assert(ctx.norm(ctx.mul(ctx.from_prime(2), a)) == ctx.one());
    return {delta, DeltaKind::Zero, std::nullopt};
  }
  std::optional<Elem> z = ctx.sqrt(delta);
  assert(z.has_value());  // every GF(q) element is a square in GF(q^2)
  DeltaKind kind = ctx.frob(*z) == *z ? DeltaKind::SquareInFq : DeltaKind::NonSquareInFq;
  return {delta, kind, z};
}

Elem trace_representative(const FieldCtx& ctx, Elem w) {
  assert(ctx.in_subfield(w));
  if (w.is_zero()) return Elem::zero();
  if (ctx.p() != 2) return ctx.div(w, ctx.from_prime(2));  // Tr(w/2) = w for w in GF(q)
  Elem ta = ctx.trace(ctx.alpha());                        // nonzero: trace is onto
  return ctx.mul(ctx.div(w, ta), ctx.alpha());
}

Reduction reduce_parabola(const FieldCtx& ctx, const Parabola& par) {
  if (par.a.is_zero()) throw Error(Error::Code::ZeroA, "parabola needs a != 0");
  Reduction red{delta_class(ctx, par.a), Elem::zero(), false, Elem::zero(), Elem::zero(), par};

  if (ctx.p() == 2) {
    red.gamma = ctx.frob(par.b);  // gamma^q = b since b^(q^2) = b
    red.t0 = ctx.add(ctx.trace(par.c), f_a(ctx, par.a, red.gamma));
    red.representative = {par.a, Elem::zero(), trace_representative(ctx, red.t0)};
    return red;
  }

  Elem two_a = ctx.mul(ctx.from_prime(2), par.a);
  if (red.dclass.kind == DeltaKind::Zero) {
    red.big_b = ctx.add(ctx.mul(two_a, ctx.frob(par.b)), par.b);
    if (!red.big_b.is_zero()) {
      // equivalent to y = a(x+v)^2 where v^q + 2av = B
      auto vs = ctx.linmap_solve(ctx.neg(par.a), red.big_b, LinMapForm::FrobMinusAx);
      if (vs.empty()) throw Error(Error::Code::Internal, "a(x+v)^2 reduction has no v");
      Elem v = vs.front();
      red.vsq_branch = true;
      red.representative = {par.a, ctx.mul(two_a, v), ctx.mul(par.a, ctx.mul(v, v))};
      return red;
    }
  }

  auto gammas = ctx.linmap_solve(par.a, par.b, LinMapForm::AxMinusFrob);
  if (gammas.empty())
    throw Error(Error::Code::NoGamma, "b is not reachable by any shift: 2a·g - g^q = b unsolvable");
  red.gamma = gammas.front();
  red.t0 = ctx.add(ctx.trace(par.c), f_a(ctx, par.a, red.gamma));
  red.representative = {par.a, Elem::zero(), trace_representative(ctx, red.t0)};
  return red;
}

ClassificationResult classify(const FieldCtx& ctx, const Parabola& par) {
  Reduction red = reduce_parabola(ctx, par);
  std::uint32_t q = ctx.q();

  if (ctx.p() == 2) {
    unsigned bit = ctx.abs_trace(ctx.norm(par.a));
    bool t0_zero = red.t0.is_zero();
    unsigned count;
    std::string branch;
    if (bit == 0) {
      count = t0_zero ? 1 : q + 1;
      branch = t0_zero ? "even/abs-trace0/T0=0" : "even/abs-trace0/T0!=0";
    } else {
      count = t0_zero ? 2 * q - 1 : q - 1;
      branch = t0_zero ? "even/abs-trace1/T0=0" : "even/abs-trace1/T0!=0";
    }
    return {count, branch, red.representative};
  }

  switch (red.dclass.kind) {
    case DeltaKind::SquareInFq:
      return red.t0.is_zero()
                 ? ClassificationResult{1, "odd/delta-square/T0=0", red.representative}
                 : ClassificationResult{q + 1, "odd/delta-square/T0!=0", red.representative};
    case DeltaKind::NonSquareInFq:
      return red.t0.is_zero()
                 ? ClassificationResult{2 * q - 1, "odd/delta-nonsquare/T0=0", red.representative}
                 : ClassificationResult{q - 1, "odd/delta-nonsquare/T0!=0", red.representative};
    case DeltaKind::Zero: {
      if (red.vsq_branch) return {q, "odd/delta0/B!=0", red.representative};
      if (red.t0.is_zero()) return {q, "odd/delta0/B=0/T0=0", red.representative};
      // x^2 (x^(q-1) - 2a)^2 = -4a·T0, i.e. (x^q - 2ax)^2 = -4a·T0
      Elem rhs = ctx.neg(ctx.mul(ctx.mul(ctx.from_prime(4), par.a), red.t0));
      std::optional<Elem> s = ctx.sqrt(rhs);
      assert(s.has_value());  // -4·T0 lies in GF(q) and a is a square
      bool solvable = !ctx.linmap_solve(par.a, *s, LinMapForm::FrobMinusAx).empty();
#ifndef NDEBUG
      // every shift choice must land in the same class
      for (Elem g : ctx.linmap_solve(par.a, par.b, LinMapForm::AxMinusFrob)) {
        Elem t0g = ctx.add(ctx.trace(par.c), f_a(ctx, par.a, g));
        assert(!t0g.is_zero());
        Elem rhs_g = ctx.neg(ctx.mul(ctx.mul(ctx.from_prime(4), par.a), t0g));
        std::optional<Elem> sg = ctx.sqrt(rhs_g);
        assert(sg.has_value());
        assert(!ctx.linmap_solve(par.a, *sg, LinMapForm::FrobMinusAx).empty() == solvable);
      }
#endif
      return solvable ? ClassificationResult{2 * q, "odd/delta0/B=0/T0!=0/in-image", red.representative}
                      : ClassificationResult{0, "odd/delta0/B=0/T0!=0/no-image", red.representative};
    }
    case DeltaKind::EvenChar:
      break;
  }
  throw Error(Error::Code::Internal, "unreachable classification branch");
}

CensusTable census_closed(const FieldCtx& ctx) {
  std::uint64_t q = ctx.q();
  if (q > kClosedFormulaMaxQ) throw Error(Error::Code::TooLarge, "closed census bounded at q <= 1024");
  CensusTable t;
  t.q = (std::uint32_t)q;
  t.mode = "closed";
  using u128 = unsigned __int128;
  if (ctx.p() == 2) {
    u128 base = (u128)q * q * q * (q + 1);
    t.rows[1] += checked(base * (q / 2 - 1));
    t.rows[(std::uint32_t)q - 1] += checked(base * (q - 1) * (q / 2));
    t.rows[(std::uint32_t)q + 1] += checked(base * (q - 1) * (q / 2 - 1));
    t.rows[(std::uint32_t)(2 * q) - 1] += checked(base * (q / 2));
  } else {
    u128 base = (u128)q * q * (q + 1);
    t.rows[0] += checked(base * ((q - 1) / 2));
    t.rows[1] += checked(base * q * ((q - 3) / 2));
    t.rows[(std::uint32_t)q - 1] += checked(base * q * (q - 1) * ((q - 1) / 2));
    t.rows[(std::uint32_t)q] += checked(base * (q * q - q + 1));
    t.rows[(std::uint32_t)q + 1] += checked(base * q * (q - 1) * ((q - 3) / 2));
    t.rows[(std::uint32_t)(2 * q) - 1] += checked(base * q * ((q - 1) / 2));
    t.rows[(std::uint32_t)(2 * q)] += checked(base * ((q - 1) / 2));
  }
  ensure_class_rows(ctx, t);
  return t;
}

CensusTable census_by_classifier(const FieldCtx& ctx) {
  if (ctx.q() > max_enum_q())
    throw Error(Error::Code::BoundExceeded, "census bounded at q <= " + std::to_string(max_enum_q()));
  CensusTable t;
  t.q = ctx.q();
  t.mode = "classifier";
  for (std::uint32_t la = 0; la < ctx.mult_order(); ++la) {
    Elem a = Elem::from_log(la);
    for (std::uint32_t ib = 0; ib < ctx.q2(); ++ib) {
      Elem b = ctx.element_at(ib);
      for (std::uint32_t w = 0; w < ctx.q(); ++w) {
        Elem c = trace_representative(ctx, ctx.subfield_element_at(w));
        ClassificationResult r = classify(ctx, {a, b, c});
        t.rows[r.count] += ctx.q();  // q values of c share each trace class
      }
    }
  }
  ensure_class_rows(ctx, t);
  return t;
}

CensusTable line_census(const FieldCtx& ctx) {
  if (ctx.q() > max_enum_q())
    throw Error(Error::Code::BoundExceeded, "census bounded at q <= " + std::to_string(max_enum_q()));
  CensusTable t;
  t.q = ctx.q();
  t.mode = "lines";
  for (std::uint32_t im = 0; im < ctx.q2(); ++im) {
    auto hist = value_histogram(ctx, Elem::zero(), ctx.element_at(im));
    for (std::uint32_t w = 0; w < ctx.q(); ++w) t.rows[(std::uint32_t)hist[w]] += ctx.q();
  }
  return t;
}

}  // namespace hermitian
