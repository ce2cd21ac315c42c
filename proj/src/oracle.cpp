#include "hermitian/oracle.hpp"

#include <cstdlib>
#include <random>
#include <thread>

namespace hermitian {

std::uint32_t max_enum_q() {
  if (const char* env = std::getenv("HERMITIAN_MAX_Q")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 2) return (std::uint32_t)v;
  }
  return 16;
}

std::vector<std::uint64_t> value_histogram(const FieldCtx& ctx, Elem a, Elem b) {
  std::vector<std::uint64_t> hist(ctx.q(), 0);
  ++hist[0];  // x = 0 contributes g(0) = 0
  Elem aq = ctx.frob(a), bq = ctx.frob(b);
  for (std::uint32_t k = 0; k < ctx.mult_order(); ++k) {
    Elem x = Elem::from_log(k);
    Elem x2 = ctx.mul(x, x);
    Elem g = ctx.sub(ctx.sub(ctx.norm(x), ctx.mul(aq, ctx.frob(x2))), ctx.mul(a, x2));
    if (!b.is_zero()) g = ctx.sub(ctx.sub(g, ctx.mul(bq, ctx.frob(x))), ctx.mul(b, x));
    ++hist[ctx.gfq_index(g)];
  }
  return hist;
}

unsigned brute_count(const FieldCtx& ctx, const Parabola& par) {
  if (par.a.is_zero()) throw Error(Error::Code::ZeroA, "parabola needs a != 0");
  auto hist = value_histogram(ctx, par.a, par.b);
  return (unsigned)hist[ctx.gfq_index(ctx.trace(par.c))];
}

CensusTable brute_census(const FieldCtx& ctx, unsigned workers) {
  if (ctx.q() > max_enum_q())
    throw Error(Error::Code::BoundExceeded, "census bounded at q <= " + std::to_string(max_enum_q()));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  std::uint32_t q = ctx.q(), n = ctx.mult_order();
  // partial[w][k]: per-worker census rows indexed by intersection count; sized
  // by the trivial bound q^2 so the scan assumes nothing about possible counts
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(ctx.q2() + 1, 0));

  auto run = [&](unsigned w) {
    auto& rows = partial[w];
    for (std::uint32_t la = w; la < n; la += workers) {
      Elem a = Elem::from_log(la);
      for (std::uint32_t ib = 0; ib < ctx.q2(); ++ib) {
        auto hist = value_histogram(ctx, a, ctx.element_at(ib));
        // Tr(c) ranges over GF(q); q values of c share each trace class
        for (std::uint32_t w2 = 0; w2 < q; ++w2) rows[hist[w2]] += q;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  CensusTable t;
  t.q = q;
  t.mode = "brute";
  for (std::uint32_t k = 0; k <= ctx.q2(); ++k) {
    std::uint64_t total = 0;
    for (unsigned w = 0; w < workers; ++w) total += partial[w][k];
    if (total) t.rows[k] += total;
  }
  ensure_class_rows(ctx, t);
  return t;
}

OrbitReport orbit_check(const FieldCtx& ctx, std::size_t samples) {
  auto auts = lambda_elements(ctx);
  OrbitReport report;

  auto check = [&](const Parabola& par) {
    unsigned before = brute_count(ctx, par);
    for (const LambdaAut& s : auts) {
      Parabola image = act_on_parabola(ctx, s, par);
      unsigned after = brute_count(ctx, image);
      ++report.pairs_checked;
      if (after != before) report.violations.push_back({par, s, before, after});
    }
  };

  if (ctx.q() <= 3) {
    for (std::uint32_t la = 0; la < ctx.mult_order(); ++la)
      for (std::uint32_t ib = 0; ib < ctx.q2(); ++ib)
        for (std::uint32_t ic = 0; ic < ctx.q2(); ++ic)
          check({Elem::from_log(la), ctx.element_at(ib), ctx.element_at(ic)});
    return report;
  }

  std::mt19937_64 rng(0x4865726d69746573ull);  // fixed seed: runs are reproducible
  for (std::size_t i = 0; i < samples; ++i) {
    Parabola par{Elem::from_log((std::uint32_t)(rng() % ctx.mult_order())),
                 ctx.element_at((std::uint32_t)(rng() % ctx.q2())),
                 ctx.element_at((std::uint32_t)(rng() % ctx.q2()))};
    check(par);
  }
  return report;
}

}  // namespace hermitian
