// Independent brute-force ground truth: exhaustive intersection counting,
// the full parabola census by enumeration, and orbit-invariance checks.

#pragma once

#include <cstdint>
#include <vector>

#include "hermitian/classify.hpp"
#include "hermitian/curve.hpp"
#include "hermitian/gf.hpp"

namespace hermitian {

// Substituting the parabola into the curve equation gives
//   g(x) = x^(q+1) - a^q x^(2q) - a x^2 - b^q x^q - b x  (a value in GF(q));
// the intersection count of (a,b,c) is #{x : g(x) = Tr(c)}.  Returns the
// histogram of g over all x in GF(q^2), indexed by gfq_index.  a may be zero
// (lines).
std::vector<std::uint64_t> value_histogram(const FieldCtx& ctx, Elem a, Elem b);

// number of affine points shared by the curve and the parabola
unsigned brute_count(const FieldCtx& ctx, const Parabola& par);

// Exact census over all q^4(q^2-1) parabolas by enumeration of (a, b) and the
// q trace classes of c.  Deterministic for any worker count; workers = 0
// picks the hardware concurrency.
CensusTable brute_census(const FieldCtx& ctx, unsigned workers = 0);

struct OrbitViolation {
  Parabola parabola;
  LambdaAut aut;
  unsigned count_before = 0, count_after = 0;
};

struct OrbitReport {
  std::uint64_t pairs_checked = 0;
  std::vector<OrbitViolation> violations;
};

// Checks brute_count invariance under the whole automorphism subgroup, over
// every parabola when q <= 3 and over `samples` deterministically sampled
// parabolas otherwise.
OrbitReport orbit_check(const FieldCtx& ctx, std::size_t samples);

// enumeration bound shared by the census routines; HERMITIAN_MAX_Q overrides
std::uint32_t max_enum_q();

}  // namespace hermitian
