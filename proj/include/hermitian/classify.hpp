// Closed-form classification of the planar intersection of the Hermitian
// curve with any parabola y = a x^2 + b x + c, and census tables: per-count
// parabola totals from the closed formulas, from the classifier, and the
// brute-force non-vertical line census.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hermitian/curve.hpp"
#include "hermitian/gf.hpp"

namespace hermitian {

enum class DeltaKind { Zero, SquareInFq, NonSquareInFq, EvenChar };

// Discriminant data for the leading coefficient: delta = 1 - 4·N(a).
struct DeltaClass {
  Elem delta;
  DeltaKind kind;
  std::optional<Elem> z;  // canonical square root of delta, absent when kind == Zero
};

struct ClassificationResult {
  unsigned count = 0;
  std::string branch;  // decision-path tag, e.g. "odd/delta-square/T0!=0"
  Parabola reduced;    // orbit representative the count was derived from
};

// Exact map: intersection count k -> number of parabolas (or lines).
struct CensusTable {
  std::uint32_t q = 0;
  std::string mode;
  std::map<std::uint32_t, std::uint64_t> rows;

  std::uint64_t total() const;
  std::uint64_t incidence_sum() const;  // sum of k·N_k
  bool same_rows(const CensusTable& other) const { return rows == other.rows; }
  std::string to_json() const;
  std::string to_csv() const;
};

// F_a(x) = N(x) - Tr(a x^2) = x^(q+1) - a^q x^(2q) - a x^2, a value in GF(q)
Elem f_a(const FieldCtx& ctx, Elem a, Elem x);

DeltaClass delta_class(const FieldCtx& ctx, Elem a);

// Reduction of a parabola to its orbit representative.
struct Reduction {
  DeltaClass dclass;
  Elem big_b;               // 2 a b^q + b (odd q, delta = 0 discriminator)
  bool vsq_branch = false;  // true: equivalent to y = a(x+v)^2, no (a,0,c0) form
  Elem gamma;               // shift used, when vsq_branch is false
  Elem t0;                  // reduced trace T0 = Tr(c) + F_a(gamma)
  Parabola representative;
};

Reduction reduce_parabola(const FieldCtx& ctx, const Parabola& par);

// Exact intersection count without enumeration.
ClassificationResult classify(const FieldCtx& ctx, const Parabola& par);

// Census tables over all q^4(q^2-1) parabolas.
CensusTable census_closed(const FieldCtx& ctx);
CensusTable census_by_classifier(const FieldCtx& ctx);

// Brute-force census over all q^4 non-vertical lines y = m x + c.
CensusTable line_census(const FieldCtx& ctx);

// canonical element with a prescribed trace value w in GF(q)
Elem trace_representative(const FieldCtx& ctx, Elem w);

// inserts explicit zero rows for every intersection class of q's parity
void ensure_class_rows(const FieldCtx& ctx, CensusTable& table);

}  // namespace hermitian
