// Hermitian codes as duals of monomial evaluation codes on the curve:
// monomial bases, parity-check matrices, the four-phase distance/dimension
// formulas, corner/edge codes, and weight-4 codeword counts.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/gf.hpp"

namespace hermitian {

struct MonomialBasis {
  std::uint32_t q = 0;
  long m = 0;
  std::vector<std::pair<unsigned, unsigned>> monomials;  // (r, s): x^r y^s, ordered by s then r
};

struct CodeSpec {
  std::uint32_t q = 0;
  long m = 0;
  int phase = 0;
  std::optional<std::pair<unsigned, unsigned>> ab;  // phase row parameters, where applicable
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t dim = 0;
  std::string to_json() const;
};

struct CheckMatrix {
  std::uint32_t q = 0;
  long m = 0;
  std::vector<std::vector<Elem>> rows;  // |B| x n, column j evaluates at curve_points()[j]

  std::size_t cols() const { return rows.empty() ? 0 : rows.front().size(); }
  std::string to_csv() const;
  std::vector<std::uint8_t> to_binary() const;  // {magic,q,m,rows,cols,logs...} u32 LE
};

enum class Weight4Code { H03, H13, H23 };

struct Weight4Report {
  std::string code;
  std::uint32_t q = 0;
  std::uint64_t a4_formula = 0;
  std::optional<std::uint64_t> a4_brute;
  std::map<std::uint32_t, std::uint64_t> nk;  // N_k table used (edge code H13 only)
  std::string to_json() const;
};

// all (r,s) with q·r + (q+1)·s <= m, 0 <= s <= q-1, 0 <= r <= q^2-1
MonomialBasis monomial_basis(std::uint32_t q, long m);

// |B| x q^3 matrix of monomial evaluations at the curve points
CheckMatrix check_matrix(const FieldCtx& ctx, long m);

// phase selection by m-range and the row formulas for (d, dim)
CodeSpec phase_params(std::uint32_t q, long m);

// first-phase corner (j = 0) and edge (1 <= j <= d-1) codes
std::pair<CodeSpec, CheckMatrix> corner_edge_code(const FieldCtx& ctx, unsigned d, unsigned j);

// exact weight-4 codeword counts for the three d = 3 codes; H13 needs the
// N_k table (parabolas plus non-vertical lines per intersection count)
std::uint64_t weight4_formula(std::uint32_t q, Weight4Code code,
                              const std::map<std::uint32_t, std::uint64_t>* nk = nullptr);

// weight-4 count by exhausting 4-column supports of the dual code {v : Hv = 0}
std::uint64_t weight4_brute(const FieldCtx& ctx, const CheckMatrix& mat, unsigned workers = 0);

unsigned matrix_rank(const FieldCtx& ctx, const CheckMatrix& mat);

// true minimum distance if <= limit, otherwise limit + 1
unsigned min_distance_brute(const FieldCtx& ctx, const CheckMatrix& mat, unsigned limit);

}  // namespace hermitian
