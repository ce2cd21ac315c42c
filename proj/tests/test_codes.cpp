#include <algorithm>

#include "doctest.h"
#include "hermitian/classify.hpp"
#include "hermitian/codes.hpp"

using namespace hermitian;

namespace {

std::map<std::uint32_t, std::uint64_t> nk_table(const FieldCtx& ctx) {
  auto nk = census_closed(ctx).rows;
  for (auto& [k, c] : line_census(ctx).rows) nk[k] += c;
  return nk;
}

}  // namespace

TEST_CASE("monomial bases") {
  auto b22 = monomial_basis(2, 2);
  CHECK(b22.monomials == std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}});

  auto b34 = monomial_basis(3, 4);
  CHECK(b34.monomials == std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {0, 1}});

  CHECK(monomial_basis(3, 0).monomials == std::vector<std::pair<unsigned, unsigned>>{{0, 0}});

  CHECK_THROWS_AS(monomial_basis(3, -1), Error);
  CHECK_THROWS_AS(monomial_basis(3, 32), Error);  // above q^3+q^2-q-2 = 31
  CHECK(monomial_basis(3, 31).monomials.size() == 26);
}

TEST_CASE("check matrices") {
  auto f4 = FieldCtx::build(2, 1);
  auto h = check_matrix(f4, 2);
  REQUIRE(h.rows.size() == 2);
  CHECK(h.cols() == 8);
  CHECK(matrix_rank(f4, h) == 2);
  for (const Elem& x : h.rows[0]) CHECK(x == f4.one());  // the (0,0) monomial row

  auto f9 = FieldCtx::build(3, 1);
  auto h9 = check_matrix(f9, 4);
  CHECK(h9.rows.size() == 3);
  CHECK(h9.cols() == 27);
  CHECK(matrix_rank(f9, h9) == 3);
}

TEST_CASE("phase selection") {
  auto s1 = phase_params(2, 2);
  CHECK(s1.phase == 1);
  CHECK(s1.ab == std::pair<unsigned, unsigned>{1, 0});
  CHECK(s1.d == 2);
  CHECK(s1.dim == 6);

  auto s3 = phase_params(3, 10);
  CHECK(s3.phase == 3);
  CHECK(s3.d == 6);
  CHECK(s3.dim == 19);

  auto s4 = phase_params(2, 7);
  CHECK(s4.phase == 4);
  CHECK(s4.ab == std::pair<unsigned, unsigned>{0, 0});
  CHECK(s4.d == 8);
  CHECK(s4.dim == 1);

  CHECK_THROWS_AS(phase_params(3, 999), Error);
  CHECK_THROWS_WITH_AS(phase_params(4, 18), doctest::Contains("no valid (a,b)"), Error);

  // the dimension row always agrees with n - |B|
  for (unsigned q : {2u, 3u}) {
    long mmax = (long)q * q * q + (long)q * q - q - 2;
    for (long m = 0; m <= mmax; ++m) {
      auto spec = phase_params(q, m);
      CHECK(spec.dim == q * q * q - monomial_basis(q, m).monomials.size());
    }
  }
}

TEST_CASE("corner and edge codes") {
  auto f9 = FieldCtx::build(3, 1);
  auto [c0, h0] = corner_edge_code(f9, 3, 0);
  CHECK(c0.dim == 24);
  CHECK(c0.d == 3);
  CHECK(monomial_basis(3, c0.m).monomials ==
        std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {0, 1}});

  auto [c2, h2] = corner_edge_code(f9, 3, 2);
  CHECK(c2.dim == 22);
  CHECK(monomial_basis(3, c2.m).monomials ==
        std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});

  auto f16 = FieldCtx::build(2, 2);
  auto [c1, h1] = corner_edge_code(f16, 3, 1);
  CHECK(c1.dim == 60);

  auto [c21, h21] = corner_edge_code(f9, 2, 1);
  CHECK(c21.d == 2);
  CHECK(c21.dim == 25);

  CHECK_THROWS_AS(corner_edge_code(f9, 1, 0), Error);
  CHECK_THROWS_AS(corner_edge_code(f9, 4, 0), Error);
  CHECK_THROWS_AS(corner_edge_code(f9, 3, 3), Error);
}

TEST_CASE("weight-4 formulas at q = 3") {
  auto ctx = FieldCtx::build(3, 1);
  auto nk = nk_table(ctx);
  CHECK(weight4_formula(3, Weight4Code::H03) == 101088);
  CHECK(weight4_formula(3, Weight4Code::H13, &nk) == 11664);
  CHECK(weight4_formula(3, Weight4Code::H23) == 432);
  CHECK_THROWS_AS(weight4_formula(2, Weight4Code::H03), Error);
  CHECK_THROWS_AS(weight4_formula(3, Weight4Code::H13), Error);  // N_k table required
}

TEST_CASE("weight-4 formulas match the support scan at q = 3") {
  auto ctx = FieldCtx::build(3, 1);
  auto nk = nk_table(ctx);
  Weight4Code ids[3] = {Weight4Code::H03, Weight4Code::H13, Weight4Code::H23};
  for (unsigned j = 0; j < 3; ++j) {
    auto [spec, mat] = corner_edge_code(ctx, 3, j);
    std::uint64_t formula = weight4_formula(3, ids[j], &nk);
    CHECK(weight4_brute(ctx, mat, 2) == formula);
  }
}

TEST_CASE("weight-4 scan is worker-independent") {
  auto ctx = FieldCtx::build(3, 1);
  auto [spec, mat] = corner_edge_code(ctx, 3, 0);
  CHECK(weight4_brute(ctx, mat, 1) == weight4_brute(ctx, mat, 3));
}

TEST_CASE("weight-4 scan of a wider code finds nothing") {
  auto ctx = FieldCtx::build(3, 1);
  auto spec = phase_params(3, 12);
  REQUIRE(spec.d == 8);
  CHECK(weight4_brute(ctx, check_matrix(ctx, 12), 1) == 0);
}

TEST_CASE("minimum distances by enumeration") {
  auto f4 = FieldCtx::build(2, 1);
  for (long m = 0; m <= 8; ++m) {
    auto spec = phase_params(2, m);
    CHECK(min_distance_brute(f4, check_matrix(f4, m), spec.n) == spec.d);
  }
  auto f9 = FieldCtx::build(3, 1);
  for (long m = 0; m <= 7; ++m) {
    auto spec = phase_params(3, m);
    REQUIRE(spec.phase == 1);
    CHECK(min_distance_brute(f9, check_matrix(f9, m), spec.d) == spec.d);
  }
}

TEST_CASE("matrix export formats") {
  auto f4 = FieldCtx::build(2, 1);
  auto h = check_matrix(f4, 2);
  std::string csv = h.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.substr(0, 8) == "a^0,a^0,");

  auto bytes = h.to_binary();
  REQUIRE(bytes.size() == 20 + 4 * 16);
  CHECK(bytes[0] == 'H');
  CHECK(bytes[1] == 'C');
  CHECK(bytes[2] == 'M');
  CHECK(bytes[3] == '1');
  auto u32at = [&](std::size_t off) {
    return (std::uint32_t)bytes[off] | ((std::uint32_t)bytes[off + 1] << 8) |
           ((std::uint32_t)bytes[off + 2] << 16) | ((std::uint32_t)bytes[off + 3] << 24);
  };
  CHECK(u32at(4) == 2);    // q
  CHECK(u32at(8) == 2);    // m
  CHECK(u32at(12) == 2);   // rows
  CHECK(u32at(16) == 8);   // cols
  CHECK(u32at(20) == 0);   // log of the leading 1
  // the x-row starts at the two x = 0 points: zero sentinel
  CHECK(u32at(20 + 4 * 8) == 0xffffffffu);

  auto spec = phase_params(2, 2);
  CHECK(spec.to_json() == "{\"q\":2,\"m\":2,\"phase\":1,\"a\":1,\"b\":0,\"n\":8,\"d\":2,\"dim\":6}");
}
