#include "hermitian/codes.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace hermitian {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kSupportBound = 100'000'000;  // max 4-subsets weight4_brute will scan

u128 binom(std::uint64_t n, unsigned k) {
  if (n < k) return 0;
  u128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t exact_div(u128 v, std::uint64_t d) {
  if (v % d != 0) throw Error(Error::Code::InexactDivision, "weight-4 formula division is not exact");
  v /= d;
  if (v > (u128)UINT64_MAX) throw Error(Error::Code::TooLarge, "weight-4 count overflows 64 bits");
  return (std::uint64_t)v;
}

std::uint64_t fits64(u128 v) {
  if (v > (u128)UINT64_MAX) throw Error(Error::Code::TooLarge, "weight-4 count overflows 64 bits");
  return (std::uint64_t)v;
}

// Row-reduction over GF(q^2).  Returns the nullspace basis of the matrix.
std::vector<std::vector<Elem>> nullspace(const FieldCtx& ctx, std::vector<std::vector<Elem>> m) {
  std::size_t nrows = m.size(), ncols = nrows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_of_col(ncols, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = SIZE_MAX;
    for (std::size_t r = rank; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(m[rank], m[piv]);
    Elem s = ctx.inv(m[rank][col]);
    for (std::size_t c = col; c < ncols; ++c) m[rank][c] = ctx.mul(m[rank][c], s);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Elem f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        m[r][c] = ctx.sub(m[r][c], ctx.mul(f, m[rank][c]));
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<Elem>> basis;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (pivot_of_col[col] != SIZE_MAX) continue;
    std::vector<Elem> v(ncols, Elem::zero());
    v[col] = ctx.one();
    for (std::size_t c = 0; c < ncols; ++c)
      if (pivot_of_col[c] != SIZE_MAX) v[c] = ctx.neg(m[pivot_of_col[c]][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const FieldCtx& ctx, std::vector<std::vector<Elem>> m) {
  std::size_t nrows = m.size(), ncols = nrows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = SIZE_MAX;
    for (std::size_t r = rank; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(m[rank], m[piv]);
    Elem inv = ctx.inv(m[rank][col]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      if (m[r][col].is_zero()) continue;
      Elem f = ctx.mul(m[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c)
        m[r][c] = ctx.sub(m[r][c], ctx.mul(f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

// number of nullspace vectors with no zero coordinate
std::uint64_t count_full_support(const FieldCtx& ctx, const std::vector<std::vector<Elem>>& basis) {
  if (basis.empty()) return 0;
  std::size_t w = basis[0].size();
  if (basis.size() == 1) {
    for (const Elem& x : basis[0])
      if (x.is_zero()) return 0;
    return ctx.q2() - 1;
  }
  std::uint64_t cnt = 0;
  std::vector<Elem> acc(w, Elem::zero());
  // enumerate all coefficient vectors; the zero vector never has full support
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == basis.size()) {
      for (const Elem& x : acc)
        if (x.is_zero()) return;
      ++cnt;
      return;
    }
    for (std::uint32_t ci = 0; ci < ctx.q2(); ++ci) {
      Elem coef = ctx.element_at(ci);
      std::vector<Elem> saved = acc;
      if (!coef.is_zero())
        for (std::size_t j = 0; j < w; ++j) acc[j] = ctx.add(acc[j], ctx.mul(coef, basis[i][j]));
      self(self, i + 1);
      acc = std::move(saved);
    }
  };
  rec(rec, 0);
  return cnt;
}

std::vector<std::vector<Elem>> columns_submatrix(const CheckMatrix& mat, const std::size_t* idx,
                                                 std::size_t w) {
  std::vector<std::vector<Elem>> sub(mat.rows.size(), std::vector<Elem>(w));
  for (std::size_t r = 0; r < mat.rows.size(); ++r)
    for (std::size_t j = 0; j < w; ++j) sub[r][j] = mat.rows[r][idx[j]];
  return sub;
}

// largest t' <= t expressible as q·r + (q+1)·s with s <= q-1, i.e. (t' mod q) <= (t' div q)
long largest_realizable(long t, std::uint32_t q) {
  while (t > 0 && t % (long)q > t / (long)q) --t;
  return t;
}

}  // namespace

MonomialBasis monomial_basis(std::uint32_t q, long m) {
  long n = (long)q * q * q;
  if (m < 0 || m > n + (long)q * q - q - 2)
    throw Error(Error::Code::MOutOfRange, "m = " + std::to_string(m) + " is out of range");
  MonomialBasis b;
  b.q = q;
  b.m = m;
  for (unsigned s = 0; s < q; ++s)
    for (unsigned r = 0; r < q * q; ++r)
      if ((long)q * r + (long)(q + 1) * s <= m) b.monomials.emplace_back(r, s);
  return b;
}

CheckMatrix check_matrix(const FieldCtx& ctx, long m) {
  MonomialBasis basis = monomial_basis(ctx.q(), m);
  auto pts = curve_points(ctx);
  CheckMatrix mat;
  mat.q = ctx.q();
  mat.m = m;
  mat.rows.reserve(basis.monomials.size());
  for (auto [r, s] : basis.monomials) {
    std::vector<Elem> row;
    row.reserve(pts.size());
    for (const CurvePoint& pt : pts) row.push_back(ctx.mul(ctx.pow(pt.x, r), ctx.pow(pt.y, s)));
    mat.rows.push_back(std::move(row));
  }
  return mat;
}

CodeSpec phase_params(std::uint32_t q, long m) {
  long n = (long)q * q * q;
  long q2 = (long)q * q;
  if (m < 0 || m > n + q2 - q - 2)
    throw Error(Error::Code::MOutOfRange, "m = " + std::to_string(m) + " is out of range");

  struct Row {
    int phase;
    std::optional<std::pair<unsigned, unsigned>> ab;
    long d, dim;
  };
  std::vector<Row> rows;
  bool phase2_gap = false;

  if (m <= q2 - 2) {
    long t = largest_realizable(m, q);
    long a = t / q, b = t % q;
    rows.push_back({1, {{(unsigned)a, (unsigned)b}}, a > b ? a + 1 : a + 2, n - a * (a + 1) / 2 - (b + 1)});
  }
  if (m >= q2 - 1 && m <= 2 * q2 - 2 * (long)q - 3) {
    long t = 2 * q2 - q - 3 - m;
    long a = t / q, b = t % q;
    if (a >= 1 && a <= (long)q - 2 && b <= (long)q - 2) {
      long d = a <= b ? ((long)q - a) * q - b - 1 : ((long)q - a) * q;
      rows.push_back({2, {{(unsigned)a, (unsigned)b}}, d, n - (long)q * (3 * (long)q - 1) / 2 + a * q + b + 2});
    } else {
      phase2_gap = true;
    }
  }
  if (m >= 2 * q2 - 2 * (long)q - 2 && m <= n - 2)
    rows.push_back({3, std::nullopt, m - q2 + q + 2, n - m + (long)q * (q - 1) / 2 - 1});
  if (m >= n - 1) {
    long t = largest_realizable(n + q2 - q - 2 - m, q);
    long a = t / q, b = t % q;
    rows.push_back({4, {{(unsigned)a, (unsigned)b}}, n - t, a * (a + 1) / 2 + b + 1});
  }

  if (rows.empty()) {
    if (phase2_gap)
      throw Error(Error::Code::PhaseDecompositionFailed,
                  "m = " + std::to_string(m) + " has no valid (a,b) in its phase row");
    throw Error(Error::Code::Internal, "phase ranges failed to cover m");
  }
  for (const Row& r : rows)
    if (r.d != rows[0].d || r.dim != rows[0].dim)
      throw Error(Error::Code::PhaseAmbiguous,
                  "adjacent phase rows disagree at m = " + std::to_string(m));

  const Row& r = rows.front();
  return {q, m, r.phase, r.ab, (std::uint32_t)n, (std::uint32_t)r.d, (std::uint32_t)r.dim};
}

std::pair<CodeSpec, CheckMatrix> corner_edge_code(const FieldCtx& ctx, unsigned d, unsigned j) {
  std::uint32_t q = ctx.q();
  if (d < 2 || d > q) throw Error(Error::Code::DOutOfRange, "need 2 <= d <= q");
  if (j > d - 1) throw Error(Error::Code::JOutOfRange, "need 0 <= j <= d-1");
  long m = j == 0 ? (long)q * (d - 2) + (d - 2) : (long)q * (d - 1) + (j - 1);
  CodeSpec spec = phase_params(q, m);
  assert(spec.phase == 1 && spec.d == d);
  assert(spec.dim == spec.n - d * (d - 1) / 2 - j);
  return {spec, check_matrix(ctx, m)};
}

std::uint64_t weight4_formula(std::uint32_t q, Weight4Code code,
                              const std::map<std::uint32_t, std::uint64_t>* nk) {
  if (q < 3) throw Error(Error::Code::QTooSmall, "d = 3 codes need q >= 3");
  u128 qq = q;
  u128 n = qq * qq * qq;
  switch (code) {
    case Weight4Code::H03: {
      u128 lead = binom((std::uint64_t)n, 3) * (qq + 1);
      u128 tail = qq * qq * binom(q + 1, 3) * (3 * n + 2 * qq * qq - 8);
      if (tail > lead) throw Error(Error::Code::Internal, "corner-code count went negative");
      return exact_div((lead - tail) * (qq - 1) * (n - 3), 4);
    }
    case Weight4Code::H13: {
      if (nk == nullptr)
        throw Error(Error::Code::ZeroInput, "edge code H13 needs the N_k census table");
      u128 total = qq * qq * binom(q, 4) * (qq * qq * qq * qq - 4 * qq * qq + 3);
      total += exact_div(qq * qq * qq * qq * (qq * qq - 1) * (qq * qq - 1) * (qq - 1) * (qq - 1), 8);
      u128 sum = 0;
      for (std::uint32_t k = 4; k <= 2 * q; ++k) {
        auto it = nk->find(k);
        if (it != nk->end()) sum += (u128)it->second * binom(k, 4);
      }
      total += (qq * qq - 1) * sum;
      return fits64(total);
    }
    case Weight4Code::H23:
      return fits64(qq * qq * (qq - 1) * binom(q + 1, 4) * (2 * n - 3 * qq * qq - 4 * qq + 9));
  }
  throw Error(Error::Code::Internal, "unknown weight-4 code id");
}

std::uint64_t weight4_brute(const FieldCtx& ctx, const CheckMatrix& mat, unsigned workers) {
  std::size_t n = mat.cols();
  if (binom(n, 4) > kSupportBound)
    throw Error(Error::Code::BoundExceeded, "too many 4-column supports to scan");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    std::uint64_t cnt = 0;
    std::size_t idx[4];
    for (idx[0] = w; idx[0] + 3 < n; idx[0] += workers)
      for (idx[1] = idx[0] + 1; idx[1] + 2 < n; ++idx[1])
        for (idx[2] = idx[1] + 1; idx[2] + 1 < n; ++idx[2])
          for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
            cnt += count_full_support(ctx, nullspace(ctx, columns_submatrix(mat, idx, 4)));
    partial[w] = cnt;
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

unsigned matrix_rank(const FieldCtx& ctx, const CheckMatrix& mat) {
  return (unsigned)rank_of(ctx, mat.rows);
}

unsigned min_distance_brute(const FieldCtx& ctx, const CheckMatrix& mat, unsigned limit) {
  std::size_t n = mat.cols();
  auto basis = nullspace(ctx, mat.rows);
  std::size_t k = basis.size();

  // enumerate every codeword when the code is small enough
  double words = std::pow((double)ctx.q2(), (double)k);
  if (words <= (double)(1u << 22)) {
    unsigned best = (unsigned)n + 1;
    std::vector<Elem> acc(n, Elem::zero());
    auto rec = [&](auto&& self, std::size_t i, bool nonzero) -> void {
      if (i == k) {
        if (!nonzero) return;
        unsigned wgt = 0;
        for (const Elem& x : acc)
          if (!x.is_zero()) ++wgt;
        if (wgt > 0) best = std::min(best, wgt);
        return;
      }
      for (std::uint32_t ci = 0; ci < ctx.q2(); ++ci) {
        Elem coef = ctx.element_at(ci);
        std::vector<Elem> saved = acc;
        if (!coef.is_zero())
          for (std::size_t j = 0; j < n; ++j) acc[j] = ctx.add(acc[j], ctx.mul(coef, basis[i][j]));
        self(self, i + 1, nonzero || !coef.is_zero());
        acc = std::move(saved);
      }
    };
    rec(rec, 0, false);
    return best > limit ? limit + 1 : best;
  }

  // otherwise exhaust supports of each weight up to the limit
  for (unsigned w = 1; w <= limit; ++w) {
    std::vector<std::size_t> idx(w);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      if (count_full_support(ctx, nullspace(ctx, columns_submatrix(mat, idx.data(), w))) > 0) return w;
      // next combination
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return limit + 1;
}

std::string CodeSpec::to_json() const {
  std::string s = "{\"q\":" + std::to_string(q) + ",\"m\":" + std::to_string(m) +
                  ",\"phase\":" + std::to_string(phase);
  if (ab) s += ",\"a\":" + std::to_string(ab->first) + ",\"b\":" + std::to_string(ab->second);
  s += ",\"n\":" + std::to_string(n) + ",\"d\":" + std::to_string(d) +
       ",\"dim\":" + std::to_string(dim) + "}";
  return s;
}

std::string CheckMatrix::to_csv() const {
  std::string s;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ',';
      s += FieldCtx::format(row[j]);
    }
    s += '\n';
  }
  return s;
}

std::vector<std::uint8_t> CheckMatrix::to_binary() const {
  std::vector<std::uint8_t> out;
  auto push32 = [&](std::uint32_t v) {
    out.push_back((std::uint8_t)(v & 0xff));
    out.push_back((std::uint8_t)((v >> 8) & 0xff));
    out.push_back((std::uint8_t)((v >> 16) & 0xff));
    out.push_back((std::uint8_t)((v >> 24) & 0xff));
  };
  out.insert(out.end(), {'H', 'C', 'M', '1'});
  push32(q);
  push32((std::uint32_t)m);
  push32((std::uint32_t)rows.size());
  push32((std::uint32_t)cols());
  for (const auto& row : rows)
    for (const Elem& x : row) push32(x.is_zero() ? 0xffffffffu : x.log());
  return out;
}

std::string Weight4Report::to_json() const {
  std::string s = "{\"code\":\"" + code + "\",\"q\":" + std::to_string(q) +
                  ",\"a4_formula\":" + std::to_string(a4_formula);
  if (a4_brute) s += ",\"a4_brute\":" + std::to_string(*a4_brute);
  if (!nk.empty()) {
    s += ",\"n_k\":[";
    bool first = true;
    for (auto& [k, c] : nk) {
      if (!first) s += ',';
      first = false;
      s += "{\"k\":" + std::to_string(k) + ",\"count\":" + std::to_string(c) + "}";
    }
    s += ']';
  }
  s += '}';
  return s;
}

}  // namespace hermitian
