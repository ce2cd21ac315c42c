#include "hermitian/gf.hpp"

#include <algorithm>
#include <charconv>

namespace hermitian {

namespace {

// Dense polynomials over GF(p), coefficients low-to-high.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return (int)f.size() - 1; }

unsigned mod_pow(unsigned base, unsigned exp, unsigned p) {
  std::uint64_t r = 1, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return (unsigned)r;
}

unsigned mod_inv(unsigned a, unsigned p) { return mod_pow(a % p, p - 2, p); }

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (unsigned)(((std::uint64_t)r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
  }
  trim(r);
  return r;
}

// remainder of a modulo monic-normalizable f
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  int df = degree(f);
  unsigned lead_inv = mod_inv(f.back(), p);
  while (degree(a) >= df) {
    unsigned c = (unsigned)((std::uint64_t)a.back() * lead_inv % p);
    int shift = degree(a) - df;
    for (int i = 0; i <= df; ++i) {
      std::uint64_t sub = (std::uint64_t)c * f[i] % p;
      a[shift + i] = (unsigned)((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (exp) {
    if (exp & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back((unsigned)d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back((unsigned)n);
  return out;
}

// Rabin test: f (monic, degree D) irreducible over GF(p) iff x^(p^D) = x mod f
// and gcd(x^(p^(D/r)) - x, f) = 1 for every prime r | D.
bool is_irreducible(const Poly& f, unsigned p) {
  int d = degree(f);
  if (d < 1) return false;
  Poly x{0, 1};
  auto pw = [&](unsigned k) {
    std::uint64_t exp = 1;
    for (unsigned i = 0; i < k; ++i) exp *= p;
    return poly_powmod(x, exp, f, p);
  };
  Poly xpd = pw((unsigned)d);
  if (xpd != poly_mod(x, f, p)) return false;
  for (unsigned r : prime_factors((unsigned)d)) {
    Poly g = pw((unsigned)d / r);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    Poly gc = poly_gcd(f, g, p);
    if (degree(gc) != 0) return false;
  }
  return true;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; (std::uint64_t)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldCtx FieldCtx::build(unsigned p, unsigned e, std::size_t max_q2) {
  if (!is_prime(p)) throw Error(Error::Code::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Error::Code::TooLarge, "e must be positive");
  std::uint64_t q2 = 1;
  for (unsigned i = 0; i < 2 * e; ++i) {
    q2 *= p;
    if (q2 > max_q2) throw Error(Error::Code::TooLarge, "p^(2e) exceeds the table-size bound");
  }

  unsigned deg = 2 * e;
  // Candidates in lexicographic order of the coefficient list (c0, c1, ...,
  // c_{2e-1}), constant term first; leading coefficient is 1.
  std::uint64_t count = q2;  // p^deg candidates
  FieldCtx ctx;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<unsigned> coeffs(deg + 1, 0);
    coeffs[deg] = 1;
    std::uint64_t rem = idx;  // digits of idx, c0 most significant
    for (unsigned i = 0; i < deg; ++i) {
      std::uint64_t place = 1;
      for (unsigned j = 0; j < deg - 1 - i; ++j) place *= p;
      coeffs[i] = (unsigned)(rem / place);
      rem %= place;
    }
    if (coeffs[0] == 0) continue;  // divisible by x
    if (!is_irreducible(coeffs, p)) continue;
    try {
      ctx.p_ = p;
      ctx.e_ = e;
      ctx.init_from_modulus(coeffs);
      return ctx;
    } catch (const Error& err) {
      if (err.code() != Error::Code::NoIrreducibleFound) throw;
      // root not primitive; keep searching
    }
  }
  throw Error(Error::Code::NoIrreducibleFound, "no primitive irreducible modulus found");
}

FieldCtx FieldCtx::build_with_modulus(unsigned p, unsigned e, const std::vector<unsigned>& modulus,
                                      std::size_t max_q2) {
  if (!is_prime(p)) throw Error(Error::Code::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Error::Code::TooLarge, "e must be positive");
  std::uint64_t q2 = 1;
  for (unsigned i = 0; i < 2 * e; ++i) {
    q2 *= p;
    if (q2 > max_q2) throw Error(Error::Code::TooLarge, "p^(2e) exceeds the table-size bound");
  }
  if (modulus.size() != 2 * e + 1 || modulus.back() % p != 1)
    throw Error(Error::Code::ParseError, "modulus must be monic of degree 2e");
  std::vector<unsigned> coeffs(modulus);
  for (auto& c : coeffs) c %= p;
  if (!is_irreducible(coeffs, p))
    throw Error(Error::Code::ParseError, "modulus is not irreducible over GF(p)");
  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  try {
    ctx.init_from_modulus(coeffs);
  } catch (const Error& err) {
    if (err.code() == Error::Code::NoIrreducibleFound)
      throw Error(Error::Code::ParseError, "x is not a primitive root of the given modulus");
    throw;
  }
  return ctx;
}

void FieldCtx::init_from_modulus(const std::vector<unsigned>& modulus) {
  unsigned p = p_, e = e_;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  q_ = (std::uint32_t)q;
  q2_ = (std::uint32_t)(q * q);
  n_ = q2_ - 1;
  modulus_ = modulus;

  unsigned deg = 2 * e;
  std::vector<std::uint64_t> place(deg + 1, 1);
  for (unsigned i = 1; i <= deg; ++i) place[i] = place[i - 1] * p;

  // exp table over packed base-p digit vectors; reject non-primitive x early
  std::vector<std::uint32_t> exp_tab(n_);
  std::vector<std::uint32_t> log_tab(q2_, kNoSum);
  std::vector<unsigned> cur(deg, 0);
  cur[0] = 1;  // the constant 1
  for (std::uint32_t k = 0;; ++k) {
    std::uint64_t packed = 0;
    for (unsigned i = 0; i < deg; ++i) packed += (std::uint64_t)cur[i] * place[i];
    if (k > 0 && packed == 1) {
      if (k < n_) throw Error(Error::Code::NoIrreducibleFound, "root is not primitive");
      break;
    }
    if (k >= n_) throw Error(Error::Code::Internal, "power sequence failed to cycle");
    exp_tab[k] = (std::uint32_t)packed;
    if (log_tab[packed] != kNoSum) throw Error(Error::Code::Internal, "duplicate power");
    log_tab[packed] = k;
    // multiply by x modulo the modulus
    unsigned carry = cur[deg - 1];
    for (unsigned i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry) {
      for (unsigned i = 0; i < deg; ++i) {
        std::uint64_t sub = (std::uint64_t)carry * modulus[i] % p;
        cur[i] = (unsigned)((cur[i] + p - sub) % p);
      }
    }
  }

  // Zech logarithms: zech_[k] = log(1 + alpha^k)
  zech_.assign(n_, kNoSum);
  for (std::uint32_t k = 0; k < n_; ++k) {
    std::uint64_t packed = exp_tab[k];
    // digit-wise add of the constant 1
    std::uint64_t d0 = packed % p;
    std::uint64_t sum = packed - d0 + (d0 + 1) % p;
    if (sum != 0) zech_[k] = log_tab[sum];
  }

  prime_logs_.assign(p, 0);
  for (unsigned v = 1; v < p; ++v) prime_logs_[v] = log_tab[v];

  neg_shift_ = (p == 2) ? 0 : n_ / 2;
  coord_scale_ = inv(sub(alpha(), frob(alpha())));

  // beta = alpha^(q+1) must have order exactly q-1
  if (q_ > 2) {
    for (unsigned r : prime_factors(q_ - 1))
      if (pow(beta(), (q_ - 1) / r) == one())
        throw Error(Error::Code::Internal, "beta order defect");
  }
}

unsigned FieldCtx::abs_trace(Elem x) const {
  if (!in_subfield(x)) throw Error(Error::Code::NotInSubfield, "abs_trace needs an element of GF(q)");
  Elem acc = x, t = x;
  for (unsigned i = 1; i < e_; ++i) {
    t = pow(t, p_);
    acc = add(acc, t);
  }
  if (acc.is_zero()) return 0;
  for (unsigned v = 1; v < p_; ++v)
    if (prime_logs_[v] == acc.log()) return v;
  throw Error(Error::Code::Internal, "absolute trace landed outside GF(p)");
}

std::optional<Elem> FieldCtx::sqrt(Elem x) const {
  if (x.is_zero()) return Elem::zero();
  std::uint32_t k = x.log();
  if (k % 2 == 0) return Elem::from_log(k / 2);
  std::uint64_t k2 = (std::uint64_t)k + n_;
  if (k2 % 2 != 0) return std::nullopt;  // odd q, non-square
  return Elem::from_log((std::uint32_t)(k2 / 2 % n_));
}

int FieldCtx::quad_char(Elem a) const {
  if (p_ == 2) throw Error(Error::Code::EvenCharacteristic, "quadratic character needs odd q");
  if (!in_subfield(a)) throw Error(Error::Code::NotInSubfield, "quad_char needs an element of GF(q)");
  if (a.is_zero()) return 0;
  std::uint32_t j = a.log() / (q_ + 1);  // a = beta^j
  return j % 2 == 0 ? 1 : -1;
}

int FieldCtx::char_sum(Elem a, Elem b, Elem c) const {
  if (a.is_zero()) throw Error(Error::Code::ZeroA, "char_sum needs a != 0");
  if (!in_subfield(a) || !in_subfield(b) || !in_subfield(c))
    throw Error(Error::Code::NotInSubfield, "char_sum arguments must lie in GF(q)");
  int sum = 0;
  for (std::uint32_t j = 0; j < q_; ++j) {
    Elem g = subfield_element_at(j);
    Elem v = add(add(mul(a, mul(g, g)), mul(b, g)), c);
    sum += quad_char(v);
  }
  return sum;
}

std::vector<Elem> FieldCtx::hilbert90_solutions(Elem t) const {
  if (t.is_zero()) throw Error(Error::Code::ZeroInput, "x^(q-1) = 0 has no meaning here");
  std::uint32_t k = t.log(), g = q_ - 1;
  if (g == 0 || k % g != 0) {
    assert(norm(t) != one());
    return {};
  }
  std::uint32_t base = k / g;
  std::vector<Elem> out;
  out.reserve(g);
  for (std::uint32_t j = 0; j < g; ++j)
    out.push_back(Elem::from_log((std::uint32_t)((base + (std::uint64_t)j * (q_ + 1)) % n_)));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Elem, Elem> FieldCtx::coords(Elem y) const {
  Elem y1 = mul(sub(y, frob(y)), coord_scale_);
  Elem y0 = sub(y, mul(y1, alpha()));
  assert(in_subfield(y0) && in_subfield(y1));
  return {y0, y1};
}

std::vector<Elem> FieldCtx::linmap_solve(Elem a, Elem k, LinMapForm form) const {
  if (a.is_zero()) throw Error(Error::Code::ZeroA, "linear map needs a != 0");
  if (form == LinMapForm::FrobMinusAx) k = neg(k);  // x^q - 2ax = k  <=>  2ax - x^q = -k

  Elem two_a = mul(from_prime(2), a);
  Elem f_one = sub(two_a, one());
  Elem f_alpha = sub(mul(two_a, alpha()), frob(alpha()));
  auto [u0, u1] = coords(f_one);
  auto [v0, v1] = coords(f_alpha);
  auto [k0, k1] = coords(k);

  std::vector<Elem> out;
  Elem det = sub(mul(u0, v1), mul(u1, v0));
  if (!det.is_zero()) {
    Elem x0 = div(sub(mul(k0, v1), mul(k1, v0)), det);
    Elem x1 = div(sub(mul(u0, k1), mul(u1, k0)), det);
    out.push_back(add(x0, mul(x1, alpha())));
    return out;
  }

  bool u_zero = u0.is_zero() && u1.is_zero();
  bool v_zero = v0.is_zero() && v1.is_zero();
  if (u_zero && v_zero) throw Error(Error::Code::Internal, "2ax - x^q degenerated to the zero map");

  Elem w0, w1;  // kernel basis vector, in coordinates
  Elem p0, p1;  // particular solution
  bool consistent;
  if (!u_zero) {
    Elem mu = u0.is_zero() ? div(v1, u1) : div(v0, u0);
    assert(mul(mu, u0) == v0 && mul(mu, u1) == v1);
    w0 = mu;
    w1 = neg(one());
    Elem t = u0.is_zero() ? div(k1, u1) : div(k0, u0);
    consistent = mul(t, u0) == k0 && mul(t, u1) == k1;
    p0 = t;
    p1 = Elem::zero();
  } else {
    w0 = one();
    w1 = Elem::zero();
    Elem t = v0.is_zero() ? (v1.is_zero() ? Elem::zero() : div(k1, v1)) : div(k0, v0);
    consistent = mul(t, v0) == k0 && mul(t, v1) == k1;
    p0 = Elem::zero();
    p1 = t;
  }
  if (!consistent) return out;
  out.reserve(q_);
  for (std::uint32_t j = 0; j < q_; ++j) {
    Elem lam = subfield_element_at(j);
    Elem x0 = add(p0, mul(lam, w0));
    Elem x1 = add(p1, mul(lam, w1));
    out.push_back(add(x0, mul(x1, alpha())));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FieldCtx::format(Elem x) {
  if (x.is_zero()) return "0";
  return "a^" + std::to_string(x.log());
}

Elem FieldCtx::parse(const std::string& text) const {
  if (text == "0") return Elem::zero();
  if (text.size() >= 3 && text[0] == 'a' && text[1] == '^') {
    std::uint64_t k = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), k);
    if (ec == std::errc() && ptr == text.data() + text.size())
      return Elem::from_log((std::uint32_t)(k % n_));
  }
  throw Error(Error::Code::ParseError, "expected element syntax '0' or 'a^k', got '" + text + "'");
}

std::string FieldCtx::to_json() const {
  std::string s = "{\"p\":" + std::to_string(p_) + ",\"e\":" + std::to_string(e_) + ",\"modulus\":[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  s += "]}";
  return s;
}

}  // namespace hermitian
