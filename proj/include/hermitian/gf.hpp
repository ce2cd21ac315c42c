// Field tower GF(p) < GF(q) < GF(q^2), q = p^e, in discrete-log representation.
//
// Every nonzero element of GF(q^2) is a power of a fixed primitive element
// alpha, so an element is stored as its exponent and multiplication, norm,
// trace and power maps are exponent arithmetic.  Addition goes through a
// Zech-logarithm table built once at construction.

#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermitian {

class Error : public std::runtime_error {
 public:
  enum class Code {
    NotPrime,
    TooLarge,
    NoIrreducibleFound,
    DivisionByZero,
    NotInSubfield,
    EvenCharacteristic,
    ZeroInput,
    ZeroA,
    NoGamma,
    NotOnCurve,
    BoundExceeded,
    MOutOfRange,
    DOutOfRange,
    JOutOfRange,
    QTooSmall,
    InexactDivision,
    PhaseDecompositionFailed,
    PhaseAmbiguous,
    ParseError,
    Internal,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Element of GF(q^2): zero, or alpha^k with 0 <= k < q^2-1.  Arithmetic is
// relative to one FieldCtx; Elem itself is just the tagged exponent.
class Elem {
 public:
  constexpr Elem() = default;

  static constexpr Elem zero() { return Elem(); }
  static constexpr Elem from_log(std::uint32_t k) {
    Elem e;
    e.log_ = k;
    return e;
  }

  constexpr bool is_zero() const { return log_ == kZeroTag; }
  constexpr std::uint32_t log() const { return log_; }

  // zero sorts first, then ascending exponent
  constexpr std::uint32_t order_key() const { return log_ + 1; }

  friend constexpr bool operator==(Elem a, Elem b) { return a.log_ == b.log_; }
  friend constexpr bool operator!=(Elem a, Elem b) { return a.log_ != b.log_; }
  friend constexpr bool operator<(Elem a, Elem b) { return a.order_key() < b.order_key(); }

 private:
  static constexpr std::uint32_t kZeroTag = 0xffffffffu;
  std::uint32_t log_ = kZeroTag;
};

// Which GF(q)-linear map a solve refers to: f(x) = 2a·x - x^q or its negative.
enum class LinMapForm { AxMinusFrob, FrobMinusAx };

class FieldCtx {
 public:
  static constexpr std::size_t kDefaultTableBound = std::size_t{1} << 24;

  // Deterministic construction: lexicographically least monic irreducible
  // modulus of degree 2e over GF(p) whose root is primitive.
  static FieldCtx build(unsigned p, unsigned e, std::size_t max_q2 = kDefaultTableBound);
  // Same, but with a caller-supplied modulus (coefficients c0..c_{2e}).
  static FieldCtx build_with_modulus(unsigned p, unsigned e, const std::vector<unsigned>& modulus,
                                     std::size_t max_q2 = kDefaultTableBound);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  FieldCtx(FieldCtx&&) = default;
  FieldCtx& operator=(FieldCtx&&) = default;

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t q2() const { return q2_; }
  std::uint32_t mult_order() const { return n_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem one() const { return Elem::from_log(0); }
  Elem alpha() const { return Elem::from_log(1); }
  Elem beta() const { return Elem::from_log((q_ + 1) % n_); }

  // ---- arithmetic ----

  Elem add(Elem x, Elem y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    std::uint32_t i = x.log(), j = y.log();
    std::uint32_t d = j >= i ? j - i : j + n_ - i;
    std::uint32_t z = zech_[d];
    if (z == kNoSum) return Elem::zero();
    std::uint32_t s = i + z;
    if (s >= n_) s -= n_;
    return Elem::from_log(s);
  }

  Elem neg(Elem x) const {
    if (x.is_zero() || neg_shift_ == 0) return x;
    std::uint32_t s = x.log() + neg_shift_;
    if (s >= n_) s -= n_;
    return Elem::from_log(s);
  }

  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  Elem mul(Elem x, Elem y) const {
    if (x.is_zero() || y.is_zero()) return Elem::zero();
    std::uint32_t s = x.log() + y.log();
    if (s >= n_) s -= n_;
    return Elem::from_log(s);
  }

  Elem inv(Elem x) const {
    if (x.is_zero()) throw Error(Error::Code::DivisionByZero, "inverse of zero");
    std::uint32_t k = x.log();
    return Elem::from_log(k == 0 ? 0 : n_ - k);
  }

  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  // x^m; pow(0,0) = 1 so that monomial evaluation treats x^0 as the constant 1
  Elem pow(Elem x, std::uint64_t m) const {
    if (x.is_zero()) return m == 0 ? one() : Elem::zero();
    std::uint64_t k = (std::uint64_t)x.log() * (m % n_) % n_;
    return Elem::from_log((std::uint32_t)k);
  }

  Elem frob(Elem x) const { return pow(x, q_); }

  // embedding of the prime field: v -> v·1
  Elem from_prime(unsigned v) const {
    v %= p_;
    return v == 0 ? Elem::zero() : Elem::from_log(prime_logs_[v]);
  }

  bool in_subfield(Elem x) const { return x.is_zero() || x.log() % (q_ + 1) == 0; }

  // enumeration helpers: index 0 is zero, then ascending powers
  Elem element_at(std::uint32_t i) const { return i == 0 ? Elem::zero() : Elem::from_log(i - 1); }
  Elem subfield_element_at(std::uint32_t j) const {
    return j == 0 ? Elem::zero() : Elem::from_log((std::uint64_t)(j - 1) * (q_ + 1) % n_);
  }
  // position of a GF(q) element in the subfield_element_at order
  std::uint32_t gfq_index(Elem w) const {
    if (w.is_zero()) return 0;
    assert(w.log() % (q_ + 1) == 0);
    return 1 + w.log() / (q_ + 1);
  }

  // ---- field-theoretic maps ----

  Elem norm(Elem x) const { return pow(x, q_ + 1); }
  Elem trace(Elem x) const { return add(x, frob(x)); }

  // trace down to the prime field, as a residue in [0,p); requires x in GF(q)
  unsigned abs_trace(Elem x) const;

  // canonical square root in GF(q^2); nullopt for odd-q non-squares
  std::optional<Elem> sqrt(Elem x) const;

  // quadratic character of GF(q), q odd; requires a in GF(q)
  int quad_char(Elem a) const;

  // sum of quad_char(a·g^2 + b·g + c) over g in GF(q); inputs in GF(q), a != 0
  int char_sum(Elem a, Elem b, Elem c) const;

  // all x with x^(q-1) = t; empty iff norm(t) != 1, else exactly q-1 solutions
  std::vector<Elem> hilbert90_solutions(Elem t) const;

  // all solutions of f(x) = k for the GF(q)-linear map selected by form,
  // solved as a 2x2 system over GF(q); sorted, 0, 1 or |ker f| solutions
  std::vector<Elem> linmap_solve(Elem a, Elem k, LinMapForm form) const;

  // ---- text / JSON ----

  static std::string format(Elem x);
  Elem parse(const std::string& text) const;
  std::string to_json() const;  // {"p":..,"e":..,"modulus":[c0..c_2e]}

 private:
  FieldCtx() = default;

  void init_from_modulus(const std::vector<unsigned>& modulus);
  std::pair<Elem, Elem> coords(Elem y) const;  // coordinates in the basis {1, alpha} over GF(q)

  static constexpr std::uint32_t kNoSum = 0xffffffffu;

  unsigned p_ = 0, e_ = 0;
  std::uint32_t q_ = 0, q2_ = 0, n_ = 0;
  std::uint32_t neg_shift_ = 0;  // log(-1), 0 in characteristic 2
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> zech_;        // zech_[k] = log(1 + alpha^k), kNoSum when that is zero
  std::vector<std::uint32_t> prime_logs_;  // prime_logs_[v] = log(v·1) for v in [1,p)
  Elem coord_scale_;                       // 1 / (alpha - alpha^q)
};

}  // namespace hermitian
