#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check(bool ok, const char* msg) {
  if (!ok) throw InternalError(msg);
}

/// deterministic splitmix64 stream
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

// Element of GF(p^k), coordinates in the power basis of the field's own
// modulus over GF(p).  Plain data; all arithmetic goes through Fq.
// p > 2: one residue per u32 slot, k <= kMaxDeg.
// p == 2: coefficients bit-packed into the same words, k <= 32*kMaxDeg.
constexpr int kMaxDeg = 48;

struct Elem {
  std::array<uint32_t, kMaxDeg> v;
  Elem() { v.fill(0); }
  bool operator==(const Elem& o) const { return v == o.v; }
  bool operator<(const Elem& o) const { return v < o.v; }
};

struct ElemHash {
  size_t operator()(const Elem& e) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t w : e.v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

/// GF(p^k) with a monic irreducible modulus of degree k over GF(p).
/// Immutable after construction; embeddings into larger fields are cached.
class Fq : public std::enable_shared_from_this<Fq> {
 public:
  uint32_t p;
  uint32_t k;
  std::vector<uint32_t> modulus;  // degree k, monic, low->high, over GF(p)

  static FqPtr prime(uint32_t p);
  /// GF(p^(k*degree)) with an embedding of *this recorded.
  FqPtr extend(uint32_t degree) const;

  uint64_t order_u64() const;      // p^k, throws if > 2^63
  bool order_fits_u64() const;
  bool is_prime_field() const { return k == 1; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_uint(1); }
  Elem from_int(int64_t n) const;
  Elem from_residues(const std::vector<uint32_t>& r) const;
  std::vector<uint32_t> residues(const Elem& a) const;
  /// bijection {0..p^k-1} -> field, base-p digits
  Elem from_uint(uint64_t n) const;

  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow_u64(Elem a, uint64_t e) const;
  /// a^(p^i)
  Elem frob(const Elem& a, uint32_t i = 1) const;
  /// unique square root in characteristic 2
  Elem sqrt_char2(const Elem& a) const;

  Elem rand(Rng& rng) const;
  Elem rand_nonzero(Rng& rng) const;

  /// embeds a, an element of sub, into this field; sub must embed (sub.k | k)
  Elem embed_from(const Fq& sub, const Elem& a) const;
  /// inverse of embed_from when the image lies in the subfield
  std::optional<Elem> retract_to(const Fq& sub, const Elem& a) const;

  std::string to_string(const Elem& a) const;

 private:
  struct Embedding {
    std::vector<Elem> gen_powers;            // images of x^0..x^(sub.k-1)
    std::vector<std::vector<uint32_t>> mat;  // k x sub.k over GF(p), column form
  };
  mutable std::map<const Fq*, Embedding> embeddings_;
  mutable std::map<uint32_t, std::weak_ptr<const Fq>> ext_cache_;  // extend() cache
  const Fq* parent_ = nullptr;  // construction base, for tower-compatible embeddings
  FqPtr parent_keepalive_;

  const Embedding& embedding_of(const Fq& sub) const;
  friend std::shared_ptr<Fq> make_field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
};

/// univariate polynomial with coefficients in a common field, low->high
struct Poly {
  std::vector<Elem> c;
  Poly() = default;
  explicit Poly(std::vector<Elem> cc) : c(std::move(cc)) {}
  int deg() const { return (int)c.size() - 1; }  // -1 for zero poly
  bool is_zero() const { return c.empty(); }
};

Poly ptrim(const Fq& F, Poly a);
Poly pconst(const Fq& F, const Elem& a);
Poly pX(const Fq& F);
Poly padd(const Fq& F, const Poly& a, const Poly& b);
Poly psub(const Fq& F, const Poly& a, const Poly& b);
Poly pmul(const Fq& F, const Poly& a, const Poly& b);
Poly pscale(const Fq& F, const Poly& a, const Elem& s);
Poly pmonic(const Fq& F, const Poly& a);
void pdivrem(const Fq& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly pmod(const Fq& F, const Poly& a, const Poly& b);
Poly pgcd(const Fq& F, Poly a, Poly b);
Poly pderiv(const Fq& F, const Poly& a);
Elem peval(const Fq& F, const Poly& a, const Elem& x);
Poly ppowmod_u64(const Fq& F, Poly base, uint64_t e, const Poly& mod);
/// x -> x^(p^i) applied to every coefficient
Poly pfrob_coeffs(const Fq& F, const Poly& a, uint32_t i);
/// g -> g^(q^steps) mod f  where q = |F| (repeated Frobenius powering)
Poly pfield_power_mod(const Fq& F, Poly g, uint32_t steps, const Poly& f);
Poly psquarefree_part(const Fq& F, const Poly& a);
bool pirreducible(const Fq& F, const Poly& a);

/// (factor, multiplicity) pairs, monic factors, deterministic order
std::vector<std::pair<Poly, int>> pfactor(const Fq& F, const Poly& a);
/// distinct monic irreducible factors of the squarefree part with degree <= maxdeg
std::vector<Poly> pfactors_up_to_degree(const Fq& F, const Poly& a, int maxdeg);

/// all roots of f (coefficients in F) that lie in K, where F embeds in K;
/// sorted canonically.  With multiplicities available via `mults`.
std::vector<Elem> roots_in_field(const Fq& F, const Poly& f, const Fq& K,
                                 std::vector<int>* mults = nullptr);

/// interpolation through (xs[i], ys[i]), distinct xs
Poly pinterpolate(const Fq& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys);

/// json plumbing for fields/elements lives in surface_io.cpp

}  // namespace cubic
