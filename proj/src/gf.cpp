#include "cubic27/gf.hpp"

#include <algorithm>
#include <sstream>

namespace cubic {

// ---------------------------------------------------------------------------
// construction-time polynomial layer over GF(p), plain u32 vectors low->high
// ---------------------------------------------------------------------------
namespace {

using PV = std::vector<uint32_t>;

void pv_trim(PV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pv_deg(const PV& a) { return (int)a.size() - 1; }

PV pv_mul(const PV& a, const PV& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PV r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (uint32_t)((r[i + j] + ai * b[j]) % p);
  }
  pv_trim(r);
  return r;
}

// a mod m, m monic
PV pv_mod(PV a, const PV& m, uint32_t p) {
  pv_trim(a);
  int dm = pv_deg(m);
  while (pv_deg(a) >= dm) {
    uint32_t c = a.back();
    int shift = pv_deg(a) - dm;
    if (c) {
      for (int j = 0; j <= dm; ++j) {
        uint64_t t = (uint64_t)c * m[j] % p;
        uint32_t& ref = a[j + shift];
        ref = (uint32_t)((ref + p - (uint32_t)t) % p);
      }
    }
    a.pop_back();
    pv_trim(a);
  }
  return a;
}

PV pv_powmod(PV base, uint64_t e, const PV& m, uint32_t p) {
  PV r{1};
  base = pv_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pv_mod(pv_mul(r, base, p), m, p);
    base = pv_mod(pv_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

uint32_t u32_inv_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  check(r == 1, "u32_inv_mod: not invertible");
  if (t < 0) t += p;
  return (uint32_t)t;
}

PV pv_gcd(PV a, PV b, uint32_t p) {
  pv_trim(a);
  pv_trim(b);
  while (!b.empty()) {
    uint32_t ilc = u32_inv_mod(b.back(), p);
    PV bm(b.size());
    for (size_t i = 0; i < b.size(); ++i) bm[i] = (uint32_t)((uint64_t)b[i] * ilc % p);
    a = pv_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    uint32_t ilc = u32_inv_mod(a.back(), p);
    for (auto& c : a) c = (uint32_t)((uint64_t)c * ilc % p);
  }
  return a;
}

// x^(p^i) mod m via iterated powering
PV pv_frobpow(int i, const PV& m, uint32_t p) {
  PV x{0, 1};
  PV cur = pv_mod(x, m, p);
  for (int t = 0; t < i; ++t) cur = pv_powmod(cur, p, m, p);
  return cur;
}

bool pv_irreducible(const PV& m, uint32_t p) {
  int n = pv_deg(m);
  if (n < 1) return false;
  if (n == 1) return true;
  PV xq = pv_frobpow(n, m, p);  // x^(p^n) mod m
  PV x{0, 1};
  PV diff = xq;
  diff.resize(std::max(diff.size(), x.size()), 0);
  for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
  pv_trim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(n/l)) - x, m) must be 1 for every prime l | n
  int nn = n;
  std::vector<int> primes;
  for (int l = 2; l * l <= nn; ++l)
    if (nn % l == 0) {
      primes.push_back(l);
      while (nn % l == 0) nn /= l;
    }
  if (nn > 1) primes.push_back(nn);
  for (int l : primes) {
    PV xe = pv_frobpow(n / l, m, p);
    PV d = xe;
    d.resize(std::max(d.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
    pv_trim(d);
    PV g = pv_gcd(d, m, p);
    if (pv_deg(g) != 0) return false;
  }
  return true;
}

PV find_irreducible(uint32_t p, uint32_t n) {
  if (n == 1) return PV{0, 1};
  Rng rng(0x63b1c27ull * p + 0x9d5f * n);  // fixed seed: reproducible moduli
  for (int tries = 0; tries < 100000; ++tries) {
    PV m(n + 1, 0);
    m[n] = 1;
    for (uint32_t i = 0; i < n; ++i) m[i] = (uint32_t)rng.below(p);
    if (m[0] == 0) m[0] = 1 + (uint32_t)rng.below(p - 1);
    if (pv_irreducible(m, p)) return m;
  }
  throw InternalError("find_irreducible: search exhausted");
}

// tiny bignum, base 2^32 little endian, for exponents like (p^n - 1)/2
using Big = std::vector<uint32_t>;

Big big_from_pow(uint32_t p, uint32_t n) {
  Big b{1};
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t carry = 0;
    for (auto& w : b) {
      uint64_t t = (uint64_t)w * p + carry;
      w = (uint32_t)t;
      carry = t >> 32;
    }
    if (carry) b.push_back((uint32_t)carry);
  }
  return b;
}

void big_dec(Big& b) {
  for (auto& w : b) {
    if (w) {
      --w;
      break;
    }
    w = 0xffffffffu;
  }
  while (b.size() > 1 && b.back() == 0) b.pop_back();
}

void big_halve(Big& b) {
  uint32_t carry = 0;
  for (int i = (int)b.size() - 1; i >= 0; --i) {
    uint32_t nc = b[i] & 1;
    b[i] = (b[i] >> 1) | (carry << 31);
    carry = nc;
  }
  while (b.size() > 1 && b.back() == 0) b.pop_back();
}

int big_bits(const Big& b) {
  int n = (int)b.size() * 32;
  while (n > 0) {
    int i = (n - 1) >> 5, j = (n - 1) & 31;
    if (b[i] >> j & 1) return n;
    --n;
  }
  return 0;
}

bool big_bit(const Big& b, int i) { return b[i >> 5] >> (i & 31) & 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Fq
// ---------------------------------------------------------------------------

std::shared_ptr<Fq> make_field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
  auto f = std::make_shared<Fq>();
  f->p = p;
  f->k = k;
  f->modulus = std::move(modulus);
  return f;
}

FqPtr Fq::prime(uint32_t p) {
  check(p >= 2 && p < (1u << 15), "prime characteristic out of supported range");
  for (uint32_t d = 2; d * d <= p; ++d) check(p % d != 0, "characteristic must be prime");
  static std::map<uint32_t, FqPtr> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto f = make_field(p, 1, {0, 1});
  cache[p] = f;
  return f;
}

FqPtr Fq::extend(uint32_t degree) const {
  check(degree >= 1, "extension degree must be >= 1");
  if (degree == 1) return shared_from_this();
  auto it = ext_cache_.find(degree);
  if (it != ext_cache_.end())
    if (auto sp = it->second.lock()) return sp;
  uint32_t n = k * degree;
  if (p == 2)
    check(n <= 32u * kMaxDeg, "extension too large for element storage");
  else
    check(n <= (uint32_t)kMaxDeg, "extension too large for element storage");
  auto f = make_field(p, n, find_irreducible(p, n));
  f->parent_ = this;
  f->parent_keepalive_ = shared_from_this();
  ext_cache_[degree] = f;
  return f;
}

uint64_t Fq::order_u64() const {
  check(order_fits_u64(), "field too large for u64 order");
  uint64_t r = 1;
  for (uint32_t i = 0; i < k; ++i) r *= p;
  return r;
}

bool Fq::order_fits_u64() const {
  long double r = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r *= p;
    if (r > 9.2e18L) return false;
  }
  return true;
}

// --- element packing helpers ---

namespace bits2 {
inline bool get(const Elem& a, uint32_t i) { return a.v[i >> 5] >> (i & 31) & 1; }
inline void set(Elem& a, uint32_t i, bool b) {
  if (b)
    a.v[i >> 5] |= 1u << (i & 31);
  else
    a.v[i >> 5] &= ~(1u << (i & 31));
}
}  // namespace bits2

Elem Fq::from_residues(const std::vector<uint32_t>& r) const {
  check(r.size() <= k, "too many residues for field degree");
  Elem e;
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t c = r[i] % p;
    if (p == 2)
      bits2::set(e, (uint32_t)i, c);
    else
      e.v[i] = c;
  }
  return e;
}

std::vector<uint32_t> Fq::residues(const Elem& a) const {
  std::vector<uint32_t> r(k);
  for (uint32_t i = 0; i < k; ++i) r[i] = p == 2 ? (uint32_t)bits2::get(a, i) : a.v[i];
  return r;
}

Elem Fq::from_int(int64_t n) const {
  int64_t m = n % (int64_t)p;
  if (m < 0) m += p;
  return from_residues({(uint32_t)m});
}

Elem Fq::from_uint(uint64_t n) const {
  std::vector<uint32_t> r;
  while (n) {
    r.push_back((uint32_t)(n % p));
    n /= p;
  }
  check(r.size() <= k, "from_uint: index exceeds field order");
  return from_residues(r);
}

bool Fq::is_zero(const Elem& a) const {
  for (uint32_t w : a.v)
    if (w) return false;
  return true;
}

Elem Fq::add(const Elem& a, const Elem& b) const {
  Elem r;
  if (p == 2) {
    uint32_t nw = (k + 31) / 32;
    for (uint32_t i = 0; i < nw; ++i) r.v[i] = a.v[i] ^ b.v[i];
  } else {
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t t = a.v[i] + b.v[i];
      r.v[i] = t >= p ? t - p : t;
    }
  }
  return r;
}

Elem Fq::sub(const Elem& a, const Elem& b) const {
  Elem r;
  if (p == 2) return add(a, b);
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t t = a.v[i] + p - b.v[i];
    r.v[i] = t >= p ? t - p : t;
  }
  return r;
}

Elem Fq::neg(const Elem& a) const {
  if (p == 2) return a;
  Elem r;
  for (uint32_t i = 0; i < k; ++i) r.v[i] = a.v[i] ? p - a.v[i] : 0;
  return r;
}

Elem Fq::mul(const Elem& a, const Elem& b) const {
  Elem r;
  if (p == 2) {
    // carry-less schoolbook, then reduce by the modulus bit pattern
    uint32_t nw = (k + 31) / 32;
    uint32_t acc[2 * kMaxDeg + 2] = {0};
    for (uint32_t i = 0; i < k; ++i) {
      if (!bits2::get(a, i)) continue;
      for (uint32_t j = 0; j < nw; ++j) {
        uint64_t t = (uint64_t)b.v[j] << (i & 31);
        acc[(i >> 5) + j] ^= (uint32_t)t;
        acc[(i >> 5) + j + 1] ^= (uint32_t)(t >> 32);
      }
    }
    // precomputed modulus bit positions
    for (int t = 2 * (int)k - 2; t >= (int)k; --t) {
      if (!(acc[t >> 5] >> (t & 31) & 1)) continue;
      int sh = t - (int)k;
      for (uint32_t j = 0; j <= k; ++j) {
        if (!modulus[j]) continue;
        uint32_t pos = j + (uint32_t)sh;
        acc[pos >> 5] ^= 1u << (pos & 31);
      }
    }
    for (uint32_t i = 0; i < nw; ++i) r.v[i] = acc[i];
    if (k & 31) r.v[nw - 1] &= (1u << (k & 31)) - 1;
    return r;
  }
  uint64_t acc[2 * kMaxDeg] = {0};
  for (uint32_t i = 0; i < k; ++i) {
    if (!a.v[i]) continue;
    uint64_t ai = a.v[i];
    for (uint32_t j = 0; j < k; ++j) acc[i + j] += ai * b.v[j];
  }
  for (int t = 2 * (int)k - 2; t >= (int)k; --t) {
    uint32_t c = (uint32_t)(acc[t] % p);
    if (!c) continue;
    uint64_t cc = p - c;  // subtract c * modulus * x^(t-k)
    for (uint32_t j = 0; j < k; ++j) acc[t - k + j] += cc * modulus[j] % p;
  }
  for (uint32_t i = 0; i < k; ++i) r.v[i] = (uint32_t)(acc[i] % p);
  return r;
}

namespace {
// q, r with a = q*b + r over GF(p)[x]
void pv_divrem(const PV& a, const PV& b, uint32_t p, PV& q, PV& r) {
  r = a;
  pv_trim(r);
  q.clear();
  int db = pv_deg(b);
  check(db >= 0, "pv_divrem: zero divisor");
  uint32_t ilc = u32_inv_mod(b.back(), p);
  if (pv_deg(r) >= db) q.assign(pv_deg(r) - db + 1, 0);
  while (pv_deg(r) >= db) {
    uint32_t c = (uint32_t)((uint64_t)r.back() * ilc % p);
    int sh = pv_deg(r) - db;
    q[sh] = c;
    for (int j = 0; j <= db; ++j)
      r[j + sh] = (uint32_t)((r[j + sh] + (uint64_t)(p - c) * b[j]) % p);
    pv_trim(r);
  }
}
}  // namespace

Elem Fq::inv(const Elem& a) const {
  check(!is_zero(a), "division by zero");
  // extended euclid over GF(p)[x] against the modulus
  PV r0 = modulus, r1 = residues(a);
  pv_trim(r1);
  PV t0{}, t1{1};
  while (!r1.empty()) {
    PV q, rem;
    pv_divrem(r0, r1, p, q, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    PV qt = pv_mul(q, t1, p);
    PV nt = t0;
    nt.resize(std::max(nt.size(), qt.size()), 0);
    for (size_t i = 0; i < qt.size(); ++i) nt[i] = (nt[i] + p - qt[i]) % p;
    pv_trim(nt);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  check(pv_deg(r0) == 0, "inv: element not invertible");
  uint32_t c = u32_inv_mod(r0[0], p);
  PV res(t0.size());
  for (size_t i = 0; i < t0.size(); ++i) res[i] = (uint32_t)((uint64_t)t0[i] * c % p);
  res = pv_mod(std::move(res), modulus, p);
  res.resize(k, 0);
  return from_residues(res);
}

Elem Fq::pow_u64(Elem a, uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Fq::frob(const Elem& a, uint32_t i) const {
  Elem r = a;
  for (uint32_t t = 0; t < i; ++t) r = pow_u64(r, p);
  return r;
}

Elem Fq::sqrt_char2(const Elem& a) const {
  check(p == 2, "sqrt_char2 in odd characteristic");
  return frob(a, k - 1);  // x^(2^(k-1)) squares to x^(2^k) = x
}

Elem Fq::rand(Rng& rng) const {
  std::vector<uint32_t> r(k);
  for (auto& c : r) c = (uint32_t)rng.below(p);
  return from_residues(r);
}

Elem Fq::rand_nonzero(Rng& rng) const {
  while (true) {
    Elem e = rand(rng);
    if (!is_zero(e)) return e;
  }
}

std::string Fq::to_string(const Elem& a) const {
  std::ostringstream os;
  os << "[";
  auto r = residues(a);
  for (uint32_t i = 0; i < k; ++i) os << (i ? "," : "") << r[i];
  os << "]";
  return os.str();
}

// --- embeddings ---

const Fq::Embedding& Fq::embedding_of(const Fq& sub) const {
  auto it = embeddings_.find(&sub);
  if (it != embeddings_.end()) return it->second;
  check(sub.p == p && k % sub.k == 0, "not a subfield");
  Embedding E;
  if (&sub == this) {
    E.gen_powers.resize(k);
    for (uint32_t i = 0; i < k; ++i) {
      std::vector<uint32_t> r(k, 0);
      r[i] = 1;
      E.gen_powers[i] = from_residues(r);
    }
  } else if (parent_ && parent_ != &sub && parent_->p == p && parent_->k % sub.k == 0) {
    // go through the construction parent so tower embeddings compose
    const Embedding& mid = parent_->embedding_of(sub);
    E.gen_powers.resize(sub.k);
    for (uint32_t i = 0; i < sub.k; ++i) E.gen_powers[i] = embed_from(*parent_, mid.gen_powers[i]);
  } else {
    // direct: minimal root of sub's modulus in this field
    Poly f;
    for (uint32_t i = 0; i <= sub.k; ++i) f.c.push_back(from_int((int64_t)sub.modulus[i]));
    f = ptrim(*this, f);
    auto rts = roots_in_field(*this, f, *this);
    check(!rts.empty(), "no root of subfield modulus found");
    Elem root = rts.front();
    E.gen_powers.resize(sub.k);
    Elem cur = one();
    for (uint32_t i = 0; i < sub.k; ++i) {
      E.gen_powers[i] = cur;
      cur = mul(cur, root);
    }
  }
  E.mat.assign(E.gen_powers.size(), {});
  for (size_t j = 0; j < E.gen_powers.size(); ++j) E.mat[j] = residues(E.gen_powers[j]);
  auto res = embeddings_.emplace(&sub, std::move(E));
  return res.first->second;
}

Elem Fq::embed_from(const Fq& sub, const Elem& a) const {
  if (&sub == this) return a;
  const Embedding& E = embedding_of(sub);
  auto r = sub.residues(a);
  Elem out = zero();
  for (uint32_t i = 0; i < sub.k; ++i) {
    if (!r[i]) continue;
    Elem t = E.gen_powers[i];
    if (r[i] != 1) t = mul(t, from_int((int64_t)r[i]));
    out = add(out, t);
  }
  return out;
}

std::optional<Elem> Fq::retract_to(const Fq& sub, const Elem& a) const {
  if (&sub == this) return a;
  const Embedding& E = embedding_of(sub);
  // solve sum_j x_j * mat[j] = residues(a) over GF(p)
  uint32_t rows = k, cols = sub.k;
  std::vector<std::vector<uint32_t>> M(rows, std::vector<uint32_t>(cols + 1, 0));
  auto rhs = residues(a);
  for (uint32_t i = 0; i < rows; ++i) {
    for (uint32_t j = 0; j < cols; ++j) M[i][j] = E.mat[j][i];
    M[i][cols] = rhs[i];
  }
  std::vector<int> pivot_col(rows, -1);
  uint32_t rank = 0;
  for (uint32_t c = 0; c < cols && rank < rows; ++c) {
    uint32_t sel = rank;
    while (sel < rows && M[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[rank]);
    uint32_t ilc = u32_inv_mod(M[rank][c], p);
    for (uint32_t j = c; j <= cols; ++j) M[rank][j] = (uint32_t)((uint64_t)M[rank][j] * ilc % p);
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == rank || M[i][c] == 0) continue;
      uint64_t f = M[i][c];
      for (uint32_t j = c; j <= cols; ++j)
        M[i][j] = (uint32_t)((M[i][j] + (p - (uint32_t)(f * M[rank][j] % p))) % p);
    }
    pivot_col[rank] = (int)c;
    ++rank;
  }
  std::vector<uint32_t> x(cols, 0);
  for (uint32_t i = 0; i < rank; ++i) x[pivot_col[i]] = M[i][cols];
  for (uint32_t i = rank; i < rows; ++i)
    if (M[i][cols] != 0) return std::nullopt;
  // verify (guards against unresolved non-pivot columns)
  Elem back = embed_from(sub, sub.from_residues(x));
  if (!(back == a)) return std::nullopt;
  return sub.from_residues(x);
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly ptrim(const Fq& F, Poly a) {
  while (!a.c.empty() && F.is_zero(a.c.back())) a.c.pop_back();
  return a;
}

Poly pconst(const Fq& F, const Elem& a) {
  if (F.is_zero(a)) return Poly{};
  return Poly{{a}};
}

Poly pX(const Fq& F) { return Poly{{F.zero(), F.one()}}; }

Poly padd(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
  return ptrim(F, std::move(r));
}

Poly psub(const Fq& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
  return ptrim(F, std::move(r));
}

Poly pmul(const Fq& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return ptrim(F, std::move(r));
}

Poly pscale(const Fq& F, const Poly& a, const Elem& s) {
  Poly r = a;
  for (auto& c : r.c) c = F.mul(c, s);
  return ptrim(F, std::move(r));
}

Poly pmonic(const Fq& F, const Poly& a) {
  if (a.is_zero()) return a;
  return pscale(F, a, F.inv(a.c.back()));
}

void pdivrem(const Fq& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  check(!b.is_zero(), "pdivrem: division by zero polynomial");
  r = ptrim(F, a);
  q = Poly{};
  int db = b.deg();
  Elem ilc = F.inv(b.c.back());
  if (r.deg() >= db) q.c.assign(r.deg() - db + 1, F.zero());
  while (r.deg() >= db) {
    Elem c = F.mul(r.c.back(), ilc);
    int sh = r.deg() - db;
    q.c[sh] = c;
    for (int j = 0; j <= db; ++j) r.c[j + sh] = F.sub(r.c[j + sh], F.mul(c, b.c[j]));
    r = ptrim(F, std::move(r));
  }
  q = ptrim(F, std::move(q));
}

Poly pmod(const Fq& F, const Poly& a, const Poly& b) {
  Poly q, r;
  pdivrem(F, a, b, q, r);
  return r;
}

Poly pgcd(const Fq& F, Poly a, Poly b) {
  a = ptrim(F, std::move(a));
  b = ptrim(F, std::move(b));
  while (!b.is_zero()) {
    Poly r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(F, a);
}

Poly pderiv(const Fq& F, const Poly& a) {
  Poly r;
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(F.mul(a.c[i], F.from_int((int64_t)i)));
  return ptrim(F, std::move(r));
}

Elem peval(const Fq& F, const Poly& a, const Elem& x) {
  Elem r = F.zero();
  for (int i = (int)a.c.size() - 1; i >= 0; --i) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

Poly ppowmod_u64(const Fq& F, Poly base, uint64_t e, const Poly& mod) {
  Poly r = pconst(F, F.one());
  base = pmod(F, base, mod);
  while (e) {
    if (e & 1) r = pmod(F, pmul(F, r, base), mod);
    base = pmod(F, pmul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

static Poly ppowmod_big(const Fq& F, Poly base, const Big& e, const Poly& mod) {
  Poly r = pconst(F, F.one());
  base = pmod(F, base, mod);
  int nb = big_bits(e);
  for (int i = nb - 1; i >= 0; --i) {
    r = pmod(F, pmul(F, r, r), mod);
    if (big_bit(e, i)) r = pmod(F, pmul(F, r, base), mod);
  }
  return r;
}

Poly pfrob_coeffs(const Fq& F, const Poly& a, uint32_t i) {
  Poly r = a;
  for (auto& c : r.c) c = F.frob(c, i);
  return r;
}

Poly pfield_power_mod(const Fq& F, Poly g, uint32_t steps, const Poly& f) {
  // g -> g^(q^steps) mod f, q = |F| = p^k
  for (uint32_t s = 0; s < steps; ++s)
    for (uint32_t i = 0; i < F.k; ++i) g = ppowmod_u64(F, g, F.p, f);
  return g;
}

static Poly pth_root_poly(const Fq& F, const Poly& a) {
  // a = sum c_i x^(p*i); p-th root of coefficients is frob^(k-1)
  Poly r;
  for (size_t i = 0; i < a.c.size(); i += F.p) {
    Elem c = a.c[i];
    r.c.push_back(F.frob(c, F.k >= 1 ? F.k - 1 : 0));
  }
  for (size_t i = 0; i < a.c.size(); ++i)
    if (i % F.p != 0) check(F.is_zero(a.c[i]), "pth_root_poly: not a p-th power");
  return ptrim(F, std::move(r));
}

static void squarefree_decompose(const Fq& F, Poly f, int outer_mult,
                                 std::vector<std::pair<Poly, int>>& out) {
  f = pmonic(F, ptrim(F, std::move(f)));
  if (f.deg() <= 0) return;
  Poly fp = pderiv(F, f);
  if (fp.is_zero()) {
    squarefree_decompose(F, pth_root_poly(F, f), outer_mult * (int)F.p, out);
    return;
  }
  Poly c = pgcd(F, f, fp);
  Poly w;
  {
    Poly q, r;
    pdivrem(F, f, c, q, r);
    check(r.is_zero(), "squarefree: division mismatch");
    w = q;
  }
  int i = 1;
  while (w.deg() > 0) {
    Poly y = pgcd(F, w, c);
    Poly z, r;
    pdivrem(F, w, y, z, r);
    check(r.is_zero(), "squarefree: division mismatch");
    if (z.deg() > 0) out.emplace_back(pmonic(F, z), i * outer_mult);
    {
      Poly q2, r2;
      pdivrem(F, c, y, q2, r2);
      check(r2.is_zero(), "squarefree: division mismatch");
      c = q2;
    }
    w = y;
    ++i;
  }
  if (c.deg() > 0) squarefree_decompose(F, c, outer_mult * (int)F.p, out);
}

Poly psquarefree_part(const Fq& F, const Poly& a) {
  std::vector<std::pair<Poly, int>> parts;
  squarefree_decompose(F, a, 1, parts);
  Poly r = pconst(F, F.one());
  for (auto& [g, m] : parts) r = pmul(F, r, g);
  return r;
}

// distinct-degree factorization of squarefree monic f; stops after maxdeg (<0: full)
static std::vector<std::pair<Poly, int>> ddf(const Fq& F, Poly f, int maxdeg) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = pmod(F, pX(F), f);
  int d = 0;
  while (f.deg() > 0) {
    ++d;
    if (maxdeg >= 0 && d > maxdeg) break;
    if (2 * d > f.deg()) {
      out.emplace_back(f, f.deg());
      return out;
    }
    h = pfield_power_mod(F, h, 1, f);
    Poly g = pgcd(F, psub(F, h, pX(F)), f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      Poly q, r;
      pdivrem(F, f, g, q, r);
      check(r.is_zero(), "ddf: division mismatch");
      f = pmonic(F, q);
      h = pmod(F, h, f);
    }
  }
  return out;
}

// split a product of distinct irreducibles of equal degree d
static void edf(const Fq& F, const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.deg() <= 0) return;
  if (f.deg() == d) {
    out.push_back(pmonic(F, f));
    return;
  }
  while (true) {
    Poly r;
    r.c.resize(f.deg(), F.zero());
    for (auto& c : r.c) c = F.rand(rng);
    r = ptrim(F, std::move(r));
    if (r.deg() < 1) continue;
    Poly h;
    if (F.p == 2) {
      // trace map sum r^(2^i), i < k*d
      Poly t = pmod(F, r, f);
      Poly acc = t;
      for (uint32_t i = 1; i < F.k * (uint32_t)d; ++i) {
        t = pmod(F, pmul(F, t, t), f);
        acc = padd(F, acc, t);
      }
      h = acc;
    } else {
      Big e = big_from_pow(F.p, F.k * (uint32_t)d);
      big_dec(e);
      big_halve(e);
      Poly t = ppowmod_big(F, r, e, f);
      h = psub(F, t, pconst(F, F.one()));
    }
    Poly g = pgcd(F, h, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      Poly q, rem;
      pdivrem(F, f, g, q, rem);
      check(rem.is_zero(), "edf: division mismatch");
      edf(F, g, d, rng, out);
      edf(F, pmonic(F, q), d, rng, out);
      return;
    }
  }
}

static uint64_t poly_seed(const Fq& F, const Poly& f) {
  uint64_t h = 0x2717badccafeull ^ (F.p * 1315423911ull) ^ F.k;
  for (auto& c : f.c)
    for (uint32_t w : c.v) h = h * 1000003ull + w;
  return h;
}

std::vector<std::pair<Poly, int>> pfactor(const Fq& F, const Poly& a) {
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decompose(F, a, 1, sqf);
  std::vector<std::pair<Poly, int>> out;
  Rng rng(poly_seed(F, a));
  for (auto& [g, m] : sqf) {
    for (auto& [h, d] : ddf(F, g, -1)) {
      std::vector<Poly> irr;
      edf(F, h, d, rng, irr);
      for (auto& f : irr) out.emplace_back(f, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.deg() != y.first.deg()) return x.first.deg() < y.first.deg();
    return x.first.c < y.first.c;
  });
  return out;
}

std::vector<Poly> pfactors_up_to_degree(const Fq& F, const Poly& a, int maxdeg) {
  Poly s = psquarefree_part(F, a);
  Rng rng(poly_seed(F, a));
  std::vector<Poly> out;
  for (auto& [h, d] : ddf(F, s, maxdeg)) {
    if (d > maxdeg) continue;
    edf(F, h, d, rng, out);
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return x.c < y.c;
  });
  return out;
}

bool pirreducible(const Fq& F, const Poly& a) {
  Poly f = pmonic(F, ptrim(F, a));
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly xq = pfield_power_mod(F, pmod(F, pX(F), f), (uint32_t)n, f);
  if (!psub(F, xq, pX(F)).is_zero()) return false;
  int nn = n;
  std::vector<int> primes;
  for (int l = 2; l * l <= nn; ++l)
    if (nn % l == 0) {
      primes.push_back(l);
      while (nn % l == 0) nn /= l;
    }
  if (nn > 1) primes.push_back(nn);
  for (int l : primes) {
    Poly xe = pfield_power_mod(F, pmod(F, pX(F), f), (uint32_t)(n / l), f);
    if (pgcd(F, psub(F, xe, pX(F)), f).deg() != 0) return false;
  }
  return true;
}

std::vector<Elem> roots_in_field(const Fq& F, const Poly& f, const Fq& K,
                                 std::vector<int>* mults) {
  Poly fK;
  for (auto& c : f.c) fK.c.push_back(K.embed_from(F, c));
  fK = ptrim(K, std::move(fK));
  check(!fK.is_zero(), "roots_in_field: zero polynomial");
  if (fK.deg() == 0) return {};
  Poly s = psquarefree_part(K, fK);
  // keep only the part splitting into linear factors over K
  Poly xq = pfield_power_mod(K, pmod(K, pX(K), s), 1, s);
  Poly lin = pgcd(K, psub(K, xq, pX(K)), s);
  std::vector<Poly> fac;
  Rng rng(poly_seed(K, fK));
  if (lin.deg() >= 1) edf(K, lin, 1, rng, fac);
  std::vector<Elem> roots;
  for (auto& g : fac) roots.push_back(K.neg(g.c[0]));  // monic x + c0
  std::sort(roots.begin(), roots.end());
  if (mults) {
    mults->clear();
    for (auto& r : roots) {
      int m = 0;
      Poly cur = fK, lf{{K.neg(r), K.one()}};
      while (true) {
        Poly q, rem;
        pdivrem(K, cur, lf, q, rem);
        if (!rem.is_zero()) break;
        ++m;
        cur = q;
      }
      mults->push_back(m);
    }
  }
  return roots;
}

Poly pinterpolate(const Fq& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  check(xs.size() == ys.size() && !xs.empty(), "pinterpolate: size mismatch");
  // Newton divided differences
  size_t n = xs.size();
  std::vector<Elem> coef = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      Elem num = F.sub(coef[i], coef[i - 1]);
      Elem den = F.sub(xs[i], xs[i - j]);
      coef[i] = F.mul(num, F.inv(den));
      if (i == j) break;
    }
  Poly r = pconst(F, coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    Poly lf{{F.neg(xs[i]), F.one()}};
    r = padd(F, pmul(F, r, lf), pconst(F, coef[i]));
  }
  return r;
}

}  // namespace cubic
