#include "gf/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rz::gf {

i64 pow_i64(i64 base, i64 exp) {
  i64 r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

i64 mod_pos(i64 a, i64 mod) {
  a %= mod;
  return a < 0 ? a + mod : a;
}

i64 inv_mod_prime(i64 a, i64 p) {
  a = mod_pos(a, p);
  i64 r = 1, e = p - 2, b = a;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// ---- dense polynomials over Z/p, used only during construction ----

int pdeg(const coeffs& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

coeffs ptrim(coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

coeffs pmul(const coeffs& a, const coeffs& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return ptrim(r);
}

coeffs pmod(coeffs a, const coeffs& f, i64 p) {
  a = ptrim(a);
  int df = pdeg(f);
  i64 lead_inv = inv_mod_prime(f[df], p);
  while (pdeg(a) >= df) {
    int da = pdeg(a);
    i64 c = a[da] * lead_inv % p;
    for (int i = 0; i <= df; ++i) a[da - df + i] = mod_pos(a[da - df + i] - c * f[i], p);
    a = ptrim(a);
  }
  return a;
}

coeffs pgcd(coeffs a, coeffs b, i64 p) {
  a = ptrim(a);
  b = ptrim(b);
  while (!b.empty()) {
    coeffs r = pmod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

coeffs ppow_mod(coeffs base, i64 e, const coeffs& f, i64 p) {
  coeffs r{1};
  base = pmod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = pmod(pmul(r, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// x^(p^k) mod f by k successive p-th powers.
coeffs x_qpow(int k, const coeffs& f, i64 p) {
  coeffs r{0, 1};
  for (int i = 0; i < k; ++i) r = ppow_mod(r, p, f, p);
  return r;
}

}  // namespace

bool poly_irreducible(const coeffs& f, i64 p) {
  int d = pdeg(f);
  if (d < 1) return false;
  coeffs x{0, 1};
  // x^(p^d) == x mod f
  coeffs xq = x_qpow(d, f, p);
  if (ptrim(xq) != x) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0 || !is_prime(l)) continue;
    coeffs g = x_qpow(d / l, f, p);
    // gcd(x^(p^(d/l)) - x, f) must be 1
    coeffs diff = g;
    if ((int)diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_pos(diff[1] - 1, p);
    coeffs gc = pgcd(f, diff, p);
    if (pdeg(gc) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fq
// ---------------------------------------------------------------------------

Fq Fq::make(i64 p, int m) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  Fq k;
  k.p = p;
  k.m = m;
  k.d = 2 * m;
  k.q = pow_i64(p, k.d);
  // scan monic polynomials by the integer key of their low coefficients
  for (i64 key = 0;; ++key) {
    coeffs f(k.d + 1, 0);
    i64 t = key;
    for (int i = 0; i < k.d; ++i) {
      f[i] = t % p;
      t /= p;
    }
    if (t != 0) throw std::runtime_error("no irreducible found");  // unreachable
    f[k.d] = 1;
    if (poly_irreducible(f, p)) {
      k.f = f;
      break;
    }
  }
  // x^d .. x^{2d-2} mod f
  k.xpow_.resize(k.d - 1);
  coeffs cur(k.f.begin(), k.f.end() - 1);  // x^d = -(low part of f)
  for (auto& c : cur) c = mod_pos(-c, p);
  k.xpow_[0] = cur;
  for (int j = 1; j < k.d - 1; ++j) {
    coeffs nxt(k.d, 0);
    // multiply cur by x
    for (int i = k.d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    i64 top = cur[k.d - 1];
    for (int i = 0; i < k.d; ++i) nxt[i] = mod_pos(nxt[i] + top * k.xpow_[0][i], p);
    k.xpow_[j] = nxt;
    cur = nxt;
  }
  // Frobenius matrices: columns sigma^j applied to basis x^i
  k.frob_mat_.assign(k.d, std::vector<i64>(k.d * k.d, 0));
  for (int j = 0; j < k.d; ++j) {
    coeffs s = ptrim(x_qpow(j, k.f, p));
    s.resize(k.d, 0);
    coeffs spow = k.one();
    for (int i = 0; i < k.d; ++i) {
      for (int r = 0; r < k.d; ++r) k.frob_mat_[j][r * k.d + i] = spow[r];
      spow = k.mul(spow, s);
    }
  }
  return k;
}

coeffs Fq::one() const {
  coeffs r(d, 0);
  r[0] = 1;
  return r;
}

coeffs Fq::from_int(i64 v) const {
  coeffs r(d, 0);
  r[0] = mod_pos(v, p);
  return r;
}

bool Fq::is_zero(const coeffs& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

coeffs Fq::add(const coeffs& a, const coeffs& b) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(a[i] + b[i], p);
  return r;
}

coeffs Fq::sub(const coeffs& a, const coeffs& b) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(a[i] - b[i], p);
  return r;
}

coeffs Fq::neg(const coeffs& a) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(-a[i], p);
  return r;
}

coeffs Fq::reduce_long(coeffs prod) const {
  coeffs r(prod.begin(), prod.begin() + d);
  for (int i = d; i < (int)prod.size(); ++i) {
    if (prod[i] == 0) continue;
    const coeffs& red = xpow_[i - d];
    for (int j = 0; j < d; ++j) r[j] = (r[j] + prod[i] * red[j]) % p;
  }
  for (auto& c : r) c = mod_pos(c, p);
  return r;
}

coeffs Fq::mul(const coeffs& a, const coeffs& b) const {
  coeffs prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return reduce_long(std::move(prod));
}

coeffs Fq::inv(const coeffs& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(a, q - 2);
}

coeffs Fq::pow(coeffs a, i64 e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  coeffs r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

coeffs Fq::frob(const coeffs& a, int k) const {
  k = ((k % d) + d) % d;
  const auto& M = frob_mat_[k];
  coeffs r(d, 0);
  for (int row = 0; row < d; ++row) {
    i64 s = 0;
    for (int col = 0; col < d; ++col) s += M[row * d + col] * a[col];
    r[row] = mod_pos(s, p);
  }
  return r;
}

i64 Fq::to_index(const coeffs& a) const {
  i64 idx = 0, mult = 1;
  for (int i = 0; i < d; ++i) {
    idx += a[i] * mult;
    mult *= p;
  }
  return idx;
}

coeffs Fq::from_index(i64 idx) const {
  coeffs r(d, 0);
  for (int i = 0; i < d; ++i) {
    r[i] = idx % p;
    idx /= p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// GR
// ---------------------------------------------------------------------------

GR GR::make(i64 p, int m, int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  GR R;
  R.residue = Fq::make(p, m);
  R.p = p;
  R.m = m;
  R.N = N;
  R.d = 2 * m;
  R.pN = pow_i64(p, N);
  R.q = pow_i64(p, R.d);
  R.f = R.residue.f;  // integer lift, entries already in [0,p)
  // x^d .. x^{2d-2} mod (f, p^N)
  R.xpow_.resize(R.d - 1);
  coeffs cur(R.f.begin(), R.f.end() - 1);
  for (auto& c : cur) c = mod_pos(-c, R.pN);
  R.xpow_[0] = cur;
  for (int j = 1; j < R.d - 1; ++j) {
    coeffs nxt(R.d, 0);
    for (int i = R.d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    i64 top = cur[R.d - 1];
    for (int i = 0; i < R.d; ++i) nxt[i] = mod_pos(nxt[i] + top * R.xpow_[0][i], R.pN);
    R.xpow_[j] = nxt;
    cur = nxt;
  }
  // sigma^k matrices from the digit-level Frobenius applied to the generator
  R.frob_mat_.assign(R.d, std::vector<i64>(R.d * R.d, 0));
  coeffs x(R.d, 0);
  if (R.d > 1) x[1] = 1;
  for (int k = 0; k < R.d; ++k) {
    coeffs s = R.frob_digits(x, k);
    coeffs spow = R.one();
    for (int i = 0; i < R.d; ++i) {
      for (int r = 0; r < R.d; ++r) R.frob_mat_[k][r * R.d + i] = spow[r];
      spow = R.mul(spow, s);
    }
  }
  return R;
}

coeffs GR::one() const {
  coeffs r(d, 0);
  r[0] = 1;
  return r;
}

coeffs GR::from_int(i64 v) const {
  coeffs r(d, 0);
  r[0] = mod_pos(v, pN);
  return r;
}

bool GR::is_zero(const coeffs& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

coeffs GR::add(const coeffs& a, const coeffs& b) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(a[i] + b[i], pN);
  return r;
}

coeffs GR::sub(const coeffs& a, const coeffs& b) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(a[i] - b[i], pN);
  return r;
}

coeffs GR::neg(const coeffs& a) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = mod_pos(-a[i], pN);
  return r;
}

coeffs GR::reduce_long(coeffs prod) const {
  coeffs r(prod.begin(), prod.begin() + d);
  for (int i = d; i < (int)prod.size(); ++i) {
    if (prod[i] == 0) continue;
    const coeffs& red = xpow_[i - d];
    for (int j = 0; j < d; ++j) r[j] = (r[j] + prod[i] * red[j]) % pN;
  }
  for (auto& c : r) c = mod_pos(c, pN);
  return r;
}

coeffs GR::mul(const coeffs& a, const coeffs& b) const {
  coeffs prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % pN;
  }
  return reduce_long(std::move(prod));
}

coeffs GR::mul_int(const coeffs& a, i64 c) const {
  c = mod_pos(c, pN);
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = a[i] * c % pN;
  return r;
}

coeffs GR::pow(coeffs a, i64 e) const {
  coeffs r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int GR::val(const coeffs& a) const {
  int v = N;
  for (auto c : a) {
    if (c == 0) continue;
    int vc = 0;
    i64 t = c;
    while (t % p == 0) {
      t /= p;
      ++vc;
    }
    v = std::min(v, vc);
  }
  return v;
}

coeffs GR::mul_pow_p(const coeffs& a, int k) const {
  i64 pk = pow_i64(p, k);
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = a[i] * pk % pN;
  return r;
}

coeffs GR::div_pow_p(const coeffs& a, int k) const {
  i64 pk = pow_i64(p, k);
  coeffs r(d);
  for (int i = 0; i < d; ++i) {
    if (a[i] % pk != 0) throw std::domain_error("inexact division by p^k");
    r[i] = a[i] / pk;
  }
  return r;
}

coeffs GR::inv(const coeffs& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse of a non-unit in GR(p^N, 2m)");
  coeffs b = lift(residue.inv(reduce(a)));
  // Newton: b <- b(2 - ab), doubling precision each step
  int prec = 1;
  while (prec < N) {
    coeffs t = sub(from_int(2), mul(a, b));
    b = mul(b, t);
    prec *= 2;
  }
  return b;
}

coeffs GR::teich(const coeffs& a) const {
  coeffs t = a;
  for (int i = 0; i < N - 1; ++i) t = pow(t, q);
  return t;
}

std::vector<coeffs> GR::teich_digits(const coeffs& a) const {
  std::vector<coeffs> digits;
  digits.reserve(N);
  coeffs rest = a;
  for (int i = 0; i < N; ++i) {
    coeffs t = teich(rest);
    digits.push_back(t);
    rest = div_pow_p(sub(rest, t), 1);
  }
  return digits;
}

coeffs GR::from_teich_digits(const std::vector<coeffs>& digits) const {
  coeffs r = zero();
  for (int i = (int)digits.size() - 1; i >= 0; --i) r = add(mul_pow_p(r, 1), digits[i]);
  return r;
}

coeffs GR::frob_digits(const coeffs& a, int k) const {
  k = ((k % d) + d) % d;
  i64 pk = pow_i64(p, k);
  auto digits = teich_digits(a);
  for (auto& t : digits) t = pow(t, pk);
  return from_teich_digits(digits);
}

coeffs GR::frob(const coeffs& a, int k) const {
  k = ((k % d) + d) % d;
  const auto& M = frob_mat_[k];
  coeffs r(d, 0);
  for (int row = 0; row < d; ++row) {
    i64 s = 0;
    for (int col = 0; col < d; ++col) s = (s + M[row * d + col] * a[col]) % pN;
    r[row] = s;
  }
  return r;
}

coeffs GR::reduce(const coeffs& a) const {
  coeffs r(d);
  for (int i = 0; i < d; ++i) r[i] = a[i] % p;
  return r;
}

coeffs GR::lift(const coeffs& fq_elem) const { return fq_elem; }

// ---------------------------------------------------------------------------
// GREmbedding
// ---------------------------------------------------------------------------

GREmbedding GREmbedding::make(const GR& small, const GR& big) {
  if (small.p != big.p || small.N != big.N || small.m != 1 || big.m < 1)
    throw std::invalid_argument("embedding expects GR(p^N,2) into GR(p^N,2m)");
  GREmbedding e;
  e.small = &small;
  e.big = &big;
  // root of the small modulus in the big residue field, least index first
  const Fq& F = big.residue;
  coeffs root_res;
  for (i64 idx = 0; idx < F.q; ++idx) {
    coeffs c = F.from_index(idx);
    coeffs acc = F.zero();
    for (int i = (int)small.f.size() - 1; i >= 0; --i)
      acc = F.add(F.mul(acc, c), F.from_int(small.f[i]));
    if (F.is_zero(acc)) {
      root_res = c;
      break;
    }
  }
  if (root_res.empty()) throw std::runtime_error("no residue root for embedding");
  // Hensel lift: r <- r - f(r)/f'(r)
  coeffs r = big.lift(root_res);
  for (int it = 0; it < big.N + 2; ++it) {
    coeffs fr = big.zero();
    for (int i = (int)small.f.size() - 1; i >= 0; --i)
      fr = big.add(big.mul(fr, r), big.from_int(small.f[i]));
    coeffs dfr = big.zero();
    for (int i = (int)small.f.size() - 1; i >= 1; --i)
      dfr = big.add(big.mul(dfr, r), big.mul_int(big.from_int(small.f[i]), i));
    r = big.sub(r, big.mul(fr, big.inv(dfr)));
  }
  e.root = r;
  return e;
}

coeffs GREmbedding::map(const coeffs& a) const {
  coeffs acc = big->zero();
  for (int i = small->d - 1; i >= 0; --i)
    acc = big->add(big->mul(acc, root), big->from_int(a[i]));
  return acc;
}

std::string to_string(const coeffs& a) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ']';
  return os.str();
}

}  // namespace rz::gf
