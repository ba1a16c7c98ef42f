#include "gf/table_field.hpp"

#include <stdexcept>

namespace rz::gf {

namespace {

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> fs;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

TField TField::make(i64 p, int m) { return make(Fq::make(p, m)); }

TField TField::make(const Fq& k) {
  TField t;
  t.field = k;
  t.p = k.p;
  t.m = k.m;
  t.d = k.d;
  t.q = k.q;

  // find a generator of the unit group
  auto fs = prime_factors(t.q - 1);
  for (i64 idx = 2; idx < t.q; ++idx) {
    coeffs c = k.from_index(idx);
    bool ok = true;
    for (i64 l : fs) {
      if (k.to_index(k.pow(c, (t.q - 1) / l)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      t.gen = (uint32_t)idx;
      break;
    }
  }
  if (t.gen == 0) throw std::runtime_error("no generator found");

  t.logt.assign(t.q, 0);
  t.expt.assign(2 * (t.q - 1), 0);
  coeffs cur = k.one();
  coeffs g = k.from_index(t.gen);
  for (i64 i = 0; i < t.q - 1; ++i) {
    uint32_t idx = (uint32_t)k.to_index(cur);
    t.expt[i] = idx;
    t.expt[i + t.q - 1] = idx;
    t.logt[idx] = (int32_t)i;
    cur = k.mul(cur, g);
  }

  t.negt.assign(t.q, 0);
  for (i64 a = 0; a < t.q; ++a) t.negt[a] = (uint32_t)k.to_index(k.neg(k.from_index(a)));

  if (t.q <= kAddTableMax) {
    t.addt.assign((size_t)t.q * t.q, 0);
    for (i64 a = 0; a < t.q; ++a)
      for (i64 b = 0; b <= a; ++b) {
        uint32_t s = t.add_digits((uint32_t)a, (uint32_t)b);
        t.addt[(size_t)a * t.q + b] = s;
        t.addt[(size_t)b * t.q + a] = s;
      }
  }

  t.frobt.assign(t.d, std::vector<uint32_t>(t.q, 0));
  for (int kk = 0; kk < t.d; ++kk) {
    i64 pk = pow_i64(t.p, kk);
    for (i64 a = 1; a < t.q; ++a)
      t.frobt[kk][a] = t.expt[(size_t)((__int128)t.logt[a] * pk % (t.q - 1))];
  }

  t.normt.assign(t.q, 0);
  for (i64 a = 1; a < t.q; ++a)
    t.normt[a] = t.expt[(size_t)((__int128)t.logt[a] * (t.p + 1) % (t.q - 1))];
  return t;
}

uint32_t TField::add_digits(uint32_t a, uint32_t b) const {
  uint32_t r = 0, mult = 1;
  for (int i = 0; i < d; ++i) {
    uint32_t da = a % p, db = b % p;
    a /= p;
    b /= p;
    r += ((da + db) % p) * mult;
    mult *= p;
  }
  return r;
}

uint32_t TField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return expt[(size_t)((q - 1 - logt[a]) % (q - 1))];
}

uint32_t TField::pow(uint32_t a, i64 e) const {
  if (a == 0) {
    if (e <= 0) throw std::domain_error("0^e with e <= 0");
    return 0;
  }
  i64 le = (__int128)logt[a] * (e % (q - 1)) % (q - 1);
  if (le < 0) le += q - 1;
  return expt[(size_t)le];
}

uint32_t TField::from_int(i64 v) const {
  v %= p;
  if (v < 0) v += p;
  return (uint32_t)v;
}

}  // namespace rz::gf
