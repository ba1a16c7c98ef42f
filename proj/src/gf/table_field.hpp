#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gf/gf.hpp"

namespace rz::gf {

// Table-driven arithmetic for F_{p^{2m}} with elements encoded as indices in
// [0, q): the index of sum c_i p^i is the element with coefficients c_i.
// Zero is index 0.  Built from the exact Fq context; the enumeration kernels
// run on this, the coefficient-vector path stays as the reference.
struct TField {
  i64 p = 0;
  int m = 0, d = 0;
  i64 q = 0;
  Fq field;

  uint32_t gen = 0;  // a multiplicative generator

  static TField make(i64 p, int m);
  static TField make(const Fq& k);

  uint32_t add(uint32_t a, uint32_t b) const {
    if (!addt.empty()) return addt[(size_t)a * q + b];
    return add_digits(a, b);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, negt[b]); }
  uint32_t neg(uint32_t a) const { return negt[a]; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return expt[(size_t)logt[a] + logt[b]];
  }
  uint32_t inv(uint32_t a) const;  // throws on zero
  uint32_t pow(uint32_t a, i64 e) const;
  // sigma^k, k mod d
  uint32_t frob(uint32_t a, int k) const {
    if (a == 0) return 0;
    return frobt[((k % d) + d) % d][a];
  }
  // x * sigma(x) = x^{p+1}; the diagonal of the hermitian form
  uint32_t norm_p1(uint32_t a) const { return normt[a]; }
  bool in_fp2(uint32_t a) const { return frob(a, 2) == a; }

  uint32_t from_int(i64 v) const;
  coeffs to_coeffs(uint32_t a) const { return field.from_index(a); }
  uint32_t from_coeffs(const coeffs& c) const { return (uint32_t)field.to_index(c); }

  std::vector<int32_t> logt;               // log table, logt[0] unused
  std::vector<uint32_t> expt;              // 2(q-1) entries, wrap-free
  std::vector<uint32_t> addt;              // q*q when q <= kAddTableMax
  std::vector<uint32_t> negt;
  std::vector<std::vector<uint32_t>> frobt;  // frobt[k][a] = sigma^k(a)
  std::vector<uint32_t> normt;             // a^{p+1}

  static constexpr i64 kAddTableMax = 2048;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;
};

}  // namespace rz::gf
