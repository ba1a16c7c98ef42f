#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rz::gf {

using i64 = long long;

// Little-endian coefficient vector: c[i] is the coefficient of x^i.
using coeffs = std::vector<i64>;

i64 pow_i64(i64 base, i64 exp);
bool is_prime(i64 n);

// ---------------------------------------------------------------------------
// F_{p^{2m}} = F_p[x]/(f), f the least monic irreducible of degree 2m.
// "Least" orders monic polynomials by the integer key sum a_i * p^i over the
// non-leading coefficients, so the choice is reproducible.
// ---------------------------------------------------------------------------
struct Fq {
  i64 p = 0;
  int m = 0;
  int d = 0;  // d = 2m
  i64 q = 0;  // p^d
  coeffs f;   // monic, degree d, entries in [0,p)

  static Fq make(i64 p, int m);

  coeffs zero() const { return coeffs(d, 0); }
  coeffs one() const;
  coeffs from_int(i64 v) const;
  bool is_zero(const coeffs& a) const;

  coeffs add(const coeffs& a, const coeffs& b) const;
  coeffs sub(const coeffs& a, const coeffs& b) const;
  coeffs neg(const coeffs& a) const;
  coeffs mul(const coeffs& a, const coeffs& b) const;
  coeffs inv(const coeffs& a) const;
  coeffs pow(coeffs a, i64 e) const;

  // sigma^k with sigma the p-power Frobenius; k taken mod d.
  coeffs frob(const coeffs& a, int k) const;

  // index <-> element: an element maps to sum c_i p^i in [0, q)
  i64 to_index(const coeffs& a) const;
  coeffs from_index(i64 idx) const;

 private:
  std::vector<coeffs> xpow_;                   // x^d .. x^{2d-2} mod f
  std::vector<std::vector<i64>> frob_mat_;     // d x d matrices of sigma^k
  coeffs reduce_long(coeffs prod) const;       // degree <= 2d-2 input
  friend struct GR;
};

// Irreducibility test used by Fq::make (root/gcd based).
bool poly_irreducible(const coeffs& f, i64 p);

// ---------------------------------------------------------------------------
// Galois ring GR(p^N, 2m) = Z/p^N[x]/(f), f the integer lift of the field
// modulus.  sigma is the unique lift of the p-power Frobenius; it acts on
// Teichmuller digits by t -> t^p and is Z/p^N-linear, so powers of sigma are
// precomputed as matrices.
// ---------------------------------------------------------------------------
struct GR {
  i64 p = 0;
  int m = 0, N = 0, d = 0;
  i64 pN = 0;  // p^N
  i64 q = 0;   // p^d
  coeffs f;
  Fq residue;

  static GR make(i64 p, int m, int N);

  coeffs zero() const { return coeffs(d, 0); }
  coeffs one() const;
  coeffs from_int(i64 v) const;
  bool is_zero(const coeffs& a) const;

  coeffs add(const coeffs& a, const coeffs& b) const;
  coeffs sub(const coeffs& a, const coeffs& b) const;
  coeffs neg(const coeffs& a) const;
  coeffs mul(const coeffs& a, const coeffs& b) const;
  coeffs mul_int(const coeffs& a, i64 c) const;
  coeffs pow(coeffs a, i64 e) const;

  // p-adic valuation in [0, N]; val(0) = N by convention.
  int val(const coeffs& a) const;
  bool is_unit(const coeffs& a) const { return val(a) == 0; }
  coeffs mul_pow_p(const coeffs& a, int k) const;
  // exact division by p^k; throws if a is not divisible
  coeffs div_pow_p(const coeffs& a, int k) const;

  // inverse of a unit (residue-field inverse + Newton lifting); throws on
  // non-units.
  coeffs inv(const coeffs& a) const;

  // Teichmuller representative of the residue class of a.
  coeffs teich(const coeffs& a) const;
  // a = sum digits[i] p^i with digits[i]^q = digits[i]; exactly N digits.
  std::vector<coeffs> teich_digits(const coeffs& a) const;
  coeffs from_teich_digits(const std::vector<coeffs>& digits) const;

  // sigma^k via the precomputed matrix (fast path).
  coeffs frob(const coeffs& a, int k) const;
  // sigma^k via Teichmuller digits (reference path).
  coeffs frob_digits(const coeffs& a, int k) const;

  coeffs reduce(const coeffs& a) const;        // to residue field coeffs
  coeffs lift(const coeffs& fq_elem) const;    // coefficient lift

 private:
  std::vector<coeffs> xpow_;
  std::vector<std::vector<i64>> frob_mat_;
  coeffs reduce_long(coeffs prod) const;
};

// Embedding GR(p^N, 2) -> GR(p^N, 2m) sending the degree-2 generator to the
// Hensel root of its modulus with the least residue index.  Intertwines the
// small ring's sigma with the big ring's sigma.
struct GREmbedding {
  const GR* small = nullptr;
  const GR* big = nullptr;
  coeffs root;  // image of the small generator

  static GREmbedding make(const GR& small, const GR& big);
  coeffs map(const coeffs& a) const;
};

std::string to_string(const coeffs& a);

}  // namespace rz::gf
