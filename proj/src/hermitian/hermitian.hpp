#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf/table_field.hpp"

namespace rz::herm {

using gf::i64;

// Row vector in the ambient space; entries are TField indices.  Unused
// trailing entries are zero when the ambient dimension is 2.
using vec4 = std::array<uint32_t, 4>;

enum class Stratum { unit, w1, w2 };
const char* stratum_name(Stratum s);

// Hermitian space over F_{p^{2m}} with form (x, y) = sum_ij x_i G_ij sigma(y_j),
// sigma the p-power Frobenius applied in the second slot.  The public
// constructor fixes G = identity; quotient spaces carry their induced Gram.
struct HermSpace {
  gf::TField F;
  int dim = 4;
  std::array<uint32_t, 16> gram{};  // row-major dim x dim
  bool identity_gram = true;

  static HermSpace make(i64 p, int m, int dim = 4);
  static HermSpace with_gram(const gf::TField& F, int dim, const std::array<uint32_t, 16>& g);

  uint32_t form(const vec4& x, const vec4& y) const;
  vec4 frob_vec(const vec4& x, int k) const;
  vec4 tau_vec(const vec4& x) const { return frob_vec(x, 2); }
};

// Subspace in reduced row echelon form; rows ordered by pivot column.
struct Subspace {
  int n = 0;  // number of rows
  std::array<vec4, 4> rows{};

  int dim() const { return n; }
  bool operator==(const Subspace& o) const;
  bool operator<(const Subspace& o) const;
};

Subspace rref(const HermSpace& V, std::vector<vec4> gens);
Subspace span_of(const HermSpace& V, const std::vector<vec4>& gens);
bool contains(const HermSpace& V, const Subspace& U, const vec4& x);
bool sub_contains(const HermSpace& V, const Subspace& U, const Subspace& W);  // W <= U

Subspace perp(const HermSpace& V, const Subspace& U);
Subspace tau(const HermSpace& V, const Subspace& U);
Subspace frob_sub(const HermSpace& V, const Subspace& U, int k);
Subspace meet(const HermSpace& V, const Subspace& U, const Subspace& W);
Subspace join(const HermSpace& V, const Subspace& U, const Subspace& W);

// Deligne-Lusztig stratum of a point of Y^(-): dim U = 3, perp(U) <= U.
Stratum classify_minus(const HermSpace& V, const Subspace& U);
// Stratum of a point of Y^(+): dim U = 1, U <= perp(U).
Stratum classify_plus(const HermSpace& V, const Subspace& U);

std::string subspace_repr(const HermSpace& V, const Subspace& U);

// ---- packed-line helpers shared with the enumeration kernels ----

inline uint64_t pack_vec(const vec4& v) {
  return ((uint64_t)v[0] << 48) | ((uint64_t)v[1] << 32) | ((uint64_t)v[2] << 16) | v[3];
}
inline vec4 unpack_vec(uint64_t k) {
  return {(uint32_t)(k >> 48), (uint32_t)((k >> 32) & 0xffff), (uint32_t)((k >> 16) & 0xffff),
          (uint32_t)(k & 0xffff)};
}

// canonical projective representative: first nonzero coordinate scaled to 1
vec4 line_canon(const gf::TField& F, vec4 v, int dim = 4);

// Line-level classifier for an isotropic line l (a point of Y^(+), equally the
// label of perp(l) in Y^(-)); assumes the canonical representative.
Stratum classify_line(const HermSpace& V, const vec4& x);

// Rational change of basis bringing a nondegenerate hermitian Gram with
// F_{p^2} entries to the identity; returns the new basis rows.
std::vector<vec4> gram_to_identity(const HermSpace& V);

}  // namespace rz::herm
