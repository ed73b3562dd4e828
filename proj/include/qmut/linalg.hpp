#pragma once

#include <span>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut {

// Basis of the rational kernel of B, each vector primitive (entry gcd 1) with
// a positive first nonzero entry, one vector per free column in increasing
// column order.
struct RadicalBasisZ {
  std::vector<IntVector> vectors;
  std::size_t corank = 0;
};

struct RadicalBasisGF2 {
  std::vector<GF2Vector> vectors;
  std::size_t corank2 = 0;
};

// B mod 2; symmetric since -1 = 1.
struct GF2Matrix {
  std::size_t n = 0;
  std::vector<GF2Vector> rows;

  GF2Vector multiply(const GF2Vector& v) const;
};

// Rank of an arbitrary integer matrix by Bareiss fraction-free elimination.
std::size_t bareiss_rank(std::size_t rows, std::size_t cols, std::vector<Int> m);

std::size_t rank_z(const Quiver& q);
inline std::size_t corank_z(const Quiver& q) { return q.size() - rank_z(q); }
RadicalBasisZ radical_basis_z(const Quiver& q);

GF2Matrix reduce_mod2(const Quiver& q);
std::size_t rank_gf2(const Quiver& q);
RadicalBasisGF2 radical_basis_gf2(const Quiver& q);
RadicalBasisGF2 kernel_gf2(const GF2Matrix& m);

// Dimension of the span of vs.
std::size_t gf2_span_dim(std::span<const GF2Vector> vs);
// Whether v lies in the span of vs.
bool gf2_member(const GF2Vector& v, std::span<const GF2Vector> vs);

}  // namespace qmut
