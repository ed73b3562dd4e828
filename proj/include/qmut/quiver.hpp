#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmut/error.hpp"

namespace qmut {

// Matrix entries are unbounded: repeated mutation of an infinite-type quiver
// grows weights without limit.
using Int = boost::multiprecision::cpp_int;
using Vertex = std::size_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Arrow {
  Vertex from = 0;
  Vertex to = 0;
  Int weight = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A quiver is its skew-symmetric exchange matrix: b(i, j) > 0 means b(i, j)
// arrows i -> j. Values are immutable; every operation returns a new quiver.
class Quiver {
 public:
  // w arrows i -> j for each (i, j, w); w must be positive. Rejects loops and
  // pairs listed twice in either order.
  static Quiver from_arrows(std::size_t n, std::span<const Arrow> arrows);
  static Quiver from_arrows(std::size_t n, std::initializer_list<Arrow> arrows) {
    return from_arrows(n, std::span<const Arrow>(arrows.begin(), arrows.size()));
  }
  // Row-major n*n entries; must be skew-symmetric with zero diagonal.
  static Quiver from_matrix(std::size_t n, std::vector<Int> entries);

  std::size_t size() const noexcept { return n_; }
  const Int& operator()(Vertex i, Vertex j) const { return b_[i * n_ + j]; }
  const Int& at(Vertex i, Vertex j) const;
  const std::vector<Int>& entries() const noexcept { return b_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Quiver with_labels(std::vector<std::string> labels) const;

  // Arrows with positive entries, ordered by (from, to).
  std::vector<Arrow> arrows() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  Quiver(std::size_t n, std::vector<Int> b) : n_(n), b_(std::move(b)) {}

  std::size_t n_ = 0;
  std::vector<Int> b_;
  std::vector<std::string> labels_;
};

class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t n) : coords_(n) {}
  IntVector(std::initializer_list<Int> coords) : coords_(coords) {}
  explicit IntVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Int>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;

 private:
  std::vector<Int> coords_;
};

// Vector over GF(2) packed into 64-bit words.
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  static GF2Vector indicator(std::size_t n, std::span<const Vertex> vertices);
  static GF2Vector from_bits(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, or size() when zero.
  std::size_t lowest() const;

  GF2Vector& operator^=(const GF2Vector& other);
  friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }
  // Inner product over GF(2).
  bool dot(const GF2Vector& other) const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::string to_string() const;  // "101..." with coordinate 0 first

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend auto operator<=>(const GF2Vector& a, const GF2Vector& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct InducedSubquiver {
  Quiver quiver;
  // host_vertices[i] is the host vertex that became vertex i.
  std::vector<Vertex> host_vertices;
};

// Mutation at k. The input is unchanged; labels carry over.
Quiver mutate(const Quiver& q, Vertex k);
Quiver mutate_sequence(Quiver q, std::span<const Vertex> ks);

// Coordinates of u in the basis that represents the bilinear form of q after
// mutation at k: only the k-th coordinate changes, to
//   -u_k + sum over j with b(k, j) < 0 of (-b(k, j)) * u_j.
// Radical vectors of q map to radical vectors of mutate(q, k).
IntVector pushforward_vector(const Quiver& q, Vertex k, const IntVector& u);

InducedSubquiver induced_subquiver(const Quiver& q, std::span<const Vertex> vs);

// Vertex i of the result is vertex perm[i] of q.
Quiver permute(const Quiver& q, std::span<const Vertex> perm);

VertexSet support(const IntVector& u);
VertexSet support(const GF2Vector& u);

bool is_simply_laced(const Quiver& q);
Int max_weight(const Quiver& q);
bool is_connected(const Quiver& q);
// Vertex sets of the connected components of the underlying graph, each
// sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Quiver& q);

// B * u.
IntVector multiply(const Quiver& q, const IntVector& u);

// Sorted copy without duplicates; throws if any vertex is out of range.
VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> vs);

}  // namespace qmut
