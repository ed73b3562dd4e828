#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut {

// Serialization of a quiver's matrix under a canonical vertex order. Two
// quivers have equal forms iff one is a vertex relabeling of the other.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalOptions {
  std::size_t max_vertices = 12;
  // Lifts the vertex bound; the search itself is the same.
  bool refinement_mode = false;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // Vertex i of the canonical quiver is vertex order[i] of the input.
  std::vector<Vertex> order;
};

// Individualization-refinement search: colour refinement by weighted
// in/out-neighbourhood signatures, then branching on the first non-singleton
// cell, keeping the lexicographically smallest serialization over all leaves.
// Cells made of mutually interchangeable vertices are branched only once.
CanonicalLabeling canonical_labeling(const Quiver& q, const CanonicalOptions& opts = {});
CanonicalForm canonical_form(const Quiver& q, const CanonicalOptions& opts = {});
// The input relabeled into canonical order (labels dropped).
Quiver canonical_quiver(const Quiver& q, const CanonicalOptions& opts = {});

// Serialization of the matrix as is, with no relabeling. Shares the byte
// layout of canonical forms.
CanonicalForm labeled_form(const Quiver& q);

}  // namespace qmut

template <>
struct std::hash<qmut::CanonicalForm> {
  std::size_t operator()(const qmut::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
