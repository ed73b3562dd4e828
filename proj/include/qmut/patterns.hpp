#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmut/linalg.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

enum class PatternKind {
  DoubleEdge,
  OrientedCycle,
  NonOrientedCycle,
  BasicD4,
  BasicAdjacentTriangles,
  BasicOrientedCycle,
};

std::string_view to_string(PatternKind kind);

struct SubquiverPattern {
  PatternKind kind;
  VertexSet vertices;
  // Cycles only: the vertices in cyclic order starting at the smallest, and
  // following an arrow out of it when the cycle is oriented.
  std::vector<Vertex> cyclic_order;
  std::string detail;

  bool is_cycle() const {
    return kind == PatternKind::OrientedCycle || kind == PatternKind::NonOrientedCycle ||
           kind == PatternKind::BasicOrientedCycle;
  }
};

enum class CertificateClause {
  WeightGE3,
  ThreeVertexNonAdmissible,
  NonSimplyLacedNonOrientedCycle,
  OddAttachment,
  TwoNonOrientedCyclesNoOriented,
};

std::string_view to_string(CertificateClause clause);

// Proof that a quiver has infinite mutation type: a connected subquiver on at
// least three vertices matching the hypotheses of one of five known
// obstructions. witness[0] is always the full vertex set of that subquiver;
// later entries name the parts (the edge, the cycle, the extra vertex, ...).
struct InfiniteCertificate {
  CertificateClause clause;
  std::vector<VertexSet> witness;
  std::string detail;
};

struct V00Dims {
  std::size_t dim_v00 = 0;
  std::size_t dim_v0 = 0;
  std::size_t quotient_dim = 0;

  friend bool operator==(const V00Dims&, const V00Dims&) = default;
};

inline constexpr std::size_t kMaxCycleSearchVertices = 16;

std::vector<SubquiverPattern> double_edges(const Quiver& q);

// All chordless cycles on at least three vertices. Refuses quivers larger
// than kMaxCycleSearchVertices.
std::vector<SubquiverPattern> induced_cycles(const Quiver& q);

std::vector<SubquiverPattern> basic_subquivers(const Quiver& q);
bool has_basic_subquiver(const Quiver& q);

// Re-derives the pattern's kind from the induced subquiver on its vertices.
bool validate_pattern(const Quiver& q, const SubquiverPattern& p);

// Whether the indicator vector of s is radical, decided vertex by vertex: the
// weighted arrows from s into each vertex must balance the weighted arrows
// out of it (over Z), or their total weight must be even (over GF(2)).
bool radical_support_check_z(const Quiver& q, std::span<const Vertex> s);
bool radical_support_check_gf2(const Quiver& q, std::span<const Vertex> s);

// GF(2) radical vectors supported on exactly two vertices or on an induced
// cycle, in candidate order (pairs first, then cycles).
std::vector<GF2Vector> basic_radical_vectors(const Quiver& q);
V00Dims v00(const Quiver& q);

std::optional<InfiniteCertificate> certificate_for_clause(const Quiver& q, CertificateClause clause);
// Scans the clauses in declaration order; the first hit wins.
std::optional<InfiniteCertificate> infinite_certificate(const Quiver& q);

// Shape helpers shared with classification.
bool is_oriented_cycle(const Quiver& q, std::span<const Vertex> cyclic_order);
std::size_t adjacent_count(const Quiver& q, Vertex v, std::span<const Vertex> set);

}  // namespace qmut
