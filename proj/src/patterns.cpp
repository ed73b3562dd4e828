#include "qmut/patterns.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace qmut {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::DoubleEdge: return "DoubleEdge";
    case PatternKind::OrientedCycle: return "OrientedCycle";
    case PatternKind::NonOrientedCycle: return "NonOrientedCycle";
    case PatternKind::BasicD4: return "BasicD4";
    case PatternKind::BasicAdjacentTriangles: return "BasicAdjacentTriangles";
    case PatternKind::BasicOrientedCycle: return "BasicOrientedCycle";
  }
  return "?";
}

std::string_view to_string(CertificateClause clause) {
  switch (clause) {
    case CertificateClause::WeightGE3: return "WeightGE3";
    case CertificateClause::ThreeVertexNonAdmissible: return "ThreeVertexNonAdmissible";
    case CertificateClause::NonSimplyLacedNonOrientedCycle: return "NonSimplyLacedNonOrientedCycle";
    case CertificateClause::OddAttachment: return "OddAttachment";
    case CertificateClause::TwoNonOrientedCyclesNoOriented: return "TwoNonOrientedCyclesNoOriented";
  }
  return "?";
}

namespace {

bool adj(const Quiver& q, Vertex a, Vertex b) { return q(a, b) != 0; }
bool single(const Quiver& q, Vertex a, Vertex b) { return q(a, b) == 1 || q(a, b) == -1; }

std::string weights_along(const Quiver& q, std::span<const Vertex> order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += Int(abs(q(order[i], order[(i + 1) % order.size()]))).str();
  }
  return out;
}

VertexSet sorted_copy(std::span<const Vertex> vs) {
  VertexSet out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  return out;
}

SubquiverPattern make_cycle(const Quiver& q, std::vector<Vertex> order) {
  // Rotate to start at the smallest vertex.
  auto min_it = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), min_it, order.end());
  const bool oriented = is_oriented_cycle(q, order);
  if (oriented) {
    if (q(order[0], order[1]) < 0) std::reverse(order.begin() + 1, order.end());
  } else if (order.back() < order[1]) {
    std::reverse(order.begin() + 1, order.end());
  }
  SubquiverPattern p;
  p.kind = oriented ? PatternKind::OrientedCycle : PatternKind::NonOrientedCycle;
  p.vertices = sorted_copy(order);
  p.detail = "weights " + weights_along(q, order);
  p.cyclic_order = std::move(order);
  return p;
}

// Cyclic order of the induced subquiver on vs if it is a chordless cycle.
std::optional<std::vector<Vertex>> as_cycle(const Quiver& q, std::span<const Vertex> vs) {
  const std::size_t m = vs.size();
  if (m < 3) return std::nullopt;
  for (Vertex v : vs) {
    if (adjacent_count(q, v, vs) != 2) return std::nullopt;
  }
  std::vector<Vertex> order{vs[0]};
  std::vector<bool> used(m, false);
  used[0] = true;
  while (order.size() < m) {
    bool advanced = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!used[i] && adj(q, order.back(), vs[i])) {
        used[i] = true;
        order.push_back(vs[i]);
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;  // disjoint union of cycles
  }
  return order;
}

bool is_oriented_triangle(const Quiver& q, Vertex a, Vertex b, Vertex c) {
  const std::array<Vertex, 3> order{a, b, c};
  return is_oriented_cycle(q, order);
}

bool is_adjacent_triangles(const Quiver& q, std::span<const Vertex> vs) {
  if (vs.size() != 4) return false;
  std::size_t edges = 0;
  std::optional<std::pair<Vertex, Vertex>> missing;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (adj(q, vs[i], vs[j])) {
        if (!single(q, vs[i], vs[j])) return false;
        ++edges;
      } else {
        missing = {vs[i], vs[j]};
      }
    }
  }
  if (edges != 5) return false;
  std::vector<Vertex> diag;
  for (Vertex v : vs) {
    if (v != missing->first && v != missing->second) diag.push_back(v);
  }
  return is_oriented_triangle(q, missing->first, diag[0], diag[1]) &&
         is_oriented_triangle(q, missing->second, diag[0], diag[1]);
}

bool is_d4(const Quiver& q, std::span<const Vertex> vs) {
  if (vs.size() != 4) return false;
  std::size_t centers = 0;
  for (Vertex v : vs) {
    const std::size_t d = adjacent_count(q, v, vs);
    if (d == 3) {
      ++centers;
    } else if (d != 1) {
      return false;
    }
    for (Vertex w : vs) {
      if (adj(q, v, w) && !single(q, v, w)) return false;
    }
  }
  return centers == 1;
}

bool subset_connected(const Quiver& q, std::span<const Vertex> vs) {
  if (vs.empty()) return false;
  std::vector<bool> seen(vs.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (!seen[j] && adj(q, vs[i], vs[j])) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == vs.size();
}

// Vertices of a shortest path (interior only) between two disjoint vertex
// sets, or nullopt if they are in different components.
std::optional<VertexSet> connecting_path(const Quiver& q, const VertexSet& from, const VertexSet& to) {
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue;
  for (Vertex v : from) {
    seen[v] = true;
    queue.push_back(v);
  }
  std::vector<bool> target(n, false);
  for (Vertex v : to) target[v] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (target[v]) {
      VertexSet path;
      for (Vertex w = parent[v]; w != n && parent[w] != n; w = parent[w]) path.push_back(w);
      std::sort(path.begin(), path.end());
      return path;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (!seen[w] && adj(q, v, w)) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool is_oriented_cycle(const Quiver& q, std::span<const Vertex> order) {
  const std::size_t m = order.size();
  if (m < 3) return false;
  int direction = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int s = q(order[i], order[(i + 1) % m]).sign();
    if (s == 0) return false;
    if (direction == 0) direction = s;
    if (s != direction) return false;
  }
  return true;
}

std::size_t adjacent_count(const Quiver& q, Vertex v, std::span<const Vertex> set) {
  std::size_t c = 0;
  for (Vertex w : set) {
    if (w != v && adj(q, v, w)) ++c;
  }
  return c;
}

std::vector<SubquiverPattern> double_edges(const Quiver& q) {
  std::vector<SubquiverPattern> out;
  for (Vertex i = 0; i < q.size(); ++i) {
    for (Vertex j = i + 1; j < q.size(); ++j) {
      if (q(i, j) == 2 || q(i, j) == -2) {
        const bool forward = q(i, j) > 0;
        out.push_back({PatternKind::DoubleEdge, {i, j}, {},
                       std::to_string(forward ? i + 1 : j + 1) + "->" +
                           std::to_string(forward ? j + 1 : i + 1)});
      }
    }
  }
  return out;
}

std::vector<SubquiverPattern> induced_cycles(const Quiver& q) {
  const std::size_t n = q.size();
  if (n > kMaxCycleSearchVertices) {
    throw Error(ErrorCode::TooLarge, "induced cycle search is limited to " +
                                         std::to_string(kMaxCycleSearchVertices) + " vertices");
  }
  std::vector<SubquiverPattern> out;
  std::vector<Vertex> path;
  std::vector<bool> in_path(n, false);
  // Paths start at their smallest vertex s; each new vertex may touch only
  // the current end (and s, which closes the cycle).
  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex last = path.back();
    for (Vertex w = s + 1; w < n; ++w) {
      if (in_path[w] || !adj(q, last, w)) continue;
      bool chord = false;
      for (std::size_t idx = 1; idx + 1 < path.size() && !chord; ++idx) chord = adj(q, w, path[idx]);
      if (chord) continue;
      if (path.size() >= 2 && adj(q, w, s)) {
        if (path[1] < w) {
          auto order = path;
          order.push_back(w);
          out.push_back(make_cycle(q, std::move(order)));
        }
        continue;
      }
      path.push_back(w);
      in_path[w] = true;
      extend(s);
      in_path[w] = false;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    in_path[s] = true;
    extend(s);
    in_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.vertices.size(), a.vertices) < std::pair(b.vertices.size(), b.vertices);
  });
  return out;
}

std::vector<SubquiverPattern> basic_subquivers(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<SubquiverPattern> out;
  // D4: a center with three pairwise non-adjacent leaves, single edges.
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < n; ++v) {
      if (v != c && single(q, c, v)) nb.push_back(v);
    }
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (adj(q, nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d) {
          if (adj(q, nb[a], nb[d]) || adj(q, nb[b], nb[d])) continue;
          out.push_back({PatternKind::BasicD4, sorted_copy(std::array{c, nb[a], nb[b], nb[d]}), {},
                         "center " + std::to_string(c + 1)});
        }
      }
    }
  }
  // Two oriented triangles sharing the edge {u, v}.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!single(q, u, v)) continue;
      std::vector<Vertex> common;
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && w != v && single(q, u, w) && single(q, v, w)) common.push_back(w);
      }
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          const std::array vs{u, v, common[a], common[b]};
          if (is_adjacent_triangles(q, vs)) {
            out.push_back({PatternKind::BasicAdjacentTriangles, sorted_copy(vs), {},
                           "shared edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1)});
          }
        }
      }
    }
  }
  for (auto& c : induced_cycles(q)) {
    if (c.kind == PatternKind::OrientedCycle && c.vertices.size() >= 4) {
      bool simply = true;
      for (std::size_t i = 0; i < c.cyclic_order.size(); ++i) {
        simply = simply && single(q, c.cyclic_order[i], c.cyclic_order[(i + 1) % c.cyclic_order.size()]);
      }
      if (simply) {
        c.kind = PatternKind::BasicOrientedCycle;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

bool has_basic_subquiver(const Quiver& q) { return !basic_subquivers(q).empty(); }

bool validate_pattern(const Quiver& q, const SubquiverPattern& p) {
  const auto sub = induced_subquiver(q, p.vertices);
  const Quiver& s = sub.quiver;
  std::vector<Vertex> all(s.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  switch (p.kind) {
    case PatternKind::DoubleEdge:
      return s.size() == 2 && (s(0, 1) == 2 || s(0, 1) == -2);
    case PatternKind::BasicD4:
      return is_d4(s, all);
    case PatternKind::BasicAdjacentTriangles:
      return is_adjacent_triangles(s, all);
    case PatternKind::OrientedCycle:
    case PatternKind::NonOrientedCycle:
    case PatternKind::BasicOrientedCycle: {
      auto order = as_cycle(s, all);
      if (!order) return false;
      const bool oriented = is_oriented_cycle(s, *order);
      if (p.kind == PatternKind::NonOrientedCycle) return !oriented;
      if (p.kind == PatternKind::OrientedCycle) return oriented;
      return oriented && s.size() >= 4 && is_simply_laced(s);
    }
  }
  return false;
}

bool radical_support_check_z(const Quiver& q, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorCode::EmptyVertexSet, "support set must be nonempty");
  const VertexSet set = make_vertex_set(q.size(), s);
  for (Vertex j = 0; j < q.size(); ++j) {
    Int entering = 0;
    Int leaving = 0;
    for (Vertex v : set) {
      const Int& w = q(v, j);
      if (w > 0) {
        entering += w;
      } else if (w < 0) {
        leaving -= w;
      }
    }
    if (entering != leaving) return false;
  }
  return true;
}

bool radical_support_check_gf2(const Quiver& q, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorCode::EmptyVertexSet, "support set must be nonempty");
  const VertexSet set = make_vertex_set(q.size(), s);
  for (Vertex j = 0; j < q.size(); ++j) {
    Int total = 0;
    for (Vertex v : set) total += abs(q(v, j));
    if (boost::multiprecision::bit_test(total, 0)) return false;
  }
  return true;
}

std::vector<GF2Vector> basic_radical_vectors(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<GF2Vector> out;
  if (n <= 2) return out;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const std::array pair{i, j};
      if (radical_support_check_gf2(q, pair)) out.push_back(GF2Vector::indicator(n, pair));
    }
  }
  for (const auto& c : induced_cycles(q)) {
    if (radical_support_check_gf2(q, c.vertices)) out.push_back(GF2Vector::indicator(n, c.vertices));
  }
  return out;
}

V00Dims v00(const Quiver& q) {
  V00Dims d;
  const auto basic = basic_radical_vectors(q);
  d.dim_v00 = gf2_span_dim(basic);
  d.dim_v0 = radical_basis_gf2(q).corank2;
  d.quotient_dim = d.dim_v0 - d.dim_v00;
  return d;
}

std::optional<InfiniteCertificate> certificate_for_clause(const Quiver& q, CertificateClause clause) {
  const std::size_t n = q.size();
  if (n < 3) return std::nullopt;
  switch (clause) {
    case CertificateClause::WeightGE3: {
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
          if (abs(q(i, j)) < 3) continue;
          for (Vertex k = 0; k < n; ++k) {
            if (k != i && k != j && (adj(q, k, i) || adj(q, k, j))) {
              return InfiniteCertificate{clause, {sorted_copy(std::array{i, j, k}), {i, j}},
                                         "edge of weight " + Int(abs(q(i, j))).str()};
            }
          }
        }
      }
      return std::nullopt;
    }
    case CertificateClause::ThreeVertexNonAdmissible: {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          for (Vertex c = b + 1; c < n; ++c) {
            const std::array vs{a, b, c};
            if (!subset_connected(q, vs)) continue;
            std::optional<VertexSet> dbl;
            std::vector<Int> weights;
            for (std::size_t x = 0; x < 3; ++x) {
              for (std::size_t y = x + 1; y < 3; ++y) {
                const Int w = abs(q(vs[x], vs[y]));
                if (w == 2 && !dbl) dbl = VertexSet{vs[x], vs[y]};
                weights.push_back(w);
              }
            }
            if (!dbl) continue;
            std::sort(weights.begin(), weights.end());
            const bool admissible =
                is_oriented_triangle(q, a, b, c) &&
                (weights == std::vector<Int>{1, 1, 2} || weights == std::vector<Int>{2, 2, 2});
            if (!admissible) {
              return InfiniteCertificate{clause, {VertexSet{a, b, c}, *dbl},
                                         "three vertices with a double edge, weights " +
                                             weights[0].str() + "," + weights[1].str() + "," +
                                             weights[2].str()};
            }
          }
        }
      }
      return std::nullopt;
    }
    case CertificateClause::NonSimplyLacedNonOrientedCycle: {
      for (const auto& c : induced_cycles(q)) {
        if (c.kind != PatternKind::NonOrientedCycle) continue;
        if (!is_simply_laced(induced_subquiver(q, c.vertices).quiver)) {
          return InfiniteCertificate{clause, {c.vertices}, "non-oriented cycle with " + c.detail};
        }
      }
      return std::nullopt;
    }
    case CertificateClause::OddAttachment: {
      for (const auto& c : induced_cycles(q)) {
        if (!is_simply_laced(induced_subquiver(q, c.vertices).quiver)) continue;
        const bool oriented = c.kind == PatternKind::OrientedCycle;
        for (Vertex k = 0; k < n; ++k) {
          if (std::binary_search(c.vertices.begin(), c.vertices.end(), k)) continue;
          bool simply = true;
          for (Vertex v : c.vertices) simply = simply && (!adj(q, k, v) || single(q, k, v));
          if (!simply) continue;
          const std::size_t hits = adjacent_count(q, k, c.vertices);
          if (hits % 2 == 1 && (!oriented || hits >= 3)) {
            VertexSet all = c.vertices;
            all.insert(std::lower_bound(all.begin(), all.end(), k), k);
            return InfiniteCertificate{
                clause, {all, c.vertices, {k}},
                std::string(oriented ? "oriented" : "non-oriented") + " cycle with vertex " +
                    std::to_string(k + 1) + " adjacent to " + std::to_string(hits) + " of its vertices"};
          }
        }
      }
      return std::nullopt;
    }
    case CertificateClause::TwoNonOrientedCyclesNoOriented: {
      std::vector<SubquiverPattern> non_oriented;
      for (auto& c : induced_cycles(q)) {
        if (c.kind == PatternKind::NonOrientedCycle) non_oriented.push_back(std::move(c));
      }
      for (std::size_t a = 0; a < non_oriented.size(); ++a) {
        for (std::size_t b = a + 1; b < non_oriented.size(); ++b) {
          VertexSet w = set_union(non_oriented[a].vertices, non_oriented[b].vertices);
          if (!subset_connected(q, w)) {
            VertexSet rest;
            std::set_difference(non_oriented[b].vertices.begin(), non_oriented[b].vertices.end(),
                                non_oriented[a].vertices.begin(), non_oriented[a].vertices.end(),
                                std::back_inserter(rest));
            auto path = connecting_path(q, non_oriented[a].vertices, rest);
            if (!path) continue;
            w = set_union(w, *path);
          }
          const auto sub = induced_subquiver(q, w);
          if (!is_connected(sub.quiver)) continue;
          const auto cycles = induced_cycles(sub.quiver);
          const bool has_oriented = std::any_of(cycles.begin(), cycles.end(), [](const auto& c) {
            return c.kind == PatternKind::OrientedCycle;
          });
          if (!has_oriented) {
            return InfiniteCertificate{clause, {w, non_oriented[a].vertices, non_oriented[b].vertices},
                                       "subquiver with two non-oriented cycles and no oriented cycle"};
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<InfiniteCertificate> infinite_certificate(const Quiver& q) {
  for (auto clause : {CertificateClause::WeightGE3, CertificateClause::ThreeVertexNonAdmissible,
                      CertificateClause::NonSimplyLacedNonOrientedCycle, CertificateClause::OddAttachment,
                      CertificateClause::TwoNonOrientedCyclesNoOriented}) {
    if (auto c = certificate_for_clause(q, clause)) return c;
  }
  return std::nullopt;
}

}  // namespace qmut
