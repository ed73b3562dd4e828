#include "qmut/quiver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qmut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConflictingEdge: return "conflicting_edge";
    case ErrorCode::LoopForbidden: return "loop_forbidden";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::EmptyVertexSet: return "empty_vertex_set";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::CapsExceeded: return "caps_exceeded";
    case ErrorCode::HypothesisViolation: return "hypothesis_violation";
    case ErrorCode::NotFiniteType: return "not_finite_type";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::Internal: return "internal_error";
  }
  return "unknown";
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " out of range for " +
                    std::to_string(n) + " vertices");
  }
}

int sign(const Int& x) { return x.sign(); }

}  // namespace

Quiver Quiver::from_arrows(std::size_t n, std::span<const Arrow> arrows) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "quiver needs at least one vertex");
  std::vector<Int> b(n * n);
  for (const auto& a : arrows) {
    check_vertex(n, a.from);
    check_vertex(n, a.to);
    if (a.from == a.to) {
      throw Error(ErrorCode::LoopForbidden,
                  "loop forbidden at vertex " + std::to_string(a.from + 1));
    }
    if (a.weight <= 0) {
      throw Error(ErrorCode::InvalidArgument, "arrow weight must be positive");
    }
    if (b[a.from * n + a.to] != 0) {
      throw Error(ErrorCode::ConflictingEdge,
                  "conflicting edge between " + std::to_string(a.from + 1) + " and " +
                      std::to_string(a.to + 1));
    }
    b[a.from * n + a.to] = a.weight;
    b[a.to * n + a.from] = -a.weight;
  }
  return Quiver(n, std::move(b));
}

Quiver Quiver::from_matrix(std::size_t n, std::vector<Int> entries) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "quiver needs at least one vertex");
  if (entries.size() != n * n) {
    throw Error(ErrorCode::LengthMismatch, "matrix must have n*n entries");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i * n + i] != 0) {
      throw Error(ErrorCode::LoopForbidden, "nonzero diagonal entry");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[i * n + j] != -entries[j * n + i]) {
        throw Error(ErrorCode::InvalidArgument, "matrix is not skew-symmetric");
      }
    }
  }
  return Quiver(n, std::move(entries));
}

const Int& Quiver::at(Vertex i, Vertex j) const {
  check_vertex(n_, i);
  check_vertex(n_, j);
  return (*this)(i, j);
}

Quiver Quiver::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(ErrorCode::LengthMismatch, "labels must have one entry per vertex");
  }
  Quiver q = *this;
  q.labels_ = std::move(labels);
  return q;
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = 0; j < n_; ++j) {
      if ((*this)(i, j) > 0) out.push_back({i, j, (*this)(i, j)});
    }
  }
  return out;
}

bool IntVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Int& x) { return x == 0; });
}

GF2Vector GF2Vector::indicator(std::size_t n, std::span<const Vertex> vertices) {
  GF2Vector v(n);
  for (Vertex x : vertices) {
    check_vertex(n, x);
    v.set(x);
  }
  return v;
}

GF2Vector GF2Vector::from_bits(std::initializer_list<int> bits) {
  GF2Vector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, (b & 1) != 0);
  return v;
}

void GF2Vector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

bool GF2Vector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t GF2Vector::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t GF2Vector::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return n_;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& other) {
  if (other.n_ != n_) throw Error(ErrorCode::LengthMismatch, "GF(2) vector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool GF2Vector::dot(const GF2Vector& other) const {
  if (other.n_ != n_) throw Error(ErrorCode::LengthMismatch, "GF(2) vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

std::string GF2Vector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Quiver mutate(const Quiver& q, Vertex k) {
  const std::size_t n = q.size();
  check_vertex(n, k);
  std::vector<Int> b = q.entries();
  for (Vertex i = 0; i < n; ++i) {
    if (i == k) continue;
    const Int& bik = q(i, k);
    const int s = sign(bik);
    if (s == 0) continue;
    for (Vertex j = 0; j < n; ++j) {
      if (j == k || j == i) continue;
      const Int& bkj = q(k, j);
      // sgn(b_ik) [b_ik b_kj]_+ is nonzero only when b_ik and b_kj share a sign.
      if (sign(bkj) == s) b[i * n + j] += s * (bik * bkj);
    }
  }
  for (Vertex j = 0; j < n; ++j) {
    b[k * n + j] = -q(k, j);
    b[j * n + k] = -q(j, k);
  }
  return Quiver::from_matrix(n, std::move(b)).with_labels(q.labels());
}

Quiver mutate_sequence(Quiver q, std::span<const Vertex> ks) {
  for (Vertex k : ks) q = mutate(q, k);
  return q;
}

IntVector pushforward_vector(const Quiver& q, Vertex k, const IntVector& u) {
  const std::size_t n = q.size();
  check_vertex(n, k);
  if (u.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "vector length does not match quiver");
  }
  IntVector out = u;
  Int coord = -u[k];
  for (Vertex j = 0; j < n; ++j) {
    if (q(k, j) < 0) coord += -q(k, j) * u[j];
  }
  out[k] = coord;
  return out;
}

VertexSet make_vertex_set(std::size_t n, std::span<const Vertex> vs) {
  VertexSet out(vs.begin(), vs.end());
  for (Vertex v : out) check_vertex(n, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InducedSubquiver induced_subquiver(const Quiver& q, std::span<const Vertex> vs) {
  if (vs.empty()) throw Error(ErrorCode::EmptyVertexSet, "induced subquiver of empty vertex set");
  VertexSet set = make_vertex_set(q.size(), vs);
  const std::size_t m = set.size();
  std::vector<Int> b(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) b[a * m + c] = q(set[a], set[c]);
  }
  Quiver sub = Quiver::from_matrix(m, std::move(b));
  if (!q.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (Vertex v : set) labels.push_back(q.labels()[v]);
    sub = sub.with_labels(std::move(labels));
  }
  return {std::move(sub), std::move(set)};
}

Quiver permute(const Quiver& q, std::span<const Vertex> perm) {
  const std::size_t n = q.size();
  if (perm.size() != n) throw Error(ErrorCode::LengthMismatch, "permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    check_vertex(n, v);
    if (seen[v]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[v] = true;
  }
  std::vector<Int> b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = q(perm[i], perm[j]);
  }
  Quiver out = Quiver::from_matrix(n, std::move(b));
  if (!q.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : perm) labels.push_back(q.labels()[v]);
    out = out.with_labels(std::move(labels));
  }
  return out;
}

VertexSet support(const IntVector& u) {
  VertexSet out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) out.push_back(i);
  }
  return out;
}

VertexSet support(const GF2Vector& u) {
  VertexSet out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.get(i)) out.push_back(i);
  }
  return out;
}

bool is_simply_laced(const Quiver& q) {
  return std::all_of(q.entries().begin(), q.entries().end(),
                     [](const Int& x) { return x == 0 || x == 1 || x == -1; });
}

Int max_weight(const Quiver& q) {
  Int best = 0;
  for (const Int& x : q.entries()) {
    if (x > best) best = x;
  }
  return best;
}

std::vector<VertexSet> components(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    VertexSet members{s};
    comp[s] = out.size();
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex v = members[head];
      for (Vertex w = 0; w < n; ++w) {
        if (comp[w] == n && q(v, w) != 0) {
          comp[w] = out.size();
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Quiver& q) { return components(q).size() == 1; }

IntVector multiply(const Quiver& q, const IntVector& u) {
  const std::size_t n = q.size();
  if (u.size() != n) throw Error(ErrorCode::LengthMismatch, "vector length does not match quiver");
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (q(i, j) != 0 && u[j] != 0) acc += q(i, j) * u[j];
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace qmut
