#include "qmut/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace qmut {

namespace {

// The matrix with entries replaced by their rank among the distinct values.
// The value table travels with the serialization, so ranks lose nothing.
struct CodedMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> code;
  std::string table;
  std::uint32_t zero = 0;

  std::uint32_t at(Vertex i, Vertex j) const { return code[i * n + j]; }
};

CodedMatrix encode(const Quiver& q) {
  CodedMatrix m;
  m.n = q.size();
  std::vector<Int> values(q.entries().begin(), q.entries().end());
  values.push_back(0);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  m.code.reserve(q.entries().size());
  for (const auto& e : q.entries()) {
    auto it = std::lower_bound(values.begin(), values.end(), e);
    m.code.push_back(static_cast<std::uint32_t>(it - values.begin()));
  }
  m.zero = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), Int(0)) -
                                      values.begin());
  m.table = "n=" + std::to_string(m.n) + ";v=";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) m.table += ',';
    m.table += values[i].str();
  }
  m.table += ';';
  return m;
}

std::string serialize(const CodedMatrix& m, std::span<const Vertex> order) {
  std::string out = m.table;
  out.reserve(out.size() + 4 * m.n * m.n);
  for (auto a : order) {
    for (auto b : order) {
      const std::uint32_t c = m.at(a, b);
      // Fixed width keeps the byte order equal to the order on code tuples.
      for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((c >> shift) & 0xFF));
    }
  }
  return out;
}

using Colouring = std::vector<std::uint32_t>;

std::size_t colour_count(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Splits colour classes until every vertex of a class sees the same multiset
// of (neighbour colour, entry) pairs. Colours stay ordered by old colour first,
// so the result depends only on the isomorphism class of (quiver, colouring).
Colouring refine(const CodedMatrix& m, Colouring colours) {
  const std::size_t n = m.n;
  std::size_t count = colour_count(colours);
  std::vector<std::vector<std::uint64_t>> sig(n);
  std::vector<Vertex> idx(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colours[v]);
      for (Vertex w = 0; w < n; ++w) {
        if (w == v || m.at(v, w) == m.zero) continue;
        s.push_back((std::uint64_t{colours[w]} << 32) | m.at(v, w));
      }
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    Colouring next(n);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++c;
      next[idx[i]] = c;
    }
    const std::size_t next_count = n == 0 ? 0 : c + 1;
    colours = std::move(next);
    if (next_count == count) return colours;
    count = next_count;
  }
}

// Gives v a colour of its own just below the rest of its class.
Colouring individualize(const Colouring& colours, Vertex v) {
  Colouring out(colours.size());
  for (Vertex u = 0; u < colours.size(); ++u) {
    out[u] = 2 * colours[u] + ((colours[u] == colours[v] && u != v) ? 1 : 0);
  }
  std::vector<std::uint32_t> used(out.begin(), out.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& c : out) c = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  return out;
}

// Swapping twins is an automorphism: they have no arrow between them and
// identical entries towards every other vertex.
bool twins(const CodedMatrix& m, Vertex a, Vertex b) {
  if (m.at(a, b) != m.zero) return false;
  for (Vertex k = 0; k < m.n; ++k) {
    if (k != a && k != b && m.at(a, k) != m.at(b, k)) return false;
  }
  return true;
}

struct Search {
  const CodedMatrix& m;
  std::string best;
  std::vector<Vertex> best_order;
  bool found = false;

  void run(Colouring colours) {
    colours = refine(m, std::move(colours));
    const std::size_t n = m.n;
    if (colour_count(colours) == n) {
      std::vector<Vertex> order(n);
      for (Vertex v = 0; v < n; ++v) order[colours[v]] = v;
      std::string s = serialize(m, order);
      if (!found || s < best) {
        best = std::move(s);
        best_order = std::move(order);
        found = true;
      }
      return;
    }
    std::vector<std::size_t> sizes(colour_count(colours), 0);
    for (auto c : colours) ++sizes[c];
    std::uint32_t target = 0;
    while (sizes[target] < 2) ++target;
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v) {
      if (colours[v] == target) cell.push_back(v);
    }
    bool all_twins = true;
    for (std::size_t i = 1; i < cell.size() && all_twins; ++i) all_twins = twins(m, cell[0], cell[i]);
    if (all_twins) {
      run(individualize(colours, cell[0]));
      return;
    }
    for (auto v : cell) run(individualize(colours, v));
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Quiver& q, const CanonicalOptions& opts) {
  if (q.size() > opts.max_vertices && !opts.refinement_mode) {
    throw Error(ErrorCode::TooLarge, "canonical form is limited to " + std::to_string(opts.max_vertices) +
                                         " vertices; enable refinement mode for larger quivers");
  }
  const CodedMatrix m = encode(q);
  Search search{m, {}, {}, false};
  search.run(Colouring(q.size(), 0));
  return {CanonicalForm{std::move(search.best)}, std::move(search.best_order)};
}

CanonicalForm canonical_form(const Quiver& q, const CanonicalOptions& opts) {
  return canonical_labeling(q, opts).form;
}

Quiver canonical_quiver(const Quiver& q, const CanonicalOptions& opts) {
  const auto labeling = canonical_labeling(q, opts);
  return permute(Quiver::from_matrix(q.size(), q.entries()), labeling.order);
}

CanonicalForm labeled_form(const Quiver& q) {
  std::vector<Vertex> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  return CanonicalForm{serialize(encode(q), order)};
}

}  // namespace qmut
