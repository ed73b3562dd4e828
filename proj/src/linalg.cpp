#include "qmut/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qmut {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_lengths(std::span<const GF2Vector> vs, std::size_t n) {
  for (const auto& v : vs) {
    if (v.size() != n) throw Error(ErrorCode::LengthMismatch, "GF(2) vectors of different lengths");
  }
}

// Row echelon basis: each stored row has a distinct lowest set bit (pivot).
// Returns false if v reduced to zero (i.e. was already in the span).
bool insert_reduced(std::vector<GF2Vector>& basis, GF2Vector v) {
  for (const auto& row : basis) {
    if (v.get(row.lowest())) v ^= row;
  }
  if (!v.any()) return false;
  // Keep the invariant that no basis row has the new pivot set.
  const std::size_t pivot = v.lowest();
  for (auto& row : basis) {
    if (row.get(pivot)) row ^= v;
  }
  basis.push_back(std::move(v));
  return true;
}

}  // namespace

std::size_t bareiss_rank(std::size_t rows, std::size_t cols, std::vector<Int> m) {
  if (m.size() != rows * cols) throw Error(ErrorCode::LengthMismatch, "matrix size mismatch");
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return m[r * cols + c]; };
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Exact division: Sylvester's identity guarantees divisibility by prev.
        at(r, c) = (at(rank, col) * at(r, c) - at(r, col) * at(rank, c)) / prev;
      }
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

std::size_t rank_z(const Quiver& q) { return bareiss_rank(q.size(), q.size(), q.entries()); }

RadicalBasisZ radical_basis_z(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n * n; ++i) m[i] = Rational(q.entries()[i]);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return m[r * n + c]; };

  // Reduced row echelon form with leftmost pivots.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && at(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(row, c));
    }
    const Rational inv = 1 / at(row, col);
    for (std::size_t c = col; c < n; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = col; c < n; ++c) at(r, c) -= f * at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  RadicalBasisZ out;
  out.corank = n - pivot_cols.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = -at(r, free);
    // Clear denominators, then divide out the content.
    Int lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
    IntVector u(n);
    Int content = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = boost::multiprecision::numerator(x[i]) * (lcm / boost::multiprecision::denominator(x[i]));
      content = boost::multiprecision::gcd(content, u[i]);
    }
    int lead_sign = 0;
    for (std::size_t i = 0; i < n && lead_sign == 0; ++i) lead_sign = u[i].sign();
    if (lead_sign < 0) content = -content;
    for (std::size_t i = 0; i < n; ++i) u[i] /= content;
    out.vectors.push_back(std::move(u));
  }
  return out;
}

GF2Vector GF2Matrix::multiply(const GF2Vector& v) const {
  if (v.size() != n) throw Error(ErrorCode::LengthMismatch, "vector length does not match matrix");
  GF2Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, rows[i].dot(v));
  return out;
}

GF2Matrix reduce_mod2(const Quiver& q) {
  GF2Matrix m{q.size(), {}};
  m.rows.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    GF2Vector row(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (boost::multiprecision::bit_test(abs(q(i, j)), 0)) row.set(j);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

RadicalBasisGF2 kernel_gf2(const GF2Matrix& m) {
  const std::size_t n = m.n;
  // Fully reduced echelon form, keeping track of pivot columns per row.
  std::vector<GF2Vector> rows = m.rows;
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other != r && rows[other].get(col)) rows[other] ^= rows[r];
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  RadicalBasisGF2 out;
  out.corank2 = n - pivot_of_row.size();
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    GF2Vector v(n);
    v.set(free);
    for (std::size_t row = 0; row < pivot_of_row.size(); ++row) {
      if (rows[row].get(free)) v.set(pivot_of_row[row]);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

RadicalBasisGF2 radical_basis_gf2(const Quiver& q) { return kernel_gf2(reduce_mod2(q)); }

std::size_t rank_gf2(const Quiver& q) { return q.size() - radical_basis_gf2(q).corank2; }

std::size_t gf2_span_dim(std::span<const GF2Vector> vs) {
  if (vs.empty()) return 0;
  check_lengths(vs, vs.front().size());
  std::vector<GF2Vector> basis;
  for (const auto& v : vs) insert_reduced(basis, v);
  return basis.size();
}

bool gf2_member(const GF2Vector& v, std::span<const GF2Vector> vs) {
  check_lengths(vs, v.size());
  std::vector<GF2Vector> basis;
  for (const auto& w : vs) insert_reduced(basis, w);
  return !insert_reduced(basis, v);
}

}  // namespace qmut
