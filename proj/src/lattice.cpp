#include "stringy/lattice.hpp"

#include <algorithm>

namespace stringy {

Int pair(const Vec& m, const Vec& n) {
  if (m.size() != n.size())
    throw DimensionError("pair: length mismatch (" + std::to_string(m.size()) +
                         " vs " + std::to_string(n.size()) + ")");
  Int s = 0;
  for (size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
  return s;
}

bool is_zero_vector(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Vec make_primitive(Vec v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

namespace {

using RatMat = std::vector<std::vector<Rat>>;

// In-place Gauss-Jordan; returns pivot columns.  Eliminates over the first
// `ncols` columns only (extra columns ride along as right-hand sides).
std::vector<int> gauss_jordan(RatMat& m, int ncols) {
  std::vector<int> pivots;
  size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_of_rows(const std::vector<Vec>& rows, int ncols) {
  RatMat m;
  m.reserve(rows.size());
  for (const Vec& r : rows) {
    if ((int)r.size() != ncols) throw DimensionError("rank_of_rows: bad row length");
    m.emplace_back(r.begin(), r.end());
  }
  return (int)gauss_jordan(m, ncols).size();
}

std::optional<Vec> solve_degree_form(int rank, const std::vector<Vec>& rays) {
  if (rays.empty()) return std::nullopt;
  RatMat m;
  m.reserve(rays.size());
  for (const Vec& r : rays) {
    if ((int)r.size() != (size_t)rank)
      throw DimensionError("solve_degree_form: bad ray length");
    std::vector<Rat> row(r.begin(), r.end());
    row.emplace_back(1);  // <ray, n> = 1
    m.push_back(std::move(row));
  }
  std::vector<int> pivots = gauss_jordan(m, rank);
  if ((int)pivots.size() < rank) return std::nullopt;  // underdetermined
  // Consistency: rows beyond the pivots must have zero right-hand side.
  for (size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][rank] != 0) return std::nullopt;
  Vec n(rank, 0);
  for (size_t i = 0; i < pivots.size(); ++i) {
    const Rat& val = m[i][rank];
    if (boost::multiprecision::denominator(val) != 1) return std::nullopt;
    n[pivots[i]] = boost::multiprecision::numerator(val);
  }
  return n;
}

std::vector<Vec> integer_kernel(int ncols, const std::vector<Vec>& rows) {
  // Column-style elimination with a unimodular transform: keep columns of the
  // transform in `basis`, and the transformed matrix columns in `cols`.
  std::vector<Vec> basis(ncols), cols(ncols);
  for (int j = 0; j < ncols; ++j) {
    basis[j].assign(ncols, 0);
    basis[j][j] = 1;
    cols[j].reserve(rows.size());
    for (const Vec& r : rows) {
      if ((int)r.size() != ncols) throw DimensionError("integer_kernel: bad row length");
      cols[j].push_back(r[j]);
    }
  }
  std::vector<bool> active(ncols, true);
  for (size_t r = 0; r < rows.size(); ++r) {
    // Reduce the active columns until at most one has a nonzero entry in row r.
    for (;;) {
      int best = -1;
      for (int j = 0; j < ncols; ++j) {
        if (!active[j] || cols[j][r] == 0) continue;
        if (best < 0 || boost::multiprecision::abs(cols[j][r]) <
                            boost::multiprecision::abs(cols[best][r]))
          best = j;
      }
      if (best < 0) break;
      bool others = false;
      for (int j = 0; j < ncols; ++j) {
        if (j == best || !active[j] || cols[j][r] == 0) continue;
        others = true;
        // |cols[j][r]| >= |cols[best][r]|, so q != 0 and the truncated
        // division leaves |remainder| < |cols[best][r]|.
        Int q = cols[j][r] / cols[best][r];
        for (size_t i = 0; i < cols[j].size(); ++i) cols[j][i] -= q * cols[best][i];
        for (int i = 0; i < ncols; ++i) basis[j][i] -= q * basis[best][i];
      }
      if (!others) {
        active[best] = false;  // pivot column for this row
        break;
      }
    }
  }
  std::vector<Vec> kernel;
  for (int j = 0; j < ncols; ++j)
    if (active[j]) kernel.push_back(basis[j]);
  return kernel;
}

std::vector<Vec> saturated_span_basis(int ncols, const std::vector<Vec>& rows) {
  return integer_kernel(ncols, integer_kernel(ncols, rows));
}

std::optional<Vec> integral_coordinates(const Vec& x, const std::vector<Vec>& basis) {
  if (basis.empty()) return is_zero_vector(x) ? std::optional<Vec>(Vec{}) : std::nullopt;
  const int ncols = (int)basis[0].size();
  if ((int)x.size() != ncols) throw DimensionError("integral_coordinates: bad length");
  // Solve c * basis = x, i.e. basis^T c = x, by Gauss-Jordan on the transpose.
  RatMat m(ncols);
  for (int i = 0; i < ncols; ++i) {
    m[i].reserve(basis.size() + 1);
    for (const Vec& b : basis) m[i].emplace_back(b[i]);
    m[i].emplace_back(x[i]);
  }
  const int k = (int)basis.size();
  std::vector<int> pivots = gauss_jordan(m, k);
  for (size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][k] != 0) return std::nullopt;
  Vec c(k, 0);
  for (size_t i = 0; i < pivots.size(); ++i) {
    const Rat& val = m[i][k];
    if (boost::multiprecision::denominator(val) != 1) return std::nullopt;
    c[pivots[i]] = boost::multiprecision::numerator(val);
  }
  if ((int)pivots.size() < k) {
    // Basis rows dependent; callers always pass independent rows.
    throw IntegrityError("integral_coordinates: dependent basis");
  }
  return c;
}

}  // namespace stringy
