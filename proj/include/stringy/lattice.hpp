#pragma once

#include <optional>
#include <vector>

#include "stringy/common.hpp"

namespace stringy {

/// Canonical pairing <m, n> = sum m_i n_i.  Throws DimensionError on
/// mismatched lengths.
Int pair(const Vec& m, const Vec& n);

bool is_zero_vector(const Vec& v);

/// Divide by the gcd of the entries; the zero vector is returned unchanged.
Vec make_primitive(Vec v);

/// Rank of the row span, computed exactly over the rationals.
int rank_of_rows(const std::vector<Vec>& rows, int ncols);

/// The unique integral linear form n with <ray, n> = 1 for every ray, if one
/// exists.  Absent when the linear system is inconsistent, underdetermined,
/// or has a non-integral solution.
std::optional<Vec> solve_degree_form(int rank, const std::vector<Vec>& rays);

/// Lattice basis of { x in Z^ncols : <row, x> = 0 for every row }.
/// The result spans the kernel exactly (it is a saturated sublattice).
std::vector<Vec> integer_kernel(int ncols, const std::vector<Vec>& rows);

/// Lattice basis of span_R(rows) ∩ Z^ncols (the saturation of the row span).
std::vector<Vec> saturated_span_basis(int ncols, const std::vector<Vec>& rows);

/// Coordinates c with x = sum c_i basis_i, when x lies in the lattice spanned
/// by the basis rows; absent otherwise.
std::optional<Vec> integral_coordinates(const Vec& x, const std::vector<Vec>& basis);

}  // namespace stringy
