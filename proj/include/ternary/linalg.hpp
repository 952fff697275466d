#pragma once

#include <optional>

#include "ternary/numeric.hpp"

/**
 * Exact linear algebra over Q and Z used by the polyhedral engine.
 *
 * Matrices are row-major vectors of rows; the column count is passed
 * explicitly wherever a matrix may have zero rows.
 */
namespace ternary::linalg {

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/** Reduced row echelon form in place; returns the pivot columns. */
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols);

/**
 * Basis of {x : m x = 0} in R^cols. Each basis vector is primitive integer;
 * the basis is the canonical one read off the reduced row echelon form, so
 * it is independent of row order.
 */
IntMatrix kernel_basis(const IntMatrix& m, std::size_t cols);
IntMatrix kernel_basis(const RatMatrix& m, std::size_t cols);

/** Unique solution of a square nonsingular system, or nullopt when singular. */
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

/** Any solution of a x = b, or nullopt if inconsistent. */
std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b, std::size_t cols);

/** Exact determinant of a square integer matrix (fraction-free Bareiss). */
Integer determinant(IntMatrix m);

/**
 * Basis of the saturated lattice Z^cols ∩ span(rows). Returned as rows;
 * computed from the integer kernel of the orthogonal complement via
 * column-style Hermite reduction, so any lattice point of the span is an
 * integer combination of the result.
 */
IntMatrix saturated_lattice_basis(const IntMatrix& rows, std::size_t cols);

/** Integer kernel {x in Z^cols : m x = 0} as a lattice basis (rows). */
IntMatrix integer_kernel(const IntMatrix& m, std::size_t cols);

/** Coordinates of v in the given basis rows (exact); nullopt if v is outside the span. */
std::optional<RatVector> coordinates_in(const IntMatrix& basis, const IntVector& v);

}  // namespace ternary::linalg
