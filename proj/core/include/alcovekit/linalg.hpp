#pragma once

// Small exact linear algebra over Q, used by the exterior-algebra oracle.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace alcovekit::linalg {

using RatRow = std::vector<mpq_class>;
using IntRow = std::vector<mpz_class>;

// Scales every row by the lcm of its denominators.
std::vector<IntRow> clear_denominators(const std::vector<RatRow>& rows);

// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(std::vector<IntRow> rows);
std::size_t rank(const std::vector<RatRow>& rows);

// Basis of {v : M v = 0} for an m x n matrix given by rows.
std::vector<RatRow> nullspace(std::vector<RatRow> rows, std::size_t ncols);

// Inverse of a square matrix; throws std::domain_error when singular.
std::vector<RatRow> inverse(const std::vector<RatRow>& m);

}  // namespace alcovekit::linalg
