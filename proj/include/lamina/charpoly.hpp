#pragma once

#include "lamina/core.hpp"

#include <vector>

namespace lamina::exact {

/// Dense nonnegative integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Int>>;

/// True iff the spectral radius of the nonnegative matrix B is strictly
/// below s. Decided exactly: s exceeds every real eigenvalue of B iff all
/// leading principal minors of (s*I - B) are positive, and those minors are
/// the characteristic polynomials of the leading principal submatrices
/// evaluated at s. Computed with fraction-free elimination.
bool spectral_radius_below(const IntMatrix& B, const Rat& s);

/// Largest real root of the characteristic polynomial of an irreducible
/// nonnegative integer matrix (its Perron root), bracketed to +-tol by
/// exact-arithmetic bisection. `hint`, when finite, is verified first so a
/// good estimate costs two sign tests.
double perron_root(const IntMatrix& B, double tol, double hint);

} // namespace lamina::exact
