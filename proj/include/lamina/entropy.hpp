#pragma once

#include "lamina/charpoly.hpp"
#include "lamina/leaf.hpp"

#include <vector>

namespace lamina {

/// Basis of unordered pairs from the doubling orbit of theta together with
/// its preferred half preimage. Pairs are ordered lexicographically by
/// (smaller angle, larger angle); the two division points cut the circle
/// into the closed half circles used by the transition rule.
struct PairBasis {
    Angle theta;
    std::vector<Angle> points; // orbit of theta plus 2^{-1} theta, sorted
    std::vector<Leaf> pairs;   // all unordered pairs of distinct points
    Angle division_lo;         // theta/2
    Angle division_hi;         // (theta+1)/2

    int index_of(const Leaf& pair) const; // -1 when absent
};

PairBasis pair_basis(const Angle& theta);

/// Nonnegative integer matrix acting on a pair basis; column i lists the
/// image of basis element i with multiplicities (column sums are 1 or 2).
struct TransitionMatrix {
    int dimension = 0;
    std::vector<std::vector<std::pair<int, int>>> columns; // (row, multiplicity)

    std::vector<Int> column_sums() const;
    exact::IntMatrix dense() const;
};

/// Matrix of the pair dynamics: a pair inside a common closed half circle
/// maps to its image pair, a straddling pair splits through theta.
TransitionMatrix build_matrix(const PairBasis& basis);
TransitionMatrix build_matrix(const Angle& theta);

struct SpectralResult {
    double value = 0;       // spectral radius estimate
    double tolerance = 0;   // certified half-width of the enclosure
    long iterations = 0;    // total power-iteration steps
    bool converged = true;  // false when the iteration cap was hit
};

/// Spectral radius by strongly-connected-component decomposition with
/// shifted power iteration per component; Collatz-Wielandt ratio bounds
/// certify the enclosure, and components of dimension at most 6 are
/// cross-checked against the exact characteristic-polynomial root.
SpectralResult spectral_radius_detailed(const TransitionMatrix& m, double tol = 1e-12,
                                        long max_iterations = 1000000);
double spectral_radius(const TransitionMatrix& m);

/// Exact-arithmetic spectral radius: maximum over components of the largest
/// real characteristic-polynomial root, certified to +-tol.
double exact_spectral_radius(const TransitionMatrix& m, double tol = 1e-10);

/// log of the spectral radius of the pair-transition matrix; lands in
/// [0, log 2].
double core_entropy(const Angle& theta);

/// core_entropy(theta) / log 2, in [0, 1].
double hausdorff_dimension(const Angle& theta);

struct SweepRow {
    Angle theta;
    double rho = 0;
    double entropy = 0;
    double dimension = 0;
};

/// One row per reduced fraction p/q in (0,1) with q <= max_denominator,
/// ordered by (q, p). `jobs` distributes rows across threads; the output is
/// independent of the schedule.
std::vector<SweepRow> sweep(int max_denominator, int jobs = 1);

} // namespace lamina
