#include "lamina/charpoly.hpp"

#include <cmath>
#include <limits>

namespace lamina::exact {

namespace {

// Bareiss elimination; after step k the (k,k) entry equals the (k+1)-th
// leading principal minor. Bails out at the first nonpositive pivot.
bool all_leading_minors_positive(IntMatrix m) {
    const size_t n = m.size();
    Int prev = 1;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return true;
}

} // namespace

bool spectral_radius_below(const IntMatrix& B, const Rat& s) {
    const size_t n = B.size();
    if (s <= 0) return false; // rho >= 0 always
    Int u = numerator(s), v = denominator(s);
    IntMatrix m(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = i == j ? Int(u - v * B[i][j]) : Int(-v * B[i][j]);
    // scaling rows by v > 0 leaves minor signs unchanged
    return all_leading_minors_positive(std::move(m));
}

double perron_root(const IntMatrix& B, double tol, double hint) {
    const size_t n = B.size();
    if (n == 0) fail(errc::shape, "empty matrix");
    if (n == 1) return B[0][0].convert_to<double>();

    Int colmax = 0;
    for (size_t j = 0; j < n; ++j) {
        Int sum = 0;
        for (size_t i = 0; i < n; ++i) sum += B[i][j];
        colmax = std::max(colmax, sum);
    }
    Rat lo(0), hi = Rat(colmax) + 1;
    const Rat width(tol); // doubles convert exactly

    if (std::isfinite(hint)) {
        Rat h(hint), t = width / 2;
        if (!spectral_radius_below(B, h - t) && spectral_radius_below(B, h + t))
            return hint; // exact root certified inside [hint - tol/2, hint + tol/2]
    }
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        if (spectral_radius_below(B, mid))
            hi = mid;
        else
            lo = mid;
    }
    return to_double((lo + hi) / 2);
}

} // namespace lamina::exact
