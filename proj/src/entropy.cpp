#include "lamina/entropy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace lamina {

namespace {

constexpr double kLog2 = 0.6931471805599453;

} // namespace

int PairBasis::index_of(const Leaf& pair) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), pair);
    if (it == pairs.end() || !(*it == pair)) return -1;
    return static_cast<int>(it - pairs.begin());
}

PairBasis pair_basis(const Angle& theta) {
    if (theta.value() == 0) fail(errc::domain, "the algorithm excludes angle 0");
    PairBasis basis;
    basis.theta = theta;
    basis.division_lo = Angle(theta.value() / 2);
    basis.division_hi = Angle((theta.value() + 1) / 2);

    std::set<Angle> pts;
    pts.insert(preferred_half_preimage(theta));
    for (const auto& p : orbit(theta, 2).points) pts.insert(p);
    basis.points.assign(pts.begin(), pts.end());

    for (size_t i = 0; i < basis.points.size(); ++i)
        for (size_t j = i + 1; j < basis.points.size(); ++j)
            basis.pairs.emplace_back(basis.points[i], basis.points[j]);
    std::sort(basis.pairs.begin(), basis.pairs.end());
    return basis;
}

std::vector<Int> TransitionMatrix::column_sums() const {
    std::vector<Int> sums(columns.size(), 0);
    for (size_t j = 0; j < columns.size(); ++j)
        for (const auto& [row, mult] : columns[j]) sums[j] += mult;
    return sums;
}

exact::IntMatrix TransitionMatrix::dense() const {
    exact::IntMatrix m(dimension, std::vector<Int>(dimension, 0));
    for (int j = 0; j < dimension; ++j)
        for (const auto& [row, mult] : columns[j]) m[row][j] += mult;
    return m;
}

TransitionMatrix build_matrix(const PairBasis& basis) {
    const Rat lo = basis.division_lo.value(), hi = basis.division_hi.value();
    // division points belong to both closed halves
    auto in_lower_half = [&](const Angle& x) { return lo <= x.value() && x.value() <= hi; };
    auto in_upper_half = [&](const Angle& x) { return x.value() >= hi || x.value() <= lo; };

    TransitionMatrix m;
    m.dimension = static_cast<int>(basis.pairs.size());
    m.columns.resize(m.dimension);
    for (int j = 0; j < m.dimension; ++j) {
        const Leaf& pr = basis.pairs[j];
        auto push = [&](const Angle& x, const Angle& y) {
            int row = basis.index_of(Leaf(x, y));
            if (row < 0) fail(errc::internal, "image pair escaped the basis");
            for (auto& [r, mult] : m.columns[j])
                if (r == row) {
                    ++mult;
                    return;
                }
            m.columns[j].emplace_back(row, 1);
        };
        Angle ia = tuple_map(pr.a, 2), ib = tuple_map(pr.b, 2);
        bool same_half = (in_lower_half(pr.a) && in_lower_half(pr.b)) ||
                         (in_upper_half(pr.a) && in_upper_half(pr.b));
        if (same_half) {
            push(ia, ib);
        } else {
            push(ia, basis.theta);
            push(basis.theta, ib);
        }
    }
    return m;
}

TransitionMatrix build_matrix(const Angle& theta) { return build_matrix(pair_basis(theta)); }

namespace {

// Tarjan, iterative; components come out in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<std::pair<int, int>>>& columns) {
    const int n = static_cast<int>(columns.size());
    std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < columns[f.v].size()) {
                int w = columns[f.v][f.edge++].first;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    comps.push_back(std::move(comp));
                }
            }
        }
    }
    return comps;
}

struct Block {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> cols; // within-block indices
};

Block extract_block(const TransitionMatrix& m, const std::vector<int>& comp) {
    Block b;
    b.n = static_cast<int>(comp.size());
    b.cols.resize(b.n);
    std::map<int, int> local;
    for (int i = 0; i < b.n; ++i) local[comp[i]] = i;
    for (int j = 0; j < b.n; ++j)
        for (const auto& [row, mult] : m.columns[comp[j]]) {
            auto it = local.find(row);
            if (it != local.end()) b.cols[j].emplace_back(it->second, mult);
        }
    return b;
}

exact::IntMatrix block_dense(const Block& b) {
    exact::IntMatrix m(b.n, std::vector<Int>(b.n, 0));
    for (int j = 0; j < b.n; ++j)
        for (const auto& [row, mult] : b.cols[j]) m[row][j] += mult;
    return m;
}

struct BlockSpectral {
    double value;
    double tolerance;
    long iterations;
    bool converged;
};

// Shifted power iteration: the +identity defeats the periodicity of
// imprimitive components, and the Collatz-Wielandt ratios of (I + B)v / v
// bracket 1 + rho at every step.
BlockSpectral block_spectral_radius(const Block& b, double tol, long max_iterations) {
    if (b.n == 1) {
        double w = 0;
        for (const auto& [row, mult] : b.cols[0])
            if (row == 0) w += mult;
        return {w, 0.0, 0, true};
    }
    std::vector<double> v(b.n, 1.0 / b.n), w(b.n);
    double best_lo = 1.0, best_hi = std::numeric_limits<double>::infinity();
    long iter = 0;
    while (iter < max_iterations) {
        ++iter;
        std::copy(v.begin(), v.end(), w.begin()); // identity shift
        for (int j = 0; j < b.n; ++j)
            for (const auto& [row, mult] : b.cols[j]) w[row] += mult * v[j];
        double lo = std::numeric_limits<double>::infinity(), hi = 0, sum = 0;
        for (int i = 0; i < b.n; ++i) {
            double r = w[i] / v[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            sum += w[i];
        }
        best_lo = std::max(best_lo, lo);
        best_hi = std::min(best_hi, hi);
        for (int i = 0; i < b.n; ++i) v[i] = w[i] / sum;
        if (best_hi - best_lo < tol) break;
    }
    return {(best_lo + best_hi) / 2 - 1.0, (best_hi - best_lo) / 2, iter,
            best_hi - best_lo < tol};
}

} // namespace

SpectralResult spectral_radius_detailed(const TransitionMatrix& m, double tol,
                                        long max_iterations) {
    if (m.dimension <= 0) fail(errc::shape, "matrix must be nonempty");
    for (const auto& col : m.columns)
        for (const auto& [row, mult] : col)
            if (row < 0 || row >= m.dimension) fail(errc::shape, "matrix is not square");

    SpectralResult out;
    out.value = 0;
    for (const auto& comp : strongly_connected_components(m.columns)) {
        Block b = extract_block(m, comp);
        bool has_edge = false;
        for (const auto& col : b.cols) has_edge = has_edge || !col.empty();
        if (!has_edge) continue; // isolated transient node, rho 0
        BlockSpectral bs = block_spectral_radius(b, tol, max_iterations);
        out.iterations += bs.iterations;
        out.converged = out.converged && bs.converged;
        if (b.n >= 2 && b.n <= 6) {
            double checked =
                exact::perron_root(block_dense(b), std::max(1e-10, 2 * bs.tolerance), bs.value);
            if (std::abs(checked - bs.value) > std::max(1e-9, 4 * bs.tolerance))
                fail(errc::internal, "power iteration disagrees with exact root");
        }
        out.value = std::max(out.value, bs.value);
        out.tolerance = std::max(out.tolerance, bs.tolerance);
    }
    return out;
}

double spectral_radius(const TransitionMatrix& m) { return spectral_radius_detailed(m).value; }

double exact_spectral_radius(const TransitionMatrix& m, double tol) {
    double best = 0;
    for (const auto& comp : strongly_connected_components(m.columns)) {
        Block b = extract_block(m, comp);
        bool has_edge = false;
        for (const auto& col : b.cols) has_edge = has_edge || !col.empty();
        if (!has_edge) continue;
        double hint = block_spectral_radius(b, 1e-13, 1000000).value;
        best = std::max(best, exact::perron_root(block_dense(b), tol, hint));
    }
    return best;
}

double core_entropy(const Angle& theta) {
    SpectralResult r = spectral_radius_detailed(build_matrix(theta));
    if (r.value < 1 - 1e-6 || r.value > 2 + 1e-6)
        fail(errc::internal, "spectral radius escaped [1,2]");
    return std::clamp(std::log(r.value), 0.0, kLog2);
}

double hausdorff_dimension(const Angle& theta) {
    return std::clamp(core_entropy(theta) / kLog2, 0.0, 1.0);
}

std::vector<SweepRow> sweep(int max_denominator, int jobs) {
    if (max_denominator < 2) fail(errc::precondition, "max denominator must be at least 2");
    std::vector<Angle> thetas;
    for (int q = 2; q <= max_denominator; ++q)
        for (int p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) thetas.push_back(Angle(Int(p), Int(q)));

    std::vector<SweepRow> rows(thetas.size());
    auto work = [&](size_t i) {
        SpectralResult r = spectral_radius_detailed(build_matrix(thetas[i]));
        double entropy = std::clamp(std::log(r.value), 0.0, kLog2);
        rows[i] = {thetas[i], r.value, entropy, entropy / kLog2};
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < thetas.size(); ++i) work(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < thetas.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace lamina
