#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "model.hpp"

namespace dpg {

// Randomized local search for a d-dimensional dot product representation.
// Threshold is fixed at 1 (any representation rescales to t = 1), vectors are
// optimized under a hinge objective that is zero exactly when every edge pair
// reaches dot >= 1 + mu and every non-edge pair stays at dot <= 1 - mu.
// A zero objective therefore hands back margins of at least mu on both sides.

struct SearchBudget {
    int restarts = 100;
    int iterations = 5000;
};

struct SearchResult {
    bool found = false;
    std::optional<FloatModel> model;
    double best_residual = 0.0; // smallest final objective over the restarts run
    int found_restart = -1;     // restart index that produced the model
    int restarts_used = 0;      // found_restart + 1 on success, full budget otherwise
};

namespace detail {

// splitmix64 finalizer over a seed/stream pair; distinct restarts get
// independent generators regardless of thread assignment.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9E3779B97F4A7C15ULL * (b + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

struct HingeProblem {
    int n = 0, dim = 0;
    std::vector<std::pair<int, int>> edge_pairs, nonedge_pairs;

    explicit HingeProblem(const Graph& g, int d) : n(g.n()), dim(d) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                (g.adjacent(i, j) ? edge_pairs : nonedge_pairs).emplace_back(i, j);
    }

    // Objective and subgradient in one pass; x is row-major n x dim.
    double eval(const std::vector<double>& x, std::vector<double>& grad) const {
        static constexpr double kMu = 1e-3;
        std::fill(grad.begin(), grad.end(), 0.0);
        double f = 0.0;
        auto dot_ij = [&](int i, int j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += x[i * dim + k] * x[j * dim + k];
            return s;
        };
        for (auto [i, j] : edge_pairs) {
            double slack = (1.0 + kMu) - dot_ij(i, j);
            if (slack > 0.0) {
                f += slack;
                for (int k = 0; k < dim; ++k) {
                    grad[i * dim + k] -= x[j * dim + k];
                    grad[j * dim + k] -= x[i * dim + k];
                }
            }
        }
        for (auto [i, j] : nonedge_pairs) {
            double slack = dot_ij(i, j) - (1.0 - kMu);
            if (slack > 0.0) {
                f += slack;
                for (int k = 0; k < dim; ++k) {
                    grad[i * dim + k] += x[j * dim + k];
                    grad[j * dim + k] += x[i * dim + k];
                }
            }
        }
        return f;
    }
};

// One restart: random init, Adam on the hinge objective, stop early at zero.
inline double run_restart(const HingeProblem& p, std::uint64_t seed, std::uint64_t restart,
                          int iterations, std::vector<double>& x) {
    std::mt19937_64 rng(mix64(seed, restart));
    std::uniform_real_distribution<double> init(-2.0, 2.0);
    const int size = p.n * p.dim;
    x.resize(size);
    for (auto& v : x) v = init(rng);

    constexpr double kAlpha = 0.05, kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
    std::vector<double> grad(size), m(size, 0.0), v2(size, 0.0);
    double f = p.eval(x, grad);
    double b1t = 1.0, b2t = 1.0;
    for (int it = 0; it < iterations && f != 0.0; ++it) {
        b1t *= kBeta1;
        b2t *= kBeta2;
        for (int k = 0; k < size; ++k) {
            m[k] = kBeta1 * m[k] + (1.0 - kBeta1) * grad[k];
            v2[k] = kBeta2 * v2[k] + (1.0 - kBeta2) * grad[k] * grad[k];
            double mhat = m[k] / (1.0 - b1t);
            double vhat = v2[k] / (1.0 - b2t);
            x[k] -= kAlpha * mhat / (std::sqrt(vhat) + kEps);
        }
        f = p.eval(x, grad);
    }
    return f;
}

inline FloatModel model_from_flat(const Graph& g, int dim, const std::vector<double>& x) {
    std::vector<std::pair<std::string, std::vector<double>>> entries;
    entries.reserve(g.n());
    for (int i = 0; i < g.n(); ++i) {
        std::vector<double> row(x.begin() + i * dim, x.begin() + (i + 1) * dim);
        entries.emplace_back(g.vertices()[i], std::move(row));
    }
    return FloatModel::make(dim, 1.0, entries);
}

} // namespace detail

inline SearchResult search_dpr(const Graph& g, int dim, std::uint64_t seed = 0,
                               SearchBudget budget = {}, int workers = 1) {
    if (dim < 1 || dim > 4)
        throw DomainError("search dimension must be between 1 and 4, got " + std::to_string(dim));
    if (g.n() == 0) throw DomainError("cannot search a representation for the empty graph");
    if (g.n() > 30)
        throw SizeLimitError("instance too large: search is limited to 30 vertices, got " +
                             std::to_string(g.n()));
    if (budget.restarts < 1 || budget.iterations < 1)
        throw DomainError("search budget must be positive");
    if (workers < 1) throw DomainError("worker count must be positive");

    const detail::HingeProblem problem(g, dim);
    constexpr double kMinMargin = 1e-6;

    std::atomic<int> next_restart{0};
    std::atomic<int> min_success{budget.restarts};
    std::mutex merge_mutex;
    std::vector<double> residuals(budget.restarts, -1.0); // -1 marks "not run"
    std::optional<FloatModel> best_model;
    int best_restart = -1;

    auto drain = [&]() {
        std::vector<double> x;
        for (;;) {
            int r = next_restart.fetch_add(1);
            if (r >= budget.restarts) return;
            // A later restart cannot beat an already-found earlier one, and
            // every index below the final minimum is always run, so the
            // winning restart does not depend on thread scheduling.
            if (r > min_success.load()) continue;
            double f = detail::run_restart(problem, seed, static_cast<std::uint64_t>(r),
                                           budget.iterations, x);
            bool success = false;
            if (f == 0.0) {
                FloatModel candidate = detail::model_from_flat(g, dim, x);
                VerificationReport rep = verify_model(candidate, g);
                double edge_m = rep.min_edge_margin.value_or(1.0);
                double nonedge_m = rep.min_nonedge_deficit.value_or(1.0);
                if (rep.verdict == Verdict::Accept && edge_m >= kMinMargin &&
                    nonedge_m >= kMinMargin) {
                    success = true;
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (r < best_restart || best_restart < 0) {
                        best_model = std::move(candidate);
                        best_restart = r;
                    }
                    int cur = min_success.load();
                    while (r < cur && !min_success.compare_exchange_weak(cur, r)) {
                    }
                }
            }
            if (!success) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                residuals[r] = f;
            }
        }
    };

    if (workers == 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    SearchResult result;
    if (best_restart >= 0) {
        result.found = true;
        result.model = std::move(best_model);
        result.best_residual = 0.0;
        result.found_restart = best_restart;
        result.restarts_used = best_restart + 1;
    } else {
        result.found = false;
        result.best_residual = -1.0;
        for (double f : residuals)
            if (f >= 0.0 && (result.best_residual < 0.0 || f < result.best_residual))
                result.best_residual = f;
        result.restarts_used = budget.restarts;
    }
    return result;
}

} // namespace dpg
