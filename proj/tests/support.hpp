#pragma once

#include <dpg/graph.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir() {
        std::string tmpl = (std::filesystem::temp_directory_path() / "dpg-test-XXXXXX").string();
        if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// Smallest maximal independent set by subset enumeration. Only for small n.
inline int brute_min_maximal_independent_set(const dpg::Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    int best = n + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int i = 0; i < n && independent; ++i)
            for (int j = i + 1; j < n && independent; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && g.adjacent(i, j)) independent = false;
        if (!independent) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (mask >> v & 1) continue;
            bool blocked = false;
            for (int u = 0; u < n && !blocked; ++u)
                if ((mask >> u & 1) && g.adjacent(u, v)) blocked = true;
            if (!blocked) maximal = false;
        }
        if (maximal) best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

// Erdos-Renyi style graph with labels x0..x{n-1}.
inline dpg::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) es.emplace_back(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
    return dpg::Graph("random", std::move(vs), es);
}

} // namespace testsupport
