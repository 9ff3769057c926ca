// Numeric search finds floating point representations where they exist;
// the dimension-one recognizer gives an exact yes or no for the class it
// covers. C5 has a 2-d model, A8 does not, and a union of two stars is a
// textbook dimension-one instance.

#include <dpg/dpg.hpp>

#include <iostream>

int main() {
    using namespace dpg;

    const SearchResult c5 = search_dpr(gen_cycle(5), 2);
    std::cout << "search cycle(5), d=2: " << (c5.found ? "found" : "not found") << " (restart "
              << c5.found_restart << ")\n";

    const SearchResult a8 = search_dpr(gen_anticycle(4), 2, 0, {}, 4);
    std::cout << "search anticycle A8, d=2: " << (a8.found ? "found" : "not found")
              << ", best residual " << a8.best_residual << "\n\n";

    const Graph two_stars = disjoint_union(relabel_prefix(gen_fan(2), "a_"),
                                           Graph("star", {"c", "l1", "l2", "l3"},
                                                 {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}));
    const Dimension1Report yes = dot_dimension_at_most_1(two_stars);
    std::cout << "two stars, dimension <= 1: " << (yes.at_most_1 ? "yes" : "no") << "\n";

    const Dimension1Report no = dot_dimension_at_most_1(gen_path(4));
    std::cout << "path(4), dimension <= 1: " << (no.at_most_1 ? "yes" : "no") << "\n  "
              << no.reason << "\n";
    return 0;
}
