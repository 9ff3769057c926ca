// Three geometric routes to the same kind of object. Unit disks whose
// centres sit on a small wheel give W6; equal arcs on the unit circle give
// cycles directly; and when the arcs are narrow enough, scaled arc vectors
// turn the picture into a dot product model.

#include <dpg/dpg.hpp>

#include <iostream>
#include <numbers>

int main() {
    using namespace dpg;
    constexpr double pi = std::numbers::pi;

    // Hub disk at the origin, five rim disks at radius 1.4. Rim neighbours
    // sit 2.8 sin(pi/5) ~ 1.65 apart (edge), skew rim pairs 2.8 sin(2pi/5)
    // ~ 2.66 apart (non-edge), so the contact graph is the 6-vertex wheel.
    std::vector<std::pair<std::string, std::pair<double, double>>> entries{{"h", {0.0, 0.0}}};
    for (int i = 1; i <= 5; ++i)
        entries.emplace_back("r" + std::to_string(i),
                             std::pair<double, double>{1.4 * std::cos(2 * pi * (i - 1) / 5),
                                                       1.4 * std::sin(2 * pi * (i - 1) / 5)});
    const DiskSet wheel_disks = DiskSet::make(entries);
    const Graph w6 = disks_intersection_graph(wheel_disks);
    std::cout << "disk contact graph equals wheel(6): " << (w6 == gen_wheel(6) ? "yes" : "no")
              << "\n";

    const FloatModel w6_model = disks_to_model(wheel_disks);
    std::cout << "disk model verdict vs wheel(6):     "
              << verdict_name(verify_model(w6_model, gen_wheel(6)).verdict) << "\n";

    // Arcs of width 105 degrees, centres picked so the overlaps reproduce
    // the 4-regular graph J. Too wide to convert to a model (that needs
    // width below a right angle), but the intersection pattern is exact.
    const double deg = pi / 180;
    const ArcSet j_arcs = ArcSet::make(105 * deg, {{"s", 52.5 * deg},
                                                   {"t", 142.5 * deg},
                                                   {"u", 232.5 * deg},
                                                   {"v", 322.5 * deg},
                                                   {"w", 90 * deg},
                                                   {"x", 180 * deg},
                                                   {"y", 270 * deg},
                                                   {"z", 0 * deg}});
    std::cout << "arc overlap graph equals J:         "
              << (arcs_intersection_graph(j_arcs) == gen_J() ? "yes" : "no") << "\n";

    // Narrow arcs convert. arcs_cycle(8) spreads eight arcs evenly with
    // width 1.5 times the spacing, and the resulting model passes.
    const ArcSet c8 = arcs_cycle(8);
    const FloatModel c8_model = arcs_to_model(c8);
    std::cout << "arc model verdict vs cycle(8):      "
              << verdict_name(verify_model(c8_model, gen_cycle(8)).verdict) << "\n";
    return 0;
}
