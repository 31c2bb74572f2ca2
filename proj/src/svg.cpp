#include "lgv/svg.hpp"

#include <algorithm>
#include <sstream>

#include "lgv/lattice.hpp"
#include "lgv/oracle.hpp"

namespace lgv {

namespace {
constexpr int kUnit = 32;   // pixels per lattice step
constexpr int kMargin = 40; // around the grid
} // namespace

std::string render_configuration_svg(const Partition& lambda, const Partition& mu,
                                     const TriangularSequence& s, bool overlay_paths) {
    const auto cfg = PointConfiguration::from_partitions(lambda, mu, s);
    const int p = cfg.p();

    int minx = cfg.starts[0].x, maxx = minx, miny = cfg.starts[0].y, maxy = miny;
    for (const auto& q : cfg.starts) {
        minx = std::min(minx, q.x), maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y), maxy = std::max(maxy, q.y);
    }
    for (const auto& q : cfg.ends) {
        minx = std::min(minx, q.x), maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y), maxy = std::max(maxy, q.y);
    }
    --minx, --miny, ++maxx, ++maxy;

    const auto px = [&](int x) { return kMargin + (x - minx) * kUnit; };
    const auto py = [&](int y) { return kMargin + (maxy - y) * kUnit; };
    const int width = px(maxx) + kMargin;
    const int height = py(miny) + kMargin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int x = minx; x <= maxx; ++x)
        svg << "<line x1=\"" << px(x) << "\" y1=\"" << py(maxy) << "\" x2=\"" << px(x)
            << "\" y2=\"" << py(miny) << "\"/>\n";
    for (int y = miny; y <= maxy; ++y)
        svg << "<line x1=\"" << px(minx) << "\" y1=\"" << py(y) << "\" x2=\"" << px(maxx)
            << "\" y2=\"" << py(y) << "\"/>\n";
    svg << "</g>\n";

    // main diagonal y = x across the viewport
    {
        const int lo = std::max(minx, miny), hi = std::min(maxx, maxy);
        if (lo <= hi)
            svg << "<line x1=\"" << px(lo) << "\" y1=\"" << py(lo) << "\" x2=\"" << px(hi)
                << "\" y2=\"" << py(hi)
                << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
    }

    if (overlay_paths) {
        const auto tuples = enumerate_tuples(cfg, identity_perm(p));
        if (!tuples.empty()) {
            svg << "<g fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"3\" "
                   "stroke-linecap=\"round\" stroke-linejoin=\"round\" opacity=\"0.8\">\n";
            for (const auto& path : tuples.front().paths) {
                svg << "<polyline points=\"";
                bool first = true;
                for (const auto& q : path.points()) {
                    if (!first) svg << ' ';
                    svg << px(q.x) << ',' << py(q.y);
                    first = false;
                }
                svg << "\"/>\n";
            }
            svg << "</g>\n";
        }
    }

    for (int r = 0; r < p; ++r) {
        const auto& b = cfg.ends[static_cast<std::size_t>(r)];
        svg << "<circle cx=\"" << px(b.x) << "\" cy=\"" << py(b.y)
            << "\" r=\"6\" fill=\"#1f4fd8\"/>\n";
        svg << "<text x=\"" << px(b.x) + 9 << "\" y=\"" << py(b.y) + 16
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#1f4fd8\">B"
            << r + 1 << "</text>\n";
    }
    for (int r = 0; r < p; ++r) {
        const auto& a = cfg.starts[static_cast<std::size_t>(r)];
        svg << "<circle cx=\"" << px(a.x) << "\" cy=\"" << py(a.y)
            << "\" r=\"6\" fill=\"#d81f1f\"/>\n";
        svg << "<text x=\"" << px(a.x) + 9 << "\" y=\"" << py(a.y) - 8
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#d81f1f\">A"
            << r + 1 << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace lgv
