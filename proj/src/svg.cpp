#include "tsecon/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tsecon {

namespace {

constexpr int kSize = 440;       // viewport edge
constexpr double kRadius = 160;  // unit circle radius in pixels
constexpr double kCenter = kSize / 2.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_unit_circle_svg(const StabilityReport& report) {
    if (report.roots.empty()) throw DomainError("render_unit_circle_svg: no roots");
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    svg << "  <rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    // axes through the origin
    svg << "  <line x1=\"0\" y1=\"" << fmt(kCenter) << "\" x2=\"" << kSize << "\" y2=\""
        << fmt(kCenter) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << fmt(kCenter) << "\" y1=\"0\" x2=\"" << fmt(kCenter) << "\" y2=\""
        << kSize << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    svg << "  <circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\""
        << fmt(kRadius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (const auto& root : report.roots) {
        const double x = kCenter + kRadius * root.real();
        const double y = kCenter - kRadius * root.imag();
        if (std::abs(root) < 1.0) {
            svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
        } else {
            // outside the unit circle: red cross
            svg << "  <path d=\"M " << fmt(x - 4) << " " << fmt(y - 4) << " L " << fmt(x + 4)
                << " " << fmt(y + 4) << " M " << fmt(x - 4) << " " << fmt(y + 4) << " L "
                << fmt(x + 4) << " " << fmt(y - 4)
                << "\" stroke=\"#d62728\" stroke-width=\"2\" fill=\"none\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tsecon
