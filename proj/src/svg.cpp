#include "enttopo/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "enttopo/io.hpp"

namespace enttopo {

namespace {

const char* dim_color(int dim) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return palette[dim % 8];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string barcode_svg(const Barcode& barcode) {
    std::vector<BarInterval> bars = barcode.intervals;
    std::stable_sort(bars.begin(), bars.end(), [](const BarInterval& a, const BarInterval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });

    double xmax = 0.0;
    int top_dim = 0;
    for (const BarInterval& bar : bars) {
        xmax = std::max(xmax, bar.birth);
        if (!bar.essential()) xmax = std::max(xmax, bar.death);
        top_dim = std::max(top_dim, bar.dim);
    }
    if (xmax <= 0.0) xmax = 1.0;
    const double xpad = 0.08 * xmax;

    const double margin_left = 60.0, margin_right = 30.0, margin_top = 20.0;
    const double bar_height = 6.0, bar_gap = 4.0, group_gap = 18.0;
    const double plot_width = 560.0;
    auto x_of = [&](double eps) { return margin_left + plot_width * eps / (xmax + xpad); };

    std::ostringstream body;
    double y = margin_top;
    int current_dim = -1;
    for (const BarInterval& bar : bars) {
        if (bar.dim != current_dim) {
            if (current_dim >= 0) y += group_gap;
            current_dim = bar.dim;
            body << "  <text x=\"8\" y=\"" << num(y + bar_height) << "\" font-size=\"12\" "
                 << "font-family=\"sans-serif\">H" << current_dim << "</text>\n";
        }
        const double x0 = x_of(bar.birth);
        const double x1 = bar.essential() ? margin_left + plot_width : x_of(bar.death);
        const double width = std::max(x1 - x0, 1.0); // zero-length guard for visibility
        body << "  <rect x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\"" << num(width)
             << "\" height=\"" << num(bar_height) << "\" fill=\"" << dim_color(bar.dim)
             << "\"/>\n";
        if (bar.essential()) {
            const double ax = margin_left + plot_width;
            const double ay = y + bar_height / 2.0;
            body << "  <polygon points=\"" << num(ax) << "," << num(ay - 5) << " "
                 << num(ax + 10) << "," << num(ay) << " " << num(ax) << "," << num(ay + 5)
                 << "\" fill=\"" << dim_color(bar.dim) << "\"/>\n";
        }
        y += bar_height + bar_gap;
    }

    const double axis_y = y + 14.0;
    std::ostringstream axis;
    axis << "  <line x1=\"" << num(margin_left) << "\" y1=\"" << num(axis_y) << "\" x2=\""
         << num(margin_left + plot_width) << "\" y2=\"" << num(axis_y)
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    const int n_ticks = 5;
    for (int t = 0; t <= n_ticks; ++t) {
        const double eps = (xmax + xpad) * t / n_ticks;
        const double x = x_of(eps);
        axis << "  <line x1=\"" << num(x) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(x)
             << "\" y2=\"" << num(axis_y + 5) << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
             << "  <text x=\"" << num(x) << "\" y=\"" << num(axis_y + 18)
             << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
             << num(round_sig(eps)) << "</text>\n";
    }
    axis << "  <text x=\"" << num(margin_left + plot_width / 2.0) << "\" y=\""
         << num(axis_y + 34)
         << "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\">"
         << "filtration value</text>\n";

    const double total_height = axis_y + 44.0;
    const double total_width = margin_left + plot_width + margin_right;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(total_width)
        << "\" height=\"" << num(total_height) << "\" viewBox=\"0 0 " << num(total_width) << " "
        << num(total_height) << "\">\n"
        << body.str() << axis.str() << "</svg>\n";
    return out.str();
}

void render_svg(const Barcode& barcode, const std::string& out_path) {
    write_text_file(out_path, barcode_svg(barcode));
}

} // namespace enttopo
