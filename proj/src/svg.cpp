#include "dcshap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "dcshap/error.hpp"

namespace dcshap {
namespace {

const char* kSeriesColors[] = {"#39699f", "#c25450", "#5f9e6e", "#8172b2"};
constexpr int kSeriesColorCount = 4;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

void open_svg(std::ostringstream& s, double width, double height) {
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
      << fmt(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

void text_at(std::ostringstream& s, double x, double y, const std::string& body,
             const char* anchor = "start", int size = 11) {
    s << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"monospace\""
      << " font-size=\"" << size << "\" text-anchor=\"" << anchor << "\">"
      << escape(body) << "</text>\n";
}

void line_at(std::ostringstream& s, double x1, double y1, double x2, double y2,
             const char* stroke, const char* dash = nullptr) {
    s << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
      << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\"";
    if (dash) s << " stroke-dasharray=\"" << dash << "\"";
    s << "/>\n";
}

void rect_at(std::ostringstream& s, double x, double y, double w, double h,
             const char* fill) {
    s << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string svg_grouped_bars(const std::vector<std::string>& row_labels,
                             const std::vector<std::string>& series_labels,
                             const Matrix& values, const std::string& title) {
    if (values.rows() != static_cast<Index>(row_labels.size()))
        throw DataError("bar chart row labels do not match the value rows");
    if (values.cols() != static_cast<Index>(series_labels.size()))
        throw DataError("bar chart series labels do not match the value columns");
    if (values.size() == 0) throw DataError("bar chart has no values");

    const double bar_h = 12.0, group_gap = 8.0;
    const double group_h = bar_h * values.cols() + group_gap;
    const double left = 170.0, top = 46.0, plot_w = 430.0;
    const double height = top + group_h * values.rows() + 24.0;
    const double width = left + plot_w + 30.0;

    double limit = values.cwiseAbs().maxCoeff();
    if (limit <= 0.0) limit = 1.0;
    const double zero_x = left + plot_w / 2.0;
    const double scale = (plot_w / 2.0 - 4.0) / limit;

    std::ostringstream s;
    open_svg(s, width, height);
    text_at(s, 12, 20, title, "start", 13);
    for (Index c = 0; c < values.cols(); ++c) {
        const double lx = 12 + 150.0 * c;
        rect_at(s, lx, 28, 10, 10, kSeriesColors[c % kSeriesColorCount]);
        text_at(s, lx + 14, 37, series_labels[static_cast<size_t>(c)]);
    }
    line_at(s, zero_x, top, zero_x, height - 24.0, "#999999");

    for (Index r = 0; r < values.rows(); ++r) {
        const double gy = top + group_h * r;
        text_at(s, left - 8, gy + group_h / 2.0, row_labels[static_cast<size_t>(r)], "end");
        for (Index c = 0; c < values.cols(); ++c) {
            const double v = values(r, c);
            const double w = std::abs(v) * scale;
            const double x = v >= 0.0 ? zero_x : zero_x - w;
            rect_at(s, x, gy + bar_h * c, std::max(w, 0.5), bar_h - 2.0,
                    kSeriesColors[c % kSeriesColorCount]);
        }
    }
    text_at(s, zero_x, height - 8, "0", "middle");
    text_at(s, left, height - 8, fmt(-limit), "middle");
    text_at(s, left + plot_w, height - 8, fmt(limit), "middle");
    s << "</svg>\n";
    return s.str();
}

std::string svg_scatter(const Vector& x, const Vector& y, const std::string& x_label,
                        const std::string& y_label, const std::string& title) {
    if (x.size() != y.size()) throw DataError("scatter series lengths differ");
    if (x.size() == 0) throw DataError("scatter has no points");

    const double left = 60.0, top = 40.0, plot = 380.0;
    const double width = left + plot + 24.0, height = top + plot + 50.0;

    double lo = std::min(x.minCoeff(), y.minCoeff());
    double hi = std::max(x.maxCoeff(), y.maxCoeff());
    if (hi <= lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;
    const auto sx = [&](double v) { return left + (v - lo) / (hi - lo) * plot; };
    const auto sy = [&](double v) { return top + plot - (v - lo) / (hi - lo) * plot; };

    std::ostringstream s;
    open_svg(s, width, height);
    text_at(s, 12, 20, title, "start", 13);
    s << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(plot)
      << "\" height=\"" << fmt(plot) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    line_at(s, sx(lo), sy(lo), sx(hi), sy(hi), "#bbbbbb", "4 3");
    for (Index i = 0; i < x.size(); ++i) {
        s << "<circle cx=\"" << fmt(sx(x[i])) << "\" cy=\"" << fmt(sy(y[i]))
          << "\" r=\"3\" fill=\"#39699f\" fill-opacity=\"0.6\"/>\n";
    }
    text_at(s, left + plot / 2.0, height - 10, x_label, "middle");
    text_at(s, left + plot / 2.0, top + plot + 22.0, fmt(lo) + " .. " + fmt(hi), "middle");
    s << "<text x=\"" << fmt(16.0) << "\" y=\"" << fmt(top + plot / 2.0)
      << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 " << fmt(16.0) << ' ' << fmt(top + plot / 2.0) << ")\">"
      << escape(y_label) << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string svg_force_plot(const Attribution& attribution, const std::string& title) {
    const Index m = attribution.phi.size();
    if (m == 0) throw DataError("force plot needs at least one attribution");
    if (static_cast<Index>(attribution.feature_names.size()) != m)
        throw DataError("force plot feature names do not match the attribution width");

    // Largest contributions first; ties keep feature order.
    std::vector<Index> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return std::abs(attribution.phi[a]) > std::abs(attribution.phi[b]);
    });

    const double width = 640.0, strip_y = 64.0, strip_h = 18.0;
    const double left = 40.0, plot_w = width - 2 * left;
    const double height = 150.0;

    double lo = std::min(attribution.base, attribution.predicted);
    double hi = std::max(attribution.base, attribution.predicted);
    double cursor = attribution.base;
    for (Index idx : order) {
        cursor += attribution.phi[idx];
        lo = std::min(lo, cursor);
        hi = std::max(hi, cursor);
    }
    if (hi <= lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = (hi - lo) * 0.08;
    lo -= pad;
    hi += pad;
    const auto sx = [&](double v) { return left + (v - lo) / (hi - lo) * plot_w; };

    std::ostringstream s;
    open_svg(s, width, height);
    text_at(s, 12, 20, title, "start", 13);
    line_at(s, left, strip_y + strip_h + 18, width - left, strip_y + strip_h + 18,
            "#999999");

    cursor = attribution.base;
    int labeled = 0;
    for (Index idx : order) {
        const double phi = attribution.phi[idx];
        const double from = cursor;
        cursor += phi;
        const double x0 = sx(std::min(from, cursor));
        const double seg_w = std::abs(sx(cursor) - sx(from));
        rect_at(s, x0, strip_y, std::max(seg_w, 0.5), strip_h,
                phi >= 0.0 ? "#c25450" : "#39699f");
        if (labeled < 4 && std::abs(phi) > 0.0) {
            text_at(s, x0 + seg_w / 2.0, strip_y + strip_h + 32 + 12 * labeled,
                    attribution.feature_names[static_cast<size_t>(idx)] + " " + fmt(phi),
                    "middle", 10);
            ++labeled;
        }
    }
    line_at(s, sx(attribution.base), strip_y - 14, sx(attribution.base),
            strip_y + strip_h + 18, "#555555", "3 2");
    text_at(s, sx(attribution.base), strip_y - 18, "base " + fmt(attribution.base),
            "middle", 10);
    line_at(s, sx(attribution.predicted), strip_y - 2, sx(attribution.predicted),
            strip_y + strip_h + 18, "#111111");
    text_at(s, sx(attribution.predicted), strip_y - 4,
            "f(x) " + fmt(attribution.predicted), "middle", 10);
    s << "</svg>\n";
    return s.str();
}

}  // namespace dcshap
