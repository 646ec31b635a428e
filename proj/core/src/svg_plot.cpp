#include "avdiff/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace avdiff {

namespace {

constexpr double kWidth = 760, kHeight = 420;
constexpr double kLeft = 70, kRight = 110, kTop = 40, kBottom = 50;

const char* colour(AutomationLevel level) {
    switch (level) {
        case AutomationLevel::L0: return "#9e9e9e";
        case AutomationLevel::L1: return "#8dd3c7";
        case AutomationLevel::L2: return "#1f78b4";
        case AutomationLevel::L3: return "#33a02c";
        case AutomationLevel::L4: return "#ff7f00";
        case AutomationLevel::L5: return "#e31a1c";
    }
    return "#000000";
}

struct Frame {
    YearRange years;
    double y_max;

    double x(double year) const {
        const double span = std::max(1, years.last - years.first);
        return kLeft + (year - years.first) / span * (kWidth - kLeft - kRight);
    }
    double y(double value) const { return kHeight - kBottom - value / y_max * (kHeight - kTop - kBottom); }
};

// Rounds the axis maximum up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double v) {
    if (!(v > 0)) return 1.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(v)));
    for (double step : {1.0, 2.0, 5.0, 10.0}) {
        if (step * magnitude >= v) return step * magnitude;
    }
    return 10.0 * magnitude;
}

std::string axes(const Frame& f, const std::string& title, const std::string& y_label) {
    std::string s;
    s += fmt::format(R"(<text x="{:.1f}" y="24" font-size="15" text-anchor="middle">{}</text>)"
                     "\n",
                     kWidth / 2, title);
    s += fmt::format(R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{2:.1f}" y2="{1:.1f}" stroke="#000"/>)"
                     "\n",
                     kLeft, f.y(0), kWidth - kRight);
    s += fmt::format(R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{0:.1f}" y2="{2:.1f}" stroke="#000"/>)"
                     "\n",
                     kLeft, f.y(0), kTop);
    for (int i = 0; i <= 5; ++i) {
        const double v = f.y_max * i / 5.0;
        s += fmt::format(R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{2:.1f}" y2="{1:.1f}" stroke="#ddd"/>)"
                         "\n",
                         kLeft, f.y(v), kWidth - kRight);
        s += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-size="11" text-anchor="end">{:g}</text>)"
                         "\n",
                         kLeft - 6, f.y(v) + 4, v);
    }
    const int step = f.years.size() > 20 ? 5 : 1;
    for (int year = f.years.first; year <= f.years.last; ++year) {
        if ((year - f.years.first) % step != 0 && year != f.years.last) continue;
        s += fmt::format(R"(<text x="{:.1f}" y="{:.1f}" font-size="11" text-anchor="middle">{}</text>)"
                         "\n",
                         f.x(year), f.y(0) + 16, year);
    }
    s += fmt::format(R"svg(<text x="16" y="{:.1f}" font-size="12" transform="rotate(-90 16 {:.1f})" )svg"
                     R"svg(text-anchor="middle">{}</text>)svg"
                     "\n",
                     (kTop + kHeight - kBottom) / 2, (kTop + kHeight - kBottom) / 2, y_label);
    return s;
}

std::string legend(const std::vector<AutomationLevel>& levels) {
    std::string s;
    double y = kTop + 10;
    for (auto level : levels) {
        s += fmt::format(R"(<rect x="{:.1f}" y="{:.1f}" width="12" height="12" fill="{}"/>)"
                         R"(<text x="{:.1f}" y="{:.1f}" font-size="12">{}</text>)"
                         "\n",
                         kWidth - kRight + 14, y - 10, colour(level), kWidth - kRight + 32, y, to_string(level));
        y += 18;
    }
    return s;
}

std::string open(const std::string& manifest_hash) {
    return fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
                       "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\">\n"
                       "<!-- manifest_sha256={2} -->\n"
                       "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n",
                       kWidth, kHeight, manifest_hash);
}

}  // namespace

std::string share_chart_svg(const ScenarioResult& result, const std::string& manifest_hash) {
    const Frame f{result.horizon, 100.0};
    std::string s = open(manifest_hash);
    s += axes(f, fmt::format("{}: share of new registrations by automation level", result.name),
              "share of new registrations (%)");
    std::vector<AutomationLevel> shown;
    for (const auto& t : result.trajectories) {
        std::string points;
        for (int year = result.horizon.first; year <= result.horizon.last; ++year) {
            if (!points.empty()) points += ' ';
            points += fmt::format("{:.2f},{:.2f}", f.x(year), f.y(100.0 * t.allocated_at(year)));
        }
        s += fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>)"
                         "\n",
                         colour(t.level), points);
        shown.push_back(t.level);
    }
    s += legend(shown);
    s += "</svg>\n";
    return s;
}

std::string value_added_chart_svg(const ValueAddedTable& table, const std::string& manifest_hash) {
    std::vector<AutomationLevel> levels;
    for (const auto& [level, _] : table.level_totals) levels.push_back(level);

    const int n = table.horizon.size();
    // stack[k][i]: cumulative billions of levels[0..k] in year horizon.first + i
    std::vector<std::vector<double>> stack(levels.size(), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (const auto& c : table.cells) {
        const auto k = static_cast<std::size_t>(std::find(levels.begin(), levels.end(), c.level) - levels.begin());
        stack[k][static_cast<std::size_t>(c.year - table.horizon.first)] += c.va_total / 1e9;
    }
    for (std::size_t k = 1; k < stack.size(); ++k) {
        for (std::size_t i = 0; i < stack[k].size(); ++i) stack[k][i] += stack[k - 1][i];
    }
    double peak = 0.0;
    if (!stack.empty()) peak = *std::max_element(stack.back().begin(), stack.back().end());

    const Frame f{table.horizon, nice_ceiling(peak)};
    std::string s = open(manifest_hash);
    s += axes(f, fmt::format("{}: annual value added ({} basis)", table.scenario_name, to_string(table.basis)),
              "billion EUR per year");
    for (std::size_t k = 0; k < stack.size(); ++k) {
        std::string points;
        for (int i = 0; i < n; ++i) {
            if (!points.empty()) points += ' ';
            points += fmt::format("{:.2f},{:.2f}", f.x(table.horizon.first + i),
                                  f.y(stack[k][static_cast<std::size_t>(i)]));
        }
        for (int i = n - 1; i >= 0; --i) {
            const double below = k == 0 ? 0.0 : stack[k - 1][static_cast<std::size_t>(i)];
            points += fmt::format(" {:.2f},{:.2f}", f.x(table.horizon.first + i), f.y(below));
        }
        s += fmt::format(R"(<polygon fill="{}" fill-opacity="0.85" stroke="none" points="{}"/>)"
                         "\n",
                         colour(levels[k]), points);
    }
    s += legend(levels);
    s += "</svg>\n";
    return s;
}

}  // namespace avdiff
