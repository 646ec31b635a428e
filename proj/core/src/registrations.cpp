#include "avdiff/registrations.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "avdiff/errors.hpp"

namespace avdiff {

RegistrationSeries::RegistrationSeries(int first_year, std::vector<double> counts)
    : first_year_(first_year), counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw ValidationError("registration series is empty");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (!(counts_[i] > 0.0) || !std::isfinite(counts_[i])) {
            throw ValidationError(fmt::format("registrations for {} must be positive, got {}",
                                              first_year_ + static_cast<int>(i), counts_[i]));
        }
    }
}

double RegistrationSeries::at(int year) const {
    if (!covers(year)) {
        throw CoverageError(year, fmt::format("no registration data for year {} (series covers {}-{})",
                                              year, first_year(), last_year()));
    }
    return counts_[static_cast<std::size_t>(year - first_year_)];
}

double RegistrationSeries::sum(const YearRange& range) const {
    double total = 0.0;
    for (int year = range.first; year <= range.last; ++year) {
        total += at(year);
    }
    return total;
}

RegistrationSeries RegistrationSeries::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw DomainError("registration scale factor must be positive");
    }
    std::vector<double> out(counts_);
    for (double& c : out) {
        c *= factor;
    }
    return {first_year_, std::move(out)};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

RegistrationSeries parse_registrations(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::map<int, double> rows;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') {
            continue;
        }
        auto comma = view.find(',');
        if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, fmt::format("{}:{}: expected two comma-separated columns", source, line_no));
        }
        std::string_view first = trim(view.substr(0, comma));
        std::string_view second = trim(view.substr(comma + 1));
        if (!header_seen) {
            if (first != "year" || second != "new_registrations") {
                throw ParseError(line_no, fmt::format("{}:{}: expected header 'year,new_registrations'",
                                                      source, line_no));
            }
            header_seen = true;
            continue;
        }
        int year = 0;
        double count = 0.0;
        if (!parse_number(first, year)) {
            throw ParseError(line_no, fmt::format("{}:{}: invalid year '{}'", source, line_no, first));
        }
        if (!parse_number(second, count) || !std::isfinite(count)) {
            throw ParseError(line_no, fmt::format("{}:{}: invalid registration count '{}'", source, line_no, second));
        }
        if (count <= 0.0) {
            throw ParseError(line_no, fmt::format("{}:{}: registrations for {} must be positive", source, line_no, year));
        }
        if (!rows.emplace(year, count).second) {
            throw ParseError(line_no, fmt::format("{}:{}: duplicate year {}", source, line_no, year));
        }
    }
    if (!header_seen) {
        throw ParseError(0, fmt::format("{}: missing header 'year,new_registrations'", source));
    }
    if (rows.empty()) {
        throw ParseError(0, fmt::format("{}: no data rows", source));
    }

    const int first_year = rows.begin()->first;
    const int last_year = rows.rbegin()->first;
    std::vector<int> missing;
    std::vector<double> counts;
    counts.reserve(static_cast<std::size_t>(last_year - first_year + 1));
    for (int year = first_year; year <= last_year; ++year) {
        auto it = rows.find(year);
        if (it == rows.end()) {
            missing.push_back(year);
        } else {
            counts.push_back(it->second);
        }
    }
    if (!missing.empty()) {
        throw CoverageError(missing.front(),
                            fmt::format("{}: gap in registration series, missing year(s) {}", source,
                                        fmt::join(missing, ", ")));
    }
    return {first_year, std::move(counts)};
}

RegistrationSeries load_registrations(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(fmt::format("cannot open registration file '{}'", path.string()));
    }
    return parse_registrations(in, path.string());
}

void write_registrations(std::ostream& out, const RegistrationSeries& series) {
    out << "year,new_registrations\n";
    for (int year = series.first_year(); year <= series.last_year(); ++year) {
        out << fmt::format("{},{}\n", year, series.at(year));
    }
}

}  // namespace avdiff
