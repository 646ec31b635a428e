#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace avdiff {

/// Inclusive range of calendar years.
struct YearRange {
    int first = 0;
    int last = 0;

    bool contains(int year) const { return year >= first && year <= last; }
    bool contains(const YearRange& other) const {
        return other.first >= first && other.last <= last;
    }
    int size() const { return last - first + 1; }
    bool operator==(const YearRange&) const = default;
};

/// Annual new passenger-car registrations on a contiguous run of years.
/// All counts are strictly positive.
class RegistrationSeries {
public:
    /// Throws ValidationError on an empty series or a non-positive count.
    RegistrationSeries(int first_year, std::vector<double> counts);

    int first_year() const { return first_year_; }
    int last_year() const { return first_year_ + static_cast<int>(counts_.size()) - 1; }
    YearRange years() const { return {first_year(), last_year()}; }
    std::size_t size() const { return counts_.size(); }
    std::span<const double> counts() const { return counts_; }

    bool covers(int year) const { return year >= first_year() && year <= last_year(); }
    bool covers(const YearRange& range) const {
        return range.first <= range.last && covers(range.first) && covers(range.last);
    }

    /// Throws CoverageError naming the year if it is outside the series.
    double at(int year) const;

    /// Sum over [range.first, range.last]; CoverageError on the first missing year.
    double sum(const YearRange& range) const;

    /// Every count multiplied by `factor` (> 0).
    RegistrationSeries scaled(double factor) const;

    bool operator==(const RegistrationSeries&) const = default;

private:
    int first_year_;
    std::vector<double> counts_;
};

/// Parses the two-column `year,new_registrations` CSV (header required).
/// Rows may come in any order; duplicates, gaps and non-positive counts are
/// rejected. `source` is used in error messages.
RegistrationSeries parse_registrations(std::istream& in, const std::string& source);

RegistrationSeries load_registrations(const std::filesystem::path& path);

void write_registrations(std::ostream& out, const RegistrationSeries& series);

/// Reconstructed EU27+UK series for 2015-2050: piecewise linear between
/// fitted knots, rounded half-up to whole vehicles.
RegistrationSeries build_reference_series();

/// Knots (year, registrations) of the reference series before rounding.
std::span<const std::pair<int, double>> reference_series_knots();

}  // namespace avdiff
