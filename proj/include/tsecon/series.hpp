#pragma once

#include <Eigen/Dense>
#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tsecon/errors.hpp"

namespace tsecon {

// Monthly period. The toolkit only supports monthly data.
struct Period {
    int year = 0;
    int month = 1;  // 1..12

    // Ordering is (year, month).
    auto operator<=>(const Period&) const = default;

    int index() const noexcept { return year * 12 + (month - 1); }
    static Period from_index(int idx);

    Period plus(int months) const { return from_index(index() + months); }

    std::string to_string() const;          // "YYYY-MM"
    static Period parse(std::string_view ym);
};

// Named monthly series. Values are validated to be finite on construction.
class TimeSeries {
public:
    TimeSeries(std::string name, Period start, std::vector<double> values);

    const std::string& name() const noexcept { return name_; }
    Period start() const noexcept { return start_; }
    Period end() const { return start_.plus(length() - 1); }
    int length() const noexcept { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    Period period_at(int i) const { return start_.plus(i); }

private:
    std::string name_;
    Period start_;
    std::vector<double> values_;
};

// Rectangular common-sample container for multivariate procedures.
// Rows are consecutive months starting at `start`; one column per variable.
class Dataset {
public:
    Dataset(std::vector<std::string> names, Period start, Eigen::MatrixXd observations);

    int rows() const noexcept { return static_cast<int>(obs_.rows()); }
    int cols() const noexcept { return static_cast<int>(obs_.cols()); }
    Period start() const noexcept { return start_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Eigen::MatrixXd& observations() const noexcept { return obs_; }
    Eigen::VectorXd column(int j) const { return obs_.col(j); }
    const std::string& name(int j) const { return names_[static_cast<std::size_t>(j)]; }
    int index_of(const std::string& name) const;  // MissingColumnError if absent

    // Elementwise first difference of every column; start advances one month.
    Dataset differenced() const;

private:
    std::vector<std::string> names_;
    Period start_;
    Eigen::MatrixXd obs_;
};

// Elementwise natural log; values must be strictly positive. Name gets "_LN".
TimeSeries log_transform(const TimeSeries& ts);

// d-fold iterated first difference; start advances by d months.
TimeSeries difference(const TimeSeries& ts, int d = 1);

// Multiplicative seasonal factors, January first, normalized to product 1.
// Ratios of the series to a 12-term centered moving average (half weights at
// the window ends) are averaged per calendar month.
std::array<double, 12> seasonal_factors(const TimeSeries& ts);

// Classical ratio-to-moving-average adjustment: divide each observation by
// its calendar month's factor. Requires >= 36 observations, all positive.
// Name gets "_SA".
TimeSeries seasonal_adjust(const TimeSeries& ts);

// Restrict a list of series to their common sample (span intersection).
Dataset align(const std::vector<TimeSeries>& series_list);

}  // namespace tsecon
