#include "tsecon/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

namespace tsecon {

Period Period::from_index(int idx) {
    Period p;
    // floor division so negative years behave
    int y = idx >= 0 ? idx / 12 : -((-idx + 11) / 12);
    p.year = y;
    p.month = idx - y * 12 + 1;
    return p;
}

std::string Period::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

Period Period::parse(std::string_view ym) {
    auto bad = [&] { throw ParseError("invalid period '" + std::string(ym) + "', expected YYYY-MM"); };
    if (ym.size() != 7 || ym[4] != '-') bad();
    int y = 0, m = 0;
    auto r1 = std::from_chars(ym.data(), ym.data() + 4, y);
    auto r2 = std::from_chars(ym.data() + 5, ym.data() + 7, m);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != ym.data() + 4 ||
        r2.ptr != ym.data() + 7 || m < 1 || m > 12) {
        bad();
    }
    return Period{y, m};
}

TimeSeries::TimeSeries(std::string name, Period start, std::vector<double> values)
    : name_(std::move(name)), start_(start), values_(std::move(values)) {
    if (start_.month < 1 || start_.month > 12) {
        throw DomainError("period month out of range: " + std::to_string(start_.month));
    }
    if (values_.empty()) throw LengthError("series '" + name_ + "' is empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DomainError("series '" + name_ + "' has non-finite value at position " +
                              std::to_string(i));
        }
    }
}

Dataset::Dataset(std::vector<std::string> names, Period start, Eigen::MatrixXd observations)
    : names_(std::move(names)), start_(start), obs_(std::move(observations)) {
    if (obs_.cols() < 1) throw ShapeError("dataset needs at least one column");
    if (static_cast<int>(names_.size()) != obs_.cols()) {
        throw ShapeError("dataset has " + std::to_string(obs_.cols()) + " columns but " +
                         std::to_string(names_.size()) + " names");
    }
    if (!obs_.allFinite()) throw DomainError("dataset contains non-finite entries");
}

int Dataset::index_of(const std::string& name) const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (names_[j] == name) return static_cast<int>(j);
    }
    throw MissingColumnError("no column named '" + name + "'");
}

Dataset Dataset::differenced() const {
    if (rows() < 2) throw LengthError("cannot difference a dataset with fewer than 2 rows");
    Eigen::MatrixXd d = obs_.bottomRows(rows() - 1) - obs_.topRows(rows() - 1);
    std::vector<std::string> names;
    names.reserve(names_.size());
    for (const auto& n : names_) names.push_back("D_" + n);
    return Dataset(std::move(names), start_.plus(1), std::move(d));
}

TimeSeries log_transform(const TimeSeries& ts) {
    std::vector<double> out(ts.values().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (ts.values()[i] <= 0.0) {
            throw DomainError("log transform of '" + ts.name() + "': non-positive value at " +
                              ts.period_at(static_cast<int>(i)).to_string());
        }
        out[i] = std::log(ts.values()[i]);
    }
    return TimeSeries(ts.name() + "_LN", ts.start(), std::move(out));
}

TimeSeries difference(const TimeSeries& ts, int d) {
    if (d < 1) throw DomainError("difference order must be >= 1");
    if (ts.length() <= d) {
        throw LengthError("series '" + ts.name() + "' too short to difference " +
                          std::to_string(d) + " times");
    }
    std::vector<double> cur = ts.values();
    for (int round = 0; round < d; ++round) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) next[i] = cur[i + 1] - cur[i];
        cur = std::move(next);
    }
    std::string name = ts.name() + "_D" + std::to_string(d);
    return TimeSeries(std::move(name), ts.start().plus(d), std::move(cur));
}

std::array<double, 12> seasonal_factors(const TimeSeries& ts) {
    const int n = ts.length();
    if (n < 36) {
        throw LengthError("seasonal adjustment of '" + ts.name() + "' needs >= 36 observations, got " +
                          std::to_string(n));
    }
    const auto& y = ts.values();
    for (int i = 0; i < n; ++i) {
        if (y[i] <= 0.0) {
            throw DomainError("seasonal adjustment of '" + ts.name() +
                              "': non-positive value at " + ts.period_at(i).to_string());
        }
    }

    // 2x12 centered moving average: 13-term window with half weights at the ends.
    // Defined for t in [6, n-7].
    std::array<double, 12> ratio_sum{};
    std::array<int, 12> ratio_count{};
    for (int t = 6; t <= n - 7; ++t) {
        double acc = 0.5 * y[t - 6] + 0.5 * y[t + 6];
        for (int j = -5; j <= 5; ++j) acc += y[t + j];
        const double cma = acc / 12.0;
        const int m = ts.period_at(t).month - 1;
        ratio_sum[m] += y[t] / cma;
        ratio_count[m] += 1;
    }

    std::array<double, 12> factors{};
    for (int m = 0; m < 12; ++m) {
        // n >= 36 guarantees every calendar month appears in the interior.
        factors[m] = ratio_sum[m] / ratio_count[m];
    }
    // Normalize so the twelve factors multiply to one.
    double log_sum = 0.0;
    for (double f : factors) log_sum += std::log(f);
    const double gmean = std::exp(log_sum / 12.0);
    for (double& f : factors) f /= gmean;
    return factors;
}

TimeSeries seasonal_adjust(const TimeSeries& ts) {
    const auto factors = seasonal_factors(ts);
    std::vector<double> out(ts.values().size());
    for (int i = 0; i < ts.length(); ++i) {
        out[static_cast<std::size_t>(i)] = ts[i] / factors[ts.period_at(i).month - 1];
    }
    return TimeSeries(ts.name() + "_SA", ts.start(), std::move(out));
}

Dataset align(const std::vector<TimeSeries>& series_list) {
    if (series_list.empty()) throw LengthError("align: empty series list");
    std::set<std::string> seen;
    for (const auto& ts : series_list) {
        if (!seen.insert(ts.name()).second) {
            throw DuplicateNameError("align: duplicate series name '" + ts.name() + "'");
        }
    }
    int lo = series_list.front().start().index();
    int hi = series_list.front().end().index();
    for (const auto& ts : series_list) {
        lo = std::max(lo, ts.start().index());
        hi = std::min(hi, ts.end().index());
    }
    if (lo > hi) throw AlignmentError("align: series have no overlapping sample");

    const int T = hi - lo + 1;
    const int k = static_cast<int>(series_list.size());
    Eigen::MatrixXd obs(T, k);
    std::vector<std::string> names;
    names.reserve(series_list.size());
    for (int j = 0; j < k; ++j) {
        const auto& ts = series_list[static_cast<std::size_t>(j)];
        const int offset = lo - ts.start().index();
        for (int t = 0; t < T; ++t) obs(t, j) = ts[offset + t];
        names.push_back(ts.name());
    }
    return Dataset(std::move(names), Period::from_index(lo), std::move(obs));
}

}  // namespace tsecon
