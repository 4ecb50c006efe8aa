#include <doctest.h>

#include <cmath>

#include "tsecon/rng.hpp"
#include "tsecon/series.hpp"

using namespace tsecon;

namespace {

TimeSeries make(const std::string& name, std::vector<double> v, Period start = {2003, 1}) {
    return TimeSeries(name, start, std::move(v));
}

// level * monthly factor composition used by several seasonal tests
TimeSeries composed(int n, double base, double slope, const std::array<double, 12>& f) {
    std::vector<double> v(static_cast<std::size_t>(n));
    Period p{2003, 1};
    for (int t = 0; t < n; ++t) {
        v[static_cast<std::size_t>(t)] = (base + slope * t) * f[static_cast<std::size_t>(p.month - 1)];
        p = p.plus(1);
    }
    return make("C", std::move(v));
}

std::array<double, 12> pattern() {
    // multiplies to one: exponents sum to zero over a full cycle
    std::array<double, 12> f{};
    for (int m = 0; m < 12; ++m) f[static_cast<std::size_t>(m)] = std::exp(0.1 * std::sin(2.0 * M_PI * m / 12.0));
    return f;
}

}  // namespace

TEST_CASE("period ordering and arithmetic") {
    CHECK(Period{2003, 1} < Period{2003, 2});
    CHECK(Period{2002, 12} < Period{2003, 1});
    CHECK(Period{2003, 5}.plus(8) == Period{2004, 1});
    CHECK(Period{2003, 1}.plus(-1) == Period{2002, 12});
    CHECK(Period::from_index(Period{1999, 7}.index()) == Period{1999, 7});
    CHECK(Period{2003, 9}.to_string() == "2003-09");
    CHECK(Period::parse("2010-11") == Period{2010, 11});
    CHECK_THROWS_AS(Period::parse("2010-13"), ParseError);
    CHECK_THROWS_AS(Period::parse("2010/11"), ParseError);
}

TEST_CASE("time series validation") {
    CHECK_THROWS_AS(make("x", {}), LengthError);
    CHECK_THROWS_AS(make("x", {1.0, std::nan("")}), DomainError);
    const TimeSeries ts = make("x", {1, 2, 3});
    CHECK(ts.end() == Period{2003, 3});
    CHECK(ts.period_at(2) == Period{2003, 3});
}

TEST_CASE("log transform") {
    const double e = std::exp(1.0);
    const TimeSeries out = log_transform(make("x", {1.0, e, e * e}));
    CHECK(out.name() == "x_LN");
    CHECK(out[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(out[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(out[2] == doctest::Approx(2.0).epsilon(1e-14));

    const TimeSeries ones = log_transform(make("c", std::vector<double>(10, 1.0)));
    for (int i = 0; i < ones.length(); ++i) CHECK(ones[i] == 0.0);

    CHECK_THROWS_AS(log_transform(make("z", {1.0, 0.0, 2.0})), DomainError);
}

TEST_CASE("difference") {
    const TimeSeries d1 = difference(make("x", {1, 2, 4}), 1);
    CHECK(d1.values() == std::vector<double>{1, 2});
    CHECK(d1.start() == Period{2003, 2});

    const TimeSeries dc = difference(make("c", std::vector<double>(6, 3.5)), 1);
    CHECK(dc.length() == 5);
    for (int i = 0; i < 5; ++i) CHECK(dc[i] == 0.0);

    const TimeSeries d2 = difference(make("x", {1, 2, 4, 8}), 2);
    CHECK(d2.values() == std::vector<double>{1, 2});
    CHECK(d2.start() == Period{2003, 3});

    CHECK_THROWS_AS(difference(make("x", {1, 2}), 2), LengthError);
    CHECK_THROWS_AS(difference(make("x", {1, 2, 3}), 0), DomainError);
}

TEST_CASE("iterated difference equals higher order difference") {
    GaussianRng g(7);
    std::vector<double> v(40);
    for (auto& x : v) x = g.next();
    const TimeSeries ts = make("r", v);
    const TimeSeries twice = difference(difference(ts, 1), 1);
    const TimeSeries d2 = difference(ts, 2);
    REQUIRE(twice.length() == d2.length());
    CHECK(twice.start() == d2.start());
    for (int i = 0; i < d2.length(); ++i) CHECK(twice[i] == doctest::Approx(d2[i]).epsilon(1e-13));
}

TEST_CASE("seasonal adjustment leaves a constant series alone") {
    const TimeSeries out = seasonal_adjust(make("c", std::vector<double>(48, 100.0)));
    CHECK(out.name() == "c_SA");
    for (int i = 0; i < out.length(); ++i) CHECK(out[i] == doctest::Approx(100.0).epsilon(1e-11));
}

TEST_CASE("seasonal adjustment removes an exact multiplicative pattern") {
    const TimeSeries out = seasonal_adjust(composed(60, 100.0, 0.0, pattern()));
    for (int i = 0; i < out.length(); ++i) CHECK(out[i] == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("seasonal adjustment recovers a trend under a fixed pattern") {
    const int n = 72;
    const TimeSeries out = seasonal_adjust(composed(n, 100.0, 1.0, pattern()));
    for (int t = 6; t < n - 6; ++t) {
        const double truth = 100.0 + t;
        CHECK(std::abs(out[t] - truth) / truth < 0.02);
    }
}

TEST_CASE("seasonal factors multiply to one") {
    const auto f = seasonal_factors(composed(60, 100.0, 0.5, pattern()));
    double prod = 1.0;
    for (double x : f) prod *= x;
    CHECK(prod == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("seasonal adjustment is idempotent within tolerance") {
    const TimeSeries once = seasonal_adjust(composed(72, 100.0, 1.0, pattern()));
    const TimeSeries twice = seasonal_adjust(once);
    for (int i = 0; i < once.length(); ++i) {
        CHECK(std::abs(twice[i] - once[i]) / once[i] < 0.005);
    }
}

TEST_CASE("seasonal adjustment input checks") {
    CHECK_THROWS_AS(seasonal_adjust(make("s", std::vector<double>(35, 1.0))), LengthError);
    std::vector<double> v(40, 1.0);
    v[17] = -2.0;
    CHECK_THROWS_AS(seasonal_adjust(make("s", std::move(v))), DomainError);
}

TEST_CASE("align intersects spans in input order") {
    std::vector<TimeSeries> list;
    list.push_back(make("a", std::vector<double>(96, 1.0), {2003, 1}));   // 2003-01..2010-12
    list.push_back(make("b", std::vector<double>(144, 2.0), {2005, 1}));  // 2005-01..2016-12
    const Dataset ds = align(list);
    CHECK(ds.start() == Period{2005, 1});
    CHECK(ds.rows() == 72);  // 2005-01..2010-12
    CHECK(ds.cols() == 2);
    CHECK(ds.names() == std::vector<std::string>{"a", "b"});
    CHECK(ds.observations()(0, 0) == 1.0);
    CHECK(ds.observations()(0, 1) == 2.0);

    const Dataset same = align({make("a", {1, 2, 3}), make("b", {4, 5, 6})});
    CHECK(same.rows() == 3);
}

TEST_CASE("align error paths") {
    CHECK_THROWS_AS(align({}), LengthError);
    CHECK_THROWS_AS(align({make("a", {1, 2}, {2003, 1}), make("b", {1, 2}, {2010, 1})}),
                    AlignmentError);
    CHECK_THROWS_AS(align({make("a", {1, 2}), make("a", {1, 2})}), DuplicateNameError);
}

TEST_CASE("dataset construction is validated") {
    Eigen::MatrixXd obs(3, 2);
    obs.setOnes();
    CHECK_THROWS_AS(Dataset({"only_one"}, Period{2003, 1}, obs), ShapeError);
    obs(1, 1) = std::nan("");
    CHECK_THROWS_AS(Dataset({"a", "b"}, Period{2003, 1}, obs), DomainError);
}

TEST_CASE("dataset lookups and differencing") {
    const Dataset ds = align({make("a", {1, 2, 4}), make("b", {0, 1, 3})});
    CHECK(ds.index_of("b") == 1);
    CHECK_THROWS_AS(ds.index_of("zz"), MissingColumnError);
    const Dataset d = ds.differenced();
    CHECK(d.rows() == 2);
    CHECK(d.start() == Period{2003, 2});
    CHECK(d.observations()(1, 0) == 2.0);
    CHECK(d.name(0) == "D_a");
}
