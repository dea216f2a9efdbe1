#include "one21/model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace one21;

TEST_CASE("rational arithmetic stays canonical and exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> nums(-50, 50);
    std::uniform_int_distribution<int> dens(1, 50);
    for (int trial = 0; trial < 500; ++trial) {
        int a = nums(rng), c = nums(rng);
        int b = dens(rng), d = dens(rng);
        Rational left = make_rational(a, b);
        Rational right = make_rational(c, d);
        Rational sum = left + right;
        // cross multiplication on the raw integers
        CHECK(sum == make_rational(Integer(a) * d + Integer(c) * b, Integer(b) * d));
        CHECK(denom(sum) > 0);
        CHECK(gcd(abs(numer(sum)), denom(sum)) == 1);
        Rational product = left * right;
        CHECK(product == make_rational(Integer(a) * c, Integer(b) * d));
    }
}

TEST_CASE("rational parsing and formatting round trip") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-7/21") == make_rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("1.25") == make_rational(5, 4));
    CHECK(parse_rational("-0.5") == make_rational(-1, 2));
    CHECK(format_rational(make_rational(10, 4)) == "5/2");
    CHECK(format_rational(Rational(3)) == "3");
    CHECK(!try_parse_rational("1/0"));
    CHECK(!try_parse_rational("abc"));
    CHECK(!try_parse_rational(""));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("link capacity from channel gains") {
    CHECK(link_capacity_from_channel({0.0, 0.0}, 10.0) == 0.0);
    CHECK(link_capacity_from_channel({1.0, 0.0}, 1.0) == doctest::Approx(1.0));
    CHECK(link_capacity_from_channel({1.0, 0.0}, 3.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(link_capacity_from_channel({1.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(link_capacity_from_channel({NAN, 0.0}, 1.0), std::invalid_argument);

    // monotone in |h| and in P
    double previous = 0.0;
    for (double magnitude = 0.5; magnitude < 4.0; magnitude += 0.5) {
        double value = link_capacity_from_channel({magnitude, 0.0}, 2.0);
        CHECK(value > previous);
        previous = value;
    }
    previous = 0.0;
    for (double power = 0.5; power < 4.0; power += 0.5) {
        double value = link_capacity_from_channel({1.0, 1.0}, power);
        CHECK(value > previous);
        previous = value;
    }

    ChannelSpec spec;
    spec.power = 3.0;
    spec.gains[{0, 1}] = {1.0, 0.0};
    auto caps = real_capacities(spec);
    CHECK(caps.at({0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("rationalization truncates from below within the budget") {
    SUBCASE("already rational values are preserved") {
        auto network = rationalize({{{0, 1}, 1.0}}, 1, DuplexMode::FullDuplex, Rational(1, 10));
        CHECK(network.capacity(0, 1) == 1);
    }
    SUBCASE("sqrt(2) with a 1/100 budget truncates to 141/100") {
        auto network = rationalize({{{0, 1}, std::sqrt(2.0)}}, 1, DuplexMode::FullDuplex,
                                   make_rational(4, 100));
        CHECK(network.capacity(0, 1) == make_rational(141, 100));
    }
    SUBCASE("zero is preserved") {
        auto network = rationalize({{{0, 1}, 0.0}}, 1, DuplexMode::FullDuplex, Rational(1, 10));
        CHECK(network.capacity(0, 1) == 0);
    }
    SUBCASE("epsilon must be positive") {
        CHECK_THROWS_AS(rationalize({}, 1, DuplexMode::FullDuplex, Rational(0)),
                        std::invalid_argument);
    }
    SUBCASE("never overshoots and never lags more than the per-link budget") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> values(0.0, 30.0);
        for (int trial = 0; trial < 200; ++trial) {
            int n_relays = trial % 4;
            double value = values(rng) * std::sqrt(2.0);
            Rational epsilon(1, 100);
            auto network =
                rationalize({{{0, 1}, value}}, n_relays, DuplexMode::FullDuplex, epsilon);
            Rational truncated = network.capacity(0, 1);
            Rational exact = rational_from_double(value);
            CHECK(truncated <= exact);
            CHECK(exact - truncated <=
                  epsilon / Rational((n_relays + 1) * (n_relays + 1)));
        }
    }
}

TEST_CASE("gap formula") {
    const double log2e = std::log2(std::exp(1.0));
    CHECK(gap(0, DuplexMode::FullDuplex) == doctest::Approx(log2e + 2.0).epsilon(1e-12));
    CHECK(gap(0, DuplexMode::FullDuplex) == doctest::Approx(3.4427).epsilon(1e-4));
    CHECK(gap(1, DuplexMode::FullDuplex) ==
          doctest::Approx(2 * log2e + 2 * std::log2(3.0) + std::log2(4.0)).epsilon(1e-12));
    CHECK(gap(1, DuplexMode::FullDuplex) == doctest::Approx(8.0553).epsilon(1e-4));
    CHECK(gap(1, DuplexMode::HalfDuplex) ==
          doctest::Approx(2 * log2e + 2 * std::log2(3.0) + std::log2(3.0)).epsilon(1e-12));
    CHECK(gap(1, DuplexMode::HalfDuplex) == doctest::Approx(7.6403).epsilon(1e-4));
    for (int n = 1; n <= 8; ++n) {
        CHECK(gap(n, DuplexMode::FullDuplex) >= gap(n, DuplexMode::HalfDuplex));
    }
    CHECK_THROWS_AS(gap(-1, DuplexMode::FullDuplex), std::invalid_argument);
}

TEST_CASE("network validation") {
    SUBCASE("a single-relay line is valid") {
        Network network(1, DuplexMode::FullDuplex);
        network.add_link(0, 1, Rational(2));
        network.add_link(1, 2, Rational(3));
        CHECK(validate(network).empty());
        CHECK(network.capacity(0, 1) == 2);
        CHECK(network.capacity(1, 0) == 0);  // absent means zero
    }
    SUBCASE("self-loops are flagged") {
        Network network(1, DuplexMode::FullDuplex);
        network.add_link(1, 1, Rational(1));
        auto violations = validate(network);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("self-loop") != std::string::npos);
    }
    SUBCASE("negative capacities are flagged") {
        Network network(1, DuplexMode::FullDuplex);
        network.add_link(0, 1, Rational(-1));
        auto violations = validate(network);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].find("negative capacity") != std::string::npos);
    }
    SUBCASE("links into the source and out of the destination are flagged") {
        Network network(1, DuplexMode::FullDuplex);
        network.add_link(1, 0, Rational(1));
        network.add_link(2, 1, Rational(1));
        CHECK(validate(network).size() == 2);
    }
    SUBCASE("endpoints outside the node range are rejected outright") {
        Network network(1, DuplexMode::FullDuplex);
        CHECK_THROWS_AS(network.add_link(0, 3, Rational(1)), std::out_of_range);
    }
}
