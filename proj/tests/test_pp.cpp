#include <doctest.h>

#include <set>

#include "latinpp/pp.hpp"
#include "latinpp/reference.hpp"

using namespace latinpp;

TEST_CASE("permutation predicate") {
    CHECK(is_pp(UniPoly::parse(Field::of(4), "x^2")));
    CHECK_FALSE(is_pp(UniPoly::parse(Field::of(5), "x^2")));
    CHECK(is_pp(UniPoly::parse(Field::of(5), "3*x + 1")));
    CHECK_FALSE(is_pp(UniPoly::constant(Field::of(5), 2)));
}

TEST_CASE("enumeration of GF(2) and GF(4) permutation polynomials") {
    const Field& k2 = Field::of(2);
    std::vector<std::string> small;
    enumerate_pps(k2, [&](const UniPoly& f) { small.push_back(f.str()); });
    CHECK(small == std::vector<std::string>{"x", "x + 1"});

    const Field& k4 = Field::of(4);
    int total = 0, deg1 = 0, deg2 = 0;
    std::set<std::vector<uint8_t>> coeffs;
    enumerate_pps(k4, [&](const UniPoly& f) {
        ++total;
        CHECK(is_pp(f));
        if (f.degree() == 1) ++deg1;
        if (f.degree() == 2) ++deg2;
        coeffs.insert(f.coeffs());
    });
    CHECK(total == 24);
    CHECK(deg1 == 12);
    CHECK(deg2 == 12);
    CHECK(coeffs.size() == 24);  // distinct polynomials
}

TEST_CASE("a polynomial permutes iff it appears in the enumeration") {
    const Field& k = Field::of(4);
    std::set<std::vector<uint8_t>> enumerated;
    enumerate_pps(k, [&](const UniPoly& f) { enumerated.insert(f.coeffs()); });
    for (int code = 0; code < 256; ++code) {
        std::vector<uint8_t> c = {static_cast<uint8_t>(code & 3),
                                  static_cast<uint8_t>((code >> 2) & 3),
                                  static_cast<uint8_t>((code >> 4) & 3),
                                  static_cast<uint8_t>((code >> 6) & 3)};
        UniPoly f(k, c);
        CHECK(is_pp(f) == (enumerated.count(f.coeffs()) > 0));
    }
}

TEST_CASE("degree census matches the published reference rows") {
    for (const auto& row : reference::pp_census_table()) {
        if (row.q > 9) continue;
        DegreeCensus census = degree_census(Field::of(row.q));
        CHECK(census.counts == row.counts);
    }
}

TEST_CASE("degree census invariants") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        DegreeCensus census = degree_census(Field::of(q));
        long long factorial = 1;
        for (int i = 2; i <= q; ++i) factorial *= i;
        CHECK(census.total() == factorial);
        CHECK(census.counts.at(1) == static_cast<long long>(q) * (q - 1));
        for (int d = 2; d <= q - 1; ++d)
            if ((q - 1) % d == 0) CHECK(census.counts.count(d) == 0);
    }
}

TEST_CASE("partial census sum at q=8 through degree five") {
    DegreeCensus census = degree_census(Field::of(8));
    long long partial = 0;
    for (const auto& [d, n] : census.counts)
        if (d <= 5) partial += n;
    CHECK(partial == 5376);
}

TEST_CASE("closed-form characterization agrees with the predicate exhaustively") {
    const Field& k4 = Field::of(4);
    for (int code = 0; code < 256; ++code) {
        std::vector<uint8_t> c = {static_cast<uint8_t>(code & 3),
                                  static_cast<uint8_t>((code >> 2) & 3),
                                  static_cast<uint8_t>((code >> 4) & 3),
                                  static_cast<uint8_t>((code >> 6) & 3)};
        UniPoly f(k4, c);
        CHECK(check_characterization(f) == is_pp(f));
    }
    const Field& k5 = Field::of(5);
    for (int code = 0; code < 3125; ++code) {
        int t = code;
        std::vector<uint8_t> c(5);
        for (int i = 0; i < 5; ++i) {
            c[i] = static_cast<uint8_t>(t % 5);
            t /= 5;
        }
        UniPoly f(k5, c);
        CHECK(check_characterization(f) == is_pp(f));
    }
}

TEST_CASE("characterization spot values") {
    const Field& k4 = Field::of(4);
    CHECK(check_characterization(UniPoly::parse(k4, "2*x^2 + 1")));
    CHECK_FALSE(check_characterization(UniPoly::parse(k4, "x^2 + x")));
    const Field& k5 = Field::of(5);
    CHECK_FALSE(check_characterization(UniPoly::parse(k5, "x^3 + x")));
    CHECK_THROWS_AS(check_characterization(UniPoly::identity(Field::of(7))), usage_error);
}

TEST_CASE("cubics over GF(5) permute iff b^2 = 3c") {
    const Field& k = Field::of(5);
    for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
            for (int d = 0; d < 5; ++d) {
                UniPoly f(k, {static_cast<uint8_t>(d), static_cast<uint8_t>(c),
                              static_cast<uint8_t>(b), 1});
                bool constraint = k.mul(b, b) == k.mul(3, c);
                CHECK(is_pp(f) == constraint);
            }
}

TEST_CASE("capacity guards") {
    CHECK_THROWS_AS(degree_census(Field::of(13)), capacity_error);
    CHECK_THROWS_AS(degree_census(Field::of(11)), capacity_error);  // needs allow_large
    CHECK_THROWS_AS(enumerate_pps(Field::of(13), [](const UniPoly&) {}), capacity_error);
}

TEST_CASE("order-5 permutation set matches the enumeration exhaustively") {
    const Field& k = Field::of(5);
    std::set<std::vector<uint8_t>> enumerated;
    enumerate_pps(k, [&](const UniPoly& f) { enumerated.insert(f.coeffs()); });
    CHECK(enumerated.size() == 120);
    for (int code = 0; code < 3125; ++code) {
        int t = code;
        std::vector<uint8_t> c(5);
        for (int i = 0; i < 5; ++i) {
            c[i] = static_cast<uint8_t>(t % 5);
            t /= 5;
        }
        UniPoly f(k, c);
        CHECK(is_pp(f) == (enumerated.count(f.coeffs()) > 0));
    }
}
