#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gait/csv.hpp"
#include "gait/errors.hpp"
#include "gait/rng.hpp"

#include <sstream>

using namespace gait;

TEST_CASE("read_string parses a plain table") {
    const auto t = csv::read_string("a,b,c\n1,2,3\n4,5,6\n");
    REQUIRE(t.header == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"1", "2", "3"});
    CHECK(t.rows[1] == std::vector<std::string>{"4", "5", "6"});
}

TEST_CASE("read_string handles CRLF line endings and a missing final newline") {
    const auto t = csv::read_string("a,b\r\n1,2\r\n3,4");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1] == std::vector<std::string>{"3", "4"});
}

TEST_CASE("quoted fields keep commas, newlines, and doubled quotes") {
    const auto t = csv::read_string("a,b\n\"x,y\",\"line1\nline2\"\n\"he said \"\"hi\"\"\",z\n");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "x,y");
    CHECK(t.rows[0][1] == "line1\nline2");
    CHECK(t.rows[1][0] == "he said \"hi\"");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(csv::read_string(""), EmptyFileError);
    CHECK_THROWS_AS(csv::read_string("a,b\n\"open,2\n"), CsvFormatError);
    CHECK_THROWS_AS(csv::read_string("a,b\nx\"y,2\n"), CsvFormatError);
    // field count must match the header
    CHECK_THROWS_AS(csv::read_string("a,b\n1,2,3\n"), CsvFormatError);
    CHECK_THROWS_AS(csv::read_string("a,b\n1\n"), CsvFormatError);
}

TEST_CASE("header-only input yields zero rows") {
    const auto t = csv::read_string("a,b,c\n");
    CHECK(t.header.size() == 3);
    CHECK(t.rows.empty());
}

TEST_CASE("write_row and read_string round-trip awkward fields") {
    const std::vector<std::string> fields = {"plain", "with,comma", "with\"quote",
                                             "multi\nline", ""};
    std::ostringstream out;
    out << "c0,c1,c2,c3,c4\n";
    csv::write_row(out, fields);
    const auto t = csv::read_string(out.str());
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0] == fields);
}

TEST_CASE("parse_double accepts only complete finite numbers") {
    double v = 0.0;
    CHECK(csv::parse_double("1.5", v));
    CHECK(v == 1.5);
    CHECK(csv::parse_double("-3e-2", v));
    CHECK(v == -0.03);
    CHECK_FALSE(csv::parse_double("", v));
    CHECK_FALSE(csv::parse_double("1.5x", v));
    CHECK_FALSE(csv::parse_double("x1.5", v));
    CHECK_FALSE(csv::parse_double("1.5 ", v));
    CHECK_FALSE(csv::parse_double("nan", v));
    CHECK_FALSE(csv::parse_double("inf", v));
}

TEST_CASE("parse_int accepts only complete integers") {
    long long v = 0;
    CHECK(csv::parse_int("42", v));
    CHECK(v == 42);
    CHECK(csv::parse_int("-7", v));
    CHECK(v == -7);
    CHECK_FALSE(csv::parse_int("", v));
    CHECK_FALSE(csv::parse_int("4.2", v));
    CHECK_FALSE(csv::parse_int("42x", v));
}

TEST_CASE("format_double round-trips random doubles exactly") {
    Rng rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        const double x = (rng.uniform() - 0.5) * std::pow(10.0, rng.bounded(13)) *
                         (rng.bounded(2) ? 1.0 : 1e-6);
        double back = 0.0;
        REQUIRE(csv::parse_double(csv::format_double(x), back));
        REQUIRE(back == x);
    }
}

TEST_CASE("fixed formatting is stable") {
    CHECK(csv::fixed2(0.0) == "0.00");
    CHECK(csv::fixed2(2.405) == "2.40");  // nearest double sits just below 2.405
    CHECK(csv::fixed2(-1.0) == "-1.00");
    CHECK(csv::fixed4(0.12345) == "0.1235"); // nearest double sits just above
    CHECK(csv::fixed4(3.0) == "3.0000");
}
