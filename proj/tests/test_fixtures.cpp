#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "f2uv/fixtures.hpp"

using namespace f2uv;

namespace {

bool parse_fails_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
        parse_fixture_file(in, "t.tbl");
        return false;
    } catch (const std::invalid_argument& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
}

} // namespace

TEST_CASE("fixture rows parse from text") {
    std::istringstream in(
        "# catalogue excerpt\n"
        "\n"
        "row M  | bdc 3 1 | 6 3 3 | 2 1 5 | n=24 dim=12 d=8 type=II family=golay\n"
        "row C1 | dc 3 1 | 2 3 3 1 5 1 1 1 7 3 3 7 | n=72 dim=36 d=12 type=II "
        "family=W72_II alpha=-3996\n");
    const std::vector<FixtureRow> rows = parse_fixture_file(in, "t.tbl");
    REQUIRE(rows.size() == 2);

    CHECK(rows[0].id == "M");
    CHECK(rows[0].spec.to_line() == "bdc 3 1 | 6 3 3 | 2 1 5");
    CHECK(rows[0].expected.n == 24);
    CHECK(rows[0].expected.dim == 12);
    CHECK(rows[0].expected.d == 8);
    CHECK(rows[0].expected.type == "II");
    CHECK(rows[0].expected.family == "golay");
    CHECK(!rows[0].expected.alpha);
    CHECK(!rows[0].expected.beta);

    CHECK(rows[1].id == "C1");
    REQUIRE(rows[1].expected.alpha);
    CHECK(*rows[1].expected.alpha == -3996);
}

TEST_CASE("fixture parse errors carry the line number") {
    CHECK(parse_fails_with("row M no pipes here\n", "t.tbl:1"));
    CHECK(parse_fails_with("row M | dc 2 1\n", "need 'row"));                 // one '|' only
    CHECK(parse_fails_with("arrow M | dc 2 1 | 1 0 | n=4\n", "start with 'row"));
    CHECK(parse_fails_with("row M extra | dc 2 1 | 1 0 | n=4\n", "unexpected"));
    CHECK(parse_fails_with("row M | dc 2 1 | 1 0 | n4\n", "key=value"));
    CHECK(parse_fails_with(
        "row M | dc 2 1 | 1 0 | n=4 dim=2 d=2 type=I family=other color=red\n",
        "unknown key 'color'"));
    CHECK(parse_fails_with("row M | dc 2 1 | 1 0 | n=4 dim=2\n", "required"));
    CHECK(parse_fails_with("row M | dc 2 1 | 1 0 | n=abc dim=2 d=2 type=I family=x\n",
                           "bad value"));
    CHECK(parse_fails_with("row M | zc 2 1 | 1 0 | n=4 dim=2 d=2 type=I family=x\n",
                           "t.tbl:1"));
    CHECK(parse_fails_with("# fine\nrow M | dc 2 1 | 1 0 | d=2\n", "t.tbl:2"));
}

TEST_CASE("the shipped table ids skip t7") {
    const auto& ids = fixture_table_ids();
    CHECK(ids.size() == 8);
    CHECK(std::find(ids.begin(), ids.end(), "golay") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "t8") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "t7") == ids.end());
    CHECK_THROWS_AS(load_fixture_table(fixture_path(default_data_dir(), "t7")),
                    std::runtime_error);
}

TEST_CASE("the Golay table passes the base checks") {
    const auto rows = load_fixture_table(fixture_path(default_data_dir(), "golay"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "M");
    CHECK(rows[1].id == "Mp");
    for (const FixtureRow& row : rows) {
        const RowOutcome out = check_fixture_row(row, false, 1);
        CHECK_MESSAGE(out.pass, row.id, ": ", out.detail);
        CHECK(out.seconds < 10.0);
    }
}

TEST_CASE("wrong expectations are caught with a detail message") {
    const auto rows = load_fixture_table(fixture_path(default_data_dir(), "golay"));
    REQUIRE(!rows.empty());

    FixtureRow wrong_d = rows[0];
    wrong_d.expected.d = 10;
    RowOutcome out = check_fixture_row(wrong_d, false, 1);
    CHECK_FALSE(out.pass);
    CHECK(out.detail.find("d != 8") != std::string::npos);

    FixtureRow wrong_type = rows[0];
    wrong_type.expected.type = "I";
    out = check_fixture_row(wrong_type, false, 1);
    CHECK_FALSE(out.pass);
    CHECK(out.detail.find("Type") != std::string::npos);

    FixtureRow wrong_n = rows[0];
    wrong_n.expected.n = 22;
    out = check_fixture_row(wrong_n, false, 1);
    CHECK_FALSE(out.pass);
    CHECK(out.detail.find("length") != std::string::npos);
}

TEST_CASE("a [36,18,8] row re-derives its enumerator family") {
    const auto rows = load_fixture_table(fixture_path(default_data_dir(), "t1"));
    REQUIRE(rows.size() == 4);
    const RowOutcome out = check_fixture_row(rows[0], false, 1);
    CHECK_MESSAGE(out.pass, rows[0].id, ": ", out.detail);

    FixtureRow wrong_family = rows[0];
    wrong_family.expected.family = "W36_2";
    const RowOutcome bad = check_fixture_row(wrong_family, false, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("family") != std::string::npos);
}
