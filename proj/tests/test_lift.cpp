#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "f2uv/lift.hpp"

using namespace f2uv;

namespace {

LiftSearchSpec golay_search() {
    LiftSearchSpec spec;
    spec.seed = parse_spec_line("bdc 3 1 | 0 1 1 | 0 1 1");
    spec.strategy.mode = LiftStrategy::Mode::Exhaustive;
    spec.d_target = 8;
    return spec;
}

bool reports_equal(const SearchReport& a, const SearchReport& b) {
    if (a.candidates != b.candidates || a.self_dual != b.self_dual ||
        a.met_target != b.met_target || a.results.size() != b.results.size())
        return false;
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        if (a.results[i].candidate != b.results[i].candidate) return false;
        if (a.results[i].spec.to_line() != b.results[i].spec.to_line()) return false;
        if (a.results[i].bucket != b.results[i].bucket) return false;
    }
    return true;
}

} // namespace

TEST_CASE("projection of elements and matrices") {
    CHECK(project(elt{5}) == 1);
    CHECK(project(elt{6}) == 0);
    const Ring r32(3, 2);
    RingMatrix g(r32, 1, 3);
    g.at(0, 0) = 29;
    g.at(0, 1) = 10;
    g.at(0, 2) = 0;
    const BinaryMatrix b = project(g);
    CHECK(b.get(0, 0));
    CHECK_FALSE(b.get(0, 1));
    CHECK_FALSE(b.get(0, 2));
}

TEST_CASE("the distance bound holds with equality on the Golay constructions") {
    int d_lee = 0, d_proj = 0;

    const Construction m = build(parse_spec_line("bdc 3 1 | 6 3 3 | 2 1 5"));
    CHECK(check_distance_bound(m.generator, &d_lee, &d_proj));
    CHECK(d_lee == 8);
    CHECK(d_proj == 4);        // mu(M) is the [8,4,4] code: 8 = 2*1*4

    const Construction mp = build(parse_spec_line("bdc 3 2 | 10 11 31 | 10"));
    CHECK(check_distance_bound(mp.generator, &d_lee, &d_proj));
    CHECK(d_lee == 8);
    CHECK(d_proj == 2);        // mu(M') is a [4,2,2] code: 8 = 2*2*2

    const Ring r21(2, 1);
    RingMatrix zero(r21, 1, 2);
    zero.at(0, 0) = r21.parse("u");   // mu maps everything to 0
    CHECK_THROWS_AS(check_distance_bound(zero), std::domain_error);
}

TEST_CASE("exhaustive lift search rediscovers the Golay code") {
    const SearchReport report = lift_search(golay_search());
    CHECK(report.candidates == 4096);          // (2^2)^6 candidates
    CHECK(report.seed_distance == 4);
    CHECK_FALSE(report.pruned);
    CHECK(report.self_dual >= report.met_target);
    CHECK(report.met_target > 0);
    REQUIRE(!report.results.empty());

    bool golay_found = false;
    for (const LiftResult& r : report.results) {
        CHECK(r.profile.d >= 8);
        // every survivor lifts the seed entry-by-entry
        CHECK(project_spec(r.spec).to_line() == project_spec(golay_search().seed).to_line());
        const Construction c = build(r.spec);
        const Gray gray(c.generator.ring);
        const WeightEnumerator we = weight_enumerator(gray_image_generator(gray, c.generator));
        if (we.counts == std::map<int, std::uint64_t>{{0, 1}, {8, 759}, {12, 2576},
                                                      {16, 759}, {24, 1}})
            golay_found = true;
    }
    CHECK(golay_found);

    // deterministic: a second run and a two-worker run give identical reports
    CHECK(reports_equal(report, lift_search(golay_search())));
    LiftSearchSpec two = golay_search();
    two.threads = 2;
    CHECK(reports_equal(report, lift_search(two)));
}

TEST_CASE("sampled searches are reproducible") {
    LiftSearchSpec spec = golay_search();
    spec.strategy.mode = LiftStrategy::Mode::Sampled;
    spec.strategy.sample_count = 300;
    spec.strategy.rng_seed = 42;
    const SearchReport a = lift_search(spec);
    CHECK(a.candidates == 300);
    const SearchReport b = lift_search(spec);
    CHECK(reports_equal(a, b));
    spec.threads = 3;
    CHECK(reports_equal(a, lift_search(spec)));
    spec.threads = 1;
    spec.strategy.rng_seed = 43;
    const SearchReport c = lift_search(spec);
    CHECK(c.candidates == 300);                 // same budget, different stream
}

TEST_CASE("the seed-distance bound prunes hopeless searches") {
    LiftSearchSpec spec;
    spec.seed = parse_spec_line("dc 2 1 | 1 0");   // [I | I]: d(seed) = 2
    spec.strategy.mode = LiftStrategy::Mode::Exhaustive;
    spec.d_target = 8;                              // 2m * 2 = 4 < 8
    const SearchReport report = lift_search(spec);
    CHECK(report.pruned);
    CHECK(report.candidates == 0);
    CHECK(report.results.empty());
    CHECK(!report.note.empty());
}

TEST_CASE("budget and seed validation") {
    LiftSearchSpec spec;
    spec.seed = parse_spec_line("dc 3 1 | 1 0 1 1 0 1 0 1 1 0 1 1 1");   // 13 entries
    spec.strategy.mode = LiftStrategy::Mode::Exhaustive;
    spec.budget = 1 << 20;                          // 4^13 = 2^26 candidates
    CHECK_THROWS_AS(lift_search(spec), std::domain_error);

    LiftSearchSpec bad;
    bad.seed = parse_spec_line("dc 3 1 | 2 1");     // entry 2 is not a bit
    bad.strategy.mode = LiftStrategy::Mode::Exhaustive;
    CHECK_THROWS_AS(lift_search(bad), std::invalid_argument);
}

TEST_CASE("lift files parse with line-numbered errors") {
    std::istringstream good("# golay hunt\n"
                            "seed bdc 3 1 | 0 1 1 | 0 1 1\n"
                            "strategy sampled 500 7\n"
                            "dtarget 8\n"
                            "budget 1048576\n"
                            "maxresults 4\n");
    const LiftSearchSpec spec = parse_lift_file(good, "hunt.lift");
    CHECK(spec.seed.to_line() == "bdc 3 1 | 0 1 1 | 0 1 1");
    CHECK(spec.strategy.mode == LiftStrategy::Mode::Sampled);
    CHECK(spec.strategy.sample_count == 500);
    CHECK(spec.strategy.rng_seed == 7);
    CHECK(spec.d_target == 8);
    CHECK(spec.budget == 1048576);
    CHECK(spec.max_results == 4);

    const auto fails_with = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_lift_file(in, "bad.lift");
            return false;
        } catch (const std::invalid_argument& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
    };
    CHECK(fails_with("strategy exhaustive\n", "missing 'seed'"));
    CHECK(fails_with("seed dc 2 1 | 1 0\n", "missing 'strategy'"));
    CHECK(fails_with("seed dc 2 1 | 1 0\nstrategy sometimes\n", "bad.lift:2"));
    CHECK(fails_with("seed dc 2 1 | 1 0\nstrategy sampled\n", "sample count"));
    CHECK(fails_with("seed dc 2 1 | 1 0\nstrategy exhaustive\ndtarget x\n", "bad.lift:3"));
    CHECK(fails_with("seed dc 2 1 | 1 0\nstrategy exhaustive\nwat 4\n", "unknown directive"));
    CHECK(fails_with("seed dc 9 9 9\nstrategy exhaustive\n", "bad.lift:1"));
}

TEST_CASE("max_results truncates deterministically") {
    LiftSearchSpec spec = golay_search();
    spec.d_target = 0;                      // keep every self-dual candidate
    spec.max_results = 2;
    const SearchReport report = lift_search(spec);
    CHECK(report.results.size() <= 2);
    if (report.results.size() == 2)
        CHECK(report.results[0].candidate < report.results[1].candidate);
    CHECK(!report.note.empty());
}
