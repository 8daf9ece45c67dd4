// Command-line front end.
//
// Exit codes: 0 all requested checks passed, 1 a check failed, 2 usage or
// input errors (bad spec files, over-budget requests, unknown tables).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "f2uv/binary.hpp"
#include "f2uv/constructions.hpp"
#include "f2uv/fixtures.hpp"
#include "f2uv/gray.hpp"
#include "f2uv/lift.hpp"
#include "f2uv/macwilliams.hpp"
#include "f2uv/ring_code.hpp"

namespace {

using namespace f2uv;

std::string bits_to_string(const BinaryWord& w) {
    std::string s;
    for (int i = 0; i < w.n; ++i) s += w.get(i) ? '1' : '0';
    return s;
}

int cmd_ring_info(int k, int m) {
    const Ring ring(k, m);
    const Gray gray(ring);
    std::cout << "ring: F_2[u,v]/(u^" << k << ", v^" << m << ", uv-vu)\n"
              << "size: " << ring.size() << "\n"
              << "units: " << ring.unit_count() << " (exactly the elements with c_00 = 1)\n"
              << "gray length per symbol: " << ring.bits() << "\n";
    if (ring.bits() <= 6) {
        std::cout << "elements (int, polynomial, lee weight, gray image):\n";
        for (elt a = 0; a < ring.size(); ++a)
            std::cout << "  " << a << "\t" << ring.to_string(a) << "\t"
                      << gray.lee_weight_elt(a) << "\t"
                      << bits_to_string(gray.image({a})) << "\n";
    }
    return 0;
}

int cmd_encode(const std::string& poly, int k, int m) {
    const Ring ring(k, m);
    std::cout << ring.parse(poly) << "\n";
    return 0;
}

int cmd_decode(std::uint64_t value, int k, int m, bool with_gray) {
    const Ring ring(k, m);
    const elt a = ring.checked(value);
    std::cout << ring.to_string(a) << "\n";
    if (with_gray) {
        const Gray gray(ring);
        std::cout << "gray: " << bits_to_string(gray.image({a})) << "\n"
                  << "lee weight: " << gray.lee_weight_elt(a) << "\n";
    }
    return 0;
}

std::vector<ConstructionSpec> load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_spec_file(in, path);
}

int cmd_construct(const std::string& path, bool with_gray) {
    for (const ConstructionSpec& spec : load_spec_file(path)) {
        const Construction c = build(spec);
        std::cout << "# " << spec.to_line() << "\n" << c.generator.to_string();
        if (with_gray) {
            const Gray gray(c.generator.ring);
            std::cout << "# gray image generator\n"
                      << gray_image_generator(gray, c.generator).to_string();
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_check(const std::string& path, bool extended, int threads) {
    bool all_ok = true;
    for (const ConstructionSpec& spec : load_spec_file(path)) {
        std::cout << "# " << spec.to_line() << "\n";
        const Construction c = build(spec);
        const Ring& ring = c.generator.ring;
        if (c.fc_condition)
            std::cout << "four-circulant condition: " << (*c.fc_condition ? "holds" : "fails")
                      << "\n";
        const bool sd = is_self_dual_free(c.generator);
        std::cout << "ring self-dual: " << (sd ? "yes" : "no") << "\n";
        if (!sd) {
            all_ok = false;
            std::cout << "\n";
            continue;
        }
        const Gray gray(ring);
        const BinaryMatrix b = gray_image_generator(gray, c.generator);
        const int dim = ring.bits() * c.generator.rows;
        const int len = ring.bits() * c.generator.cols;
        const bool bsd = is_self_dual(b);
        std::cout << "gray image: [" << len << "," << rank(b) << "]\n"
                  << "binary self-dual: " << (bsd ? "yes" : "no") << "\n";
        all_ok = all_ok && bsd;
        const SDType type =
            bsd ? (is_type_ii(b) ? SDType::TypeII : SDType::TypeI) : SDType::NotSelfDual;

        if (dim <= 20) {
            const WeightEnumerator we = weight_enumerator(b);
            std::cout << to_string(extract_parameters(we, len, type))
                      << "weights (weight,count):\n" << we.to_csv();
        } else if (extended) {
            const WeightEnumerator we = weight_census(b, 12, threads);
            std::cout << to_string(extract_parameters(we, len, type))
                      << "weights through 12 (weight,count):\n" << we.to_csv();
        } else {
            const DistanceResult res = min_distance_infoset(b);
            std::cout << "d: " << res.d << (res.exact ? "" : " (lower bound)") << "\n";
        }
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_reproduce(const std::string& table, const std::string& data_dir, bool extended,
                  int threads) {
    std::vector<std::string> ids;
    if (table == "all") {
        ids = fixture_table_ids();
    } else {
        const auto& known = fixture_table_ids();
        if (std::find(known.begin(), known.end(), table) == known.end()) {
            std::cerr << "no table named '" << table << "'.";
            if (table == "t7")
                std::cerr << " The catalogue numbering skips t7; the shipped tables are:";
            else
                std::cerr << " Shipped tables:";
            for (const auto& id : known) std::cerr << " " << id;
            std::cerr << "\n";
            return 2;
        }
        ids.push_back(table);
    }
    bool all_ok = true;
    for (const std::string& id : ids) {
        const auto rows = load_fixture_table(fixture_path(data_dir, id));
        std::cout << "# table " << id << " (" << rows.size() << " rows)\n";
        for (const FixtureRow& row : rows) {
            const RowOutcome out = check_fixture_row(row, extended, threads);
            all_ok = all_ok && out.pass;
            std::ostringstream secs;
            secs.precision(2);
            secs << std::fixed << out.seconds;
            std::cout << (out.pass ? "PASS" : "FAIL") << " " << id << "/" << out.id << " ("
                      << secs.str() << "s) " << out.detail << "\n";
        }
    }
    std::cout << (all_ok ? "all rows pass" : "FAILURES above") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_macwilliams(int codes, std::uint64_t seed) {
    const std::vector<std::pair<int, int>> params = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
    std::mt19937_64 rng(seed);
    int checked = 0;
    for (const auto& [k, m] : params) {
        const Ring ring(k, m);
        if (!character_table_orthogonal(ring)) {
            std::cout << "FAIL character table orthogonality for k=" << k << " m=" << m << "\n";
            return 1;
        }
    }
    while (checked < codes) {
        const auto& [k, m] = params[checked % params.size()];
        const Ring ring(k, m);
        const int nmax = 16 / ring.bits();
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nmax));
        const int rows = 1 + static_cast<int>(rng() % 2);
        RingMatrix g(ring, rows, n);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < n; ++c)
                g.at(r, c) = static_cast<elt>(rng() % ring.size());
        if (!verify_macwilliams_complete(g) || !verify_macwilliams_hamming(g) ||
            !verify_macwilliams_lee(g)) {
            std::cout << "FAIL MacWilliams identities for\n" << g.to_string();
            return 1;
        }
        ++checked;
    }
    std::cout << "complete/hamming/lee identities verified on " << checked
              << " random codes (seed " << seed << ")\n";
    return 0;
}

int cmd_search(const std::string& path, int threads, std::uint64_t seed_override,
               bool have_seed_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    LiftSearchSpec spec = parse_lift_file(in, path);
    spec.threads = threads;
    if (have_seed_override) spec.strategy.rng_seed = seed_override;
    const SearchReport report = lift_search(spec);
    std::cout << to_string(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-dual codes over F_2[u,v]/(u^k, v^m, uv-vu) and their Gray images"};
    app.require_subcommand(1);
    const int hw = std::max(1u, std::thread::hardware_concurrency());

    int k = 2, m = 1;
    std::string poly;
    std::uint64_t value = 0;
    bool with_gray = false;
    std::string path;
    bool extended = false;
    int threads = hw;
    std::string table, data_dir = default_data_dir();
    int mw_codes = 30;
    std::uint64_t rng_seed = 1;
    bool have_seed = false;

    CLI::App* ring = app.add_subcommand("ring", "ring structure");
    ring->require_subcommand(1);
    CLI::App* ring_info = ring->add_subcommand("info", "print the ring and its Gray/Lee table");
    ring_info->add_option("k", k, "index of nilpotency of u")->required();
    ring_info->add_option("m", m, "index of nilpotency of v")->required();

    CLI::App* encode = app.add_subcommand("encode", "polynomial -> canonical integer");
    encode->add_option("polynomial", poly, "e.g. 'uv+v+u^2+1'")->required();
    encode->add_option("--k", k, "index of nilpotency of u")->required();
    encode->add_option("--m", m, "index of nilpotency of v")->required();

    CLI::App* decode = app.add_subcommand("decode", "canonical integer -> polynomial");
    decode->add_option("value", value, "canonical integer encoding")->required();
    decode->add_option("--k", k, "index of nilpotency of u")->required();
    decode->add_option("--m", m, "index of nilpotency of v")->required();
    decode->add_flag("--gray", with_gray, "also print the Gray image and Lee weight");

    CLI::App* construct = app.add_subcommand("construct", "print generator matrices");
    construct->add_option("file", path, "construction spec file")->required();
    construct->add_flag("--gray", with_gray, "also print the binary Gray generators");

    CLI::App* check = app.add_subcommand("check", "self-duality and parameters of spec files");
    check->add_option("file", path, "construction spec file")->required();
    check->add_flag("--extended", extended, "census through weight 12 for large codes");
    check->add_option("--threads", threads, "worker threads");

    CLI::App* reproduce = app.add_subcommand("reproduce", "re-derive the catalogued tables");
    reproduce->add_option("table", table, "golay, t1..t6, t8, or 'all'")->required();
    reproduce->add_flag("--extended", extended, "also pin d and alpha/beta by weight census");
    reproduce->add_option("--threads", threads, "worker threads");
    reproduce->add_option("--data", data_dir, "directory holding the .tbl files");

    CLI::App* mw = app.add_subcommand("macwilliams", "MacWilliams identities");
    mw->require_subcommand(1);
    CLI::App* mw_self = mw->add_subcommand("selftest", "verify the identities on random codes");
    mw_self->add_option("--codes", mw_codes, "number of random codes");
    mw_self->add_option("--seed", rng_seed, "RNG seed");

    CLI::App* search = app.add_subcommand("search", "lift a binary seed construction");
    search->add_option("file", path, "lift spec file")->required();
    search->add_option("--threads", threads, "worker threads");
    search->add_option("--seed", rng_seed, "override the sampled-strategy RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ring_info->parsed()) return cmd_ring_info(k, m);
        if (encode->parsed()) return cmd_encode(poly, k, m);
        if (decode->parsed()) return cmd_decode(value, k, m, with_gray);
        if (construct->parsed()) return cmd_construct(path, with_gray);
        if (check->parsed()) return cmd_check(path, extended, threads);
        if (reproduce->parsed()) return cmd_reproduce(table, data_dir, extended, threads);
        if (mw->parsed() && mw_self->parsed()) return cmd_macwilliams(mw_codes, rng_seed);
        if (search->parsed()) {
            have_seed = search->count("--seed") > 0;
            return cmd_search(path, threads, rng_seed, have_seed);
        }
        std::cerr << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
