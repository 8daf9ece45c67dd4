// Projection / lift search.
//
// mu reduces each entry mod <u, v>; a lift replaces each defining entry of a
// binary seed construction by a ring element with that entry as constant
// coefficient.  Units and non-units split the ring exactly in half, so each
// entry has 2^{km-1} admissible values and the candidate space is the mixed-
// radix integer range [0, (2^{km-1})^E).  The scan order (entry 0 least
// significant) is part of the interface: candidate indices are reported and
// reproducible across thread counts, and sampled runs draw entry digits from
// a single seeded mt19937_64 in sample order.

#include "f2uv/lift.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "f2uv/gray.hpp"

namespace f2uv {

BinaryMatrix project(const RingMatrix& g) {
    BinaryMatrix b(g.rows, g.cols);
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c)
            b.set(r, c, project(g.at(r, c)) != 0);
    return b;
}

namespace {

int exact_binary_distance(const BinaryMatrix& g) {
    const int r = rank(g);
    if (r == 0)
        throw std::domain_error("exact_binary_distance(): the zero code has no distance");
    if (r <= 30) return min_distance_exhaustive(g);
    return min_distance_infoset(g).d;
}

} // namespace

bool check_distance_bound(const RingMatrix& g, int* d_lee, int* d_proj) {
    const int dp = exact_binary_distance(project(g));
    const Gray gray(g.ring);
    const int dl = exact_binary_distance(gray_image_generator(gray, g));
    if (d_lee) *d_lee = dl;
    if (d_proj) *d_proj = dp;
    return dl <= 2 * g.ring.m() * dp;
}

namespace {

int entry_count(const ConstructionSpec& s) {
    switch (s.kind) {
    case ConstructionSpec::Kind::DC: return static_cast<int>(s.row_a.size());
    case ConstructionSpec::Kind::BDC: return 3 + static_cast<int>(s.row_a.size());
    default: return static_cast<int>(s.row_a.size() + s.row_b.size());
    }
}

std::uint64_t get_entry(const ConstructionSpec& s, int i) {
    switch (s.kind) {
    case ConstructionSpec::Kind::DC:
        return s.row_a[static_cast<std::size_t>(i)];
    case ConstructionSpec::Kind::BDC:
        if (i == 0) return s.x;
        if (i == 1) return s.y;
        if (i == 2) return s.z;
        return s.row_a[static_cast<std::size_t>(i - 3)];
    default:
        if (i < static_cast<int>(s.row_a.size())) return s.row_a[static_cast<std::size_t>(i)];
        return s.row_b[static_cast<std::size_t>(i) - s.row_a.size()];
    }
}

void set_entry(ConstructionSpec& s, int i, std::uint64_t v) {
    switch (s.kind) {
    case ConstructionSpec::Kind::DC:
        s.row_a[static_cast<std::size_t>(i)] = v;
        return;
    case ConstructionSpec::Kind::BDC:
        if (i == 0) s.x = v;
        else if (i == 1) s.y = v;
        else if (i == 2) s.z = v;
        else s.row_a[static_cast<std::size_t>(i - 3)] = v;
        return;
    default:
        if (i < static_cast<int>(s.row_a.size())) s.row_a[static_cast<std::size_t>(i)] = v;
        else s.row_b[static_cast<std::size_t>(i) - s.row_a.size()] = v;
        return;
    }
}

// digit c in [0, 2^{km-1}) -> the c-th lift of the given seed bit
elt lift_value(std::uint64_t digit, int bit) {
    return static_cast<elt>((digit << 1) | static_cast<unsigned>(bit));
}

struct Bucket {
    LiftResult rep;
};

using BucketKey = std::vector<std::uint64_t>;   // [d, w0, A_w0, w1, A_w1, ...]

struct Worker {
    const LiftSearchSpec* spec = nullptr;
    const std::vector<int>* seed_bits = nullptr;
    std::uint64_t half = 0;
    std::map<BucketKey, Bucket> buckets;
    std::uint64_t candidates = 0;
    std::uint64_t self_dual = 0;
    std::uint64_t met_target = 0;

    void consider(std::uint64_t index, const std::vector<std::uint64_t>& digits) {
        ++candidates;
        ConstructionSpec cand = spec->seed;
        const int ec = entry_count(cand);
        for (int e = 0; e < ec; ++e)
            set_entry(cand, e, lift_value(digits[static_cast<std::size_t>(e)],
                                          (*seed_bits)[static_cast<std::size_t>(e)]));
        const Construction c = build(cand);
        if (c.fc_condition && !*c.fc_condition) return;
        if (!is_self_dual_free(c.generator)) return;
        ++self_dual;

        const Gray gray(c.generator.ring);
        const BinaryMatrix b = gray_image_generator(gray, c.generator);
        const int dim = c.generator.ring.bits() * c.generator.rows;
        const int len = c.generator.ring.bits() * c.generator.cols;

        WeightEnumerator we;
        if (dim <= 20) {
            we = weight_enumerator(b);
            int d = 0;
            for (int w = 1; w <= len && d == 0; ++w)
                if (we.at(w) > 0) d = w;
            if (spec->d_target > 0 && d < spec->d_target) return;
        } else {
            if (spec->d_target > 0) {
                const DistanceResult res = min_distance_infoset(b, spec->d_target, spec->d_target);
                if (res.d < spec->d_target) return;
            }
            we = weight_census(b, std::min(16, len), 1);
        }
        ++met_target;

        SDType type = SDType::NotSelfDual;
        if (is_self_dual(b)) type = is_type_ii(b) ? SDType::TypeII : SDType::TypeI;
        SelfDualProfile profile = extract_parameters(we, len, type);

        BucketKey key;
        key.push_back(static_cast<std::uint64_t>(profile.d < 0 ? 0 : profile.d));
        for (const auto& [w, cnt] : we.counts) {
            if (w == 0 || w > 16) continue;
            key.push_back(static_cast<std::uint64_t>(w));
            key.push_back(cnt);
        }
        auto it = buckets.find(key);
        if (it == buckets.end()) {
            LiftResult r;
            r.candidate = index;
            r.spec = cand;
            r.profile = std::move(profile);
            buckets.emplace(std::move(key), Bucket{std::move(r)});
        } else {
            ++it->second.rep.bucket;
            if (index < it->second.rep.candidate) {
                it->second.rep.candidate = index;
                it->second.rep.spec = cand;
            }
        }
    }

    void run_exhaustive(std::uint64_t total, int digit_bits, unsigned stride, unsigned offset) {
        const int ec = entry_count(spec->seed);
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(ec));
        for (std::uint64_t s = offset; s < total; s += stride) {
            for (int e = 0; e < ec; ++e)
                digits[static_cast<std::size_t>(e)] = (s >> (e * digit_bits)) & (half - 1);
            consider(s, digits);
        }
    }

    // Every worker replays the full sample stream so results do not depend
    // on the thread count; only the owned indices are examined.
    void run_sampled(unsigned stride, unsigned offset) {
        const int ec = entry_count(spec->seed);
        std::mt19937_64 rng(spec->strategy.rng_seed);
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(ec));
        for (std::uint64_t s = 0; s < spec->strategy.sample_count; ++s) {
            for (int e = 0; e < ec; ++e)
                digits[static_cast<std::size_t>(e)] = rng() % half;
            if (s % stride == offset) consider(s, digits);
        }
    }
};

} // namespace

SearchReport lift_search(const LiftSearchSpec& spec) {
    const Ring ring(spec.seed.k, spec.seed.m);
    const int ec = entry_count(spec.seed);
    std::vector<int> seed_bits(static_cast<std::size_t>(ec));
    for (int e = 0; e < ec; ++e) {
        const std::uint64_t v = get_entry(spec.seed, e);
        if (v > 1)
            throw std::invalid_argument("lift_search(): seed entries must be 0 or 1");
        seed_bits[static_cast<std::size_t>(e)] = static_cast<int>(v);
    }

    SearchReport report;

    // the bound d_Lee <= 2m * d(mu(C)) holds for every lift of this seed
    const Construction seed_code = build(project_spec(spec.seed));
    report.seed_distance = exact_binary_distance(project(seed_code.generator));
    if (spec.d_target > 0 && 2 * ring.m() * report.seed_distance < spec.d_target) {
        report.pruned = true;
        report.note = "no lift can reach the target distance: 2m * d(seed) = " +
                      std::to_string(2 * ring.m() * report.seed_distance) + " < " +
                      std::to_string(spec.d_target);
        return report;
    }

    const std::uint64_t half = ring.size() / 2;
    const int digit_bits = ring.bits() - 1;
    const unsigned threads = std::max(1, spec.threads);

    std::uint64_t total = 0;
    if (spec.strategy.mode == LiftStrategy::Mode::Exhaustive) {
        if (digit_bits * ec >= 64 ||
            (std::uint64_t{1} << (digit_bits * ec)) > spec.budget)
            throw std::domain_error(
                "lift_search(): exhaustive candidate space exceeds the budget of " +
                std::to_string(spec.budget) + " (use a sampled strategy)");
        total = std::uint64_t{1} << (digit_bits * ec);
    }

    std::vector<Worker> workers(threads);
    for (auto& w : workers) {
        w.spec = &spec;
        w.seed_bits = &seed_bits;
        w.half = half;
    }
    if (threads == 1) {
        if (spec.strategy.mode == LiftStrategy::Mode::Exhaustive)
            workers[0].run_exhaustive(total, digit_bits, 1, 0);
        else
            workers[0].run_sampled(1, 0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            Worker* w = &workers[t];
            if (spec.strategy.mode == LiftStrategy::Mode::Exhaustive)
                pool.emplace_back([=] { w->run_exhaustive(total, digit_bits, threads, t); });
            else
                pool.emplace_back([=] { w->run_sampled(threads, t); });
        }
        for (auto& th : pool) th.join();
    }

    std::map<BucketKey, Bucket> merged;
    for (auto& w : workers) {
        report.candidates += w.candidates;
        report.self_dual += w.self_dual;
        report.met_target += w.met_target;
        for (auto& [key, bucket] : w.buckets) {
            auto it = merged.find(key);
            if (it == merged.end()) {
                merged.emplace(key, std::move(bucket));
            } else {
                it->second.rep.bucket += bucket.rep.bucket;
                if (bucket.rep.candidate < it->second.rep.candidate) {
                    const std::uint64_t n = it->second.rep.bucket;
                    it->second.rep = std::move(bucket.rep);
                    it->second.rep.bucket = n;
                }
            }
        }
    }

    for (auto& [key, bucket] : merged)
        report.results.push_back(std::move(bucket.rep));
    std::sort(report.results.begin(), report.results.end(),
              [](const LiftResult& a, const LiftResult& b) { return a.candidate < b.candidate; });
    if (report.results.size() > spec.max_results) {
        report.results.resize(spec.max_results);
        report.note = "result list truncated to the first " +
                      std::to_string(spec.max_results) + " buckets in scan order";
    }
    return report;
}

LiftSearchSpec parse_lift_file(std::istream& in, const std::string& name) {
    LiftSearchSpec spec;
    bool have_seed = false;
    bool have_strategy = false;
    std::string line;
    int lineno = 0;
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive)) continue;
        if (directive == "seed") {
            std::string rest;
            std::getline(ls, rest);
            try {
                spec.seed = parse_spec_line(rest);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            have_seed = true;
        } else if (directive == "strategy") {
            std::string mode;
            if (!(ls >> mode)) fail("strategy requires 'exhaustive' or 'sampled <count> [<rng seed>]'");
            if (mode == "exhaustive") {
                spec.strategy.mode = LiftStrategy::Mode::Exhaustive;
            } else if (mode == "sampled") {
                spec.strategy.mode = LiftStrategy::Mode::Sampled;
                if (!(ls >> spec.strategy.sample_count))
                    fail("sampled strategy requires a sample count");
                std::uint64_t s;
                if (ls >> s) spec.strategy.rng_seed = s;
            } else {
                fail("unknown strategy '" + mode + "'");
            }
            have_strategy = true;
        } else if (directive == "dtarget") {
            if (!(ls >> spec.d_target) || spec.d_target < 0) fail("dtarget requires an integer >= 0");
        } else if (directive == "budget") {
            if (!(ls >> spec.budget)) fail("budget requires an integer");
        } else if (directive == "maxresults") {
            if (!(ls >> spec.max_results)) fail("maxresults requires an integer");
        } else {
            fail("unknown directive '" + directive + "'");
        }
        std::string extra;
        if (directive != "seed" && (ls >> extra)) fail("trailing text '" + extra + "'");
    }
    lineno = 0;
    if (!have_seed) fail("missing 'seed' line");
    if (!have_strategy) fail("missing 'strategy' line");
    return spec;
}

std::string to_string(const SearchReport& r) {
    std::string s;
    s += "candidates: " + std::to_string(r.candidates) + "\n";
    s += "self-dual: " + std::to_string(r.self_dual) + "\n";
    s += "met-target: " + std::to_string(r.met_target) + "\n";
    s += "seed-distance: " + std::to_string(r.seed_distance) + "\n";
    s += "buckets: " + std::to_string(r.results.size()) + "\n";
    if (!r.note.empty()) s += "note: " + r.note + "\n";
    for (const auto& res : r.results) {
        s += "--\n";
        s += "candidate: " + std::to_string(res.candidate) + "\n";
        s += "spec: " + res.spec.to_line() + "\n";
        s += "bucket-size: " + std::to_string(res.bucket) + "\n";
        s += to_string(res.profile);
    }
    return s;
}

} // namespace f2uv
