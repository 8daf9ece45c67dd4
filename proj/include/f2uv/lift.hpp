#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "f2uv/binary.hpp"
#include "f2uv/constructions.hpp"
#include "f2uv/ring_code.hpp"

namespace f2uv {

// mu: reduce mod the maximal ideal <u, v>, i.e. keep the constant coefficient.
inline int project(elt a) { return static_cast<int>(a & 1u); }
BinaryMatrix project(const RingMatrix& g);

// Checks d_Lee(C) <= 2m * d(mu(C)): a minimum-weight word of mu(C) is the
// projection of a codeword whose nonzero symbols each carry Lee weight at
// most 2m (scale by u^{k-1} v^{m-1}), so the bound holds whenever mu(C) != 0.
// Throws std::domain_error if mu(C) = 0.  Outputs both distances on request.
bool check_distance_bound(const RingMatrix& g, int* d_lee = nullptr, int* d_proj = nullptr);

struct LiftStrategy {
    enum class Mode { Exhaustive, Sampled };
    Mode mode = Mode::Exhaustive;
    std::uint64_t sample_count = 0;   // Sampled only
    std::uint64_t rng_seed = 1;       // Sampled only (deterministic)
};

// A search is seeded by a binary construction (all defining entries 0/1)
// whose k, m name the *target* ring.  Each candidate replaces entry e by a
// ring element congruent to the seed bit mod <u, v>: bit 1 lifts to one of
// the 2^{km-1} units, bit 0 to one of the 2^{km-1} non-units, so the
// candidate space has size (2^{km-1})^E over the E defining entries.
struct LiftSearchSpec {
    ConstructionSpec seed;
    LiftStrategy strategy;
    int d_target = 0;                   // 0 = keep every self-dual candidate
    std::uint64_t budget = std::uint64_t{1} << 24;   // exhaustive candidate cap
    std::size_t max_results = 32;
    int threads = 1;
};

struct LiftResult {
    std::uint64_t candidate;            // index in the deterministic scan order
    ConstructionSpec spec;
    SelfDualProfile profile;
    std::uint64_t bucket = 1;           // candidates sharing (d, enumerator prefix)
};

struct SearchReport {
    std::vector<LiftResult> results;    // one representative per bucket, scan order
    std::uint64_t candidates = 0;       // candidates examined
    std::uint64_t self_dual = 0;        // candidates passing self-duality
    std::uint64_t met_target = 0;       // ... and the distance filter
    int seed_distance = -1;             // d of the binary seed code
    bool pruned = false;                // 2m * d(seed) < d_target: nothing searched
    std::string note;
};

SearchReport lift_search(const LiftSearchSpec& spec);

// Key-value search description:
//   seed <construction spec line with 0/1 entries>
//   strategy exhaustive | sampled <count> [<rng seed>]
//   dtarget <d>
//   budget <max exhaustive candidates>
//   maxresults <count>
// '#' starts a comment; `seed` and `strategy` are mandatory.
LiftSearchSpec parse_lift_file(std::istream& in, const std::string& name);

std::string to_string(const SearchReport& r);

} // namespace f2uv
