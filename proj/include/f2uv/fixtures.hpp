#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2uv/constructions.hpp"

namespace f2uv {

// One catalogued code: a construction plus the published invariants it must
// reproduce.  Serialized one per line as
//   row <id> | <construction spec line> | key=value ...
// with keys n, dim, d (binary parameters), type (I/II), family
// (golay/W36_1/.../W72_II) and the family parameter alpha or beta.
struct FixtureExpected {
    int n = -1;
    int dim = -1;
    int d = -1;
    std::string type;
    std::string family;
    std::optional<long long> alpha;
    std::optional<long long> beta;
};

struct FixtureRow {
    std::string id;
    ConstructionSpec spec;
    FixtureExpected expected;
};

std::vector<FixtureRow> parse_fixture_file(std::istream& in, const std::string& name);
std::vector<FixtureRow> load_fixture_table(const std::string& path);

// Table ids shipped under the data directory (as <id>.tbl).
const std::vector<std::string>& fixture_table_ids();
std::string default_data_dir();                       // compile-time F2UV_DATA_DIR
std::string fixture_path(const std::string& data_dir, const std::string& table_id);

struct RowOutcome {
    std::string id;
    bool pass = false;
    std::string detail;      // first failed check, or a short summary
    double seconds = 0.0;
};

// Base depth re-derives everything cheap: the construction, ring and binary
// self-duality, projection self-duality, dimensions, Type, and
//   n = 24: the full weight enumerator
//   n = 36: the full weight enumerator, d, and the family counts
//   n = 66: exact d by information sets
//   n = 72: a d >= 12 information-set certificate
// Extended depth adds the weight census through weight 12 for n in {66, 72},
// pinning d = 12 exactly and the published alpha/beta.
RowOutcome check_fixture_row(const FixtureRow& row, bool extended, int threads);

} // namespace f2uv
