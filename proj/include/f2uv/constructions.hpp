#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "f2uv/ring_code.hpp"

namespace f2uv {

// One construction over R_{k,m}, serializable as a single spec line:
//   dc  k m | r1 r2 ... rn
//   bdc k m | x y z | r1 ... r_{n-1}
//   fc  k m | a1 ... an | b1 ... bn
// with all entries in the canonical integer encoding.
struct ConstructionSpec {
    enum class Kind { DC, BDC, FC };
    Kind kind = Kind::DC;
    int k = 0, m = 0;
    std::vector<std::uint64_t> row_a;   // dc first row / bdc core first row / fc A first row
    std::vector<std::uint64_t> row_b;   // fc B first row
    std::uint64_t x = 0, y = 0, z = 0;  // bdc border

    int length() const;                 // code length n over the ring
    std::string to_line() const;
};

ConstructionSpec parse_spec_line(const std::string& line);   // throws std::invalid_argument

// Reads one spec per non-empty, non-'#' line; errors carry the line number.
std::vector<ConstructionSpec> parse_spec_file(std::istream& in, const std::string& name);

// Circulant matrix: row i is the cyclic right shift of the first row by i.
RingMatrix circulant(const Ring& ring, const std::vector<elt>& first);

// [I_n | M]
RingMatrix double_circulant(const Ring& ring, const std::vector<elt>& first);

// [I_n | B] with B = [[x, y ... y], [z ... z | core circulant]] of order n
RingMatrix bordered_double_circulant(const Ring& ring, elt x, elt y, elt z,
                                     const std::vector<elt>& core);

// [I_2n | [[A, B], [B^t, A^t]]]
RingMatrix four_circulant(const Ring& ring, const std::vector<elt>& a,
                          const std::vector<elt>& b);

// Self-duality precondition of the four-circulant shape: A A^t + B B^t = I_n.
bool four_circulant_condition(const Ring& ring, const std::vector<elt>& a,
                              const std::vector<elt>& b);

struct Construction {
    RingMatrix generator;
    // set for FC only: whether A A^t + B B^t = I_n held (the matrix is
    // returned either way)
    std::optional<bool> fc_condition;
};

Construction build(const ConstructionSpec& spec);

// Entry-wise projection mu of the defining entries (for lift seeds and the
// projection-compatibility property).
ConstructionSpec project_spec(const ConstructionSpec& spec);

} // namespace f2uv
