#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f2uv/binary.hpp"
#include "f2uv/gray.hpp"
#include "f2uv/ring.hpp"

namespace f2uv {

// Dense generator matrix over R_{k,m}.
struct RingMatrix {
    Ring ring;
    int rows = 0, cols = 0;
    std::vector<elt> a;

    RingMatrix(const Ring& r, int rows_, int cols_)
        : ring(r), rows(rows_), cols(cols_),
          a(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0) {}

    elt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    elt at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::vector<elt> row_vec(int r) const {
        return {a.begin() + static_cast<std::size_t>(r) * cols,
                a.begin() + (static_cast<std::size_t>(r) + 1) * cols};
    }
    std::string to_string() const;    // integer-encoded entries, one row per line
};

// <a, b> = sum_i a_i b_i in R_{k,m}
elt inner_product(const Ring& ring, const std::vector<elt>& a, const std::vector<elt>& b);

// True iff the left rows x rows block is the identity.
bool is_standard_form(const RingMatrix& g);

// Self-duality test for a free code in standard form [I_n | A]: over a
// characteristic-2 ring, C = C-perp iff A A^t = I_n.  Throws
// std::invalid_argument unless g is rows x 2*rows in standard form.
bool is_self_dual_free(const RingMatrix& g);

// Binary generator of the Gray image: phi(u^i v^j * row) for every basis
// monomial and every row (km * rows rows of length km * cols).
BinaryMatrix gray_image_generator(const Gray& gray, const RingMatrix& g);

// Packed ring vectors: coordinate c occupies bits [c*km, (c+1)*km).
std::uint64_t pack_vec(const Ring& ring, const std::vector<elt>& v);
std::vector<elt> unpack_vec(const Ring& ring, std::uint64_t packed, int n);

// All codewords (packed, sorted, deduplicated) of the code generated by the
// rows of g over R: every R-linear combination of the rows.  Throws
// std::domain_error when |R|^rows exceeds the budget or km*n > 24.
std::vector<std::uint64_t> enumerate_codewords(const RingMatrix& g,
                                               std::uint64_t budget = std::uint64_t{1} << 24);

// Exhaustive dual: all packed vectors orthogonal to every row of g.
// Requires km*n <= 24.
std::vector<std::uint64_t> brute_force_dual(const RingMatrix& g);

bool brute_force_self_dual(const RingMatrix& g);

// Set equality phi(C-perp) = phi(C)-perp, both sides computed by brute force
// (the left via the ring dual, the right via binary nullspace enumeration).
// Requires km*n <= 24.
bool check_gray_duality(const Gray& gray, const RingMatrix& g);

} // namespace f2uv
