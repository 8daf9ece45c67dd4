#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "f2uv/binary.hpp"
#include "f2uv/gray.hpp"
#include "f2uv/ring_code.hpp"

namespace f2uv {

// The additive group of the ring is an F_2-space of dimension k*m, so its
// characters are chi_b(a) = (-1)^{|a & b|} and in particular
// chi(a) = (-1)^{popcount(a)} is a generating character: a |-> chi(r*a)
// ranges over all characters as r ranges over the ring.
inline int character(elt a) { return (std::popcount(a) & 1) ? -1 : 1; }

// T[i][j] = chi(i*j), row-major, size 2^{km} x 2^{km}.  Requires k*m <= 8.
std::vector<std::int8_t> character_table(const Ring& ring);

// T * T = |R| * I  (chi is generating, so distinct rows are orthogonal).
bool character_table_orthogonal(const Ring& ring);

// A length-n word over the ring, cast as a multiset of symbols: symbols
// sorted ascending and packed k*m bits each, least significant first.
// Requires k*m*n <= 64 bits (callers here stay within k*m*n <= 16).
std::uint64_t composition_key(const Ring& ring, const std::vector<elt>& word);
std::vector<elt> composition_unpack(const Ring& ring, int n, std::uint64_t key);

// Complete weight enumerator: count of codewords per symbol multiset.
using CompleteEnumerator = std::map<std::uint64_t, std::int64_t>;
CompleteEnumerator complete_enumerator(const Ring& ring, int n,
                                       const std::vector<std::uint64_t>& words);

// Hamming enumerator over ring symbols (weight = number of nonzero symbols).
WeightEnumerator ring_hamming_enumerator(const Ring& ring, int n,
                                         const std::vector<std::uint64_t>& words);

// Lee enumerator: counts indexed by Lee weight, degree k*m*n.
WeightEnumerator lee_enumerator(const Gray& gray, int n,
                                const std::vector<std::uint64_t>& words);

// Hamming-side transform: coefficients of W_C(x + (q-1)y, x - y) / csize.
// Exact in 64-bit integers; throws std::runtime_error if any coefficient
// fails to divide (that would falsify the identity, not round it).
WeightEnumerator hamming_transform(const WeightEnumerator& we, std::uint64_t q,
                                   std::uint64_t csize);

// Lee-side transform: coefficients of
//   sum_w A_w (1-z)^w (1+z)^{N-w} / csize,   N = we.n.
WeightEnumerator lee_transform(const WeightEnumerator& we, std::uint64_t csize);

// Complete transform: expand (1/|C|) sum_{c in C} prod_i (sum_j chi(c_i j) X_j)
// and compare against the dual's complete enumerator.
CompleteEnumerator complete_transform(const Ring& ring, int n,
                                      const CompleteEnumerator& cwe,
                                      std::uint64_t csize);

// Each verifier enumerates C and its dual by brute force (k*m*n <= 16) and
// checks the corresponding identity exactly.
bool verify_macwilliams_complete(const RingMatrix& g);
bool verify_macwilliams_hamming(const RingMatrix& g);
bool verify_macwilliams_lee(const RingMatrix& g);

} // namespace f2uv
