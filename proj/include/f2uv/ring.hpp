#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace f2uv {

// Packed element of R_{k,m} = F_2[u,v]/<u^k, v^m, uv-vu>.  The coefficient of
// u^i v^j sits at bit i + j*k, so the packed word doubles as the canonical
// integer encoding of the element (basis ordering ..., u^2, u, 1 within each
// v-block).
using elt = std::uint32_t;

class Ring {
public:
    // Requires k >= m >= 1 and k*m <= 32; throws std::invalid_argument.
    Ring(int k, int m);

    int k() const noexcept { return k_; }
    int m() const noexcept { return m_; }
    int bits() const noexcept { return bits_; }               // = k*m
    std::uint64_t size() const noexcept { return std::uint64_t{1} << bits_; }
    std::uint64_t unit_count() const noexcept { return size() >> 1; }

    bool operator==(const Ring& o) const noexcept { return k_ == o.k_ && m_ == o.m_; }
    bool operator!=(const Ring& o) const noexcept { return !(*this == o); }

    // Characteristic 2: addition is coefficient-wise XOR.
    static elt add(elt a, elt b) noexcept { return a ^ b; }

    // Truncated 2-D convolution: the coefficient of u^r v^s is the XOR over
    // i1+i2 = r < k, j1+j2 = s < m of c_{i1 j1} d_{i2 j2}; terms reaching
    // u^k or v^m vanish.  Because i1+i2 < k in every surviving term, packed
    // bit positions add without carry, so each set bit p of `a` contributes
    // (b & keep_[p]) << p.
    elt mul(elt a, elt b) const noexcept;

    elt pow(elt a, std::uint64_t e) const noexcept;

    // An element is a unit iff its constant coefficient c_00 is 1.
    static bool is_unit(elt a) noexcept { return (a & 1u) != 0; }

    // a^(2^n) = c_00 for the smallest 2^n >= k, so the inverse of a unit is
    // a^(2^n - 1).  Throws std::domain_error on a non-unit.
    elt inverse(elt a) const;

    bool in_range(std::uint64_t x) const noexcept { return x < size(); }
    // Validates an external integer as an element; throws std::out_of_range.
    elt checked(std::uint64_t x) const;

    // Polynomial string I/O.  Terms joined by '+', each term u^i v^j with
    // exponent-1 and exponent-0 elision ("1", "u", "uv", "u^2v", ...); terms
    // are printed in descending encoded-bit order, so to_string(29) over
    // R_{3,2} is "uv+v+u^2+1".  parse() ignores whitespace and applies the
    // quotient relations (an exponent >= k or >= m makes the term vanish).
    std::string to_string(elt a) const;
    elt parse(std::string_view s) const;   // throws std::invalid_argument

private:
    int k_, m_, bits_;
    std::array<elt, 32> keep_{};
};

} // namespace f2uv
