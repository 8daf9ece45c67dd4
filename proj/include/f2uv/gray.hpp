#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "f2uv/binary.hpp"
#include "f2uv/ring.hpp"

namespace f2uv {

// Nested interval schedule defining the Gray map: block t (t = 1..order) of
// the order-o map is the sum of coefficients a_i over i in [l_t, r_t] with
//   l_t = floor(t/2),  r_t = o - 1 - floor((t-1)/2).
// Order 2 gives (a0+a1, a1); order 3 gives (a0+a1+a2, a1+a2, a1); order 4
// gives (a0+a1+a2+a3, a1+a2+a3, a1+a2, a2).
constexpr std::pair<int, int> gray_interval(int order, int t) {
    return {t / 2, order - 1 - (t - 1) / 2};
}

// phi_{km}: R_{k,m}^n -> F_2^{kmn}.  Each coordinate is first written as
// sum_j c_j v^j with c_j in R_{k,1}; the order-m schedule produces m outer
// blocks (partial sums of the c_j), and phi_{k1} with the order-k schedule
// expands each outer block into k bits.  For a vector, output bit
// t*(k*n) + s*n + c holds the (outer t, inner s) bit of coordinate c.
class Gray {
public:
    explicit Gray(const Ring& r);

    const Ring& ring() const { return ring_; }

    // km-bit image of one element, bit t*k + s
    std::uint32_t image_elt(elt a) const {
        return table_.empty() ? compute_image(a) : table_[a];
    }
    int lee_weight_elt(elt a) const;

    BinaryWord image(const std::vector<elt>& v) const;
    std::uint64_t lee_weight(const std::vector<elt>& v) const;

private:
    Ring ring_;
    std::vector<std::uint32_t> table_;   // precomputed when 2^bits is small

    std::uint32_t compute_image(elt a) const;
};

} // namespace f2uv
