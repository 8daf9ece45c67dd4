#include "f2uv/gray.hpp"

#include <bit>

namespace f2uv {

Gray::Gray(const Ring& r) : ring_(r) {
    if (ring_.bits() <= 16) {
        table_.resize(static_cast<std::size_t>(ring_.size()));
        for (std::uint64_t a = 0; a < ring_.size(); ++a)
            table_[static_cast<std::size_t>(a)] = compute_image(static_cast<elt>(a));
    }
}

std::uint32_t Gray::compute_image(elt a) const {
    const int k = ring_.k(), m = ring_.m();
    const std::uint32_t kmask = (k == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << k) - 1);
    std::uint32_t img = 0;
    for (int t = 1; t <= m; ++t) {
        const auto [lo, hi] = gray_interval(m, t);
        // outer block t: sum over v-degrees j in [lo, hi] of c_j in R_{k,1}
        std::uint32_t block = 0;
        for (int j = lo; j <= hi; ++j)
            block ^= (a >> (j * k)) & kmask;
        // phi_{k1} of the block
        for (int s = 1; s <= k; ++s) {
            const auto [l2, h2] = gray_interval(k, s);
            int bit = 0;
            for (int i = l2; i <= h2; ++i)
                bit ^= (block >> i) & 1;
            if (bit)
                img |= std::uint32_t{1} << ((t - 1) * k + (s - 1));
        }
    }
    return img;
}

int Gray::lee_weight_elt(elt a) const {
    return std::popcount(image_elt(a));
}

BinaryWord Gray::image(const std::vector<elt>& v) const {
    const int k = ring_.k(), m = ring_.m();
    const int n = static_cast<int>(v.size());
    BinaryWord out(k * m * n);
    for (int c = 0; c < n; ++c) {
        const std::uint32_t img = image_elt(v[static_cast<std::size_t>(c)]);
        for (int t = 0; t < m; ++t)
            for (int s = 0; s < k; ++s)
                if ((img >> (t * k + s)) & 1)
                    out.set(t * (k * n) + s * n + c, true);
    }
    return out;
}

std::uint64_t Gray::lee_weight(const std::vector<elt>& v) const {
    // the per-coordinate images scatter into disjoint positions, so the Lee
    // weight of a vector is the sum of its coordinates' Lee weights
    std::uint64_t s = 0;
    for (elt e : v)
        s += static_cast<std::uint64_t>(lee_weight_elt(e));
    return s;
}

} // namespace f2uv
