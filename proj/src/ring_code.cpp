#include "f2uv/ring_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace f2uv {

std::string RingMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c)
                s += ' ';
            s += std::to_string(at(r, c));
        }
        s += '\n';
    }
    return s;
}

elt inner_product(const Ring& ring, const std::vector<elt>& a, const std::vector<elt>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product(): length mismatch");
    elt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s ^= ring.mul(a[i], b[i]);
    return s;
}

bool is_standard_form(const RingMatrix& g) {
    if (g.cols < g.rows)
        return false;
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.rows; ++c)
            if (g.at(r, c) != (r == c ? 1u : 0u))
                return false;
    return true;
}

bool is_self_dual_free(const RingMatrix& g) {
    if (g.cols != 2 * g.rows || !is_standard_form(g))
        throw std::invalid_argument("is_self_dual_free(): generator must be [I_n | A] of size n x 2n");
    const int n = g.rows;
    // A A^t = I_n entry by entry
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            elt s = 0;
            for (int t = 0; t < n; ++t)
                s ^= g.ring.mul(g.at(r, n + t), g.at(c, n + t));
            if (s != (r == c ? 1u : 0u))
                return false;
        }
    }
    return true;
}

BinaryMatrix gray_image_generator(const Gray& gray, const RingMatrix& g) {
    const Ring& ring = g.ring;
    BinaryMatrix out(0, 0);
    std::vector<elt> scaled(static_cast<std::size_t>(g.cols));
    for (int r = 0; r < g.rows; ++r) {
        for (int b = 0; b < ring.bits(); ++b) {
            const elt basis = elt{1} << b;
            for (int c = 0; c < g.cols; ++c)
                scaled[static_cast<std::size_t>(c)] = ring.mul(basis, g.at(r, c));
            out.append_row(gray.image(scaled));
        }
    }
    return out;
}

std::uint64_t pack_vec(const Ring& ring, const std::vector<elt>& v) {
    std::uint64_t p = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
        p |= static_cast<std::uint64_t>(v[c]) << (c * static_cast<std::size_t>(ring.bits()));
    return p;
}

std::vector<elt> unpack_vec(const Ring& ring, std::uint64_t packed, int n) {
    const std::uint64_t mask = ring.size() - 1;
    std::vector<elt> v(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        v[static_cast<std::size_t>(c)] =
            static_cast<elt>((packed >> (c * ring.bits())) & mask);
    return v;
}

namespace {

void require_small(const RingMatrix& g, const char* fn) {
    if (g.ring.bits() * g.cols > 24)
        throw std::domain_error(std::string(fn) + "(): requires km*n <= 24 (got " +
                                std::to_string(g.ring.bits() * g.cols) + ")");
}

// packed product r * (row c-wise), XORed into acc
std::uint64_t scale_row_packed(const Ring& ring, elt r, const RingMatrix& g, int row) {
    std::uint64_t p = 0;
    for (int c = 0; c < g.cols; ++c)
        p |= static_cast<std::uint64_t>(ring.mul(r, g.at(row, c)))
             << (c * ring.bits());
    return p;
}

} // namespace

std::vector<std::uint64_t> enumerate_codewords(const RingMatrix& g, std::uint64_t budget) {
    require_small(g, "enumerate_codewords");
    const Ring& ring = g.ring;
    // message count |R|^rows, checked against the budget without overflow
    std::uint64_t messages = 1;
    for (int r = 0; r < g.rows; ++r) {
        if (messages > budget >> ring.bits() ||
            (messages << ring.bits()) > budget)
            throw std::domain_error("enumerate_codewords(): |R|^" + std::to_string(g.rows) +
                                    " messages exceed the budget " + std::to_string(budget));
        messages <<= ring.bits();
    }
    // scalar-multiple table per generator row, then walk messages in
    // lexicographic coefficient order
    std::vector<std::vector<std::uint64_t>> scaled(static_cast<std::size_t>(g.rows));
    for (int r = 0; r < g.rows; ++r) {
        scaled[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(ring.size()));
        for (std::uint64_t x = 0; x < ring.size(); ++x)
            scaled[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] =
                scale_row_packed(ring, static_cast<elt>(x), g, r);
    }
    std::vector<std::uint64_t> words;
    words.reserve(static_cast<std::size_t>(messages));
    const std::uint64_t mask = ring.size() - 1;
    for (std::uint64_t msg = 0; msg < messages; ++msg) {
        std::uint64_t word = 0;
        for (int r = 0; r < g.rows; ++r)
            word ^= scaled[static_cast<std::size_t>(r)]
                          [static_cast<std::size_t>((msg >> (r * ring.bits())) & mask)];
        words.push_back(word);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

std::vector<std::uint64_t> brute_force_dual(const RingMatrix& g) {
    require_small(g, "brute_force_dual");
    const Ring& ring = g.ring;
    const int n = g.cols;
    const std::uint64_t space = std::uint64_t{1} << (ring.bits() * n);
    std::vector<std::uint64_t> dual;
    for (std::uint64_t x = 0; x < space; ++x) {
        const std::vector<elt> v = unpack_vec(ring, x, n);
        bool ok = true;
        for (int r = 0; r < g.rows && ok; ++r)
            ok = inner_product(ring, v, g.row_vec(r)) == 0;
        if (ok)
            dual.push_back(x);
    }
    return dual;
}

bool brute_force_self_dual(const RingMatrix& g) {
    std::vector<std::uint64_t> code = enumerate_codewords(g);
    std::vector<std::uint64_t> dual = brute_force_dual(g);
    return code == dual;   // both sorted and deduplicated
}

bool check_gray_duality(const Gray& gray, const RingMatrix& g) {
    require_small(g, "check_gray_duality");
    const Ring& ring = g.ring;
    const int n = g.cols;

    // left side: Gray images of the brute-force ring dual
    std::vector<BinaryWord> lhs;
    for (std::uint64_t x : brute_force_dual(g))
        lhs.push_back(gray.image(unpack_vec(ring, x, n)));
    std::sort(lhs.begin(), lhs.end());

    // right side: all codewords of the binary dual of phi(C)
    const BinaryMatrix image = gray_image_generator(gray, g);
    const BinaryMatrix dual_basis = binary_dual(image);
    std::vector<BinaryWord> rhs;
    const int dim = dual_basis.rows();
    if (dim > 24)
        throw std::domain_error("check_gray_duality(): binary dual dimension too large");
    BinaryWord acc(image.cols());
    rhs.push_back(acc);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
        const int flip = std::countr_zero(i);
        acc ^= dual_basis.row_word(flip);
        rhs.push_back(acc);
    }
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    return lhs == rhs;
}

} // namespace f2uv
