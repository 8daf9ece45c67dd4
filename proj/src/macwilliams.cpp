// MacWilliams identities over the ring, verified exactly.
//
// All three identities are consequences of the character sum
//   sum_{c in C} chi(<c, x>) = |C| * [x in C-perp]
// with chi(a) = (-1)^{popcount(a)} a generating character of (R, +).
// Every transform below is evaluated in exact 64-bit integer arithmetic on
// codes small enough to enumerate (k*m*n <= 16), then compared against the
// brute-force dual.  Divisibility by |C| is asserted, never rounded.

#include "f2uv/macwilliams.hpp"

#include <algorithm>
#include <stdexcept>

namespace f2uv {

std::vector<std::int8_t> character_table(const Ring& ring) {
    if (ring.bits() > 8)
        throw std::domain_error("character_table(): requires k*m <= 8 (table is 4^{km} entries)");
    const std::size_t q = ring.size();
    std::vector<std::int8_t> t(q * q);
    for (elt i = 0; i < q; ++i)
        for (elt j = 0; j < q; ++j)
            t[std::size_t{i} * q + j] = static_cast<std::int8_t>(character(ring.mul(i, j)));
    return t;
}

bool character_table_orthogonal(const Ring& ring) {
    const auto t = character_table(ring);
    const std::size_t q = ring.size();
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            std::int64_t dot = 0;
            for (std::size_t j = 0; j < q; ++j)
                dot += std::int64_t{t[a * q + j]} * t[b * q + j];
            if (dot != (a == b ? std::int64_t(q) : 0)) return false;
        }
    }
    return true;
}

std::uint64_t composition_key(const Ring& ring, const std::vector<elt>& word) {
    if (ring.bits() * word.size() > 64)
        throw std::domain_error("composition_key(): word does not fit in 64 bits");
    std::vector<elt> s(word);
    std::sort(s.begin(), s.end());
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        key |= std::uint64_t{s[i]} << (i * ring.bits());
    return key;
}

std::vector<elt> composition_unpack(const Ring& ring, int n, std::uint64_t key) {
    std::vector<elt> s(static_cast<std::size_t>(n));
    const std::uint64_t mask = ring.size() - 1;
    for (int i = 0; i < n; ++i)
        s[static_cast<std::size_t>(i)] = static_cast<elt>((key >> (i * ring.bits())) & mask);
    return s;
}

CompleteEnumerator complete_enumerator(const Ring& ring, int n,
                                       const std::vector<std::uint64_t>& words) {
    CompleteEnumerator cwe;
    for (std::uint64_t w : words)
        ++cwe[composition_key(ring, unpack_vec(ring, w, n))];
    return cwe;
}

WeightEnumerator ring_hamming_enumerator(const Ring& ring, int n,
                                         const std::vector<std::uint64_t>& words) {
    WeightEnumerator we;
    we.n = n;
    we.complete_through = n;
    for (std::uint64_t w : words) {
        int wt = 0;
        for (elt c : unpack_vec(ring, w, n))
            if (c != 0) ++wt;
        ++we.counts[wt];
    }
    return we;
}

WeightEnumerator lee_enumerator(const Gray& gray, int n,
                                const std::vector<std::uint64_t>& words) {
    WeightEnumerator we;
    we.n = gray.ring().bits() * n;
    we.complete_through = we.n;
    for (std::uint64_t w : words)
        ++we.counts[gray.lee_weight(unpack_vec(gray.ring(), w, n))];
    return we;
}

namespace {

// Pascal's triangle through row n (n <= 64 in every use here).
std::vector<std::vector<std::int64_t>> binomials(int n) {
    std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return c;
}

WeightEnumerator divide_out(std::vector<std::int64_t>& coeff, int n, std::uint64_t csize,
                            const char* who) {
    WeightEnumerator out;
    out.n = n;
    out.complete_through = n;
    for (int d = 0; d <= n; ++d) {
        const std::int64_t c = coeff[static_cast<std::size_t>(d)];
        if (c < 0 || c % static_cast<std::int64_t>(csize) != 0)
            throw std::runtime_error(std::string(who) +
                                     ": transform coefficient not divisible by |C| "
                                     "(identity violated)");
        const std::int64_t q = c / static_cast<std::int64_t>(csize);
        if (q != 0) out.counts[d] = static_cast<std::uint64_t>(q);
    }
    return out;
}

} // namespace

WeightEnumerator hamming_transform(const WeightEnumerator& we, std::uint64_t q,
                                   std::uint64_t csize) {
    const int n = we.n;
    const auto c = binomials(n);
    // powers of (q-1) up to n
    std::vector<std::int64_t> qp(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        qp[static_cast<std::size_t>(i)] = qp[static_cast<std::size_t>(i - 1)] *
                                          static_cast<std::int64_t>(q - 1);
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [w, count] : we.counts) {
        if (count == 0) continue;
        // (x + (q-1)y)^{n-w} (x - y)^w, collect the y^d coefficient
        for (int d = 0; d <= n; ++d) {
            std::int64_t sum = 0;
            for (int t = std::max(0, d - (n - w)); t <= std::min(w, d); ++t) {
                const int s = d - t;
                std::int64_t term = c[static_cast<std::size_t>(n - w)][static_cast<std::size_t>(s)] *
                                    qp[static_cast<std::size_t>(s)] *
                                    c[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)];
                sum += (t & 1) ? -term : term;
            }
            coeff[static_cast<std::size_t>(d)] += static_cast<std::int64_t>(count) * sum;
        }
    }
    return divide_out(coeff, n, csize, "hamming_transform()");
}

WeightEnumerator lee_transform(const WeightEnumerator& we, std::uint64_t csize) {
    const int n = we.n;   // Gray length k*m*n of the original code
    const auto c = binomials(n);
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [w, count] : we.counts) {
        if (count == 0) continue;
        // (1-z)^w (1+z)^{n-w}, collect the z^d coefficient
        for (int d = 0; d <= n; ++d) {
            std::int64_t sum = 0;
            for (int t = std::max(0, d - (n - w)); t <= std::min(w, d); ++t) {
                std::int64_t term = c[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)] *
                                    c[static_cast<std::size_t>(n - w)][static_cast<std::size_t>(d - t)];
                sum += (t & 1) ? -term : term;
            }
            coeff[static_cast<std::size_t>(d)] += static_cast<std::int64_t>(count) * sum;
        }
    }
    return divide_out(coeff, n, csize, "lee_transform()");
}

CompleteEnumerator complete_transform(const Ring& ring, int n,
                                      const CompleteEnumerator& cwe,
                                      std::uint64_t csize) {
    const int bits = ring.bits();
    if (bits * n > 16)
        throw std::domain_error("complete_transform(): requires k*m*n <= 16");
    const auto t = character_table(ring);
    const std::size_t q = ring.size();
    const std::uint64_t tuples = std::uint64_t{1} << (bits * n);
    const std::uint64_t mask = q - 1;

    // For one codeword with symbols s_0..s_{n-1},
    //   prod_i (sum_j chi(s_i j) X_j) = sum over tuples (j_0..j_{n-1}) of
    //   prod_i chi(s_i j_i) * X_{j_0}...X_{j_{n-1}},
    // and the monomial only depends on the multiset {j_i}.
    std::map<std::uint64_t, std::int64_t> acc;
    for (const auto& [key, count] : cwe) {
        const auto sym = composition_unpack(ring, n, key);
        for (std::uint64_t idx = 0; idx < tuples; ++idx) {
            int sign = 1;
            elt js[16];                       // insertion-sorted multiset of the j_i
            for (int i = 0; i < n; ++i) {
                const elt j = static_cast<elt>((idx >> (i * bits)) & mask);
                sign *= t[std::size_t{sym[static_cast<std::size_t>(i)]} * q + j];
                int pos = i;
                while (pos > 0 && js[pos - 1] > j) {
                    js[pos] = js[pos - 1];
                    --pos;
                }
                js[pos] = j;
            }
            std::uint64_t mono = 0;
            for (int i = 0; i < n; ++i)
                mono |= std::uint64_t{js[i]} << (i * bits);
            acc[mono] += count * sign;
        }
    }

    CompleteEnumerator out;
    for (const auto& [key, coef] : acc) {
        if (coef == 0) continue;
        if (coef < 0 || coef % static_cast<std::int64_t>(csize) != 0)
            throw std::runtime_error("complete_transform(): coefficient not divisible by |C| "
                                     "(identity violated)");
        out[key] = coef / static_cast<std::int64_t>(csize);
    }
    return out;
}

namespace {

struct Pair {
    std::vector<std::uint64_t> code;
    std::vector<std::uint64_t> dual;
};

Pair enumerate_pair(const RingMatrix& g) {
    const int bits = g.ring.bits();
    if (bits * g.cols > 16)
        throw std::domain_error("verify_macwilliams: requires k*m*n <= 16");
    Pair p;
    p.code = enumerate_codewords(g);
    p.dual = brute_force_dual(g);
    return p;
}

} // namespace

bool verify_macwilliams_complete(const RingMatrix& g) {
    const auto p = enumerate_pair(g);
    const auto lhs = complete_transform(g.ring, g.cols, complete_enumerator(g.ring, g.cols, p.code),
                                        p.code.size());
    return lhs == complete_enumerator(g.ring, g.cols, p.dual);
}

bool verify_macwilliams_hamming(const RingMatrix& g) {
    const auto p = enumerate_pair(g);
    const auto lhs = hamming_transform(ring_hamming_enumerator(g.ring, g.cols, p.code),
                                       g.ring.size(), p.code.size());
    const auto rhs = ring_hamming_enumerator(g.ring, g.cols, p.dual);
    return lhs.counts == rhs.counts && lhs.n == rhs.n;
}

bool verify_macwilliams_lee(const RingMatrix& g) {
    const auto p = enumerate_pair(g);
    const Gray gray(g.ring);
    const auto lhs = lee_transform(lee_enumerator(gray, g.cols, p.code), p.code.size());
    const auto rhs = lee_enumerator(gray, g.cols, p.dual);
    return lhs.counts == rhs.counts && lhs.n == rhs.n;
}

} // namespace f2uv
