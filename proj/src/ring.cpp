#include "f2uv/ring.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace f2uv {

Ring::Ring(int k, int m) : k_(k), m_(m), bits_(k * m) {
    if (m < 1 || k < m)
        throw std::invalid_argument("Ring(): requires k >= m >= 1");
    if (k * m > 32)
        throw std::invalid_argument("Ring(): requires k*m <= 32 (one machine word per element)");
    // keep_[p] for p = i1 + j1*k masks the b-coefficients (i2, j2) whose
    // product with u^{i1} v^{j1} survives: i2 < k - i1 and j2 < m - j1.
    for (int j1 = 0; j1 < m_; ++j1) {
        for (int i1 = 0; i1 < k_; ++i1) {
            elt mask = 0;
            for (int j2 = 0; j2 < m_ - j1; ++j2)
                for (int i2 = 0; i2 < k_ - i1; ++i2)
                    mask |= elt{1} << (i2 + j2 * k_);
            keep_[static_cast<std::size_t>(i1 + j1 * k_)] = mask;
        }
    }
}

elt Ring::mul(elt a, elt b) const noexcept {
    elt r = 0;
    while (a != 0) {
        const int p = std::countr_zero(a);
        a &= a - 1;
        r ^= (b & keep_[static_cast<std::size_t>(p)]) << p;
    }
    return r;
}

elt Ring::pow(elt a, std::uint64_t e) const noexcept {
    elt r = 1, base = a;
    while (e != 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

elt Ring::inverse(elt a) const {
    if (!is_unit(a))
        throw std::domain_error("Ring::inverse(): element is not a unit (c_00 = 0)");
    std::uint64_t n2 = 1;
    while (n2 < static_cast<std::uint64_t>(k_))
        n2 <<= 1;
    return pow(a, n2 - 1);
}

elt Ring::checked(std::uint64_t x) const {
    if (!in_range(x))
        throw std::out_of_range("Ring::checked(): value " + std::to_string(x) +
                                " is not in [0, 2^" + std::to_string(bits_) + ")");
    return static_cast<elt>(x);
}

std::string Ring::to_string(elt a) const {
    if (a == 0)
        return "0";
    std::string s;
    for (int p = bits_ - 1; p >= 0; --p) {
        if (!((a >> p) & 1))
            continue;
        if (!s.empty())
            s += '+';
        const int i = p % k_, j = p / k_;
        if (i == 0 && j == 0) {
            s += '1';
            continue;
        }
        if (i >= 1) {
            s += 'u';
            if (i > 1)
                s += '^' + std::to_string(i);
        }
        if (j >= 1) {
            s += 'v';
            if (j > 1)
                s += '^' + std::to_string(j);
        }
    }
    return s;
}

namespace {

// Parses a decimal exponent after '^'; returns -1 on syntax error.
int parse_exponent(std::string_view t, std::size_t& pos) {
    if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
        return -1;
    long e = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        e = e * 10 + (t[pos] - '0');
        if (e > 64)
            e = 64;   // clamp: anything this large vanishes in every legal ring
        ++pos;
    }
    return static_cast<int>(e);
}

} // namespace

elt Ring::parse(std::string_view s) const {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        throw std::invalid_argument("Ring::parse(): empty element string");

    elt a = 0;
    std::size_t pos = 0;
    while (pos < t.size()) {
        // one term: "0" | "1" | u[^i][v[^j]] | v[^j]
        int i = 0, j = 0;
        bool zero_term = false;
        if (t[pos] == '0' || t[pos] == '1') {
            zero_term = t[pos] == '0';
            ++pos;
            if (pos < t.size() && t[pos] != '+')
                throw std::invalid_argument("Ring::parse(): digit term must stand alone in \"" +
                                            std::string(s) + "\"");
        } else {
            bool any = false;
            if (t[pos] == 'u') {
                any = true;
                ++pos;
                i = 1;
                if (pos < t.size() && t[pos] == '^') {
                    ++pos;
                    i = parse_exponent(t, pos);
                    if (i < 0)
                        throw std::invalid_argument("Ring::parse(): bad exponent after u^ in \"" +
                                                    std::string(s) + "\"");
                }
            }
            if (pos < t.size() && t[pos] == 'v') {
                any = true;
                ++pos;
                j = 1;
                if (pos < t.size() && t[pos] == '^') {
                    ++pos;
                    j = parse_exponent(t, pos);
                    if (j < 0)
                        throw std::invalid_argument("Ring::parse(): bad exponent after v^ in \"" +
                                                    std::string(s) + "\"");
                }
            }
            if (!any)
                throw std::invalid_argument("Ring::parse(): unexpected character '" +
                                            std::string(1, t[pos]) + "' in \"" + std::string(s) + "\"");
        }
        // quotient relations: u^k = v^m = 0 (u^0 v^0 = 1 keeps bit 0)
        if (!zero_term && i < k_ && j < m_)
            a ^= elt{1} << (i + j * k_);
        if (pos < t.size()) {
            if (t[pos] != '+')
                throw std::invalid_argument("Ring::parse(): expected '+' between terms in \"" +
                                            std::string(s) + "\"");
            ++pos;
            if (pos == t.size())
                throw std::invalid_argument("Ring::parse(): trailing '+' in \"" + std::string(s) + "\"");
        }
    }
    return a;
}

} // namespace f2uv
