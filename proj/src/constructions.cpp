#include "f2uv/constructions.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace f2uv {

int ConstructionSpec::length() const {
    switch (kind) {
    case Kind::DC:  return 2 * static_cast<int>(row_a.size());
    case Kind::BDC: return 2 * (static_cast<int>(row_a.size()) + 1);
    case Kind::FC:  return 4 * static_cast<int>(row_a.size());
    }
    return 0;
}

std::string ConstructionSpec::to_line() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::DC:  os << "dc";  break;
    case Kind::BDC: os << "bdc"; break;
    case Kind::FC:  os << "fc";  break;
    }
    os << ' ' << k << ' ' << m << " |";
    if (kind == Kind::BDC)
        os << ' ' << x << ' ' << y << ' ' << z << " |";
    for (std::uint64_t e : row_a)
        os << ' ' << e;
    if (kind == Kind::FC) {
        os << " |";
        for (std::uint64_t e : row_b)
            os << ' ' << e;
    }
    return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::uint64_t> parse_ints(const std::string& s, const char* what) {
    std::istringstream is(s);
    std::vector<std::uint64_t> out;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("parse_spec_line(): bad integer '") + tok +
                                        "' in " + what);
        }
    }
    return out;
}

void check_entries(const Ring& ring, const std::vector<std::uint64_t>& v, const char* what) {
    for (std::uint64_t e : v)
        if (!ring.in_range(e))
            throw std::invalid_argument(std::string("parse_spec_line(): entry ") +
                                        std::to_string(e) + " in " + what +
                                        " is out of range for the ring (size " +
                                        std::to_string(ring.size()) + ")");
}

} // namespace

ConstructionSpec parse_spec_line(const std::string& line) {
    const auto fields = split_fields(line);
    std::istringstream head(fields[0]);
    std::string kind_s;
    ConstructionSpec spec;
    if (!(head >> kind_s >> spec.k >> spec.m))
        throw std::invalid_argument("parse_spec_line(): expected '<kind> k m | ...' in \"" + line + "\"");
    std::string extra;
    if (head >> extra)
        throw std::invalid_argument("parse_spec_line(): unexpected token '" + extra +
                                    "' before the first '|'");
    if (kind_s == "dc")
        spec.kind = ConstructionSpec::Kind::DC;
    else if (kind_s == "bdc")
        spec.kind = ConstructionSpec::Kind::BDC;
    else if (kind_s == "fc")
        spec.kind = ConstructionSpec::Kind::FC;
    else
        throw std::invalid_argument("parse_spec_line(): unknown construction '" + kind_s +
                                    "' (expected dc, bdc, or fc)");
    const Ring ring(spec.k, spec.m);   // validates k, m

    const std::size_t want_fields = spec.kind == ConstructionSpec::Kind::DC ? 2u : 3u;
    if (fields.size() != want_fields)
        throw std::invalid_argument("parse_spec_line(): expected " +
                                    std::to_string(want_fields - 1) + " '|' separators for " +
                                    kind_s + ", got " + std::to_string(fields.size() - 1));

    switch (spec.kind) {
    case ConstructionSpec::Kind::DC:
        spec.row_a = parse_ints(fields[1], "the first row");
        if (spec.row_a.empty())
            throw std::invalid_argument("parse_spec_line(): dc needs a non-empty first row");
        check_entries(ring, spec.row_a, "the first row");
        break;
    case ConstructionSpec::Kind::BDC: {
        const auto border = parse_ints(fields[1], "the border");
        if (border.size() != 3)
            throw std::invalid_argument("parse_spec_line(): bdc border needs exactly x y z");
        check_entries(ring, border, "the border");
        spec.x = border[0];
        spec.y = border[1];
        spec.z = border[2];
        spec.row_a = parse_ints(fields[2], "the core row");
        if (spec.row_a.empty())
            throw std::invalid_argument("parse_spec_line(): bdc needs a non-empty core row");
        check_entries(ring, spec.row_a, "the core row");
        break;
    }
    case ConstructionSpec::Kind::FC:
        spec.row_a = parse_ints(fields[1], "the A row");
        spec.row_b = parse_ints(fields[2], "the B row");
        if (spec.row_a.empty() || spec.row_a.size() != spec.row_b.size())
            throw std::invalid_argument("parse_spec_line(): fc needs non-empty A and B rows of equal length");
        check_entries(ring, spec.row_a, "the A row");
        check_entries(ring, spec.row_b, "the B row");
        break;
    }
    return spec;
}

std::vector<ConstructionSpec> parse_spec_file(std::istream& in, const std::string& name) {
    std::vector<ConstructionSpec> specs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        try {
            specs.push_back(parse_spec_line(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return specs;
}

RingMatrix circulant(const Ring& ring, const std::vector<elt>& first) {
    const int n = static_cast<int>(first.size());
    RingMatrix g(ring, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            g.at(r, c) = first[static_cast<std::size_t>(((c - r) % n + n) % n)];
    return g;
}

RingMatrix double_circulant(const Ring& ring, const std::vector<elt>& first) {
    const int n = static_cast<int>(first.size());
    const RingMatrix m = circulant(ring, first);
    RingMatrix g(ring, n, 2 * n);
    for (int r = 0; r < n; ++r) {
        g.at(r, r) = 1;
        for (int c = 0; c < n; ++c)
            g.at(r, n + c) = m.at(r, c);
    }
    return g;
}

RingMatrix bordered_double_circulant(const Ring& ring, elt x, elt y, elt z,
                                     const std::vector<elt>& core) {
    const int nc = static_cast<int>(core.size());
    const int n = nc + 1;
    const RingMatrix m = circulant(ring, core);
    RingMatrix g(ring, n, 2 * n);
    for (int r = 0; r < n; ++r)
        g.at(r, r) = 1;
    g.at(0, n) = x;
    for (int c = 0; c < nc; ++c)
        g.at(0, n + 1 + c) = y;
    for (int r = 0; r < nc; ++r) {
        g.at(r + 1, n) = z;
        for (int c = 0; c < nc; ++c)
            g.at(r + 1, n + 1 + c) = m.at(r, c);
    }
    return g;
}

RingMatrix four_circulant(const Ring& ring, const std::vector<elt>& a,
                          const std::vector<elt>& b) {
    const int n = static_cast<int>(a.size());
    const RingMatrix ma = circulant(ring, a);
    const RingMatrix mb = circulant(ring, b);
    RingMatrix g(ring, 2 * n, 4 * n);
    for (int r = 0; r < 2 * n; ++r)
        g.at(r, r) = 1;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            g.at(r, 2 * n + c) = ma.at(r, c);
            g.at(r, 3 * n + c) = mb.at(r, c);
            g.at(n + r, 2 * n + c) = mb.at(c, r);   // B^t
            g.at(n + r, 3 * n + c) = ma.at(c, r);   // A^t
        }
    }
    return g;
}

bool four_circulant_condition(const Ring& ring, const std::vector<elt>& a,
                              const std::vector<elt>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("four_circulant_condition(): length mismatch");
    const int n = static_cast<int>(a.size());
    const RingMatrix ma = circulant(ring, a);
    const RingMatrix mb = circulant(ring, b);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            elt s = 0;
            for (int t = 0; t < n; ++t)
                s ^= ring.mul(ma.at(r, t), ma.at(c, t)) ^ ring.mul(mb.at(r, t), mb.at(c, t));
            if (s != (r == c ? 1u : 0u))
                return false;
        }
    }
    return true;
}

Construction build(const ConstructionSpec& spec) {
    const Ring ring(spec.k, spec.m);
    std::vector<elt> a(spec.row_a.size()), b(spec.row_b.size());
    for (std::size_t i = 0; i < spec.row_a.size(); ++i)
        a[i] = ring.checked(spec.row_a[i]);
    for (std::size_t i = 0; i < spec.row_b.size(); ++i)
        b[i] = ring.checked(spec.row_b[i]);
    switch (spec.kind) {
    case ConstructionSpec::Kind::DC:
        return {double_circulant(ring, a), std::nullopt};
    case ConstructionSpec::Kind::BDC:
        return {bordered_double_circulant(ring, ring.checked(spec.x), ring.checked(spec.y),
                                          ring.checked(spec.z), a),
                std::nullopt};
    case ConstructionSpec::Kind::FC:
        return {four_circulant(ring, a, b), four_circulant_condition(ring, a, b)};
    }
    throw std::logic_error("build(): unreachable");
}

ConstructionSpec project_spec(const ConstructionSpec& spec) {
    ConstructionSpec p = spec;
    p.k = 1;
    p.m = 1;
    for (auto& e : p.row_a)
        e &= 1;
    for (auto& e : p.row_b)
        e &= 1;
    p.x &= 1;
    p.y &= 1;
    p.z &= 1;
    return p;
}

} // namespace f2uv
