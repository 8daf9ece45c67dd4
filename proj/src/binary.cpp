#include "f2uv/binary.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <stdexcept>
#include <thread>

namespace f2uv {

int BinaryWord::weight() const {
    int s = 0;
    for (auto x : w)
        s += std::popcount(x);
    return s;
}

bool BinaryWord::zero() const {
    for (auto x : w)
        if (x != 0)
            return false;
    return true;
}

void BinaryWord::operator^=(const BinaryWord& o) {
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] ^= o.w[i];
}

std::string BinaryWord::to_string() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int c = 0; c < n; ++c)
        if (get(c))
            s[static_cast<std::size_t>(c)] = '1';
    return s;
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64),
      data_(static_cast<std::size_t>(rows) * words_, 0) {}

void BinaryMatrix::xor_row(int dst, int src) {
    auto* d = row(dst);
    const auto* s = row(src);
    for (std::size_t i = 0; i < words_; ++i)
        d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(int a, int b) {
    if (a == b)
        return;
    auto* ra = row(a);
    auto* rb = row(b);
    for (std::size_t i = 0; i < words_; ++i)
        std::swap(ra[i], rb[i]);
}

int BinaryMatrix::row_weight(int r) const {
    const auto* p = row(r);
    int s = 0;
    for (std::size_t i = 0; i < words_; ++i)
        s += std::popcount(p[i]);
    return s;
}

bool BinaryMatrix::row_zero(int r) const {
    const auto* p = row(r);
    for (std::size_t i = 0; i < words_; ++i)
        if (p[i] != 0)
            return false;
    return true;
}

BinaryWord BinaryMatrix::row_word(int r) const {
    BinaryWord word(cols_);
    const auto* p = row(r);
    for (std::size_t i = 0; i < words_; ++i)
        word.w[i] = p[i];
    return word;
}

void BinaryMatrix::append_row(const BinaryWord& word) {
    if (cols_ == 0 && rows_ == 0) {
        cols_ = word.n;
        words_ = word.w.size();
    }
    if (word.n != cols_)
        throw std::invalid_argument("BinaryMatrix::append_row(): length mismatch");
    data_.insert(data_.end(), word.w.begin(), word.w.end());
    ++rows_;
}

std::string BinaryMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        s += row_word(r).to_string();
        s += '\n';
    }
    return s;
}

BinaryMatrix rref(const BinaryMatrix& g, std::vector<int>* pivots) {
    BinaryMatrix a = g;
    if (pivots)
        pivots->clear();
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.get(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        a.swap_rows(r, pr);
        for (int i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, c))
                a.xor_row(i, r);
        piv.push_back(c);
        ++r;
    }
    BinaryMatrix out(r, a.cols());
    for (int i = 0; i < r; ++i)
        for (std::size_t wi = 0; wi < a.words(); ++wi)
            out.row(i)[wi] = a.row(i)[wi];
    if (pivots)
        *pivots = piv;
    return out;
}

int rank(const BinaryMatrix& g) {
    return rref(g).rows();
}

BinaryMatrix binary_dual(const BinaryMatrix& g) {
    std::vector<int> piv;
    BinaryMatrix r = rref(g, &piv);
    std::vector<char> is_pivot(static_cast<std::size_t>(g.cols()), 0);
    for (std::size_t t = 0; t < piv.size(); ++t)
        is_pivot[static_cast<std::size_t>(piv[t])] = 1;
    BinaryMatrix dual(g.cols() - r.rows(), g.cols());
    int dr = 0;
    for (int f = 0; f < g.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        dual.set(dr, f, true);
        for (int t = 0; t < r.rows(); ++t)
            if (r.get(t, f))
                dual.set(dr, piv[static_cast<std::size_t>(t)], true);
        ++dr;
    }
    return dual;
}

namespace {

bool rows_orthogonal(const BinaryMatrix& g, int a, int b) {
    const auto* ra = g.row(a);
    const auto* rb = g.row(b);
    int s = 0;
    for (std::size_t i = 0; i < g.words(); ++i)
        s ^= std::popcount(ra[i] & rb[i]) & 1;
    return s == 0;
}

} // namespace

bool is_self_orthogonal(const BinaryMatrix& g) {
    for (int a = 0; a < g.rows(); ++a)
        for (int b = a; b < g.rows(); ++b)
            if (!rows_orthogonal(g, a, b))
                return false;
    return true;
}

bool is_self_dual(const BinaryMatrix& g) {
    if (g.cols() % 2 != 0)
        return false;
    return is_self_orthogonal(g) && 2 * rank(g) == g.cols();
}

bool is_type_ii(const BinaryMatrix& g) {
    if (!is_self_dual(g))
        throw std::domain_error("is_type_ii(): code is not self-dual");
    // for a self-orthogonal code, w(a+b) = w(a)+w(b)-2w(a&b) with w(a&b)
    // even, so doubly-even generators force every codeword weight to 0 mod 4
    for (int r = 0; r < g.rows(); ++r)
        if (g.row_weight(r) % 4 != 0)
            return false;
    return true;
}

std::uint64_t WeightEnumerator::at(int weight) const {
    auto it = counts.find(weight);
    return it == counts.end() ? 0 : it->second;
}

bool WeightEnumerator::symmetric() const {
    if (!full())
        return false;
    for (const auto& [w, c] : counts)
        if (at(n - w) != c)
            return false;
    return true;
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t s = 0;
    for (const auto& [w, c] : counts)
        s += c;
    return s;
}

std::string WeightEnumerator::to_csv() const {
    std::string s = "weight,count\n";
    for (const auto& [w, c] : counts)
        s += std::to_string(w) + "," + std::to_string(c) + "\n";
    return s;
}

namespace {

// Fixed two-limb word: every code in this artifact has length <= 128.
struct Limb2 {
    std::uint64_t lo = 0, hi = 0;
};

std::vector<Limb2> packed_rows(const BinaryMatrix& basis) {
    if (basis.cols() > 128)
        throw std::domain_error("enumeration kernels require length <= 128");
    std::vector<Limb2> rows(static_cast<std::size_t>(basis.rows()));
    for (int r = 0; r < basis.rows(); ++r) {
        rows[static_cast<std::size_t>(r)].lo = basis.row(r)[0];
        rows[static_cast<std::size_t>(r)].hi = basis.words() > 1 ? basis.row(r)[1] : 0;
    }
    return rows;
}

inline int limb2_weight(std::uint64_t lo, std::uint64_t hi) {
    return std::popcount(lo) + std::popcount(hi);
}

} // namespace

WeightEnumerator weight_enumerator(const BinaryMatrix& g, std::uint64_t budget) {
    const BinaryMatrix basis = rref(g);
    const int dim = basis.rows();
    if (dim > 30)
        throw std::domain_error("weight_enumerator(): dimension " + std::to_string(dim) +
                                " exceeds the full-enumeration limit 30");
    if ((std::uint64_t{1} << dim) > budget)
        throw std::domain_error("weight_enumerator(): 2^" + std::to_string(dim) +
                                " codewords exceed the budget " + std::to_string(budget));
    const auto rows = packed_rows(basis);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(g.cols()) + 1, 0);
    std::uint64_t lo = 0, hi = 0;
    hist[0] = 1;
    // Gray-code order: message i flips exactly row countr_zero(i)
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(i))];
        lo ^= row.lo;
        hi ^= row.hi;
        ++hist[static_cast<std::size_t>(limb2_weight(lo, hi))];
    }
    WeightEnumerator we;
    we.n = g.cols();
    we.complete_through = g.cols();
    for (int w = 0; w <= g.cols(); ++w)
        if (hist[static_cast<std::size_t>(w)] != 0)
            we.counts[w] = hist[static_cast<std::size_t>(w)];
    return we;
}

namespace {

struct CensusWorker {
    const std::vector<Limb2>* rows;
    int g = 0, wcap = 0;
    std::vector<std::uint64_t> hist;

    void descend(std::uint64_t lo, std::uint64_t hi, int next, int depth) {
        const int w = limb2_weight(lo, hi);
        if (w <= wcap)
            ++hist[static_cast<std::size_t>(w)];
        if (depth == wcap)
            return;
        if (depth + 1 == wcap) {
            // leaf layer inlined: the bulk of all visited subsets
            for (int i = next; i < g; ++i) {
                const auto& r = (*rows)[static_cast<std::size_t>(i)];
                const int lw = limb2_weight(lo ^ r.lo, hi ^ r.hi);
                if (lw <= wcap)
                    ++hist[static_cast<std::size_t>(lw)];
            }
            return;
        }
        for (int i = next; i < g; ++i) {
            const auto& r = (*rows)[static_cast<std::size_t>(i)];
            descend(lo ^ r.lo, hi ^ r.hi, i + 1, depth + 1);
        }
    }

    void run(int first, int stride) {
        hist.assign(static_cast<std::size_t>(wcap) + 1, 0);
        for (int i = first; i < g; i += stride) {
            const auto& r = (*rows)[static_cast<std::size_t>(i)];
            descend(r.lo, r.hi, i + 1, 1);
        }
    }
};

} // namespace

WeightEnumerator weight_census(const BinaryMatrix& g, int wcap, int threads) {
    const BinaryMatrix basis = rref(g);
    const auto rows = packed_rows(basis);
    const int dim = basis.rows();
    if (wcap > g.cols())
        wcap = g.cols();

    WeightEnumerator we;
    we.n = g.cols();
    we.complete_through = wcap;
    we.counts[0] = 1;
    if (wcap < 1 || dim == 0)
        return we;

    if (threads < 1)
        threads = 1;
    std::vector<CensusWorker> workers(static_cast<std::size_t>(threads));
    if (threads == 1) {
        workers[0] = CensusWorker{&rows, dim, wcap, {}};
        workers[0].run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            workers[static_cast<std::size_t>(t)] = CensusWorker{&rows, dim, wcap, {}};
            pool.emplace_back([&workers, t, threads] {
                workers[static_cast<std::size_t>(t)].run(t, threads);
            });
        }
        for (auto& th : pool)
            th.join();
    }
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(wcap) + 1, 0);
    for (const auto& wk : workers)
        for (int w = 0; w <= wcap; ++w)
            hist[static_cast<std::size_t>(w)] += wk.hist[static_cast<std::size_t>(w)];
    for (int w = 1; w <= wcap; ++w)
        if (hist[static_cast<std::size_t>(w)] != 0)
            we.counts[w] = hist[static_cast<std::size_t>(w)];
    return we;
}

int min_distance_exhaustive(const BinaryMatrix& g, std::uint64_t budget) {
    const BinaryMatrix basis = rref(g);
    const int dim = basis.rows();
    if (dim == 0)
        throw std::domain_error("min_distance_exhaustive(): zero-dimensional code has no distance");
    if (dim > 30)
        throw std::domain_error("min_distance_exhaustive(): dimension " + std::to_string(dim) +
                                " exceeds the full-enumeration limit 30");
    if ((std::uint64_t{1} << dim) > budget)
        throw std::domain_error("min_distance_exhaustive(): 2^" + std::to_string(dim) +
                                " codewords exceed the budget " + std::to_string(budget));
    const auto rows = packed_rows(basis);
    std::uint64_t lo = 0, hi = 0;
    int best = INT_MAX;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(i))];
        lo ^= row.lo;
        hi ^= row.hi;
        const int w = limb2_weight(lo, hi);
        if (w < best)
            best = w;
    }
    return best;
}

namespace {

// Systematic generator on one information set: rows reduced so that the set's
// columns carry an identity, i.e. a codeword's restriction to the set is its
// message.
struct Systematic {
    std::vector<Limb2> rows;
};

// Gaussian elimination pivoting only on columns not yet used; returns the
// pivot columns (one per row) if full rank was reached on fresh columns.
bool next_infoset(const BinaryMatrix& basis, std::vector<char>& used, Systematic& out) {
    BinaryMatrix a = basis;
    const int g = a.rows();
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < a.cols() && r < g; ++c) {
        if (used[static_cast<std::size_t>(c)])
            continue;
        int pr = -1;
        for (int i = r; i < g; ++i)
            if (a.get(i, c)) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        a.swap_rows(r, pr);
        for (int i = 0; i < g; ++i)
            if (i != r && a.get(i, c))
                a.xor_row(i, r);
        piv.push_back(c);
        ++r;
    }
    if (r < g)
        return false;
    for (int c : piv)
        used[static_cast<std::size_t>(c)] = 1;
    out.rows = packed_rows(a);
    return true;
}

// Enumerates XORs of all row subsets of size exactly w; visit returns false
// to stop early.  Returns false iff stopped.
template <typename F>
bool combinations(const std::vector<Limb2>& rows, int w, F&& visit) {
    const int g = static_cast<int>(rows.size());
    if (w < 1 || w > g)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(w));
    std::vector<Limb2> acc(static_cast<std::size_t>(w) + 1);
    int depth = 0;
    idx[0] = 0;
    while (depth >= 0) {
        if (idx[static_cast<std::size_t>(depth)] >
            g - (w - depth)) {   // no room for remaining picks
            --depth;
            if (depth >= 0)
                ++idx[static_cast<std::size_t>(depth)];
            continue;
        }
        const auto& r = rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(depth)])];
        acc[static_cast<std::size_t>(depth) + 1] = {acc[static_cast<std::size_t>(depth)].lo ^ r.lo,
                                                    acc[static_cast<std::size_t>(depth)].hi ^ r.hi};
        if (depth + 1 == w) {
            if (!visit(acc[static_cast<std::size_t>(w)]))
                return false;
            ++idx[static_cast<std::size_t>(depth)];
        } else {
            idx[static_cast<std::size_t>(depth + 1)] = idx[static_cast<std::size_t>(depth)] + 1;
            ++depth;
        }
    }
    return true;
}

} // namespace

DistanceResult min_distance_infoset(const BinaryMatrix& g, int reject_below, int accept_at) {
    const BinaryMatrix basis = rref(g);
    const int dim = basis.rows();
    if (dim == 0)
        throw std::domain_error("min_distance_infoset(): zero-dimensional code has no distance");
    if (g.cols() > 128)
        throw std::domain_error("min_distance_infoset(): length > 128 not supported");

    std::vector<Systematic> sets;
    std::vector<char> used(static_cast<std::size_t>(g.cols()), 0);
    for (;;) {
        Systematic s;
        if (!next_infoset(basis, used, s))
            break;
        sets.push_back(std::move(s));
    }

    DistanceResult res;
    const int h = static_cast<int>(sets.size());
    int best = INT_MAX;
    for (int w = 1; w <= dim; ++w) {
        for (const auto& s : sets) {
            const bool completed = combinations(s.rows, w, [&](const Limb2& word) {
                ++res.enumerated;
                const int wt = limb2_weight(word.lo, word.hi);
                if (wt < best)
                    best = wt;
                return !(reject_below > 0 && best < reject_below);
            });
            if (!completed) {
                res.d = best;
                res.exact = false;
                return res;
            }
        }
        res.lower_bound = h * (w + 1);
        if (res.lower_bound >= best) {
            res.d = best;
            res.exact = true;
            return res;
        }
        if (accept_at > 0 && res.lower_bound >= accept_at) {
            res.d = best;
            res.exact = false;
            return res;
        }
    }
    // message space exhausted on the first information set: exact by definition
    res.d = best;
    res.exact = true;
    res.lower_bound = best;
    return res;
}

std::string to_string(SDType t) {
    switch (t) {
    case SDType::TypeI: return "I";
    case SDType::TypeII: return "II";
    default: return "not-self-dual";
    }
}

namespace {

// A_w when w is within the computed prefix, absent otherwise.
std::optional<long long> known_count(const WeightEnumerator& we, int w) {
    if (w > we.complete_through) return std::nullopt;
    return static_cast<long long>(we.at(w));
}

void note_append(std::string& note, const std::string& s) {
    if (!note.empty()) note += "; ";
    note += s;
}

void profile_n24(SelfDualProfile& p, const WeightEnumerator& we) {
    static const std::map<int, std::uint64_t> golay = {
        {0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (we.full() && we.counts == golay) {
        p.family = "golay";
        p.family_ok = true;
    } else {
        note_append(p.note, "not the [24,12,8] weight distribution");
    }
}

void profile_n36(SelfDualProfile& p, const WeightEnumerator& we) {
    const auto a8 = known_count(we, 8);
    const auto a10 = known_count(we, 10);
    if (!a8 || !a10) {
        note_append(p.note, "need counts through weight 10 to identify the length-36 family");
        return;
    }
    if (*a8 == 225 && *a10 == 2016) {
        p.family = "W36_1";
        p.family_ok = true;
    } else if (*a8 == 289 && *a10 == 1632) {
        p.family = "W36_2";
        p.family_ok = true;
    } else {
        note_append(p.note, "counts match neither length-36 family");
    }
}

void profile_n66(SelfDualProfile& p, const WeightEnumerator& we) {
    const auto a12 = known_count(we, 12);
    if (!a12) {
        note_append(p.note, "need A_12 to identify the length-66 family");
        return;
    }
    const auto a14 = known_count(we, 14);
    if (*a12 == 1690 && a14 && *a14 == 7990) {
        p.family = "W66_2";
        p.family_ok = true;
        return;
    }
    // W66_1 and W66_3 share A_12 = 858 + 8b and differ in A_14.
    if (*a12 >= 858 && (*a12 - 858) % 8 == 0) {
        const long long b = (*a12 - 858) / 8;
        p.beta = b;
        if (!a14) {
            p.family = (b >= 0 && b <= 778) ? "W66_1" : "other";
            p.family_ok = false;
            note_append(p.note, "A_14 unavailable: W66_1/W66_3 (and W66_2 at beta=104) not separated");
            return;
        }
        if (*a14 == 18678 - 24 * b && b >= 0 && b <= 778) {
            p.family = "W66_1";
            p.family_ok = true;
        } else if (*a14 == 18166 - 24 * b && b >= 14 && b <= 756) {
            p.family = "W66_3";
            p.family_ok = true;
        } else {
            note_append(p.note, "A_14 matches no length-66 family at this beta");
        }
        return;
    }
    note_append(p.note, "A_12 matches no length-66 family");
}

void profile_n72_type2(SelfDualProfile& p, const WeightEnumerator& we) {
    const auto a12 = known_count(we, 12);
    if (!a12) {
        note_append(p.note, "need A_12 to identify the Type II length-72 enumerator");
        return;
    }
    const long long alpha = *a12 - 4398;
    p.alpha = alpha;
    p.family = "W72_II";
    p.family_ok = true;
    if (const auto a16 = known_count(we, 16); a16 && *a16 != 197073 - 12 * alpha) {
        p.family_ok = false;
        note_append(p.note, "A_16 inconsistent with the Type II length-72 enumerator");
    }
}

void profile_n72_type1(SelfDualProfile& p, const WeightEnumerator& we) {
    const auto a12 = known_count(we, 12);
    if (!a12) {
        note_append(p.note, "need A_12 to identify the Type I length-72 family");
        return;
    }
    if (*a12 % 2 != 0) {
        note_append(p.note, "odd A_12 matches no Type I length-72 family");
        return;
    }
    const long long b = *a12 / 2;
    p.beta = b;
    const auto a14 = known_count(we, 14);
    const auto a16 = known_count(we, 16);
    if (!a14) {
        note_append(p.note, "A_14 unavailable: W72_1/W72_2 not separated");
        return;
    }
    // Both A_14 forms are 0 mod 64, so integrality of gamma never separates
    // the two families; only A_16 does (the hypotheses differ by 4096 there).
    const long long g1 = (8640 - *a14);
    const long long g2 = (7616 - *a14);
    const bool w1_ok = g1 % 64 == 0;
    const bool w2_ok = g2 % 64 == 0;
    if (!w1_ok && !w2_ok) {
        note_append(p.note, "A_14 matches no Type I length-72 family");
        return;
    }
    if (!a16) {
        p.family = w1_ok ? "W72_1" : "W72_2";
        p.gamma = (w1_ok ? g1 : g2) / 64;
        note_append(p.note, "A_16 unavailable: W72_1/W72_2 not separated");
        return;
    }
    if (w1_ok && *a16 == 124281 - 24 * b + 384 * (g1 / 64)) {
        p.family = "W72_1";
        p.gamma = g1 / 64;
        p.family_ok = true;
        return;
    }
    if (w2_ok && *a16 == 134521 - 24 * b + 384 * (g2 / 64)) {
        p.family = "W72_2";
        p.gamma = g2 / 64;
        p.family_ok = true;
        return;
    }
    note_append(p.note, "A_16 matches no Type I length-72 family");
}

} // namespace

SelfDualProfile extract_parameters(const WeightEnumerator& we, int n, SDType type) {
    SelfDualProfile p;
    p.n = n;
    p.dim = n / 2;
    p.type = type;
    for (int w = 1; w <= we.complete_through; ++w) {
        if (we.at(w) > 0) {
            p.d = w;
            p.d_exact = true;
            break;
        }
    }
    if (p.d < 0 && we.complete_through < n) {
        p.d = we.complete_through + 1;   // everything below is known empty
        p.d_exact = false;
    }
    if (type == SDType::NotSelfDual) {
        note_append(p.note, "not self-dual: no family applies");
        return p;
    }
    switch (n) {
    case 36: profile_n36(p, we); break;
    case 24: profile_n24(p, we); break;
    case 66: profile_n66(p, we); break;
    case 72:
        if (type == SDType::TypeII) profile_n72_type2(p, we);
        else profile_n72_type1(p, we);
        break;
    default:
        note_append(p.note, "no catalogued family at this length");
        break;
    }
    return p;
}

std::string to_string(const SelfDualProfile& p) {
    std::string s;
    s += "n: " + std::to_string(p.n) + "\n";
    s += "dim: " + std::to_string(p.dim) + "\n";
    s += "d: " + (p.d < 0 ? std::string("?") : std::to_string(p.d));
    if (p.d >= 0 && !p.d_exact) s += " (lower bound)";
    s += "\n";
    s += "type: " + to_string(p.type) + "\n";
    s += "family: " + p.family + (p.family_ok ? " (consistent)" : " (unconfirmed)") + "\n";
    if (p.alpha) s += "alpha: " + std::to_string(*p.alpha) + "\n";
    if (p.beta) s += "beta: " + std::to_string(*p.beta) + "\n";
    if (p.gamma) s += "gamma: " + std::to_string(*p.gamma) + "\n";
    if (!p.note.empty()) s += "note: " + p.note + "\n";
    return s;
}

} // namespace f2uv
