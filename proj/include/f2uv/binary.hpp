#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f2uv {

// One GF(2) row/word, bit c at word c/64, position c%64.
struct BinaryWord {
    int n = 0;
    std::vector<std::uint64_t> w;

    BinaryWord() = default;
    explicit BinaryWord(int length) : n(length), w((static_cast<std::size_t>(length) + 63) / 64, 0) {}
    bool get(int c) const { return (w[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1; }
    void set(int c, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v) w[static_cast<std::size_t>(c) >> 6] |= bit;
        else   w[static_cast<std::size_t>(c) >> 6] &= ~bit;
    }
    int weight() const;
    bool zero() const;
    void operator^=(const BinaryWord& o);
    bool operator==(const BinaryWord& o) const { return n == o.n && w == o.w; }
    bool operator<(const BinaryWord& o) const { return w < o.w; }
    std::string to_string() const;   // e.g. "10010110"
};

// Packed row-major GF(2) matrix.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t words() const { return words_; }

    bool get(int r, int c) const {
        return (data_[static_cast<std::size_t>(r) * words_ + (static_cast<std::size_t>(c) >> 6)] >>
                (c & 63)) & 1;
    }
    void set(int r, int c, bool v) {
        auto& word = data_[static_cast<std::size_t>(r) * words_ + (static_cast<std::size_t>(c) >> 6)];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (v) word |= bit;
        else   word &= ~bit;
    }
    std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }

    void xor_row(int dst, int src);
    void swap_rows(int a, int b);
    int row_weight(int r) const;
    bool row_zero(int r) const;
    BinaryWord row_word(int r) const;
    void append_row(const BinaryWord& word);   // word.n must equal cols
    std::string to_string() const;             // one 01-line per row

private:
    int rows_ = 0, cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

// Reduced row echelon form with zero rows dropped; optionally reports the
// pivot column of each surviving row (strictly increasing).
BinaryMatrix rref(const BinaryMatrix& g, std::vector<int>* pivots = nullptr);
int rank(const BinaryMatrix& g);

// Basis of the dual code (nullspace of g), dimension cols - rank.
BinaryMatrix binary_dual(const BinaryMatrix& g);

bool is_self_orthogonal(const BinaryMatrix& g);   // G * G^t = 0
bool is_self_dual(const BinaryMatrix& g);         // self-orthogonal and rank = cols/2

// Requires is_self_dual(g); a self-orthogonal code is doubly-even iff all
// basis row weights are divisible by 4.  Throws std::domain_error otherwise.
bool is_type_ii(const BinaryMatrix& g);

struct WeightEnumerator {
    int n = 0;
    // counts are exact for every weight <= complete_through; a full
    // enumeration sets complete_through = n.
    int complete_through = -1;
    std::map<int, std::uint64_t> counts;

    std::uint64_t at(int weight) const;
    bool full() const { return complete_through >= n; }
    bool symmetric() const;                 // A_w = A_{n-w} (requires full())
    std::uint64_t total() const;
    std::string to_csv() const;             // "weight,count" lines
};

// Full enumeration over the 2^dim messages in Gray-code order (one row-XOR
// per codeword).  Requires dim <= 30 and 2^dim <= budget.
WeightEnumerator weight_enumerator(const BinaryMatrix& g, std::uint64_t budget = std::uint64_t{1} << 30);

// Exact counts A_w for all w <= wcap: a codeword of weight w is a sum of at
// most w rows of an RREF basis (its message support shows up on the pivot
// columns), so enumerating row subsets of size <= wcap is exhaustive for
// those weights.  Requires cols <= 128.
WeightEnumerator weight_census(const BinaryMatrix& g, int wcap, int threads = 1);

// Exact minimum distance by full codeword enumeration; requires dim <= 30.
// Throws std::domain_error on the zero-dimensional code.
int min_distance_exhaustive(const BinaryMatrix& g, std::uint64_t budget = std::uint64_t{1} << 30);

struct DistanceResult {
    int d = -1;            // best (lowest) nonzero weight seen
    bool exact = false;    // lower bound reached d
    int lower_bound = 0;
    std::uint64_t enumerated = 0;
};

// Minimum distance from systematic generators on disjoint information sets:
// after enumerating all messages of weight <= w on h disjoint full-rank
// information sets, every unseen codeword has weight >= h*(w+1).
//   reject_below > 0: return early (exact=false) once a nonzero codeword of
//                     weight < reject_below is found.
//   accept_at   > 0: return once lower_bound >= accept_at, even if the exact
//                     distance is still unknown.
// With both zero, runs until the bound meets the best weight (exact d).
DistanceResult min_distance_infoset(const BinaryMatrix& g, int reject_below = 0, int accept_at = 0);

enum class SDType { NotSelfDual, TypeI, TypeII };

// Parameters read off a self-dual code's weight enumerator.  For lengths
// 36, 66 and 72 the enumerator is pinned down by one or two free parameters:
//
//   n=24:      the unique [24,12,8] distribution (golay)
//   n=36:      1 + 225 y^8 + 2016 y^10 + ...   (W36_1)
//              1 + 289 y^8 + 1632 y^10 + ...   (W36_2)
//   n=66  I:   1 + (858+8b) y^12 + (18678-24b) y^14 + ...,  0 <= b <= 778  (W66_1)
//              1 + 1690 y^12 + 7990 y^14 + ...                            (W66_2)
//              1 + (858+8b) y^12 + (18166-24b) y^14 + ..., 14 <= b <= 756  (W66_3)
//   n=72  I:   1 + 2b y^12 + (8640-64g) y^14 + (124281-24b+384g) y^16 + ... (W72_1)
//              1 + 2b y^12 + (7616-64g) y^14 + (134521-24b+384g) y^16 + ... (W72_2)
//   n=72 II:   1 + (4398+a) y^12 + (197073-12a) y^16 + ...                 (W72_II)
//
// Identification uses only counts with w <= we.complete_through and reports
// in `note` when the available prefix cannot separate the candidates.
struct SelfDualProfile {
    int n = 0;
    int dim = 0;
    int d = -1;
    bool d_exact = false;
    SDType type = SDType::NotSelfDual;
    std::string family = "other";
    bool family_ok = false;                 // counts consistent with `family`
    std::optional<long long> alpha;         // W72_II
    std::optional<long long> beta;          // W66_1 / W66_3 / W72_*
    std::optional<long long> gamma;         // W72_1 / W72_2
    std::string note;
};

std::string to_string(SDType t);

// Match `we` (possibly a partial census) against the families above.
// `type` must reflect the code itself (the enumerator alone cannot always
// tell Type I from Type II at these lengths).
SelfDualProfile extract_parameters(const WeightEnumerator& we, int n, SDType type);

// "key: value" lines for terminal output.
std::string to_string(const SelfDualProfile& p);

} // namespace f2uv
