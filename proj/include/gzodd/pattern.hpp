#pragma once

// Odd GZ-patterns for gl(n|n): 2n ragged rows, counted from the bottom.
// Row 2k holds columns -k..-1,1..k; row 2k-1 holds columns -k..-1,1..k-1.
// A pattern is valid when every row is a covariant highest weight of its
// subalgebra and consecutive rows are coupled by theta-conditions (vertical
// differences in {0,1}) on one side and in-betweenness (interlacing) on the
// other, the sides alternating with the parity of the row.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gzodd/partition.hpp"

namespace gzodd {

class GZPattern {
public:
    GZPattern() : n_(0) {}
    GZPattern(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
        if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
        if (static_cast<int>(rows_.size()) != 2 * n_)
            throw std::invalid_argument("pattern must have 2n rows");
        for (int s = 1; s <= 2 * n_; ++s)
            if (static_cast<int>(rows_[s - 1].size()) != neg_count(s) + pos_count(s))
                throw std::invalid_argument("row " + std::to_string(s) + " has wrong length");
    }

    static int neg_count(int row) { return (row + 1) / 2; }
    static int pos_count(int row) { return row / 2; }

    int n() const { return n_; }
    int rows() const { return 2 * n_; }
    const std::vector<std::vector<int>>& row_data() const { return rows_; }
    const std::vector<int>& row(int s) const { return rows_.at(s - 1); }

    bool has_column(int col, int s) const {
        return col != 0 && -neg_count(s) <= col && col <= pos_count(s);
    }

    // m_{col,row}; col signed, row 1..2n
    int entry(int col, int s) const {
        const std::vector<int>& r = rows_.at(s - 1);
        if (!has_column(col, s)) throw std::out_of_range("no column " + std::to_string(col) +
                                                         " in row " + std::to_string(s));
        return col < 0 ? r[col + neg_count(s)] : r[neg_count(s) + col - 1];
    }

    long long row_sum(int s) const {
        if (s == 0) return 0;
        long long t = 0;
        for (int v : rows_.at(s - 1)) t += v;
        return t;
    }

    // Vertical difference prescribed by the theta-conditions: defined for
    // col<0 on odd rows (against the row above) and col>0 on even rows
    // (against the row above). In {0,1} exactly on valid patterns.
    int theta(int col, int s) const {
        if (col < 0) {
            if (s % 2 != 1 || s + 1 > rows() || !has_column(col, s))
                throw std::out_of_range("theta undefined at negative column");
            return entry(col, s + 1) - entry(col, s);
        }
        if (col > 0) {
            if (s % 2 != 0 || s + 1 > rows() || !has_column(col, s + 1))
                throw std::out_of_range("theta undefined at positive column");
            return entry(col, s) - entry(col, s + 1);
        }
        throw std::out_of_range("theta undefined at column 0");
    }

    GZPattern shifted(int col, int s, int delta) const {
        GZPattern q = *this;
        std::vector<int>& r = q.rows_[s - 1];
        r[col < 0 ? col + neg_count(s) : neg_count(s) + col - 1] += delta;
        return q;
    }

    HighestWeight top() const {
        const std::vector<int>& t = rows_.back();
        return HighestWeight(std::vector<int>(t.begin(), t.begin() + n_),
                             std::vector<int>(t.begin() + n_, t.end()));
    }

    // Comparison on the flattened pattern, top row first, each row read left
    // to right. Fixes the basis order.
    friend bool operator<(const GZPattern& a, const GZPattern& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (int s = 2 * a.n_; s >= 1; --s)
            if (a.rows_[s - 1] != b.rows_[s - 1]) return a.rows_[s - 1] < b.rows_[s - 1];
        return false;
    }
    friend bool operator==(const GZPattern& a, const GZPattern& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const GZPattern& a, const GZPattern& b) { return !(a == b); }

    std::string to_string() const {
        std::string out;
        for (int s = rows(); s >= 1; --s) {
            const auto& r = rows_[s - 1];
            out += "[";
            for (int j = 0; j < static_cast<int>(r.size()); ++j) {
                if (j == neg_count(s)) out += " |";
                if (j) out += " ";
                out += std::to_string(r[j]);
            }
            out += "]";
            if (s > 1) out += " / ";
        }
        return out;
    }

private:
    int n_;
    std::vector<std::vector<int>> rows_;  // rows_[s-1] = row s, bottom-up
};

struct Violation {
    int condition;  // 0 = shape/negativity, 1..7 as in the pattern conditions
    int row;
    int col;
    std::string detail;
};

inline std::vector<Violation> validate(const GZPattern& p) {
    std::vector<Violation> v;
    const int n = p.n();
    auto count_pos = [&](int s) {
        int c = 0;
        for (int i = 1; i <= GZPattern::pos_count(s); ++i) c += (p.entry(i, s) > 0);
        return c;
    };

    for (int s = 1; s <= 2 * n; ++s)
        for (int col = -GZPattern::neg_count(s); col <= GZPattern::pos_count(s); ++col)
            if (col != 0 && p.entry(col, s) < 0)
                v.push_back({0, s, col, "negative entry"});

    // condition 1: top row weakly decreasing within each side, covariance
    const int r = 2 * n;
    for (int j = -n; j <= n - 1; ++j) {
        if (j == -1 || j == 0) continue;
        if (p.entry(j, r) < p.entry(j + 1, r))
            v.push_back({1, r, j, "top row not weakly decreasing"});
    }
    if (p.entry(-1, r) < count_pos(r)) v.push_back({1, r, -1, "top row covariance"});

    // condition 2: negative-side theta in {0,1}
    for (int q = 1; q <= n; ++q)
        for (int i = -q; i <= -1; ++i) {
            int t = p.entry(i, 2 * q) - p.entry(i, 2 * q - 1);
            if (t != 0 && t != 1)
                v.push_back({2, 2 * q - 1, i, "theta = " + std::to_string(t)});
        }

    // condition 3: positive-side theta in {0,1}
    for (int q = 1; q <= n - 1; ++q)
        for (int i = 1; i <= q; ++i) {
            int t = p.entry(i, 2 * q) - p.entry(i, 2 * q + 1);
            if (t != 0 && t != 1)
                v.push_back({3, 2 * q, i, "theta = " + std::to_string(t)});
        }

    // conditions 4-5: row covariance
    for (int q = 1; q <= n; ++q)
        if (p.entry(-1, 2 * q) < count_pos(2 * q))
            v.push_back({4, 2 * q, -1, "row covariance"});
    for (int q = 2; q <= n; ++q)
        if (p.entry(-1, 2 * q - 1) < count_pos(2 * q - 1))
            v.push_back({5, 2 * q - 1, -1, "row covariance"});

    // condition 6: positive-side in-betweenness
    for (int q = 2; q <= n; ++q)
        for (int i = 1; i <= q - 1; ++i) {
            if (p.entry(i, 2 * q) < p.entry(i, 2 * q - 1))
                v.push_back({6, 2 * q - 1, i, "in-betweenness (upper)"});
            if (p.entry(i, 2 * q - 1) < p.entry(i + 1, 2 * q))
                v.push_back({6, 2 * q - 1, i, "in-betweenness (lower)"});
        }

    // condition 7: negative-side in-betweenness
    for (int q = 1; q <= n - 1; ++q)
        for (int i = -q - 1; i <= -2; ++i) {
            if (p.entry(i, 2 * q + 1) < p.entry(i + 1, 2 * q))
                v.push_back({7, 2 * q, i + 1, "in-betweenness (upper)"});
            if (p.entry(i + 1, 2 * q) < p.entry(i + 1, 2 * q + 1))
                v.push_back({7, 2 * q, i + 1, "in-betweenness (lower)"});
        }

    return v;
}

inline bool is_valid(const GZPattern& p) { return validate(p).empty(); }

inline GZPattern highest_weight_pattern(const HighestWeight& hw) {
    hw.check();
    if (hw.k() != hw.n()) throw std::invalid_argument("pattern weights need k = n");
    const int n = hw.n();
    std::vector<std::vector<int>> rows(2 * n);
    for (int s = 1; s <= 2 * n; ++s) {
        for (int i = -GZPattern::neg_count(s); i <= -1; ++i) rows[s - 1].push_back(hw.m(i));
        for (int i = 1; i <= GZPattern::pos_count(s); ++i) rows[s - 1].push_back(hw.m(i));
    }
    return GZPattern(n, std::move(rows));
}

namespace detail {

// Weight-validity of one row as a covariant gl(k|l) highest weight.
inline bool row_is_covariant_weight(const std::vector<int>& row, int negs) {
    int pos_support = 0;
    for (std::size_t j = negs; j < row.size(); ++j) pos_support += (row[j] > 0);
    for (int v : row) if (v < 0) return false;
    for (int j = 0; j + 1 < negs; ++j) if (row[j] < row[j + 1]) return false;
    for (std::size_t j = negs; j + 1 < row.size(); ++j) if (row[j] < row[j + 1]) return false;
    return row[negs - 1] >= pos_support;
}

// Rows below `above` (row index s+1) in the ragged layout; `above` is row s+1,
// candidates are for row s. Descending from an even row strips one positive
// column (theta on the negative side, interlacing on the positive side);
// descending from an odd row strips one negative column (the mirror rule).
inline std::vector<std::vector<int>> rows_below(const std::vector<int>& above, int s_below) {
    const int negs_below = GZPattern::neg_count(s_below);
    const int poss_below = GZPattern::pos_count(s_below);
    const int s_above = s_below + 1;
    const int negs_above = GZPattern::neg_count(s_above);

    std::vector<std::vector<int>> result;
    std::vector<int> cur(negs_below + poss_below);

    if (s_above % 2 == 0) {
        // even row above: negative entries drop by theta, positive interlace
        auto rec_pos = [&](auto&& self, int idx) -> void {
            if (idx == poss_below) {
                if (row_is_covariant_weight(cur, negs_below)) result.push_back(cur);
                return;
            }
            int lo = above[negs_above + idx + 1];  // m_{idx+2, s+1}
            int hi = above[negs_above + idx];      // m_{idx+1, s+1}
            for (int val = lo; val <= hi; ++val) {
                cur[negs_below + idx] = val;
                self(self, idx + 1);
            }
        };
        auto rec_neg = [&](auto&& self, int idx) -> void {
            if (idx == negs_below) {
                rec_pos(rec_pos, 0);
                return;
            }
            for (int t = 0; t <= 1; ++t) {
                int val = above[idx] - t;
                if (val < 0) continue;
                cur[idx] = val;
                self(self, idx + 1);
            }
        };
        rec_neg(rec_neg, 0);
    } else {
        // odd row above: negative entries interlace, positive grow by theta
        auto rec_pos = [&](auto&& self, int idx) -> void {
            if (idx == poss_below) {
                if (row_is_covariant_weight(cur, negs_below)) result.push_back(cur);
                return;
            }
            for (int t = 0; t <= 1; ++t) {
                cur[negs_below + idx] = above[negs_above + idx] + t;
                self(self, idx + 1);
            }
        };
        auto rec_neg = [&](auto&& self, int idx) -> void {
            if (idx == negs_below) {
                rec_pos(rec_pos, 0);
                return;
            }
            int lo = above[idx + 1];  // m_{col, s+1}, col = -negs_below+idx
            int hi = above[idx];      // m_{col-1, s+1}
            for (int val = lo; val <= hi; ++val) {
                cur[idx] = val;
                self(self, idx + 1);
            }
        };
        rec_neg(rec_neg, 0);
    }
    return result;
}

}  // namespace detail

// All patterns with the given top row, in the fixed basis order.
inline std::vector<GZPattern> enumerate_patterns(const HighestWeight& hw) {
    hw.check();
    if (hw.k() != hw.n()) throw std::invalid_argument("pattern weights need k = n");
    const int n = hw.n();
    std::vector<int> top(hw.neg);
    top.insert(top.end(), hw.pos.begin(), hw.pos.end());

    std::vector<GZPattern> out;
    std::vector<std::vector<int>> stack(2 * n);  // stack[s-1] = row s
    stack[2 * n - 1] = top;
    auto rec = [&](auto&& self, int s) -> void {
        if (s == 0) {
            out.push_back(GZPattern(n, stack));
            return;
        }
        for (std::vector<int>& cand : detail::rows_below(stack[s], s)) {
            stack[s - 1] = std::move(cand);
            self(self, s - 1);
        }
    };
    rec(rec, 2 * n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Ordered basis with index lookup.
struct Basis {
    HighestWeight hw;
    std::vector<GZPattern> patterns;
    std::map<GZPattern, int> index;

    explicit Basis(const HighestWeight& hw_) : hw(hw_), patterns(enumerate_patterns(hw_)) {
        for (int i = 0; i < static_cast<int>(patterns.size()); ++i) index[patterns[i]] = i;
    }
    int dim() const { return static_cast<int>(patterns.size()); }
    int index_of(const GZPattern& p) const {
        auto it = index.find(p);
        if (it == index.end()) throw std::out_of_range("pattern not in basis");
        return it->second;
    }
};

// Weight components ordered (-n..-1, 1..n); component -i is the sum of row
// 2i-1 minus the sum of row 2i-2, component i the sum of row 2i minus the sum
// of row 2i-1.
using WeightVector = std::vector<long long>;

inline WeightVector weight_of(const GZPattern& p) {
    const int n = p.n();
    WeightVector w(2 * n);
    for (int i = 1; i <= n; ++i) {
        w[n - i] = p.row_sum(2 * i - 1) - p.row_sum(2 * i - 2);
        w[n + i - 1] = p.row_sum(2 * i) - p.row_sum(2 * i - 1);
    }
    return w;
}

}  // namespace gzodd
