#pragma once

// Partitions inside the (k,n)-hook, the covariant highest weights of gl(k|n)
// they label, and the two multiplicity-free strip branchings that drive both
// the basis enumeration and the supersymmetric Schur dimension/character
// recursions.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gzodd {

struct Partition {
    // weakly decreasing, strictly positive
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int length() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    // 1-based, zero beyond the length
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> c;
    for (int j = 1; j <= p.part(1); ++j) {
        int cnt = 0;
        for (int x : p.parts) cnt += (x >= j);
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

inline bool in_hook(const Partition& p, int k, int n) { return p.part(k + 1) <= n; }

// Covariant highest weight [m_{-k},...,m_{-1}; m_1,...,m_n] of gl(k|n).
struct HighestWeight {
    std::vector<int> neg;  // [m_{-k}, ..., m_{-1}]
    std::vector<int> pos;  // [m_1, ..., m_n]

    HighestWeight() = default;
    HighestWeight(std::vector<int> neg_, std::vector<int> pos_)
        : neg(std::move(neg_)), pos(std::move(pos_)) {}

    int k() const { return static_cast<int>(neg.size()); }
    int n() const { return static_cast<int>(pos.size()); }

    // component m_i, i in {-k..-1, 1..n}
    int m(int i) const {
        if (i < 0) return neg.at(neg.size() + i);
        if (i > 0) return pos.at(i - 1);
        throw std::out_of_range("weight index 0");
    }

    int positive_support() const {
        int c = 0;
        for (int v : pos) c += (v > 0);
        return c;
    }

    bool is_valid() const {
        for (int v : neg) if (v < 0) return false;
        for (int v : pos) if (v < 0) return false;
        for (std::size_t i = 0; i + 1 < neg.size(); ++i) if (neg[i] < neg[i + 1]) return false;
        for (std::size_t i = 0; i + 1 < pos.size(); ++i) if (pos[i] < pos[i + 1]) return false;
        if (!neg.empty() && neg.back() < positive_support()) return false;
        if (neg.empty() && positive_support() > 0) return false;
        return true;
    }
    void check() const {
        if (!is_valid()) throw std::invalid_argument("invalid covariant highest weight " + to_string());
    }

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.neg == b.neg && a.pos == b.pos;
    }
    friend bool operator<(const HighestWeight& a, const HighestWeight& b) {
        return std::tie(a.neg, a.pos) < std::tie(b.neg, b.pos);
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < neg.size(); ++i) s += (i ? "," : "") + std::to_string(neg[i]);
        s += ";";
        for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? "," : "") + std::to_string(pos[i]);
        return s + "]";
    }
};

inline HighestWeight weight_from_partition(const Partition& lam, int k, int n) {
    if (!in_hook(lam, k, n))
        throw std::invalid_argument(lam.to_string() + " violates the (" + std::to_string(k) + "," +
                                    std::to_string(n) + ")-hook condition");
    std::vector<int> neg(k), pos(n);
    for (int i = -k; i <= -1; ++i) neg[k + i] = lam.part(k + i + 1);
    Partition conj = conjugate(lam);
    for (int i = 1; i <= n; ++i) pos[i - 1] = std::max(0, conj.part(i) - k);
    return HighestWeight(std::move(neg), std::move(pos));
}

// Inverse of weight_from_partition: the first k parts are the negative labels;
// part k+t is the number of positive labels >= t.
inline Partition partition_from_weight(const HighestWeight& hw) {
    hw.check();
    std::vector<int> parts(hw.neg);
    for (int t = 1;; ++t) {
        int cnt = 0;
        for (int v : hw.pos) cnt += (v >= t);
        if (cnt == 0) break;
        parts.push_back(cnt);
    }
    return Partition(std::move(parts));
}

namespace detail {

// All sigma <= lam (componentwise on parts) with lam-sigma a horizontal strip:
// lam_1 >= s_1 >= lam_2 >= s_2 >= ...
inline void horizontal_strips(const Partition& lam, std::vector<Partition>& out) {
    std::vector<int> cur;
    int len = lam.length();
    auto rec = [&](auto&& self, int i) -> void {
        if (i > len) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = lam.part(i + 1); v <= lam.part(i); ++v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace detail

// All sigma in the (k,n-1)-hook with lam/sigma a vertical strip; used when
// descending gl(k|n) -> gl(k|n-1). Each sigma appears exactly once.
inline std::vector<Partition> vertical_strip_predecessors(const Partition& lam, int k, int n) {
    if (!in_hook(lam, k, n)) throw std::invalid_argument("hook violation");
    std::vector<Partition> conj_strips;
    detail::horizontal_strips(conjugate(lam), conj_strips);
    std::vector<Partition> out;
    for (const Partition& c : conj_strips) {
        Partition sigma = conjugate(c);
        if (in_hook(sigma, k, n - 1)) out.push_back(std::move(sigma));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All sigma in the (k-1,n)-hook with lam/sigma a horizontal strip; used when
// descending gl(k|n) -> gl(k-1|n).
inline std::vector<Partition> horizontal_strip_predecessors(const Partition& lam, int k, int n) {
    if (!in_hook(lam, k, n)) throw std::invalid_argument("hook violation");
    std::vector<Partition> strips;
    detail::horizontal_strips(lam, strips);
    std::vector<Partition> out;
    for (Partition& sigma : strips)
        if (in_hook(sigma, k - 1, n)) out.push_back(std::move(sigma));
    std::sort(out.begin(), out.end());
    return out;
}

// Dimension of the covariant gl(k|n) module labelled by lam: the value of the
// supersymmetric Schur function at all variables 1, computed by the strip
// branching recursion down to gl(0|0).
inline long long super_dimension(const Partition& lam, int k, int n) {
    if (!in_hook(lam, k, n)) throw std::invalid_argument("hook violation in super_dimension");
    if (k == 0 && n == 0) return lam.parts.empty() ? 1 : 0;
    thread_local std::map<std::tuple<std::vector<int>, int, int>, long long> memo;
    auto key = std::make_tuple(lam.parts, k, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    if (k > n) {
        for (const Partition& s : horizontal_strip_predecessors(lam, k, n))
            total += super_dimension(s, k - 1, n);
    } else {
        for (const Partition& s : vertical_strip_predecessors(lam, k, n))
            total += super_dimension(s, k, n - 1);
    }
    memo[key] = total;
    return total;
}

// Monomial exponent multiset of s_lam(x_{-k}..x_{-1}|y_1..y_n), each vector
// ordered (x_{-k},...,x_{-1},y_1,...,y_n). Sorted lexicographically.
inline std::vector<std::vector<int>> super_character(const Partition& lam, int k, int n) {
    if (!in_hook(lam, k, n)) throw std::invalid_argument("hook violation in super_character");
    if (k == 0 && n == 0) {
        if (!lam.parts.empty()) return {};
        return {std::vector<int>{}};
    }
    std::vector<std::vector<int>> out;
    if (k > n) {
        for (const Partition& s : horizontal_strip_predecessors(lam, k, n)) {
            int e = lam.size() - s.size();
            for (std::vector<int> v : super_character(s, k - 1, n)) {
                v.insert(v.begin(), e);
                out.push_back(std::move(v));
            }
        }
    } else {
        for (const Partition& s : vertical_strip_predecessors(lam, k, n)) {
            int e = lam.size() - s.size();
            for (std::vector<int> v : super_character(s, k, n - 1)) {
                v.push_back(e);
                out.push_back(std::move(v));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All partitions of every size 0..max_size inside the (k,n)-hook.
inline std::vector<Partition> hook_partitions_up_to(int max_size, int k, int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        out.push_back(Partition(cur));
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            if (in_hook(Partition(cur), k, n)) self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_size, max_size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace gzodd
