#pragma once

// Matrix elements of the gl(n|n) generators on the odd GZ-basis, exact over
// RadicalSum, and arbitrary Weyl elements E_{ij} assembled from the
// generators by super-bracket recursion along the odd simple-root chain
//   -1, 1, -2, 2, -3, 3, ...
// in which consecutive indices are exactly the generator pairs.
//
// The six action families share one shape: a prefactor theta (raising) or
// 1-theta (lowering) choosing the entry to shift, a sign (-1)^(sum of thetas
// over fixed ranges), and the square root of a ratio of integer linear
// factors in the l-values l_{i,s} = m_{i,s} - i (i < 0), -m_{i,s} + i
// (i > 0). The prefactor is tested before any denominator is formed; the
// fractions can only be singular where the prefactor vanishes.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gzodd/parallel.hpp"
#include "gzodd/pattern.hpp"
#include "gzodd/radical.hpp"

namespace gzodd {

enum class GenKind { DiagNeg, DiagPos, RaiseII, RaiseI1, LowerII, LowerI1 };

// DiagNeg(i)=E_{-i,-i}, DiagPos(i)=E_{ii}, RaiseII(i)=E_{-i,i},
// RaiseI1(i)=E_{-i-1,i}, LowerII(i)=E_{i,-i}, LowerI1(i)=E_{i,-i-1}.
struct Generator {
    GenKind kind;
    int i;

    bool diagonal() const { return kind == GenKind::DiagNeg || kind == GenKind::DiagPos; }
    bool raising() const { return kind == GenKind::RaiseII || kind == GenKind::RaiseI1; }
    bool lowering() const { return kind == GenKind::LowerII || kind == GenKind::LowerI1; }

    // rank bound for membership in gl(n|n); the "i1" kinds stop at n-1
    bool valid_for_rank(int n) const {
        if (i < 1) return false;
        if (kind == GenKind::RaiseI1 || kind == GenKind::LowerI1) return i <= n - 1;
        return i <= n;
    }

    std::pair<int, int> weyl_indices() const {
        switch (kind) {
            case GenKind::DiagNeg: return {-i, -i};
            case GenKind::DiagPos: return {i, i};
            case GenKind::RaiseII: return {-i, i};
            case GenKind::RaiseI1: return {-i - 1, i};
            case GenKind::LowerII: return {i, -i};
            case GenKind::LowerI1: return {i, -i - 1};
        }
        throw std::logic_error("bad generator kind");
    }

    std::string to_string() const {
        auto [a, b] = weyl_indices();
        return "E(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

// All generators of gl(n|n) in a fixed order: diagonals, raisings, lowerings.
inline std::vector<Generator> all_generators(int n) {
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) g.push_back({GenKind::DiagNeg, i});
    for (int i = 1; i <= n; ++i) g.push_back({GenKind::DiagPos, i});
    for (int i = 1; i <= n; ++i) g.push_back({GenKind::RaiseII, i});
    for (int i = 1; i <= n - 1; ++i) g.push_back({GenKind::RaiseI1, i});
    for (int i = 1; i <= n; ++i) g.push_back({GenKind::LowerII, i});
    for (int i = 1; i <= n - 1; ++i) g.push_back({GenKind::LowerI1, i});
    return g;
}

template <class P>
inline long long l_val(const P& p, int col, int row) {
    return col < 0 ? static_cast<long long>(p.entry(col, row)) - col
                   : -static_cast<long long>(p.entry(col, row)) + col;
}

inline long long l_value(const GZPattern& p, int col, int row) { return l_val(p, col, row); }

namespace detail {

// One summand: shift entry (col,row) by delta with coefficient coeff.
struct RawTerm {
    int col;
    int row;
    int delta;
    SignedRadical coeff;
};

template <class P>
long long theta_block_neg(const P& p, int s_hi) {  // sum over s=1..s_hi of theta_{j,2s-1}, j=-s..-1
    long long t = 0;
    for (int s = 1; s <= s_hi; ++s)
        for (int j = -s; j <= -1; ++j) t += p.theta(j, 2 * s - 1);
    return t;
}

template <class P>
long long theta_block_pos(const P& p, int s_hi) {  // sum over s=1..s_hi of theta_{j,2s}, j=1..s
    long long t = 0;
    for (int s = 1; s <= s_hi; ++s)
        for (int j = 1; j <= s; ++j) t += p.theta(j, 2 * s);
    return t;
}

struct Ratio {
    long long num = 1;
    long long den = 1;
    void num_factor(long long f) { num *= f; }
    void den_factor(long long f) { den *= f; }
};

inline SignedRadical finish_term(const Ratio& r, long long sign_exp, bool negate_inside,
                                 const std::string& what) {
    if (r.num == 0) return SignedRadical();
    if (r.den == 0)
        throw FormulaIntegrityError(what + ": vanishing denominator with nonzero prefactor");
    Rational q(Integer(r.num), Integer(r.den));
    q.canonicalize();
    if (negate_inside) q = -q;
    if (q < 0) throw FormulaIntegrityError(what + ": negative radicand " + to_string(q));
    return SignedRadical::normalize(sign_exp % 2 == 0 ? 1 : -1, q);
}

// E_{-i,i} (raising=true) and E_{i,-i} (raising=false): shift +-1 in row 2i-1.
template <class P>
std::vector<RawTerm> ii_terms(const P& p, int i, bool raising) {
    std::vector<RawTerm> out;
    const int delta = raising ? 1 : -1;
    const long long base_neg = theta_block_neg(p, i - 1) + theta_block_pos(p, i - 1);

    for (int k = -i; k <= -1; ++k) {
        int th = p.theta(k, 2 * i - 1);
        if ((raising ? th : 1 - th) == 0) continue;
        long long e = base_neg;
        for (int j = -i; j <= k - 1; ++j) e += p.theta(j, 2 * i - 1);
        Ratio r;
        for (int j = -i + 1; j <= -1; ++j) r.num_factor(l_val(p, k, 2 * i) - l_val(p, j, 2 * i - 2) - 1);
        for (int j = 1; j <= i; ++j) r.num_factor(l_val(p, k, 2 * i) - l_val(p, j, 2 * i));
        for (int j = -i; j <= -1; ++j)
            if (j != k) r.den_factor(l_val(p, k, 2 * i) - l_val(p, j, 2 * i));
        for (int j = 1; j <= i - 1; ++j) r.den_factor(l_val(p, k, 2 * i) - l_val(p, j, 2 * i - 2) - 1);
        SignedRadical c = finish_term(r, e, false, "E(-i,i)/E(i,-i)");
        if (!c.is_zero()) out.push_back({k, 2 * i - 1, delta, c});
    }

    const long long base_pos = theta_block_neg(p, i - 1) + theta_block_pos(p, i - 2);
    for (int k = 1; k <= i - 1; ++k) {
        int th = p.theta(k, 2 * i - 2);
        if ((raising ? th : 1 - th) == 0) continue;
        long long e = base_pos;
        for (int j = 1; j <= k - 1; ++j) e += p.theta(j, 2 * i - 2);
        // the lowering variant shifts each +1 that guards the singular factors
        const long long a = raising ? 1 : 0;
        Ratio r;
        for (int j = -i + 1; j <= -1; ++j) r.num_factor(l_val(p, j, 2 * i - 2) - l_val(p, k, 2 * i - 1) + a);
        for (int j = 1; j <= i; ++j) r.num_factor(l_val(p, j, 2 * i) - l_val(p, k, 2 * i - 1) - 1 + a);
        for (int j = -i; j <= -1; ++j) r.den_factor(l_val(p, j, 2 * i) - l_val(p, k, 2 * i - 1) - 1 + a);
        for (int j = 1; j <= i - 1; ++j)
            if (j != k) r.den_factor(l_val(p, j, 2 * i - 2) - l_val(p, k, 2 * i - 1) + a);
        SignedRadical c = finish_term(r, e, true, "E(-i,i)/E(i,-i)");
        if (!c.is_zero()) out.push_back({k, 2 * i - 1, delta, c});
    }
    return out;
}

// E_{-i-1,i} (raising=true, shifts -1) and E_{i,-i-1} (raising=false, +1) in row 2i.
template <class P>
std::vector<RawTerm> i1_terms(const P& p, int i, bool raising) {
    std::vector<RawTerm> out;
    const int delta = raising ? -1 : 1;
    const long long base_neg = theta_block_neg(p, i - 1) + theta_block_pos(p, i - 1);

    for (int k = -i; k <= -1; ++k) {
        int th = p.theta(k, 2 * i - 1);
        if ((raising ? th : 1 - th) == 0) continue;
        long long e = base_neg;
        for (int j = -i; j <= k - 1; ++j) e += p.theta(j, 2 * i - 1);
        const long long a = raising ? 0 : 1;
        Ratio r;
        for (int j = -i - 1; j <= -1; ++j) r.num_factor(l_val(p, k, 2 * i) - l_val(p, j, 2 * i + 1) + a);
        for (int j = 1; j <= i - 1; ++j) r.num_factor(l_val(p, k, 2 * i - 1) - l_val(p, j, 2 * i - 1));
        for (int j = -i; j <= -1; ++j)
            if (j != k) r.den_factor(l_val(p, k, 2 * i - 1) - l_val(p, j, 2 * i - 1));
        for (int j = 1; j <= i; ++j) r.den_factor(l_val(p, k, 2 * i - 1) - l_val(p, j, 2 * i + 1) + 1);
        SignedRadical c = finish_term(r, e, true, "E(-i-1,i)/E(i,-i-1)");
        if (!c.is_zero()) out.push_back({k, 2 * i, delta, c});
    }

    const long long base_pos = theta_block_neg(p, i) + theta_block_pos(p, i - 1);
    for (int k = 1; k <= i; ++k) {
        int th = p.theta(k, 2 * i);
        if ((raising ? th : 1 - th) == 0) continue;
        long long e = base_pos;
        for (int j = 1; j <= k - 1; ++j) e += p.theta(j, 2 * i);
        const long long a = raising ? 0 : 1;
        Ratio r;
        for (int j = -i - 1; j <= -1; ++j) r.num_factor(l_val(p, j, 2 * i + 1) - l_val(p, k, 2 * i + 1));
        for (int j = 1; j <= i - 1; ++j) r.num_factor(l_val(p, j, 2 * i - 1) - l_val(p, k, 2 * i) + a);
        for (int j = -i; j <= -1; ++j) r.den_factor(l_val(p, j, 2 * i - 1) - l_val(p, k, 2 * i + 1) + 1);
        for (int j = 1; j <= i; ++j)
            if (j != k) r.den_factor(l_val(p, j, 2 * i + 1) - l_val(p, k, 2 * i + 1));
        SignedRadical c = finish_term(r, e, false, "E(-i-1,i)/E(i,-i-1)");
        if (!c.is_zero()) out.push_back({k, 2 * i, delta, c});
    }
    return out;
}

template <class P>
std::vector<RawTerm> generator_terms(const P& p, const Generator& g) {
    switch (g.kind) {
        case GenKind::RaiseII: return ii_terms(p, g.i, true);
        case GenKind::LowerII: return ii_terms(p, g.i, false);
        case GenKind::RaiseI1: return i1_terms(p, g.i, true);
        case GenKind::LowerI1: return i1_terms(p, g.i, false);
        default: throw std::invalid_argument("diagonal generator has no shift terms");
    }
}

}  // namespace detail

// Eigenvalue of E_{-i,-i} or E_{ii}: a difference of consecutive row sums.
inline long long apply_diagonal(const Generator& g, const GZPattern& p) {
    if (!g.diagonal()) throw std::invalid_argument("apply_diagonal needs a diagonal generator");
    if (!g.valid_for_rank(p.n())) throw std::invalid_argument("generator outside gl(n|n)");
    if (g.kind == GenKind::DiagNeg) return p.row_sum(2 * g.i - 1) - p.row_sum(2 * g.i - 2);
    return p.row_sum(2 * g.i) - p.row_sum(2 * g.i - 1);
}

namespace detail {

inline std::vector<std::pair<GZPattern, SignedRadical>> apply_shift_generator(const Generator& g,
                                                                              const GZPattern& p) {
    if (!g.valid_for_rank(p.n()))
        throw std::invalid_argument(g.to_string() + " outside gl(" + std::to_string(p.n()) + "|" +
                                    std::to_string(p.n()) + ")");
    std::vector<std::pair<GZPattern, SignedRadical>> out;
    for (const RawTerm& t : generator_terms(p, g)) {
        GZPattern q = p.shifted(t.col, t.row, t.delta);
        if (!is_valid(q))
            throw FormulaIntegrityError(g.to_string() + " emitted an invalid pattern with coefficient " +
                                        t.coeff.to_string());
        out.emplace_back(std::move(q), t.coeff);
    }
    return out;
}

}  // namespace detail

inline std::vector<std::pair<GZPattern, SignedRadical>> apply_raising(const Generator& g,
                                                                      const GZPattern& p) {
    if (!g.raising()) throw std::invalid_argument("apply_raising needs a raising generator");
    return detail::apply_shift_generator(g, p);
}

inline std::vector<std::pair<GZPattern, SignedRadical>> apply_lowering(const Generator& g,
                                                                       const GZPattern& p) {
    if (!g.lowering()) throw std::invalid_argument("apply_lowering needs a lowering generator");
    return detail::apply_shift_generator(g, p);
}

enum class Parity { Even, Odd };

inline Parity parity_of_weyl(int a, int b) { return (a < 0) != (b < 0) ? Parity::Odd : Parity::Even; }

class SparseOperator {
public:
    SparseOperator() : dim_(0), parity_(Parity::Even) {}
    SparseOperator(int dim, Parity parity) : dim_(dim), parity_(parity) {}

    int dim() const { return dim_; }
    Parity parity() const { return parity_; }
    const std::map<std::pair<int, int>, RadicalSum>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    const RadicalSum& at(int r, int c) const {
        static const RadicalSum zero;
        auto it = entries_.find({r, c});
        return it == entries_.end() ? zero : it->second;
    }

    void add_entry(int r, int c, const RadicalSum& v) {
        if (r < 0 || r >= dim_ || c < 0 || c >= dim_) throw std::out_of_range("entry outside matrix");
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (!v.is_zero()) entries_[{r, c}] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    SparseOperator transpose() const {
        SparseOperator t(dim_, parity_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
        SparseOperator r(a.dim_, (a.parity_ == b.parity_) ? Parity::Even : Parity::Odd);
        for (const auto& [rc, va] : a.entries_) {
            auto lo = b.entries_.lower_bound({rc.second, 0});
            auto hi = b.entries_.lower_bound({rc.second + 1, 0});
            for (auto it = lo; it != hi; ++it) r.add_entry(rc.first, it->first.second, va * it->second);
        }
        return r;
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
        if (a.parity_ != b.parity_ && !a.is_zero() && !b.is_zero())
            throw std::invalid_argument("parity mismatch in operator sum");
        SparseOperator r = a;
        if (a.is_zero() && !b.is_zero()) r = SparseOperator(a.dim_, b.parity_);
        for (const auto& [rc, v] : b.entries_) r.add_entry(rc.first, rc.second, v);
        return r;
    }
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
        return a + (Rational(-1) * b);
    }
    friend SparseOperator operator*(const Rational& s, const SparseOperator& a) {
        SparseOperator r(a.dim_, a.parity_);
        if (s == 0) return r;
        for (const auto& [rc, v] : a.entries_) r.entries_[rc] = s * v;
        return r;
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseOperator& a, const SparseOperator& b) { return !(a == b); }

private:
    int dim_;
    Parity parity_;
    std::map<std::pair<int, int>, RadicalSum> entries_;
};

// Matrix of a generator over the ordered basis; column p holds the expansion
// of g acting on basis pattern p.
inline SparseOperator generator_matrix(const Generator& g, const Basis& basis, unsigned threads = 1) {
    auto [a, b] = g.weyl_indices();
    SparseOperator m(basis.dim(), parity_of_weyl(a, b));
    if (g.diagonal()) {
        for (int c = 0; c < basis.dim(); ++c) {
            long long ev = apply_diagonal(g, basis.patterns[c]);
            if (ev != 0) m.add_entry(c, c, RadicalSum(Rational(ev)));
        }
        return m;
    }
    std::vector<std::vector<std::pair<int, SignedRadical>>> cols(basis.dim());
    parallel_for(basis.dim(), threads, [&](std::size_t c) {
        for (auto& [q, coeff] : detail::apply_shift_generator(g, basis.patterns[c]))
            cols[c].emplace_back(basis.index_of(q), coeff);
    });
    for (int c = 0; c < basis.dim(); ++c)
        for (auto& [r, coeff] : cols[c]) m.add_entry(r, c, RadicalSum(coeff));
    return m;
}

inline SparseOperator generator_matrix(const Generator& g, const HighestWeight& hw) {
    return generator_matrix(g, Basis(hw));
}

// AB - (-1)^{parity(A) parity(B)} BA
inline SparseOperator super_bracket(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in super_bracket");
    bool anticommute = a.parity() == Parity::Odd && b.parity() == Parity::Odd;
    SparseOperator ab = a * b, ba = b * a;
    return anticommute ? ab + ba : ab - ba;
}

namespace detail {

// Position of a signed index along the odd simple-root chain.
inline int chain_pos(int c) { return c < 0 ? -2 * c - 1 : 2 * c; }
inline int chain_elem(int q) { return q % 2 ? -(q + 1) / 2 : q / 2; }

inline Generator adjacent_generator(int a, int b) {
    if (a < 0 && b == -a) return {GenKind::RaiseII, -a};
    if (a > 0 && b == -a - 1) return {GenKind::LowerI1, a};
    if (a > 0 && b == -a) return {GenKind::LowerII, a};
    if (a < 0 && b == -a - 1) return {GenKind::RaiseI1, -a - 1};
    throw std::logic_error("indices not adjacent in the odd chain");
}

}  // namespace detail

// E_{ab} on the module: a generator when (a,b) are chain-adjacent, otherwise
// the bracket of the first chain step with the remaining factor. The path
// through the chain is unique, so results are bit-reproducible.
inline SparseOperator weyl_element(int a, int b, const Basis& basis) {
    const int n = basis.hw.n();
    if (a == 0 || b == 0 || a < -n || a > n || b < -n || b > n)
        throw std::out_of_range("Weyl index outside gl(n|n)");
    if (a == b) {
        Generator g{a < 0 ? GenKind::DiagNeg : GenKind::DiagPos, a < 0 ? -a : a};
        return generator_matrix(g, basis);
    }
    int pa = detail::chain_pos(a), pb = detail::chain_pos(b);
    if (pa + 1 == pb || pa - 1 == pb)
        return generator_matrix(detail::adjacent_generator(a, b), basis);
    int c = detail::chain_elem(pa < pb ? pa + 1 : pa - 1);
    return super_bracket(weyl_element(a, c, basis), weyl_element(c, b, basis));
}

inline SparseOperator weyl_element(int a, int b, const HighestWeight& hw) {
    return weyl_element(a, b, Basis(hw));
}

}  // namespace gzodd
