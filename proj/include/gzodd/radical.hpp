#pragma once

// Exact scalars of the form c*sqrt(d) (c rational, d squarefree) and finite
// sums of such terms. Distinct squarefree radicands are linearly independent
// over the rationals, so both representations are canonical and equality is
// a plain structural comparison.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gzodd/rational.hpp"

namespace gzodd {

// Raised when a matrix-element formula produces a negative radicand or a
// vanishing denominator with a nonzero prefactor. Never expected on valid
// patterns; signals a transcription bug.
struct FormulaIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kFactorBound = 1'000'000;

namespace detail {

// N = square * squarefree, by trial division with primes <= bound.
// A single leftover cofactor whose square exceeds the last trial divisor is
// prime and is absorbed into the squarefree part.
inline std::pair<Integer, long long> square_squarefree_split(Integer n, long long bound) {
    if (n <= 0) throw std::invalid_argument("square_squarefree_split: positive input required");
    Integer square = 1;
    long long squarefree = 1;
    auto push_squarefree = [&](long long p) {
        if (squarefree > (std::numeric_limits<long long>::max)() / p)
            throw std::overflow_error("squarefree radicand overflows 64 bits");
        squarefree *= p;
    };
    for (long long p = 2; Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (p > bound)
            throw std::domain_error("radicand exceeds factorization bound " + std::to_string(bound));
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int t = 0; t < e / 2; ++t) square *= p;
        if (e % 2) push_squarefree(p);
    }
    if (n > 1) {
        if (!n.fits_slong_p()) throw std::overflow_error("prime cofactor overflows 64 bits");
        push_squarefree(n.get_si());
    }
    return {square, squarefree};
}

inline std::vector<long long> prime_factors(long long d, long long bound = kFactorBound) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
        if (p > bound) throw std::domain_error("radicand exceeds factorization bound");
        if (d % p == 0) {
            ps.push_back(p);
            d /= p;  // squarefree: single power
        }
    }
    if (d > 1) ps.push_back(d);
    return ps;
}

}  // namespace detail

class SignedRadical {
public:
    SignedRadical() : coeff_(0), radicand_(1) {}
    SignedRadical(Rational coeff, long long radicand) : coeff_(std::move(coeff)), radicand_(radicand) {
        if (radicand_ < 1) throw std::invalid_argument("radicand must be >= 1");
        if (coeff_ == 0) radicand_ = 1;
    }

    // Canonical form of sign*sqrt(q), q >= 0 rational.
    static SignedRadical normalize(int sign, const Rational& q, long long bound = kFactorBound) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
        if (q < 0) throw std::invalid_argument("normalize: negative radicand");
        if (q == 0) return SignedRadical();
        // sqrt(p/r) = sqrt(p*r)/r
        Integer p = q.get_num(), r = q.get_den();
        auto [square, squarefree] = detail::square_squarefree_split(p * r, bound);
        Rational coeff(square, r);
        coeff.canonicalize();
        if (sign < 0) coeff = -coeff;
        return SignedRadical(coeff, squarefree);
    }

    const Rational& coeff() const { return coeff_; }
    long long radicand() const { return radicand_; }
    bool is_zero() const { return coeff_ == 0; }

    // coeff^2 * radicand, with the original sign: the rational whose signed
    // square root this value is.
    Rational signed_square() const {
        Rational s = coeff_ * coeff_ * Rational(radicand_);
        return coeff_ < 0 ? -s : s;
    }

    double to_float() const { return to_double(coeff_) * std::sqrt(static_cast<double>(radicand_)); }

    friend SignedRadical operator*(const SignedRadical& a, const SignedRadical& b) {
        if (a.is_zero() || b.is_zero()) return SignedRadical();
        long long g = std::gcd(a.radicand_, b.radicand_);
        long long ra = a.radicand_ / g, rb = b.radicand_ / g;
        long long d;
        if (__builtin_mul_overflow(ra, rb, &d)) throw std::overflow_error("radicand product overflow");
        return SignedRadical(a.coeff_ * b.coeff_ * g, d);
    }
    SignedRadical operator-() const { return SignedRadical(-coeff_, radicand_); }

    friend bool operator==(const SignedRadical& a, const SignedRadical& b) {
        return a.radicand_ == b.radicand_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const SignedRadical& a, const SignedRadical& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = gzodd::to_string(coeff_);
        if (radicand_ != 1) s += "*sqrt(" + std::to_string(radicand_) + ")";
        return s;
    }

private:
    Rational coeff_;
    long long radicand_;
};

class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(const SignedRadical& r) {
        if (!r.is_zero()) terms_[r.radicand()] = r.coeff();
    }
    RadicalSum(const Rational& q) {
        if (q != 0) terms_[1] = q;
    }
    RadicalSum(long long v) : RadicalSum(Rational(v)) {}

    const std::map<long long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    Rational rational_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw std::domain_error("RadicalSum is irrational");
        return terms_.begin()->second;
    }

    RadicalSum& operator+=(const RadicalSum& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    RadicalSum& operator-=(const RadicalSum& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    RadicalSum operator-() const {
        RadicalSum r;
        for (const auto& [d, c] : terms_) r.terms_[d] = -c;
        return r;
    }

    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) {
                SignedRadical p = SignedRadical(ca, da) * SignedRadical(cb, db);
                if (!p.is_zero()) r.add_term(p.radicand(), p.coeff());
            }
        return r;
    }
    friend RadicalSum operator*(const Rational& s, const RadicalSum& a) {
        RadicalSum r;
        if (s == 0) return r;
        for (const auto& [d, c] : a.terms_) r.terms_[d] = s * c;
        return r;
    }

    // Exact inverse inside the field generated by the radicands: repeatedly
    // multiply by the conjugate that flips the sign of one prime's root until
    // the denominator is rational.
    RadicalSum inverse() const {
        if (is_zero()) throw std::domain_error("division by zero RadicalSum");
        RadicalSum den = *this;
        RadicalSum num(Rational(1));
        while (!den.is_rational()) {
            long long p = 0;
            for (const auto& [d, c] : den.terms_)
                if (d != 1) {
                    p = detail::prime_factors(d).front();
                    break;
                }
            RadicalSum conj;
            for (const auto& [d, c] : den.terms_) conj.terms_[d] = (d % p == 0) ? -c : c;
            den = den * conj;
            num = num * conj;
        }
        Rational v = den.rational_value();
        if (v == 0) throw std::domain_error("division by zero RadicalSum");
        return Rational(1) / v * num;
    }
    friend RadicalSum operator/(const RadicalSum& a, const RadicalSum& b) { return a * b.inverse(); }

    friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadicalSum& a, const RadicalSum& b) { return !(a == b); }
    friend bool operator<(const RadicalSum& a, const RadicalSum& b) { return a.terms_ < b.terms_; }

    double to_float() const {
        double s = 0;
        for (const auto& [d, c] : terms_) s += to_double(c) * std::sqrt(static_cast<double>(d));
        return s;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            if (!first) s += " + ";
            s += SignedRadical(c, d).to_string();
            first = false;
        }
        return s;
    }

private:
    void add_term(long long d, const Rational& c) {
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            if (c != 0) terms_[d] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // radicand -> nonzero coefficient
    std::map<long long, Rational> terms_;
};

}  // namespace gzodd
