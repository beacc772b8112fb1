#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>

#include "cutkit/rational.hpp"

namespace cutkit {

// Complex rational a + bi.
struct CRat {
    Rat re{0}, im{0};

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    CRat conj() const { return {re, -im}; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CRat& a, const CRat& b) = default;
};

// Exact coefficient: a finite sum  sum_b (re_b + i im_b) sqrt(b)  over positive
// squarefree integers b.  Closed under ring operations; sqrt factors enter only
// through rescalings of the boundary defining function by non-square ratios.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) { set(Int(1), CRat(Rat(v))); }
    Scalar(Rat v) { set(Int(1), CRat(std::move(v))); }
    Scalar(CRat v) { set(Int(1), std::move(v)); }

    static Scalar i() { return Scalar(CRat(Rat(0), Rat(1))); }

    // sqrt(r) for a positive rational r, reduced so radicands stay squarefree:
    // sqrt(p/q) = sqrt(pq)/q = (a/q) sqrt(b) with pq = a^2 b.
    static Scalar sqrt_of(const Rat& r) {
        if (r <= 0) throw DomainError("sqrt of nonpositive rational");
        Int pq = numerator(r) * denominator(r);
        auto [a, b] = square_part(pq);
        Scalar out;
        out.set(b, CRat(Rat(a, denominator(r))));
        return out;
    }

    bool is_zero() const { return parts_.empty(); }
    bool is_real() const {
        for (auto& [b, c] : parts_)
            if (c.im != 0) return false;
        return true;
    }

    // Rational part (radicand 1); zero if absent.
    CRat rational_part() const {
        auto it = parts_.find(Int(1));
        return it == parts_.end() ? CRat() : it->second;
    }
    bool is_rational() const {
        return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
    }

    Scalar conj() const {
        Scalar out;
        for (auto& [b, c] : parts_) out.parts_.emplace(b, c.conj());
        return out;
    }

    std::complex<double> eval() const {
        std::complex<double> acc{0.0, 0.0};
        for (auto& [b, c] : parts_) {
            double root = std::sqrt(b.convert_to<double>());
            acc += std::complex<double>(rat_double(c.re), rat_double(c.im)) * root;
        }
        return acc;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        Scalar out = x;
        for (auto& [b, c] : y.parts_) out.add_part(b, c);
        return out;
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }
    friend Scalar operator-(const Scalar& x) {
        Scalar out;
        for (auto& [b, c] : x.parts_) out.parts_.emplace(b, -c);
        return out;
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        Scalar out;
        for (auto& [b1, c1] : x.parts_)
            for (auto& [b2, c2] : y.parts_) {
                // sqrt(b1) sqrt(b2) = g sqrt((b1/g)(b2/g)), g = gcd(b1,b2).
                Int g = gcd(b1, b2);
                Int rad = (b1 / g) * (b2 / g);
                out.add_part(rad, c1 * c2 * CRat(Rat(g)));
            }
        return out;
    }
    friend bool operator==(const Scalar& x, const Scalar& y) = default;

    const std::map<Int, CRat>& parts() const { return parts_; }

    std::string str() const {
        if (parts_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [b, c] : parts_) {
            std::string piece;
            if (c.im == 0)
                piece = rat_str(c.re);
            else if (c.re == 0)
                piece = rat_str(c.im) + "i";
            else
                piece = "(" + rat_str(c.re) + (c.im > 0 ? "+" : "") + rat_str(c.im) + "i)";
            if (b != 1) piece += "*sqrt(" + b.str() + ")";
            if (!first && piece[0] != '-') os << "+";
            os << piece;
            first = false;
        }
        return os.str();
    }

private:
    void set(Int b, CRat c) {
        if (!c.is_zero()) parts_.emplace(std::move(b), std::move(c));
    }
    void add_part(const Int& b, const CRat& c) {
        auto it = parts_.find(b);
        if (it == parts_.end()) {
            if (!c.is_zero()) parts_.emplace(b, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) parts_.erase(it);
    }

    std::map<Int, CRat> parts_;  // squarefree positive radicand -> coefficient
};

}  // namespace cutkit
