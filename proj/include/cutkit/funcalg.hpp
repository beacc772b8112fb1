#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cutkit/errors.hpp"
#include "cutkit/scalar.hpp"

namespace cutkit {

// Points of the two local models.  Half model: D^d x S^1 x [0,eps), coordinates
// (x, theta, s).  Disc model: D^d x D^2, coordinates (x, u, v) with z = u + iv.
struct HalfPoint {
    std::vector<double> x;
    double theta = 0.0;
    double s = 0.0;
};

struct DiscPoint {
    std::vector<double> x;
    double u = 0.0;
    double v = 0.0;
};

inline DiscPoint to_disc(const HalfPoint& p) {
    double r = std::sqrt(p.s);
    return {p.x, r * std::cos(p.theta), r * std::sin(p.theta)};
}

// x^alpha s^{m/2} e^{ik theta}.  m may go negative only transiently inside the
// blowup pullback; all public constructors require m >= 0.
struct HalfKey {
    std::vector<unsigned> alpha;
    int k = 0;
    int m = 0;
    friend auto operator<=>(const HalfKey&, const HalfKey&) = default;
};

// x^alpha z^p zbar^q.
struct DiscKey {
    std::vector<unsigned> alpha;
    unsigned p = 0;
    unsigned q = 0;
    friend auto operator<=>(const DiscKey&, const DiscKey&) = default;
};

inline std::string alpha_str(const std::vector<unsigned>& alpha) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        os << "x" << (i + 1);
        if (alpha[i] > 1) os << "^" << alpha[i];
        any = true;
    }
    return any ? os.str() : "";
}

namespace detail {
inline void append_part(std::string& out, const std::string& part) {
    if (part.empty()) return;
    if (!out.empty()) out += " ";
    out += part;
}
}  // namespace detail

inline std::string half_key_str(const HalfKey& key) {
    std::string out;
    detail::append_part(out, alpha_str(key.alpha));
    if (key.m != 0) {
        std::ostringstream os;
        if (key.m % 2 == 0)
            os << (key.m == 2 ? "s" : "s^" + std::to_string(key.m / 2));
        else
            os << "s^" << key.m << "/2";
        detail::append_part(out, os.str());
    }
    if (key.k != 0) detail::append_part(out, "e^{" + std::to_string(key.k) + "i theta}");
    return out.empty() ? "1" : out;
}

inline std::string disc_key_str(const DiscKey& key) {
    std::string out;
    detail::append_part(out, alpha_str(key.alpha));
    if (key.p > 0) detail::append_part(out, key.p == 1 ? "z" : "z^" + std::to_string(key.p));
    if (key.q > 0)
        detail::append_part(out, key.q == 1 ? "zbar" : "zbar^" + std::to_string(key.q));
    return out.empty() ? "1" : out;
}

namespace detail {
inline std::vector<unsigned> add_alpha(const std::vector<unsigned>& a,
                                       const std::vector<unsigned>& b) {
    std::vector<unsigned> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}
}  // namespace detail

// Finite Fourier--Puiseux sum  sum c_{alpha,k,m} x^alpha s^{m/2} e^{ik theta}
// on the half model.  Canonical: no zero coefficients, terms ordered
// lexicographically on (alpha, k, m).
class HalfFunc {
public:
    HalfFunc() = default;
    explicit HalfFunc(int base_dim) : dim_(base_dim) {}

    static HalfFunc monomial(int dim, std::vector<unsigned> alpha, int k, int m, Scalar c) {
        if (m < 0) throw DomainError("negative half-power in public constructor");
        return monomial_raw(dim, std::move(alpha), k, m, std::move(c));
    }
    // Unchecked variant; the blowup pullback needs transient m < 0.
    static HalfFunc monomial_raw(int dim, std::vector<unsigned> alpha, int k, int m, Scalar c) {
        alpha.resize(dim, 0);
        HalfFunc f(dim);
        f.add_term({std::move(alpha), k, m}, std::move(c));
        return f;
    }
    static HalfFunc constant(int dim, Scalar c) { return monomial(dim, {}, 0, 0, std::move(c)); }
    static HalfFunc x_var(int dim, int i) {
        std::vector<unsigned> alpha(dim, 0);
        alpha.at(i) = 1;
        return monomial(dim, std::move(alpha), 0, 0, Scalar(1));
    }
    static HalfFunc s(int dim) { return monomial(dim, {}, 0, 2, Scalar(1)); }
    static HalfFunc sqrt_s(int dim) { return monomial(dim, {}, 0, 1, Scalar(1)); }
    static HalfFunc fourier(int dim, int k) { return monomial(dim, {}, k, 0, Scalar(1)); }
    static HalfFunc cos_theta(int dim) {
        return monomial(dim, {}, 1, 0, Scalar(Rat(1, 2))) +
               monomial(dim, {}, -1, 0, Scalar(Rat(1, 2)));
    }
    static HalfFunc sin_theta(int dim) {
        Scalar half_over_i = Scalar(CRat(Rat(0), Rat(-1, 2)));  // 1/(2i) = -i/2
        return monomial(dim, {}, 1, 0, half_over_i) + monomial(dim, {}, -1, 0, -half_over_i);
    }

    int base_dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<HalfKey, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    int min_m() const {
        int lo = 0;
        for (auto& [key, c] : terms_) lo = std::min(lo, key.m);
        return lo;
    }
    bool has_negative_powers() const { return min_m() < 0; }

    bool is_real() const {
        for (auto& [key, c] : terms_) {
            HalfKey mirror{key.alpha, -key.k, key.m};
            auto it = terms_.find(mirror);
            if (it == terms_.end() || !(it->second == c.conj())) return false;
        }
        return true;
    }

    friend HalfFunc operator+(const HalfFunc& f, const HalfFunc& g) {
        f.require_same_dim(g);
        HalfFunc out = f;
        for (auto& [key, c] : g.terms_) out.add_term(key, c);
        return out;
    }
    friend HalfFunc operator-(const HalfFunc& f, const HalfFunc& g) { return f + (-g); }
    friend HalfFunc operator-(const HalfFunc& f) {
        HalfFunc out(f.dim_);
        for (auto& [key, c] : f.terms_) out.terms_.emplace(key, -c);
        return out;
    }
    friend HalfFunc operator*(const HalfFunc& f, const HalfFunc& g) {
        f.require_same_dim(g);
        HalfFunc out(f.dim_);
        for (auto& [ka, ca] : f.terms_)
            for (auto& [kb, cb] : g.terms_)
                out.add_term({detail::add_alpha(ka.alpha, kb.alpha), ka.k + kb.k, ka.m + kb.m},
                             ca * cb);
        return out;
    }
    friend HalfFunc operator*(const Scalar& c, const HalfFunc& f) {
        HalfFunc out(f.dim_);
        for (auto& [key, fc] : f.terms_) out.add_term(key, c * fc);
        return out;
    }
    friend bool operator==(const HalfFunc& f, const HalfFunc& g) {
        return f.dim_ == g.dim_ && f.terms_ == g.terms_;
    }

    HalfFunc partial_x(int i) const {
        HalfFunc out(dim_);
        for (auto& [key, c] : terms_) {
            unsigned e = key.alpha.at(i);
            if (e == 0) continue;
            HalfKey down = key;
            down.alpha[i] -= 1;
            out.add_term(down, Scalar(Rat(e)) * c);
        }
        return out;
    }
    HalfFunc partial_theta() const {
        HalfFunc out(dim_);
        for (auto& [key, c] : terms_) {
            if (key.k == 0) continue;
            out.add_term(key, Scalar(CRat(Rat(0), Rat(key.k))) * c);
        }
        return out;
    }
    HalfFunc partial_s() const {
        HalfFunc out(dim_);
        for (auto& [key, c] : terms_) {
            if (key.m == 0) continue;
            if (key.m - 2 < 0) throw SingularDifferential(half_key_str(key));
            HalfKey down = key;
            down.m -= 2;
            out.add_term(down, Scalar(Rat(key.m, 2)) * c);
        }
        return out;
    }

    // Exact division by s (shift m by -2).  Caller must have checked
    // divisibility; throws otherwise.
    HalfFunc divided_by_s() const {
        HalfFunc out(dim_);
        for (auto& [key, c] : terms_) {
            if (key.m < 2) throw DomainError("not divisible by s: " + half_key_str(key));
            HalfKey down = key;
            down.m -= 2;
            out.add_term(down, c);
        }
        return out;
    }
    HalfFunc times_s() const {
        HalfFunc out(dim_);
        for (auto& [key, c] : terms_) {
            HalfKey up = key;
            up.m += 2;
            out.add_term(up, c);
        }
        return out;
    }

    std::complex<double> eval(const HalfPoint& p) const {
        if ((int)p.x.size() != dim_) throw DomainError("point dimension mismatch");
        if (p.s < 0) throw DomainError("s < 0");
        std::complex<double> acc{0, 0};
        for (auto& [key, c] : terms_) {
            double mono = 1.0;
            for (int i = 0; i < dim_; ++i)
                for (unsigned e = 0; e < key.alpha[i]; ++e) mono *= p.x[i];
            if (key.m != 0) {
                if (p.s == 0 && key.m < 0) throw DomainError("negative power at s=0");
                mono *= std::pow(p.s, key.m / 2.0);
            }
            std::complex<double> phase = std::polar(1.0, key.k * p.theta);
            acc += c.eval() * phase * mono;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [key, c] : terms_) {
            if (!first) os << " + ";
            std::string ks = half_key_str(key);
            if (ks == "1")
                os << c.str();
            else
                os << c.str() << " " << ks;
            first = false;
        }
        return os.str();
    }

    void add_term(HalfKey key, Scalar c) {
        if ((int)key.alpha.size() != dim_) key.alpha.resize(dim_, 0);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(key), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

private:
    void require_same_dim(const HalfFunc& g) const {
        if (dim_ != g.dim_) throw ModelMismatch("half function base dims differ");
    }

    int dim_ = 0;
    std::map<HalfKey, Scalar> terms_;
};

// Polynomial in x, z, zbar on the disc model.
class DiscFunc {
public:
    DiscFunc() = default;
    explicit DiscFunc(int base_dim) : dim_(base_dim) {}

    static DiscFunc monomial(int dim, std::vector<unsigned> alpha, unsigned p, unsigned q,
                             Scalar c) {
        alpha.resize(dim, 0);
        DiscFunc f(dim);
        f.add_term({std::move(alpha), p, q}, std::move(c));
        return f;
    }
    static DiscFunc constant(int dim, Scalar c) { return monomial(dim, {}, 0, 0, std::move(c)); }
    static DiscFunc x_var(int dim, int i) {
        std::vector<unsigned> alpha(dim, 0);
        alpha.at(i) = 1;
        return monomial(dim, std::move(alpha), 0, 0, Scalar(1));
    }
    static DiscFunc z(int dim) { return monomial(dim, {}, 1, 0, Scalar(1)); }
    static DiscFunc zbar(int dim) { return monomial(dim, {}, 0, 1, Scalar(1)); }
    static DiscFunc u(int dim) {
        return monomial(dim, {}, 1, 0, Scalar(Rat(1, 2))) +
               monomial(dim, {}, 0, 1, Scalar(Rat(1, 2)));
    }
    static DiscFunc v(int dim) {
        Scalar c = Scalar(CRat(Rat(0), Rat(-1, 2)));  // 1/(2i)
        return monomial(dim, {}, 1, 0, c) + monomial(dim, {}, 0, 1, -c);
    }
    static DiscFunc norm_sq(int dim) { return monomial(dim, {}, 1, 1, Scalar(1)); }

    int base_dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<DiscKey, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_real() const {
        for (auto& [key, c] : terms_) {
            DiscKey mirror{key.alpha, key.q, key.p};
            auto it = terms_.find(mirror);
            if (it == terms_.end() || !(it->second == c.conj())) return false;
        }
        return true;
    }

    friend DiscFunc operator+(const DiscFunc& f, const DiscFunc& g) {
        f.require_same_dim(g);
        DiscFunc out = f;
        for (auto& [key, c] : g.terms_) out.add_term(key, c);
        return out;
    }
    friend DiscFunc operator-(const DiscFunc& f, const DiscFunc& g) { return f + (-g); }
    friend DiscFunc operator-(const DiscFunc& f) {
        DiscFunc out(f.dim_);
        for (auto& [key, c] : f.terms_) out.terms_.emplace(key, -c);
        return out;
    }
    friend DiscFunc operator*(const DiscFunc& f, const DiscFunc& g) {
        f.require_same_dim(g);
        DiscFunc out(f.dim_);
        for (auto& [ka, ca] : f.terms_)
            for (auto& [kb, cb] : g.terms_)
                out.add_term({detail::add_alpha(ka.alpha, kb.alpha), ka.p + kb.p, ka.q + kb.q},
                             ca * cb);
        return out;
    }
    friend DiscFunc operator*(const Scalar& c, const DiscFunc& f) {
        DiscFunc out(f.dim_);
        for (auto& [key, fc] : f.terms_) out.add_term(key, c * fc);
        return out;
    }
    friend bool operator==(const DiscFunc& f, const DiscFunc& g) {
        return f.dim_ == g.dim_ && f.terms_ == g.terms_;
    }

    DiscFunc partial_x(int i) const {
        DiscFunc out(dim_);
        for (auto& [key, c] : terms_) {
            unsigned e = key.alpha.at(i);
            if (e == 0) continue;
            DiscKey down = key;
            down.alpha[i] -= 1;
            out.add_term(down, Scalar(Rat(e)) * c);
        }
        return out;
    }
    // d/du = d/dz + d/dzbar,  d/dv = i d/dz - i d/dzbar.
    DiscFunc partial_u() const {
        DiscFunc out(dim_);
        for (auto& [key, c] : terms_) {
            if (key.p > 0) out.add_term({key.alpha, key.p - 1, key.q}, Scalar(Rat(key.p)) * c);
            if (key.q > 0) out.add_term({key.alpha, key.p, key.q - 1}, Scalar(Rat(key.q)) * c);
        }
        return out;
    }
    DiscFunc partial_v() const {
        DiscFunc out(dim_);
        Scalar i_pos = Scalar::i(), i_neg = -Scalar::i();
        for (auto& [key, c] : terms_) {
            if (key.p > 0)
                out.add_term({key.alpha, key.p - 1, key.q}, i_pos * Scalar(Rat(key.p)) * c);
            if (key.q > 0)
                out.add_term({key.alpha, key.p, key.q - 1}, i_neg * Scalar(Rat(key.q)) * c);
        }
        return out;
    }

    std::complex<double> eval(const DiscPoint& pt) const {
        if ((int)pt.x.size() != dim_) throw DomainError("point dimension mismatch");
        std::complex<double> z{pt.u, pt.v}, zb{pt.u, -pt.v};
        std::complex<double> acc{0, 0};
        for (auto& [key, c] : terms_) {
            std::complex<double> mono{1, 0};
            for (int i = 0; i < dim_; ++i)
                for (unsigned e = 0; e < key.alpha[i]; ++e) mono *= pt.x[i];
            for (unsigned e = 0; e < key.p; ++e) mono *= z;
            for (unsigned e = 0; e < key.q; ++e) mono *= zb;
            acc += c.eval() * mono;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [key, c] : terms_) {
            if (!first) os << " + ";
            std::string ks = disc_key_str(key);
            if (ks == "1")
                os << c.str();
            else
                os << c.str() << " " << ks;
            first = false;
        }
        return os.str();
    }

    void add_term(DiscKey key, Scalar c) {
        if ((int)key.alpha.size() != dim_) key.alpha.resize(dim_, 0);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(key), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

private:
    void require_same_dim(const DiscFunc& g) const {
        if (dim_ != g.dim_) throw ModelMismatch("disc function base dims differ");
    }

    int dim_ = 0;
    std::map<DiscKey, Scalar> terms_;
};

struct DescentVerdict {
    bool descends = false;
    std::optional<DiscFunc> image;
    std::vector<HalfKey> offending_modes;
};

// s^{m/2} e^{ik theta} extends smoothly through z = 0 iff it is the monomial
// z^{(m+k)/2} zbar^{(m-k)/2} with nonnegative integer exponents.
inline bool mono_descends(int m, int k) {
    if (m < 0) return false;
    return m >= std::abs(k) && (m - k) % 2 == 0;
}

inline DescentVerdict descend_function(const HalfFunc& f) {
    DescentVerdict verdict;
    DiscFunc image(f.base_dim());
    for (auto& [key, c] : f.terms()) {
        if (!mono_descends(key.m, key.k)) {
            verdict.offending_modes.push_back(key);
            continue;
        }
        image.add_term({key.alpha, unsigned((key.m + key.k) / 2), unsigned((key.m - key.k) / 2)},
                       c);
    }
    verdict.descends = verdict.offending_modes.empty();
    if (verdict.descends) verdict.image = std::move(image);
    return verdict;
}

inline HalfFunc lift_function(const DiscFunc& g) {
    HalfFunc out(g.base_dim());
    for (auto& [key, c] : g.terms())
        out.add_term({key.alpha, int(key.p) - int(key.q), int(key.p) + int(key.q)}, c);
    return out;
}

inline bool is_smooth_on_half(const HalfFunc& f) {
    for (auto& [key, c] : f.terms())
        if (key.m % 2 != 0) return false;
    return true;
}

inline bool is_invariant(const HalfFunc& f) {
    for (auto& [key, c] : f.terms())
        if (key.k != 0) return false;
    return true;
}

// s -> lambda s.  Odd half-powers pick up an exact sqrt(lambda) factor.
inline HalfFunc rescale_boundary_function(const HalfFunc& f, const Rat& lambda) {
    if (lambda <= 0) throw DomainError("rescale requires lambda > 0");
    Scalar root = Scalar::sqrt_of(lambda);
    HalfFunc out(f.base_dim());
    for (auto& [key, c] : f.terms()) {
        int e = key.m >= 0 ? key.m / 2 : -((-key.m + 1) / 2);  // floor(m/2)
        int rem = key.m - 2 * e;
        Scalar factor = Scalar(rat_pow(lambda, e));
        if (rem == 1) factor = factor * root;
        out.add_term(key, factor * c);
    }
    return out;
}

}  // namespace cutkit
