#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cutkit/funcalg.hpp"

namespace cutkit {

// Covector indices on a base_dim-d model: 0..d-1 are dx_1..dx_d, then the two
// model covectors (dtheta, ds) on the half model and (du, dv) on the disc.
inline constexpr int kThetaOrU = -2;  // resolved against base_dim at use sites

struct HalfModelTag {
    using Func = HalfFunc;
    using Point = HalfPoint;
    static std::string covector_name(int idx, int d) {
        if (idx < d) return "dx" + std::to_string(idx + 1);
        return idx == d ? "dtheta" : "ds";
    }
};
struct DiscModelTag {
    using Func = DiscFunc;
    using Point = DiscPoint;
    static std::string covector_name(int idx, int d) {
        if (idx < d) return "dx" + std::to_string(idx + 1);
        return idx == d ? "du" : "dv";
    }
};

namespace detail {

// Sorts a covector index list, returning the permutation sign, or 0 on repeats.
inline int sort_key(std::vector<int>& key) {
    int sign = 1;
    for (size_t i = 1; i < key.size(); ++i)
        for (size_t j = i; j > 0 && key[j - 1] >= key[j]; --j) {
            if (key[j - 1] == key[j]) return 0;
            std::swap(key[j - 1], key[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace detail

template <class Model>
class FormT {
public:
    using Func = typename Model::Func;
    using Point = typename Model::Point;
    using Terms = std::map<std::vector<int>, Func>;

    FormT() = default;
    FormT(int base_dim, int degree) : dim_(base_dim), degree_(degree) {}

    static FormT zero(int base_dim, int degree) { return FormT(base_dim, degree); }
    static FormT from_func(Func f) {
        FormT out(f.base_dim(), 0);
        out.add_term({}, std::move(f));
        return out;
    }
    static FormT basis(int base_dim, std::vector<int> key) {
        FormT out(base_dim, (int)key.size());
        int sign = detail::sort_key(key);
        if (sign != 0)
            out.add_term(std::move(key),
                         Scalar(Rat(sign)) * Func::constant(base_dim, Scalar(1)));
        return out;
    }
    static FormT covector(int base_dim, int idx, Func coeff) {
        FormT out(base_dim, 1);
        out.add_term({idx}, std::move(coeff));
        return out;
    }

    int base_dim() const { return dim_; }
    int degree() const { return degree_; }
    int total_dim() const { return dim_ + 2; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(std::vector<int> key, Func coeff) {
        if ((int)key.size() != degree_) throw ModelMismatch("key length != degree");
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 0 || key[i] >= total_dim())
                throw ModelMismatch("covector index out of range");
            if (i > 0 && key[i - 1] >= key[i])
                throw ModelMismatch("covector key not strictly increasing");
        }
        if (coeff.base_dim() != dim_) throw ModelMismatch("coefficient base dim");
        if (coeff.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(coeff));
            return;
        }
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend FormT operator+(const FormT& a, const FormT& b) {
        a.require_compatible(b);
        FormT out = a;
        for (auto& [key, c] : b.terms_) out.add_term(key, c);
        return out;
    }
    friend FormT operator-(const FormT& a, const FormT& b) { return a + (-b); }
    friend FormT operator-(const FormT& a) {
        FormT out(a.dim_, a.degree_);
        for (auto& [key, c] : a.terms_) out.terms_.emplace(key, -c);
        return out;
    }
    friend FormT operator*(const Func& f, const FormT& a) {
        FormT out(a.dim_, a.degree_);
        for (auto& [key, c] : a.terms_) out.add_term(key, f * c);
        return out;
    }
    friend FormT operator*(const Scalar& c, const FormT& a) {
        FormT out(a.dim_, a.degree_);
        for (auto& [key, fc] : a.terms_) out.add_term(key, c * fc);
        return out;
    }
    friend bool operator==(const FormT& a, const FormT& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    bool is_real() const {
        for (auto& [key, c] : terms_)
            if (!c.is_real()) return false;
        return true;
    }

    std::map<std::vector<int>, std::complex<double>> eval_at(const Point& p) const {
        std::map<std::vector<int>, std::complex<double>> out;
        for (auto& [key, c] : terms_) out[key] = c.eval(p);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [key, c] : terms_) {
            if (!first) out += " + ";
            bool paren = c.term_count() > 1;
            out += paren ? "(" + c.str() + ")" : c.str();
            bool first_cov = true;
            for (int idx : key) {
                out += first_cov ? " " : "^";
                out += covector_name(idx);
                first_cov = false;
            }
            first = false;
        }
        return out;
    }
    std::string covector_name(int idx) const { return Model::covector_name(idx, dim_); }

private:
    void require_compatible(const FormT& b) const {
        if (dim_ != b.dim_ || degree_ != b.degree_)
            throw ModelMismatch("form degree/base dim differ");
    }

    int dim_ = 0;
    int degree_ = 0;
    Terms terms_;
};

using HalfForm = FormT<HalfModelTag>;
using DiscForm = FormT<DiscModelTag>;

template <class Model>
FormT<Model> wedge(const FormT<Model>& a, const FormT<Model>& b) {
    if (a.base_dim() != b.base_dim()) throw ModelMismatch("wedge across base dims");
    FormT<Model> out(a.base_dim(), a.degree() + b.degree());
    for (auto& [ka, ca] : a.terms())
        for (auto& [kb, cb] : b.terms()) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            int sign = detail::sort_key(key);
            if (sign == 0) continue;
            auto coeff = ca * cb;
            out.add_term(std::move(key), sign > 0 ? coeff : -coeff);
        }
    return out;
}

namespace detail {
// Gradient of a coefficient as (covector index, coefficient) pairs.
inline std::vector<std::pair<int, HalfFunc>> coefficient_differential(const HalfFunc& f) {
    std::vector<std::pair<int, HalfFunc>> out;
    int d = f.base_dim();
    for (int i = 0; i < d; ++i) {
        auto df = f.partial_x(i);
        if (!df.is_zero()) out.emplace_back(i, std::move(df));
    }
    auto dtheta = f.partial_theta();
    if (!dtheta.is_zero()) out.emplace_back(d, std::move(dtheta));
    auto ds = f.partial_s();  // may throw SingularDifferential
    if (!ds.is_zero()) out.emplace_back(d + 1, std::move(ds));
    return out;
}
inline std::vector<std::pair<int, DiscFunc>> coefficient_differential(const DiscFunc& f) {
    std::vector<std::pair<int, DiscFunc>> out;
    int d = f.base_dim();
    for (int i = 0; i < d; ++i) {
        auto df = f.partial_x(i);
        if (!df.is_zero()) out.emplace_back(i, std::move(df));
    }
    auto du = f.partial_u();
    if (!du.is_zero()) out.emplace_back(d, std::move(du));
    auto dv = f.partial_v();
    if (!dv.is_zero()) out.emplace_back(d + 1, std::move(dv));
    return out;
}
}  // namespace detail

template <class Model>
FormT<Model> ext_d(const FormT<Model>& form) {
    FormT<Model> out(form.base_dim(), form.degree() + 1);
    for (auto& [key, coeff] : form.terms()) {
        for (auto& [idx, dcoeff] : detail::coefficient_differential(coeff)) {
            // d(coeff) ^ dx_key: the new covector enters in front.
            if (std::find(key.begin(), key.end(), idx) != key.end()) continue;
            std::vector<int> new_key{idx};
            new_key.insert(new_key.end(), key.begin(), key.end());
            int sign = detail::sort_key(new_key);
            out.add_term(std::move(new_key), sign > 0 ? dcoeff : -dcoeff);
        }
    }
    return out;
}

// Interior product with a coordinate vector field, named by covector index
// (the dual field: index base_dim is d/dtheta resp. d/du, etc).
template <class Model>
FormT<Model> contract(int field_idx, const FormT<Model>& form) {
    if (form.degree() == 0) throw DomainError("contraction of a 0-form");
    FormT<Model> out(form.base_dim(), form.degree() - 1);
    for (auto& [key, coeff] : form.terms()) {
        auto pos = std::find(key.begin(), key.end(), field_idx);
        if (pos == key.end()) continue;
        int sign = (pos - key.begin()) % 2 == 0 ? 1 : -1;
        std::vector<int> rest(key.begin(), pos);
        rest.insert(rest.end(), pos + 1, key.end());
        out.add_term(std::move(rest), sign > 0 ? coeff : -coeff);
    }
    return out;
}

// Cartan formula.  For 0-forms only the first term applies.
template <class Model>
FormT<Model> lie_derivative(int field_idx, const FormT<Model>& form) {
    auto term1 = contract(field_idx, ext_d(form));
    if (form.degree() == 0) return term1;
    return term1 + ext_d(contract(field_idx, form));
}

struct BasicInvariantVerdict {
    bool ok = true;
    struct Failure {
        std::vector<int> key;
        HalfKey mode;
        std::string reason;
    };
    std::vector<Failure> failures;
};

// Basic on the boundary and invariant: every coefficient theta-independent,
// and every dtheta term surviving the pullback to the boundary (no ds in the
// key) has coefficient divisible by s, so the contraction with the action
// generator vanishes along s = 0.  Terms containing ds die in the pullback and
// need no divisibility (the beta_{k-2} ds^dtheta bucket).
inline BasicInvariantVerdict is_basic_invariant(const HalfForm& form) {
    BasicInvariantVerdict verdict;
    int d = form.base_dim();
    for (auto& [key, coeff] : form.terms()) {
        bool has_theta = std::find(key.begin(), key.end(), d) != key.end();
        bool has_s = std::find(key.begin(), key.end(), d + 1) != key.end();
        for (auto& [mode, c] : coeff.terms()) {
            if (mode.k != 0)
                verdict.failures.push_back({key, mode, "theta-dependent coefficient"});
            else if (has_theta && !has_s && mode.m < 2)
                verdict.failures.push_back({key, mode, "dtheta coefficient not divisible by s"});
        }
    }
    verdict.ok = verdict.failures.empty();
    return verdict;
}

// Pullback to the boundary: kill ds, then set s = 0 in the coefficients.
class BoundaryForm {
public:
    BoundaryForm() = default;
    explicit BoundaryForm(HalfForm form) : form_(std::move(form)) {
        int ds_idx = form_.base_dim() + 1;
        for (auto& [key, coeff] : form_.terms()) {
            if (std::find(key.begin(), key.end(), ds_idx) != key.end())
                throw ModelMismatch("boundary form contains ds");
            for (auto& [mode, c] : coeff.terms())
                if (mode.m != 0) throw ModelMismatch("boundary coefficient depends on s");
        }
    }
    const HalfForm& form() const { return form_; }
    friend bool operator==(const BoundaryForm&, const BoundaryForm&) = default;

private:
    HalfForm form_;
};

inline BoundaryForm boundary_pullback(const HalfForm& form) {
    int d = form.base_dim();
    HalfForm out(d, form.degree());
    for (auto& [key, coeff] : form.terms()) {
        if (std::find(key.begin(), key.end(), d + 1) != key.end()) continue;  // ds dies
        HalfFunc at_zero(d);
        for (auto& [mode, c] : coeff.terms()) {
            if (mode.m == 0) at_zero.add_term(mode, c);
            // m > 0 vanishes at s = 0; m < 0 cannot appear in public forms
        }
        out.add_term(key, std::move(at_zero));
    }
    return BoundaryForm(std::move(out));
}

// Numeric coefficient array in basis-key order; real-valued forms only.
template <class Model>
std::map<std::vector<int>, double> eval_at_real(const FormT<Model>& form,
                                                const typename Model::Point& p) {
    std::map<std::vector<int>, double> out;
    for (auto& [key, val] : form.eval_at(p)) {
        if (std::abs(val.imag()) > 1e-9)
            throw DomainError("evaluation of a non-real form requested as real");
        out[key] = val.real();
    }
    return out;
}

}  // namespace cutkit
