#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cutkit/expr.hpp"
#include "cutkit/forms.hpp"

namespace cutkit {

// Default tolerances.  Algebraic identities are checked exactly and use none.
namespace tol {
inline constexpr double commute = 1e-10;    // commuting squares
inline constexpr double nondegen = 1e-9;    // determinants / top coefficients
inline constexpr double deriv = 1e-6;       // symbolic vs finite differences
inline constexpr double rank = 1e-8;        // singular value threshold
inline constexpr double unit = 1e-10;       // |b| = 1 style constraints
}  // namespace tol

// splitmix64: tiny, portable, fully deterministic across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + int(next() % uint64_t(hi - lo + 1));
    }
    Rat small_rational(int max_abs = 3) {
        int num = uniform_int(-max_abs, max_abs);
        int den = uniform_int(1, max_abs);
        return Rat(num, den);
    }
    Rat small_nonzero_rational(int max_abs = 3) {
        Rat r = small_rational(max_abs);
        return r == 0 ? Rat(1) : r;
    }

private:
    uint64_t state_;
};

struct SamplePlan {
    int base_dim = 0;
    int interior = 20;
    int boundary = 10;
    int near_boundary = 10;
    uint64_t seed = 1;
    double delta = 1e-3;
    std::vector<HalfPoint> extra;

    std::vector<HalfPoint> half_points() const {
        Rng rng(seed);
        std::vector<HalfPoint> pts;
        auto base = [&] {
            std::vector<double> x(base_dim);
            for (auto& xi : x) xi = rng.uniform(-0.8, 0.8);
            return x;
        };
        for (int i = 0; i < interior; ++i)
            pts.push_back({base(), rng.uniform(0, 6.283185307179586), rng.uniform(0.05, 0.9)});
        for (int i = 0; i < boundary; ++i)
            pts.push_back({base(), rng.uniform(0, 6.283185307179586), 0.0});
        for (int i = 0; i < near_boundary; ++i)
            pts.push_back({base(), rng.uniform(0, 6.283185307179586), rng.uniform(0, 1) * delta});
        for (auto& p : extra) pts.push_back(p);
        return pts;
    }
    std::vector<DiscPoint> disc_points() const {
        std::vector<DiscPoint> pts;
        for (auto& p : half_points()) pts.push_back(to_disc(p));
        return pts;
    }
};

struct Witness {
    std::string description;
    std::vector<double> point;
    double residual = 0.0;
};

struct CheckResult {
    std::string name;
    enum class Status { Pass, Fail, Error } status = Status::Pass;
    std::vector<Witness> witnesses;
    std::map<std::string, double> tolerances;
    uint64_t seed = 0;
    int trials = 0;
    std::string message;

    bool passed() const { return status == Status::Pass; }
    static const char* status_str(Status s) {
        switch (s) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            default: return "error";
        }
    }

    void fail(Witness w) {
        status = Status::Fail;
        witnesses.push_back(std::move(w));
    }
};

// --- numeric linear algebra over expression maps ---------------------------

inline Eigen::MatrixXd eval_matrix(const std::vector<std::vector<Expr>>& rows,
                                   std::span<const double> point) {
    Eigen::MatrixXd out(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) out(i, j) = rows[i][j].eval(point);
    return out;
}

// Symbolic Jacobian of a component list, as expressions.
inline std::vector<std::vector<Expr>> jacobian_exprs(const std::vector<Expr>& components,
                                                     int nvars) {
    std::vector<std::vector<Expr>> rows;
    rows.reserve(components.size());
    for (auto& comp : components) {
        std::vector<Expr> row;
        row.reserve(nvars);
        for (int v = 0; v < nvars; ++v) row.push_back(comp.diff(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Eigen::MatrixXd jacobian_at(const std::vector<Expr>& components, int nvars,
                                   std::span<const double> point) {
    return eval_matrix(jacobian_exprs(components, nvars), point);
}

// Central finite-difference fallback; one-sided at a domain boundary is the
// caller's responsibility (pick interior points).
inline Eigen::MatrixXd fd_jacobian_at(const std::vector<Expr>& components, int nvars,
                                      std::span<const double> point, double h = 1e-6) {
    Eigen::MatrixXd out(components.size(), nvars);
    std::vector<double> p(point.begin(), point.end());
    for (int v = 0; v < nvars; ++v) {
        double keep = p[v];
        p[v] = keep + h;
        Eigen::VectorXd hi(components.size());
        for (size_t i = 0; i < components.size(); ++i) hi(i) = components[i].eval(p);
        p[v] = keep - h;
        Eigen::VectorXd lo(components.size());
        for (size_t i = 0; i < components.size(); ++i) lo(i) = components[i].eval(p);
        p[v] = keep;
        out.col(v) = (hi - lo) / (2 * h);
    }
    return out;
}

inline int rank_of(const Eigen::MatrixXd& m, double tolerance = tol::rank) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tolerance) ++rank;
    return rank;
}

inline int rank_at(const std::vector<Expr>& components, int nvars, std::span<const double> point,
                   double tolerance = tol::rank) {
    return rank_of(jacobian_at(components, nvars, point), tolerance);
}

inline double smallest_singular_value(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().size() == 0
               ? 0.0
               : svd.singularValues()(svd.singularValues().size() - 1);
}

// Antisymmetric coefficient matrix of a 2-form at a point.
template <class Model>
Eigen::MatrixXd two_form_matrix(const FormT<Model>& form, const typename Model::Point& p) {
    if (form.degree() != 2) throw DomainError("two_form_matrix needs a 2-form");
    int n = form.total_dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (auto& [key, val] : eval_at_real(form, p)) {
        m(key[0], key[1]) = val;
        m(key[1], key[0]) = -val;
    }
    return m;
}

}  // namespace cutkit
