#include "rda/poly.hpp"

#include <map>
#include <mutex>

#include "rda/errors.hpp"

namespace rda {

ScaledMonomialBasis::ScaledMonomialBasis(int dim_, int degree_,
                                         const Eigen::Vector3d& center_,
                                         double scale_)
    : dim(dim_), degree(degree_), center(center_), scale(scale_) {
    for (int deg = 0; deg <= degree; ++deg) {
        for (int a = deg; a >= 0; --a) {
            if (dim == 2) {
                exponents.push_back({a, deg - a, 0});
            } else {
                for (int b = deg - a; b >= 0; --b)
                    exponents.push_back({a, b, deg - a - b});
            }
        }
    }
}

int ScaledMonomialBasis::dimension(int dim, int degree) {
    int num = 1, den = 1;
    for (int i = 1; i <= dim; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

Eigen::VectorXd ScaledMonomialBasis::eval(const Eigen::Vector3d& x) const {
    std::array<std::array<double, 16>, 3> pw{};
    for (int d = 0; d < dim; ++d) {
        double t = (x(d) - center(d)) / scale;
        pw[d][0] = 1.0;
        for (int k = 1; k <= degree; ++k) pw[d][k] = pw[d][k - 1] * t;
    }
    Eigen::VectorXd v(size());
    for (int i = 0; i < size(); ++i) {
        const auto& a = exponents[i];
        double val = pw[0][a[0]] * pw[1][a[1]];
        if (dim == 3) val *= pw[2][a[2]];
        v(i) = val;
    }
    return v;
}

Eigen::MatrixXd ScaledMonomialBasis::diff_matrix(int direction) const {
    std::map<std::array<int, 3>, int> index;
    for (int i = 0; i < size(); ++i) index[exponents[i]] = i;

    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(size(), size());
    for (int j = 0; j < size(); ++j) {
        auto a = exponents[j];
        if (a[direction] == 0) continue;
        double factor = a[direction] / scale;
        a[direction] -= 1;
        D(index.at(a), j) = factor;
    }
    return D;
}

PolyVectorField curl_field(const PolyVectorField& field) {
    const auto& B = field.basis;
    const int k = field.n_components();
    const auto& ops = CurlOperators::get(B.dim, B.degree);
    const int L = B.size();

    PolyVectorField out;
    out.basis = B;
    if (B.dim == 2) {
        if (k == 2) {
            Eigen::VectorXd stacked(2 * L);
            stacked << field.coeffs.col(0), field.coeffs.col(1);
            out.coeffs = (ops.c1 * stacked) / B.scale;
        } else if (k == 1) {
            Eigen::MatrixXd Dy = B.diff_matrix(1), Dx = B.diff_matrix(0);
            out.coeffs.resize(L, 2);
            out.coeffs.col(0) = Dy * field.coeffs.col(0);
            out.coeffs.col(1) = -Dx * field.coeffs.col(0);
        } else {
            throw ArityMismatch("2D curl expects 1 or 2 components");
        }
    } else {
        if (k != 3) throw ArityMismatch("3D curl expects 3 components");
        Eigen::VectorXd stacked(3 * L);
        stacked << field.coeffs.col(0), field.coeffs.col(1), field.coeffs.col(2);
        Eigen::VectorXd c = (ops.c1 * stacked) / B.scale;
        out.coeffs.resize(L, 3);
        for (int j = 0; j < 3; ++j) out.coeffs.col(j) = c.segment(j * L, L);
    }
    return out;
}

const CurlOperators& CurlOperators::get(int dim, int degree) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, CurlOperators> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({dim, degree});
    if (it != cache.end()) return it->second;

    ScaledMonomialBasis B(dim, degree, Eigen::Vector3d::Zero(), 1.0);
    const int L = B.size();
    CurlOperators ops;
    ops.dim = dim;
    ops.L = L;

    if (dim == 2) {
        Eigen::MatrixXd Dx = B.diff_matrix(0), Dy = B.diff_matrix(1);
        ops.c1.resize(L, 2 * L);  // vector -> scalar curl
        ops.c1 << -Dy, Dx;
        Eigen::MatrixXd G(2 * L, L);  // scalar -> vector curl
        G << Dy, -Dx;
        ops.c2 = G * ops.c1;
        ops.c3 = ops.c1 * ops.c2;
    } else {
        Eigen::MatrixXd Dx = B.diff_matrix(0), Dy = B.diff_matrix(1),
                        Dz = B.diff_matrix(2);
        Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(L, L);
        ops.c1.resize(3 * L, 3 * L);
        ops.c1 << Z, -Dz, Dy, Dz, Z, -Dx, -Dy, Dx, Z;
        ops.c2 = ops.c1 * ops.c1;
        ops.c3 = ops.c1 * ops.c2;
    }
    return cache.emplace(std::make_pair(dim, degree), std::move(ops))
        .first->second;
}

}  // namespace rda
