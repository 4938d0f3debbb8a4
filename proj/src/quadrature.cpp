#include "rda/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "rda/errors.hpp"

namespace rda {

namespace {

constexpr int kMaxExactness = 30;

// Gauss nodes/weights on [0,1] for the weight (1-x)^alpha, computed from the
// Jacobi(alpha, 0) recurrence via Golub-Welsch. alpha = 0 is Gauss-Legendre.
void gauss_jacobi01(int n, int alpha, Eigen::VectorXd& x, Eigen::VectorXd& w) {
    const double a = alpha, b = 0.0;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double diag;
        if (k == 0)
            diag = (b - a) / (a + b + 2.0);
        else {
            double s = 2.0 * k + a + b;
            diag = (b * b - a * a) / (s * (s + 2.0));
        }
        T(k, k) = diag;
        if (k + 1 < n) {
            double kk = k + 1.0;
            double s = 2.0 * kk + a + b;
            double num = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b);
            double den = s * s * (s + 1.0) * (s - 1.0);
            T(k, k + 1) = T(k + 1, k) = std::sqrt(num / den);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const double mu0 = std::pow(2.0, a + b + 1.0) / (a + b + 1.0);  // b = 0
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x(i) = 0.5 * (es.eigenvalues()(i) + 1.0);
        double v0 = es.eigenvectors()(0, i);
        w(i) = mu0 * v0 * v0 / std::pow(2.0, a + 1.0);
    }
}

}  // namespace

double QuadratureRule::reference_measure(int dim) {
    double f = 1.0;
    for (int i = 2; i <= dim; ++i) f *= i;
    return 1.0 / f;
}

QuadratureRule simplex_quadrature(int dim, int exactness) {
    if (exactness < 0 || exactness > kMaxExactness)
        throw UnsupportedDegree("quadrature exactness out of range");
    const int n = exactness / 2 + 1;  // 2n-1 >= exactness

    std::array<Eigen::VectorXd, 3> xs, ws;
    for (int a = 0; a < dim; ++a) gauss_jacobi01(n, a, xs[a], ws[a]);

    QuadratureRule rule;
    rule.dim = dim;
    rule.exactness = exactness;

    if (dim == 1) {
        rule.barycentric.resize(n, 2);
        rule.weights.resize(n);
        for (int i = 0; i < n; ++i) {
            rule.barycentric(i, 0) = 1.0 - xs[0](i);
            rule.barycentric(i, 1) = xs[0](i);
            rule.weights(i) = ws[0](i);
        }
    } else if (dim == 2) {
        rule.barycentric.resize(n * n, 3);
        rule.weights.resize(n * n);
        int p = 0;
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i, ++p) {
                double y = xs[1](j);
                double x = xs[0](i) * (1.0 - y);
                rule.barycentric(p, 0) = 1.0 - x - y;
                rule.barycentric(p, 1) = x;
                rule.barycentric(p, 2) = y;
                rule.weights(p) = ws[0](i) * ws[1](j);
            }
        }
    } else if (dim == 3) {
        rule.barycentric.resize(n * n * n, 4);
        rule.weights.resize(n * n * n);
        int p = 0;
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i, ++p) {
                    double z = xs[2](k);
                    double y = xs[1](j) * (1.0 - z);
                    double x = xs[0](i) * (1.0 - xs[1](j)) * (1.0 - z);
                    rule.barycentric(p, 0) = 1.0 - x - y - z;
                    rule.barycentric(p, 1) = x;
                    rule.barycentric(p, 2) = y;
                    rule.barycentric(p, 3) = z;
                    rule.weights(p) = ws[0](i) * ws[1](j) * ws[2](k);
                }
            }
        }
    } else {
        throw UnsupportedDegree("quadrature dimension must be 1, 2 or 3");
    }
    return rule;
}

QuadratureRule face_quadrature(int dim, int exactness) {
    return simplex_quadrature(dim - 1, exactness);
}

namespace {

MappedQuadrature map_rule(const QuadratureRule& rule,
                          const Eigen::Vector3d* verts, int n_verts,
                          double measure) {
    MappedQuadrature mq;
    const int np = rule.n_points();
    mq.points.resize(np, 3);
    mq.weights.resize(np);
    const double scale = measure / QuadratureRule::reference_measure(n_verts - 1);
    for (int q = 0; q < np; ++q) {
        Eigen::Vector3d x = Eigen::Vector3d::Zero();
        for (int i = 0; i < n_verts; ++i) x += rule.barycentric(q, i) * verts[i];
        mq.points.row(q) = x;
        mq.weights(q) = rule.weights(q) * scale;
    }
    return mq;
}

}  // namespace

MappedQuadrature map_to_element(const QuadratureRule& rule, const Mesh& mesh,
                                int element) {
    std::array<Eigen::Vector3d, 4> v;
    for (int i = 0; i < mesh.verts_per_elem(); ++i)
        v[i] = mesh.element_vertex(element, i);
    return map_rule(rule, v.data(), mesh.verts_per_elem(),
                    mesh.elem_volume[element]);
}

MappedQuadrature map_to_face(const QuadratureRule& rule, const Mesh& mesh,
                             int face) {
    const Face& f = mesh.faces[face];
    std::array<Eigen::Vector3d, 3> v;
    for (int i = 0; i < f.n_vertices; ++i) v[i] = mesh.vertices[f.vertices[i]];
    return map_rule(rule, v.data(), f.n_vertices, f.measure);
}

double simplex_monomial_moment(int dim, const std::array<int, 3>& powers) {
    int total = dim;
    double num = 1.0;
    for (int i = 0; i < dim; ++i) {
        for (int k = 2; k <= powers[i]; ++k) num *= k;
        total += powers[i];
    }
    double den = 1.0;
    for (int k = 2; k <= total; ++k) den *= k;
    return num / den;
}

}  // namespace rda
