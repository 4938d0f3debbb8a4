#include "rda/reconstruction.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <set>

#include "rda/errors.hpp"
#include "rda/parallel.hpp"
#include "rda/quadrature.hpp"

namespace rda {

namespace {

constexpr double kUnisolvenceTol = 1e-10;   // sigma_min/sigma_max cutoff
constexpr double kGramSingularTol = 1e-14;  // B_K singularity cutoff

double patch_vertex_diameter(const Mesh& mesh, const std::vector<int>& members) {
    std::set<int> vset;
    for (int k : members)
        for (int i = 0; i < mesh.verts_per_elem(); ++i)
            vset.insert(mesh.elements[k][i]);
    std::vector<int> vs(vset.begin(), vset.end());
    double diam = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            diam = std::max(diam,
                            (mesh.vertices[vs[i]] - mesh.vertices[vs[j]]).norm());
    return diam;
}

// Vandermonde of the given basis at the patch collocation points.
Eigen::MatrixXd collocation_vandermonde(const Mesh& mesh,
                                        const ElementPatch& patch,
                                        const ScaledMonomialBasis& basis) {
    Eigen::MatrixXd V(patch.size(), basis.size());
    for (int i = 0; i < patch.size(); ++i)
        V.row(i) = basis.eval(mesh.elem_barycenter[patch.members[i]]);
    return V;
}

UnisolvenceCheck rank_of(const Eigen::MatrixXd& V) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
    const auto& sv = svd.singularValues();
    UnisolvenceCheck r;
    if (sv.size() == 0 || sv(0) == 0.0) return r;
    const double cutoff = kUnisolvenceTol * sv(0);
    for (int i = 0; i < sv.size(); ++i) r.rank += sv(i) > cutoff ? 1 : 0;
    r.sigma_ratio = sv(sv.size() - 1) / sv(0);
    r.ok = V.rows() >= V.cols() && r.rank == V.cols();
    return r;
}

// L2(K)-orthonormal basis coefficients for P_m(K): columns of the returned
// matrix expand the orthonormal functions over the element monomial basis.
Eigen::MatrixXd orthonormal_basis(const Mesh& mesh, int element,
                                  const ScaledMonomialBasis& basis) {
    const auto rule = simplex_quadrature(mesh.dim, 2 * basis.degree);
    const auto mq = map_to_element(rule, mesh, element);
    const int L = basis.size();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(L, L);
    for (int q = 0; q < mq.n_points(); ++q) {
        Eigen::VectorXd phi = basis.eval(mq.points.row(q));
        M.noalias() += mq.weights(q) * phi * phi.transpose();
    }
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    return llt.matrixL()
        .transpose()
        .solve(Eigen::MatrixXd::Identity(L, L));  // L^{-T}
}

double lambda_from_gram(const Eigen::MatrixXd& B, double h, int dim) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    const double smin = es.eigenvalues()(0);
    const double smax = es.eigenvalues()(es.eigenvalues().size() - 1);
    if (smin <= kGramSingularTol * smax)
        return std::numeric_limits<double>::quiet_NaN();
    return 1.0 / std::sqrt(std::pow(h, dim) * smin);
}

}  // namespace

ElementPatch build_patch(const Mesh& mesh, int element, int threshold) {
    std::set<int> current{element};
    while (static_cast<int>(current.size()) < threshold) {
        std::set<int> next = current;
        for (int k : current)
            for (int i = 0; i < mesh.verts_per_elem(); ++i)
                for (int nb : mesh.vertex_elements[mesh.elements[k][i]])
                    next.insert(nb);
        if (next.size() == current.size()) break;  // whole mesh reached
        current.swap(next);
    }
    ElementPatch patch;
    patch.center = element;
    patch.members.assign(current.begin(), current.end());
    patch.center_point = mesh.elem_barycenter[element];
    patch.diameter = patch_vertex_diameter(mesh, patch.members);
    return patch;
}

UnisolvenceCheck check_unisolvence(const Mesh& mesh, const ElementPatch& patch,
                                   int degree) {
    ScaledMonomialBasis basis(mesh.dim, degree, patch.center_point,
                              patch.diameter);
    return rank_of(collocation_vandermonde(mesh, patch, basis));
}

UnisolvenceCheck collocation_rank(const std::vector<Eigen::Vector3d>& points,
                                  int dim, int degree) {
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& p : points) c += p;
    c /= static_cast<double>(points.size());
    double scale = 1e-300;
    for (const auto& p : points) scale = std::max(scale, (p - c).norm());
    ScaledMonomialBasis basis(dim, degree, c, scale);
    Eigen::MatrixXd V(points.size(), basis.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        V.row(i) = basis.eval(points[i]);
    return rank_of(V);
}

Eigen::MatrixXd fit_weights(const Mesh& mesh, const ElementPatch& patch,
                            int degree) {
    const int K = patch.center;
    ScaledMonomialBasis patch_basis(mesh.dim, degree, patch.center_point,
                                    patch.diameter);
    Eigen::MatrixXd V = collocation_vandermonde(mesh, patch, patch_basis);
    auto check = rank_of(V);
    if (!check.ok)
        throw DeficientPatch(K, check.rank,
                             "patch of element " + std::to_string(K) +
                                 " is not unisolvent for degree " +
                                 std::to_string(degree) + " (rank " +
                                 std::to_string(check.rank) + ")");

    const int N = patch.size();
    const int L = patch_basis.size();
    int k0 = 0;
    while (patch.members[k0] != K) ++k0;

    // The constant basis function is pinned by the constraint; the rest is
    // an unconstrained least-squares fit of the shifted data I - 1 e_{k0}^T.
    Eigen::MatrixXd A = V.rightCols(L - 1);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Identity(N, N);
    rhs.col(k0) -= Eigen::VectorXd::Ones(N);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd W_patch(L, N);
    W_patch.row(0) = Eigen::RowVectorXd::Zero(N);
    W_patch(0, k0) = 1.0;
    W_patch.bottomRows(L - 1) = qr.solve(rhs);

    // Re-express on the element basis (same center, scale h_K).
    const double ratio = mesh.elem_diameter[K] / patch.diameter;
    for (int i = 0; i < L; ++i) {
        const auto& a = patch_basis.exponents[i];
        W_patch.row(i) *= std::pow(ratio, a[0] + a[1] + a[2]);
    }
    return W_patch;
}

ReconstructionOperator build_reconstruction(const Mesh& mesh, int degree,
                                            int patch_threshold,
                                            int n_threads) {
    ReconstructionOperator op;
    op.mesh = &mesh;
    op.degree = degree;
    op.patch_threshold = patch_threshold;
    const int ne = mesh.n_elements();
    op.patches.resize(ne);
    op.bases.resize(ne);
    op.weights.resize(ne);

    parallel_for(ne, n_threads, [&](int k) {
        op.patches[k] = build_patch(mesh, k, patch_threshold);
        op.bases[k] = ScaledMonomialBasis(mesh.dim, degree,
                                          mesh.elem_barycenter[k],
                                          mesh.elem_diameter[k]);
        op.weights[k] = fit_weights(mesh, op.patches[k], degree);
    });

    op.support.resize(ne);
    for (int k = 0; k < ne; ++k)
        for (int c = 0; c < op.patches[k].size(); ++c)
            op.support[op.patches[k].members[c]].emplace_back(k, c);
    return op;
}

SolutionField reconstruct(const ReconstructionOperator& op,
                          const Eigen::MatrixXd& values) {
    const Mesh& mesh = *op.mesh;
    const int d = mesh.dim;
    std::vector<Eigen::MatrixXd> coeffs(mesh.n_elements());
    for (int k = 0; k < mesh.n_elements(); ++k) {
        const auto& patch = op.patches[k];
        Eigen::MatrixXd local(patch.size(), d);
        for (int i = 0; i < patch.size(); ++i)
            local.row(i) = values.row(patch.members[i]);
        coeffs[k] = op.weights[k] * local;
    }
    return SolutionField(mesh, op.degree, op.bases, std::move(coeffs));
}

SolutionField interpolate_smooth(
    const ReconstructionOperator& op,
    const std::function<Eigen::VectorXd(const Eigen::Vector3d&)>& g) {
    const Mesh& mesh = *op.mesh;
    Eigen::MatrixXd values(mesh.n_elements(), mesh.dim);
    for (int k = 0; k < mesh.n_elements(); ++k)
        values.row(k) = g(mesh.elem_barycenter[k]);
    return reconstruct(op, values);
}

double lambda_for_points(const Mesh& mesh, int element,
                         const std::vector<Eigen::Vector3d>& points,
                         int degree) {
    ScaledMonomialBasis basis(mesh.dim, degree, mesh.elem_barycenter[element],
                              mesh.elem_diameter[element]);
    Eigen::MatrixXd Q = orthonormal_basis(mesh, element, basis);
    Eigen::MatrixXd U(points.size(), basis.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        U.row(i) = basis.eval(points[i]).transpose() * Q;
    Eigen::MatrixXd B = U.transpose() * U;
    return lambda_from_gram(B, mesh.elem_diameter[element], mesh.dim);
}

LambdaReport compute_lambda(const Mesh& mesh, const ReconstructionOperator& op,
                            bool allow_deficient) {
    const int ne = mesh.n_elements();
    LambdaReport report;
    report.lambda_mK.resize(ne);
    report.patch_size.resize(ne);

    for (int k = 0; k < ne; ++k) {
        const auto& patch = op.patches[k];
        report.patch_size[k] = patch.size();
        std::vector<Eigen::Vector3d> pts;
        pts.reserve(patch.size());
        for (int m : patch.members) pts.push_back(mesh.elem_barycenter[m]);
        const double lam = lambda_for_points(mesh, k, pts, op.degree);
        report.lambda_mK(k) = lam;
        if (std::isnan(lam)) {
            if (!allow_deficient)
                throw DeficientPatch(k, -1,
                                     "collocation Gram matrix of element " +
                                         std::to_string(k) + " is singular");
            report.deficient.push_back(k);
        }
    }

    if (!report.deficient.empty()) {
        report.lambda_m = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    double lm = 0.0;
    for (int k = 0; k < ne; ++k)
        lm = std::max(lm, 1.0 + report.lambda_mK(k) *
                               std::sqrt(double(report.patch_size[k])));
    report.lambda_m = lm;
    return report;
}

void write_lambda_csv(const LambdaReport& report, const Mesh& mesh,
                      std::ostream& out) {
    out << "element_id,h_K,patch_size,lambda_mK\n";
    char buf[128];
    for (int k = 0; k < mesh.n_elements(); ++k) {
        if (std::isnan(report.lambda_mK(k)))
            std::snprintf(buf, sizeof buf, "%d,%.12g,%d,\n", k,
                          mesh.elem_diameter[k], report.patch_size[k]);
        else
            std::snprintf(buf, sizeof buf, "%d,%.12g,%d,%.12g\n", k,
                          mesh.elem_diameter[k], report.patch_size[k],
                          report.lambda_mK(k));
        out << buf;
    }
}

}  // namespace rda
