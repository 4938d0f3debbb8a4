#include "rda/field.hpp"

namespace rda {

SolutionField::SolutionField(const Mesh& mesh, int degree,
                             std::vector<ScaledMonomialBasis> bases,
                             std::vector<Eigen::MatrixXd> coeffs)
    : mesh_(&mesh),
      degree_(degree),
      bases_(std::move(bases)),
      coeffs_(std::move(coeffs)) {
    const int d = mesh_->dim;
    const int ne = mesh_->n_elements();
    const auto& ops = CurlOperators::get(d, degree_);
    const int L = ops.L;
    const int kc = d == 2 ? 1 : 3;

    curl_.resize(ne);
    curl2_.resize(ne);
    curl3_.resize(ne);
    Eigen::VectorXd stacked(d * L);
    for (int k = 0; k < ne; ++k) {
        const double s = bases_[k].scale;
        for (int j = 0; j < d; ++j) stacked.segment(j * L, L) = coeffs_[k].col(j);

        Eigen::VectorXd c1 = (ops.c1 * stacked) / s;
        Eigen::VectorXd c2 = (ops.c2 * stacked) / (s * s);
        Eigen::VectorXd c3 = (ops.c3 * stacked) / (s * s * s);

        curl_[k].resize(L, kc);
        curl3_[k].resize(L, kc);
        for (int j = 0; j < kc; ++j) {
            curl_[k].col(j) = c1.segment(j * L, L);
            curl3_[k].col(j) = c3.segment(j * L, L);
        }
        curl2_[k].resize(L, d);
        for (int j = 0; j < d; ++j) curl2_[k].col(j) = c2.segment(j * L, L);
    }
}

Eigen::VectorXd SolutionField::value(int element, const Eigen::Vector3d& x) const {
    return coeffs_[element].transpose() * bases_[element].eval(x);
}

Eigen::VectorXd SolutionField::curl(int element, const Eigen::Vector3d& x) const {
    return curl_[element].transpose() * bases_[element].eval(x);
}

Eigen::VectorXd SolutionField::curl2(int element, const Eigen::Vector3d& x) const {
    return curl2_[element].transpose() * bases_[element].eval(x);
}

Eigen::VectorXd SolutionField::curl3(int element, const Eigen::Vector3d& x) const {
    return curl3_[element].transpose() * bases_[element].eval(x);
}

}  // namespace rda
