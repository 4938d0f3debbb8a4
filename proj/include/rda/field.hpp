#pragma once

#include <Eigen/Core>
#include <vector>

#include "rda/mesh.hpp"
#include "rda/poly.hpp"

namespace rda {

// Piecewise degree-m polynomial vector field: per element, one coefficient
// column per component over that element's scaled monomial basis. The curl
// chain is precomputed on construction so evaluations are plain dot
// products. Immutable after construction.
class SolutionField {
  public:
    SolutionField(const Mesh& mesh, int degree,
                  std::vector<ScaledMonomialBasis> bases,
                  std::vector<Eigen::MatrixXd> coeffs);

    const Mesh& mesh() const { return *mesh_; }
    int degree() const { return degree_; }
    int dim() const { return mesh_->dim; }

    const ScaledMonomialBasis& basis(int element) const {
        return bases_[element];
    }
    const Eigen::MatrixXd& coefficients(int element) const {
        return coeffs_[element];
    }

    // d components.
    Eigen::VectorXd value(int element, const Eigen::Vector3d& x) const;
    // 1 component in 2D, 3 in 3D.
    Eigen::VectorXd curl(int element, const Eigen::Vector3d& x) const;
    // d components.
    Eigen::VectorXd curl2(int element, const Eigen::Vector3d& x) const;
    // 1 component in 2D, 3 in 3D.
    Eigen::VectorXd curl3(int element, const Eigen::Vector3d& x) const;

  private:
    const Mesh* mesh_;
    int degree_;
    std::vector<ScaledMonomialBasis> bases_;
    std::vector<Eigen::MatrixXd> coeffs_;
    std::vector<Eigen::MatrixXd> curl_, curl2_, curl3_;
};

}  // namespace rda
