#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <functional>
#include <iosfwd>

#include "rda/mesh.hpp"
#include "rda/poly.hpp"
#include "rda/reconstruction.hpp"

namespace rda {

// Volume data: d components at a point.
using VolumeFn = std::function<Eigen::VectorXd(const Eigen::Vector3d&)>;
// Boundary data evaluated with the outward face normal. In 2D the data is a
// scalar carried in component 0; in 3D a tangential vector.
using BoundaryFn = std::function<Eigen::VectorXd(const Eigen::Vector3d&,
                                                 const Eigen::Vector3d&)>;

// u x n under the planar conventions: scalar (component 0) in 2D, vector in
// 3D.
Eigen::VectorXd cross_with_normal(int dim, const Eigen::VectorXd& v,
                                  const Eigen::Vector3d& n);

// Symmetric interior-penalty system over the reconstructed space. One
// unknown per element per component, ordered element-major/component-minor.
// Face penalties are mu1 = eta/h_e^3 on value jumps and mu2 = eta/h_e on
// curl jumps. consistency_sign switches the sign of the consistency and
// symmetrization face terms; +1 is the orientation that passes the
// polynomial consistency test.
struct DGSystem {
    int dim = 0;
    int degree = 0;
    double eta = 0.0;
    double consistency_sign = 1.0;
    int n_elements = 0;
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd b;

    int n_unknowns() const { return dim * n_elements; }
};

double default_eta(int dim, int degree);

DGSystem assemble_matrix(const Mesh& mesh, const ReconstructionOperator& op,
                         double eta, double consistency_sign = 1.0);

Eigen::VectorXd assemble_rhs(const Mesh& mesh,
                             const ReconstructionOperator& op,
                             const VolumeFn& f, const BoundaryFn& g1,
                             const BoundaryFn& g2, double eta,
                             double consistency_sign = 1.0);

// Executable Galerkin orthogonality: manufactures f, g1, g2 from a global
// polynomial solution of degree <= m and returns max_i |(A g* - b)_i|,
// where g* samples the polynomial at the barycenters.
double galerkin_consistency_check(const Mesh& mesh,
                                  const ReconstructionOperator& op,
                                  const PolyVectorField& exact, double eta,
                                  double consistency_sign = 1.0);

// Coordinate text format: "rows cols nnz" then 0-based "i j value" lines.
void write_triplets(const Eigen::SparseMatrix<double>& A, std::ostream& out);

}  // namespace rda
