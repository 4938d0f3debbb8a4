#pragma once

#include <Eigen/Core>

#include "rda/mesh.hpp"

namespace rda {

// Quadrature on the reference d-simplex. Points are stored in barycentric
// coordinates (d+1 per point); weights are positive and sum to the measure
// of the reference simplex (1, 1/2, 1/6 for d = 1, 2, 3).
struct QuadratureRule {
    int dim = 0;
    int exactness = 0;
    Eigen::MatrixXd barycentric;  // n_points x (dim+1)
    Eigen::VectorXd weights;

    int n_points() const { return static_cast<int>(weights.size()); }
    static double reference_measure(int dim);
};

// Conical-product Gauss rules; exact for all polynomials of total degree
// <= exactness. Throws UnsupportedDegree for exactness > 30.
QuadratureRule simplex_quadrature(int dim, int exactness);

// Rule for the faces of a d-dimensional mesh (a (d-1)-simplex).
QuadratureRule face_quadrature(int dim, int exactness);

// Physical quadrature points and weights on element K / face f of a mesh.
// Weights include the Jacobian: they sum to the element volume / face area.
struct MappedQuadrature {
    Eigen::Matrix<double, Eigen::Dynamic, 3> points;
    Eigen::VectorXd weights;
    int n_points() const { return static_cast<int>(weights.size()); }
};

MappedQuadrature map_to_element(const QuadratureRule& rule, const Mesh& mesh,
                                int element);
MappedQuadrature map_to_face(const QuadratureRule& rule, const Mesh& mesh,
                             int face);

// Exact integral of x^a y^b z^c over the unit d-simplex:
//   prod(alpha_i!) / (d + sum(alpha_i))!
// Used as the independent oracle for quadrature tests.
double simplex_monomial_moment(int dim, const std::array<int, 3>& powers);

}  // namespace rda
