#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace rda {

// Monomial basis ((x - center)/scale)^alpha for |alpha| <= degree, ordered
// by total degree, then lexicographically on the exponent tuple with
// x > y > z (1, x, y, x^2, xy, y^2, ... in 2D). The constant function is
// index 0 and equals 1 at the center; all other members vanish there.
struct ScaledMonomialBasis {
    int dim = 0;
    int degree = 0;
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    double scale = 1.0;
    std::vector<std::array<int, 3>> exponents;

    ScaledMonomialBasis() = default;
    ScaledMonomialBasis(int dim, int degree, const Eigen::Vector3d& center,
                        double scale);

    int size() const { return static_cast<int>(exponents.size()); }
    static int dimension(int dim, int degree);

    Eigen::VectorXd eval(const Eigen::Vector3d& x) const;

    // Exact differentiation on coefficients: if c represents p, then
    // diff_matrix(dir) * c represents dp/dx_dir (the 1/scale factor is
    // included). Nilpotent: degree drops by one per application.
    Eigen::MatrixXd diff_matrix(int direction) const;
};

// Polynomial field over a shared scalar basis. In 2D one component is a
// scalar (the image of a vector curl) and two components a vector field;
// in 3D only three components are meaningful.
struct PolyVectorField {
    ScaledMonomialBasis basis;
    Eigen::MatrixXd coeffs;  // basis.size() x n_components

    int n_components() const { return static_cast<int>(coeffs.cols()); }
    Eigen::VectorXd eval(const Eigen::Vector3d& x) const {
        return coeffs.transpose() * basis.eval(x);
    }
};

// curl of a polynomial field under the planar conventions:
//   2D vector (u1,u2) -> scalar  du2/dx - du1/dy
//   2D scalar q       -> vector  (dq/dy, -dq/dx)
//   3D vector         -> vector
// Throws ArityMismatch when the component count does not fit the dimension.
PolyVectorField curl_field(const PolyVectorField& field);

// Stacked coefficient-space operators for the curl chain at unit scale,
// cached per (dim, degree). Divide by scale^k for k applications of curl.
//   2D: c1 is Lx2L (vector->scalar), c2 is 2Lx2L, c3 is Lx2L.
//   3D: all are 3Lx3L.
struct CurlOperators {
    int dim = 0;
    int L = 0;
    Eigen::MatrixXd c1, c2, c3;

    static const CurlOperators& get(int dim, int degree);
};

}  // namespace rda
