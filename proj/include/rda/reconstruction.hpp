#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <vector>

#include "rda/field.hpp"
#include "rda/mesh.hpp"
#include "rda/poly.hpp"

namespace rda {

// Element patch S(K): the center element plus vertex-neighbor rings grown
// until the member count reaches the threshold #S. Collocation points are
// the member barycenters.
struct ElementPatch {
    int center = -1;
    std::vector<int> members;  // sorted ascending, contains center
    Eigen::Vector3d center_point = Eigen::Vector3d::Zero();
    double diameter = 0.0;  // max pairwise distance over member vertices

    int size() const { return static_cast<int>(members.size()); }
};

ElementPatch build_patch(const Mesh& mesh, int element, int threshold);

struct UnisolvenceCheck {
    bool ok = false;
    int rank = 0;
    double sigma_ratio = 0.0;  // sigma_min / sigma_max of the Vandermonde
};

// Full-column-rank test of the collocation Vandermonde (ratio > 1e-10).
UnisolvenceCheck check_unisolvence(const Mesh& mesh, const ElementPatch& patch,
                                   int degree);

// Rank of an explicit collocation point set for P_m fitting.
UnisolvenceCheck collocation_rank(const std::vector<Eigen::Vector3d>& points,
                                  int dim, int degree);

// Constrained least-squares weights for one element: the L x #S(K) matrix
// mapping scalar values at the collocation points to the coefficients of the
// fitted degree-m polynomial on the element basis (center x_K, scale h_K).
// The fit is centered at x_K so the value constraint q(x_K) = g(x_K) pins
// the constant coefficient exactly. Throws DeficientPatch.
Eigen::MatrixXd fit_weights(const Mesh& mesh, const ElementPatch& patch,
                            int degree);

// Per-element weights for the whole mesh plus the support map of the global
// basis functions. The same scalar weights serve all d components.
struct ReconstructionOperator {
    const Mesh* mesh = nullptr;
    int degree = 0;
    int patch_threshold = 0;
    std::vector<ElementPatch> patches;
    std::vector<ScaledMonomialBasis> bases;   // element basis per element
    std::vector<Eigen::MatrixXd> weights;     // L x patch-size per element
    // support[K]: pairs (K', column of K in weights[K']) with K in S(K').
    std::vector<std::vector<std::pair<int, int>>> support;
};

ReconstructionOperator build_reconstruction(const Mesh& mesh, int degree,
                                            int patch_threshold,
                                            int n_threads = 1);

// R g for per-element data: values is (#elements x d).
SolutionField reconstruct(const ReconstructionOperator& op,
                          const Eigen::MatrixXd& values);

// R g for a smooth field sampled at the barycenters.
SolutionField interpolate_smooth(
    const ReconstructionOperator& op,
    const std::function<Eigen::VectorXd(const Eigen::Vector3d&)>& g);

// Reconstruction stability constants of the collocation Gram matrices:
//   Lambda_{m,K} = (h_K^d sigma_min(B_K))^{-1/2},
//   Lambda_m     = max_K (1 + Lambda_{m,K} sqrt(#I(K))).
struct LambdaReport {
    Eigen::VectorXd lambda_mK;        // NaN where deficient
    std::vector<int> patch_size;
    std::vector<int> deficient;       // element ids
    double lambda_m = 0.0;            // NaN if any patch is deficient
};

LambdaReport compute_lambda(const Mesh& mesh, const ReconstructionOperator& op,
                            bool allow_deficient = false);

// Lambda_{m,K} for an explicit set of collocation points on element K.
// Returns NaN when B_K is numerically singular.
double lambda_for_points(const Mesh& mesh, int element,
                         const std::vector<Eigen::Vector3d>& points,
                         int degree);

// CSV: element_id,h_K,patch_size,lambda_mK (empty value when deficient).
void write_lambda_csv(const LambdaReport& report, const Mesh& mesh,
                      std::ostream& out);

}  // namespace rda
