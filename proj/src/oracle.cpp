#include "siggame/oracle.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace siggame::oracle {

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 2) {
    throw std::invalid_argument("gauss_hermite_rule: order must be >= 2");
  }
  // Golub-Welsch on the Jacobi matrix of the (physicists') Hermite
  // polynomials: zero diagonal, off-diagonal beta_k = sqrt(k/2). Eigenvalues
  // are the abscissae; squared first eigenvector components the normalized
  // weights. Rescaling by sqrt(2) moves the rule onto the standard normal.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k) {
    sub[k - 1] = std::sqrt(0.5 * static_cast<double>(k));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_hermite_rule: eigensolver failed");
  }
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const double root2 = std::sqrt(2.0);
  for (int i = 0; i < order; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = root2 * solver.eigenvalues()[i];
    rule.weights[static_cast<std::size_t>(i)] = v0 * v0;
  }
  // The rule is symmetric by construction; enforce it exactly so odd moments
  // cancel pairwise instead of leaking eigensolver noise.
  for (int i = 0, j = order - 1; i < j; ++i, --j) {
    const double node = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                               rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -node;
    rule.nodes[static_cast<std::size_t>(j)] = node;
    const double weight = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                                 rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = weight;
    rule.weights[static_cast<std::size_t>(j)] = weight;
  }
  if (order % 2 == 1) {
    rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  }
  return rule;
}

}  // namespace siggame::oracle
