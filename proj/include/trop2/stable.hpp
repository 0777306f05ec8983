#pragma once
// Stable intersection of two rank-one tropical hypersurfaces. The main
// method intersects the closed rank-two hypersurface of f with that of the
// u-perturbation of g and projects to R_t^d; an independent oracle takes the
// union of cell intersections P cap Q with dim(P + Q) = d.

#include "trop2/hypersurface.hpp"
#include "trop2/polyhedron.hpp"
#include "trop2/puiseux.hpp"

#include <string>
#include <vector>

namespace trop2 {

struct BetaCertificate {
  Rational beta;
  std::vector<ExponentVector> checked_vectors;
  bool all_nonzero = false;
};

/// sum_i s_i beta^i.
Rational beta_weight(const ExponentVector& s, const Rational& beta);

/// Candidate betas 2, 3, 5/2, 7/3, 11/4, ...: the k-th prime over max(1, k-1).
Rational beta_candidate(std::size_t k);

/// Certificate for beta over the support vectors and their pairwise
/// differences (within the union of the supports).
BetaCertificate certify_beta(const std::vector<SupportSet>& supports, const Rational& beta);

/// First candidate whose certificate has no vanishing weight.
BetaCertificate choose_beta(const std::vector<SupportSet>& supports);

SupportSet support_of(const LaurentPolynomial& f);

/// x_k -> u^(beta^k) x_k for k = 1..d.
LaurentPolynomial u_perturb(const LaurentPolynomial& g, const Rational& beta);

/// (beta, beta^2, ..., beta^d).
RationalVector beta_vector(std::size_t d, const Rational& beta);

/// Piecewise check that trop2(f) = trop2(f^u) + (0; beta, ..., beta^d).
bool perturb_translation_check(const LaurentPolynomial& f, const Rational& beta);

struct StableResult {
  std::string method;
  std::vector<Polyhedron> pieces;          // in R_t^d, maximal ones only
  std::vector<PiecePolyhedron> lifted;     // R^{2d} intersection (rank-two method)
  Rational beta = 0;
};

/// Requires u-free coefficients. beta = 0 selects choose_beta.
StableResult stable_intersection(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                 const Rational& beta = 0);
StableResult direct_stable_intersection(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Intersections of trop(f) with trop(g) + eps v for each eps. Throws
/// NonGenericDirection when v lies in span(P) + span(Q) for a cell pair of
/// trop(f), trop(g) whose spans do not fill R^d.
std::vector<std::vector<Polyhedron>> epsilon_limit_probe(const LaurentPolynomial& f,
                                                         const LaurentPolynomial& g,
                                                         const RationalVector& v,
                                                         const std::vector<Rational>& eps);

}  // namespace trop2
