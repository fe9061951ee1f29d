#pragma once

#include <utility>

#include "clg/fields.hpp"

namespace clg {

/// Forward differences with homogeneous Neumann closure: the difference in
/// a direction is zero on the last row/column. All adjoint identities below
/// hold exactly (to rounding) under the spacing^2-weighted pairings.
VectorField2 grad_scalar(const ScalarField& u);

/// Componentwise grad_scalar; row i of the result is grad of component i.
MatrixField2x2 grad_vector(const VectorField2& v);

/// Negative adjoint of grad_scalar: <grad u, p> = -<u, div p> for all u, p.
ScalarField div_vector(const VectorField2& p);

/// Rowwise div_vector; negative adjoint of grad_vector.
VectorField2 div_matrix(const MatrixField2x2& s);

/// The coupled operator (u, v) |-> (grad u - v, grad v).
std::pair<VectorField2, MatrixField2x2> lambda_apply(const ScalarField& u,
                                                     const VectorField2& v);

/// Adjoint of lambda_apply: (rho, sigma) |-> (-div rho, -rho - div sigma).
std::pair<ScalarField, VectorField2> lambda_adjoint(
    const VectorField2& rho, const MatrixField2x2& sigma);

/// spacing^2-weighted Euclidean pairings.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const VectorField2& a, const VectorField2& b);
double inner(const MatrixField2x2& a, const MatrixField2x2& b);

/// Pointwise magnitude suprema.
double sup_abs(const ScalarField& a);
double sup_norm(const VectorField2& a);
double sup_norm(const MatrixField2x2& a);

/// a + s * b, elementwise.
ScalarField add_scaled(const ScalarField& a, double s, const ScalarField& b);
VectorField2 add_scaled(const VectorField2& a, double s,
                        const VectorField2& b);

bool all_finite(const ScalarField& a);
bool all_finite(const VectorField2& a);

}  // namespace clg
