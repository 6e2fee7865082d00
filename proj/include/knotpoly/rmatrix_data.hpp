#ifndef KNOTPOLY_RMATRIX_DATA_HPP
#define KNOTPOLY_RMATRIX_DATA_HPP

#include "knotpoly/enhanced_rmatrix.hpp"
#include "knotpoly/gauss_rational.hpp"

#include <string>
#include <vector>

namespace knotpoly {

// Dim-2 pair over {t via t^(1/2)}: the braiding of the 1-variable
// determinant-type link polynomial.  Grading: deg(v₁)=0, deg(v₂)=1.
EnhancedRMatrix build_alexander();

// Dim-4 pair over {t0, t1} with a rational twist parameter r.  The operator
// is a braiding for every nonzero r, but carries a valid h only for r = ±1
// (h = diag(-1,1,1,-1)); for other r the result is flagged
// "R-matrix only, no valid enhancement".  Two gradings count e₂ and e₃
// content of the basis.  Throws std::invalid_argument for r = 0.
EnhancedRMatrix build_v1(const GaussRational& r);

// Dim-4 pair over {t0 via t0^(1/2), t1 via t1^(1/2)}: the two-factor
// product braiding, scaled by (t0·t1)^(-1/2), with h = (t0·t1)^(1/2)·
// diag(1,-1,-1,1).  The twist parameter of the unscaled operator is fixed
// to 1.
EnhancedRMatrix build_lambda1();

// Dim-8 pair over {s via s^(1/2), t via t^(1/2)}: block operator scaled by
// (st)^(-1), with h = st·diag(1,-1,-1,1,1,-1,-1,1) and ζ = r·√-1 baked into
// the entries.  Throws std::invalid_argument unless r ∈ {1, -1}.
EnhancedRMatrix build_lambda_minus1(const GaussRational& r);

// Dim-8 pair over {t1, t2} with ζ = √-1: the braiding of an eight-dimensional
// quantum-group representation, h = t1⁻²t2⁻²·diag(1,-1,-1,1,1,-1,-1,1),
// graded by the two-component weight of each basis vector.
EnhancedRMatrix build_sl3();

// Names accepted by build_catalog_matrix, in CLI order:
// alexander, v1, lambda1, lambda-1, sl3.
std::vector<std::string> catalog_matrix_names();

// Builds the named pair with default parameters (v1 and lambda-1 use r = 1).
// Throws std::invalid_argument for unknown names.
EnhancedRMatrix build_catalog_matrix(const std::string& name);

}  // namespace knotpoly

#endif  // KNOTPOLY_RMATRIX_DATA_HPP
