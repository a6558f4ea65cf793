#pragma once

#include <vector>

#include "semireg/ratpoly.hpp"

namespace semireg {

// Support edges of the continuous part of the limiting adjacency spectrum.
struct EdgeRadii {
    double r_minus = 0.0;
    double r_plus = 0.0;
};

struct DensityModel {
    int d1 = 0;
    int d2 = 0;
    EdgeRadii radii;
    double delta_weight = 0.0;  // atom at 0: |d2-d1|/(d1+d2)
};

// r+- = sqrt(d1+d2-2 +- sqrt((d1+d2-2)^2 - (d2-d1)^2))
EdgeRadii edge_radii(int d1, int d2);

DensityModel make_density_model(int d1, int d2);

// Continuous part of the limiting spectral density; zero outside
// r- < |x| < r+ and at the support edges. The atom at 0 is carried
// separately in delta_weight.
double rsrb_density(double x, const DensityModel& model);

// Integral of the continuous density over [a, b] (b >= a), absolute error
// <= 1e-10 per support lobe.
double rsrb_density_integral(double a, double b, const DensityModel& model);

// Full CDF including the atom at 0.
double rsrb_cdf(double x, const DensityModel& model);

// Limiting algebraic connectivity of the bipartite model:
// (d1+d2)/2 - sqrt(((d2-d1)/2)^2 + r+^2). Requires d1,d2 >= 2, not both 2.
double mu_rsrb(int d1, int d2);

// d - 2*sqrt(d-1) for d >= 2.
double mu_regular(int d);

// Singularity quartic of the loop-regularized walk system, ascending
// coefficients in x; its root in (0, 1/(d2-1)] is 1/(d2 - mu_rsrb).
RatPoly loop_walk_quartic(int d1, int d2);

// Value of the quartic at x = 1/(d2 - mu_rsrb(d1,d2)); near 0 when the closed
// form and the derivation chain agree.
double quartic_residual(int d1, int d2);

// Polynomial with double coefficients, ascending.
struct RealPolynomial {
    std::vector<double> coeffs;
};

// All real roots (simple-root accuracy ~1e-12 after Newton polish),
// ascending. Companion-matrix eigenvalues + polish.
std::vector<double> real_roots(const RealPolynomial& poly);

// Smallest real root in [lo, hi]; throws if none.
double smallest_real_root(const RealPolynomial& poly, double lo, double hi);

// Exact discriminant, in x, of the mixed-model generating-function cubic,
// with the x^k factor removed (degree <= 6).
RatPoly rsr_singularity_poly(const Rational& p, int d1, int d2);

// The same polynomial mapped to mu via x = 1/(d2 - mu): sum a_j (d2-mu)^(deg-j).
RatPoly rsr_mu_polynomial(const Rational& p, int d1, int d2);

// Limiting algebraic connectivity of the mixed model: smallest admissible
// root of the singularity polynomial (odd multiplicity, x > 0, repeated root
// R real and >= 1), mapped through mu = d2 - 1/x. Throws with a diagnostic
// dump if no admissible root exists.
double mu_rsr(const Rational& p, int d1, int d2);
double mu_rsr(double p, int d1, int d2);

// The classical degree-4 characterization of mu for the (2,3) mixed family as
// commonly stated, ascending in mu. Exact evaluation shows it fails the p=1
// regular limit; kept for cross-examination only (see rsr_mu_polynomial).
RatPoly mixed23_polynomial(const Rational& p);
RealPolynomial mu23_polynomial(double p);

// Degree-9 characterization of the ring-plus-random-matching network;
// its smallest root in (0,1).
RealPolynomial small_world_polynomial();
double mu_small_world();

// Leading-order small-p law p^2/4 for the (2,3) mixed family.
double mu_rsr_small_p(double p);

}  // namespace semireg
