#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semireg/multigraph.hpp"

namespace semireg {

// All eigenvalues of a symmetric matrix, ascending.
struct Spectrum {
    std::vector<double> values;
    double tol = 0.0;  // absolute accuracy estimate

    int size() const { return static_cast<int>(values.size()); }
};

// Dense symmetric eigensolve (values only). Throws if M is not symmetric
// within 1e-12.
Spectrum eigenvalues_sym(const DenseMatrix& m);

// Second-smallest Laplacian eigenvalue. Zero (within tol) iff disconnected.
double algebraic_connectivity(const Multigraph& g);

// Fraction of eigenvalues with |lambda| <= zero_tol.
double zero_eigenvalue_fraction(const Spectrum& s, double zero_tol = 1e-8);

// Count of eigenvalues with |lambda| <= zero_tol.
int kernel_dimension(const Spectrum& s, double zero_tol = 1e-8);

// Kolmogorov-Smirnov distance between the empirical CDF of a sorted sample
// and a reference CDF, evaluated at both one-sided limits of each sample
// point: max over i of max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|).
double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf);

// One eigenvalue per line, ascending, 17 significant digits.
void write_spectrum_csv_file(const Spectrum& s, const std::string& path);

}  // namespace semireg
