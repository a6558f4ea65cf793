#include "semireg/spectra.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>

extern "C" void openblas_set_num_threads(int);

namespace semireg {

namespace {

// ensemble parallelism is at trial level; a threaded BLAS underneath would
// oversubscribe and make results depend on its scheduling
void pin_blas_threads() {
    static std::once_flag flag;
    std::call_once(flag, [] { openblas_set_num_threads(1); });
}

}  // namespace

Spectrum eigenvalues_sym(const DenseMatrix& m) {
    pin_blas_threads();
    const int n = m.n;
    if (n <= 0) throw std::invalid_argument("eigenvalues_sym: empty matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");

    std::vector<double> a = m.a;
    Spectrum s;
    s.values.resize(n);
    int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'L', n, a.data(), n,
                              s.values.data());
    if (info != 0)
        throw std::runtime_error("eigenvalues_sym: dsyevd failed, info=" +
                                 std::to_string(info));
    std::sort(s.values.begin(), s.values.end());
    double radius = std::max(std::abs(s.values.front()), std::abs(s.values.back()));
    s.tol = std::numeric_limits<double>::epsilon() * n * std::max(1.0, radius);
    return s;
}

double algebraic_connectivity(const Multigraph& g) {
    if (g.n < 2) throw std::invalid_argument("algebraic_connectivity: need n >= 2");
    Spectrum s = eigenvalues_sym(laplacian(g));
    return s.values[1];
}

double zero_eigenvalue_fraction(const Spectrum& s, double zero_tol) {
    if (zero_tol <= 0) throw std::invalid_argument("zero_eigenvalue_fraction: zero_tol <= 0");
    if (s.values.empty()) return 0.0;
    return static_cast<double>(kernel_dimension(s, zero_tol)) / s.size();
}

int kernel_dimension(const Spectrum& s, double zero_tol) {
    int k = 0;
    for (double v : s.values)
        if (std::abs(v) <= zero_tol) ++k;
    return k;
}

// D = max(D+, D-) with D+ = max_i ((i+1)/n - F(x_i)) and
// D- = max_i (F(x_i^-) - i/n); the left limit is taken one ulp below x_i, so
// reference CDFs with atoms exactly at sample points are handled.
double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_sample.size();
    if (n == 0) throw std::invalid_argument("ks_distance: empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = sorted_sample[i];
        double right = cdf(x);
        double left = cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
        double hi = static_cast<double>(i + 1) / n - right;
        double lo = left - static_cast<double>(i) / n;
        d = std::max({d, hi, lo});
    }
    return d;
}

void write_spectrum_csv_file(const Spectrum& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    char buf[64];
    for (double v : s.values) {
        std::snprintf(buf, sizeof buf, "%.17g\n", v);
        f << buf;
    }
}

}  // namespace semireg
