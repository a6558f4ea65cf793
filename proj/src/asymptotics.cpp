#include "semireg/asymptotics.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

extern "C" void openblas_set_num_threads(int);

namespace semireg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void pin_blas_threads() {
    static std::once_flag flag;
    std::call_once(flag, [] { openblas_set_num_threads(1); });
}

void check_degrees(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("degrees must be >= 1");
    if (d1 + d2 < 3) throw std::invalid_argument("need d1 + d2 >= 3");
}

// Adaptive Simpson on [a,b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

EdgeRadii edge_radii(int d1, int d2) {
    check_degrees(d1, d2);
    double s = d1 + d2 - 2;
    double q = std::sqrt(s * s - static_cast<double>(d2 - d1) * (d2 - d1));
    return {std::sqrt(std::max(0.0, s - q)), std::sqrt(s + q)};
}

DensityModel make_density_model(int d1, int d2) {
    DensityModel m;
    m.d1 = d1;
    m.d2 = d2;
    m.radii = edge_radii(d1, d2);
    m.delta_weight = static_cast<double>(std::abs(d2 - d1)) / (d1 + d2);
    return m;
}

double rsrb_density(double x, const DensityModel& model) {
    double ax = std::abs(x);
    double rm = model.radii.r_minus, rp = model.radii.r_plus;
    if (ax <= rm || ax >= rp) return 0.0;
    double d1 = model.d1, d2 = model.d2;
    double num = std::sqrt((ax * ax - rm * rm) * (rp * rp - ax * ax));
    return (1.0 / kPi) * (d1 * d2 / (d1 + d2)) * num / ((d1 * d2 - ax * ax) * ax);
}

// One-sided integral of the continuous density over [a, b] within [r-, r+],
// via the substitution x^2 = r-^2 + (r+^2 - r-^2) sin^2(theta): the integrand
// becomes smooth up to the support edges.
static double lobe_integral(double a, double b, const DensityModel& model) {
    double rm = model.radii.r_minus, rp = model.radii.r_plus;
    a = std::max(a, rm);
    b = std::min(b, rp);
    if (!(b > a)) return 0.0;
    double span = rp * rp - rm * rm;
    auto theta_of = [&](double x) {
        double s2 = (x * x - rm * rm) / span;
        return std::asin(std::sqrt(std::clamp(s2, 0.0, 1.0)));
    };
    double d1 = model.d1, d2 = model.d2;
    const double k = (1.0 / kPi) * (d1 * d2 / (d1 + d2));
    auto g = [&](double theta) {
        double st = std::sin(theta), ct = std::cos(theta);
        double x2 = rm * rm + span * st * st;
        // rho(x) dx = K * span^2 * st^2 * ct^2 / ((d1 d2 - x^2) x^2) dtheta;
        // when rm == 0 the st^2 cancels against x^2 = span st^2
        if (rm == 0.0) return k * span * ct * ct / (d1 * d2 - x2);
        return k * span * span * st * st * ct * ct / ((d1 * d2 - x2) * x2);
    };
    return integrate(g, theta_of(a), theta_of(b), 1e-11);
}

double rsrb_density_integral(double a, double b, const DensityModel& model) {
    if (!(b >= a)) throw std::invalid_argument("rsrb_density_integral: need b >= a");
    double total = 0.0;
    // negative lobe [-r+, -r-]: mirror of [max(a,-inf)..]
    double na = std::max(-b, 0.0), nb = std::max(-a, 0.0);
    if (nb > na) total += lobe_integral(na, nb, model);  // x in [-b,-a] mapped to |x|
    double pa = std::max(a, 0.0), pb = std::max(b, 0.0);
    if (pb > pa) total += lobe_integral(pa, pb, model);
    return total;
}

double rsrb_cdf(double x, const DensityModel& model) {
    double rp = model.radii.r_plus;
    double c = 0.0;
    if (x > -rp) c += rsrb_density_integral(-rp, std::min(x, rp), model);
    if (x >= 0.0) c += model.delta_weight;
    return std::min(c, 1.0);
}

double mu_rsrb(int d1, int d2) {
    if (d1 < 2 || d2 < 2) throw std::invalid_argument("mu_rsrb: degrees must be >= 2");
    if (d1 == 2 && d2 == 2) throw std::invalid_argument("mu_rsrb: (2,2) excluded");
    double rp = edge_radii(d1, d2).r_plus;
    double half_gap = 0.5 * (d2 - d1);
    return 0.5 * (d1 + d2) - std::sqrt(half_gap * half_gap + rp * rp);
}

double mu_regular(int d) {
    if (d < 2) throw std::invalid_argument("mu_regular: d must be >= 2");
    return d - 2.0 * std::sqrt(static_cast<double>(d - 1));
}

RatPoly loop_walk_quartic(int d1, int d2) {
    check_degrees(d1, d2);
    Rational D1(d1), D2(d2);
    Rational gap = D1 - D2;
    return RatPoly({Rational(1), 2 * gap, gap * gap - 2 * (D1 + D2 - 2),
                    -2 * (D1 + D2 - 2) * gap, gap * gap});
}

double quartic_residual(int d1, int d2) {
    double x = 1.0 / (d2 - mu_rsrb(d1, d2));
    return loop_walk_quartic(d1, d2).eval_double(x);
}

std::vector<double> real_roots(const RealPolynomial& poly) {
    std::vector<double> c = poly.coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    std::vector<double> roots;
    int low = 0;
    while (low < static_cast<int>(c.size()) && c[low] == 0.0) ++low;
    if (low > 0) {
        roots.push_back(0.0);
        c.erase(c.begin(), c.begin() + low);
    }
    int deg = static_cast<int>(c.size()) - 1;
    if (deg >= 1) {
        pin_blas_threads();
        // companion matrix of the monic polynomial; eigenvalues are invariant
        // under transpose, so the storage order does not matter
        std::vector<double> m(static_cast<std::size_t>(deg) * deg, 0.0);
        for (int i = 1; i < deg; ++i) m[static_cast<std::size_t>(i) * deg + i - 1] = 1.0;
        for (int i = 0; i < deg; ++i)
            m[static_cast<std::size_t>(i) * deg + deg - 1] = -c[i] / c[deg];
        std::vector<double> wr(deg), wi(deg);
        int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', deg, m.data(), deg,
                                 wr.data(), wi.data(), nullptr, 1, nullptr, 1);
        if (info != 0) throw std::runtime_error("real_roots: dgeev failed");

        auto p = [&](double x) {
            double acc = 0.0;
            for (int i = deg; i >= 0; --i) acc = acc * x + c[i];
            return acc;
        };
        auto dp = [&](double x) {
            double acc = 0.0;
            for (int i = deg; i >= 1; --i) acc = acc * x + i * c[i];
            return acc;
        };
        for (int i = 0; i < deg; ++i) {
            if (std::abs(wi[i]) > 1e-7 * (1.0 + std::abs(wr[i]))) continue;
            double x = wr[i];
            for (int it = 0; it < 100; ++it) {  // Newton polish
                double f = p(x), df = dp(x);
                if (df == 0.0) break;
                double step = f / df;
                x -= step;
                if (std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
            }
            roots.push_back(x);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double smallest_real_root(const RealPolynomial& poly, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("smallest_real_root: need lo < hi");
    for (double r : real_roots(poly))
        if (r >= lo && r <= hi) return r;
    throw std::runtime_error("smallest_real_root: no real root in range");
}

namespace {

// Coefficients of the mixed-model generating-function cubic in R, each a
// polynomial in x: F(R,x) = c3 R^3 + c2 R^2 + c1 R + c0.
struct RsrCubic {
    RatPoly c3, c2, c1, c0;
};

RsrCubic rsr_cubic(const Rational& p, int d1, int d2) {
    Rational a(d1 - 1), b(d2 - 1), c(d2 - d1);
    RsrCubic out;
    out.c3 = RatPoly::x_power(4, a * b);
    out.c2 = RatPoly::x_power(3, b * c) - RatPoly::x_power(2, Rational(d1 + d2 - 2));
    out.c1 = RatPoly::x_power(2, b - p * c) - RatPoly::x_power(1, c) + RatPoly::constant(1);
    out.c0 = RatPoly::x_power(1, p * c) - RatPoly::constant(1);
    return out;
}

}  // namespace

RatPoly rsr_singularity_poly(const Rational& p, int d1, int d2) {
    if (p < 0 || p > 1) throw std::invalid_argument("mu_rsr: p must be in [0,1]");
    if (d1 < 2 || d2 < d1) throw std::invalid_argument("mu_rsr: need 2 <= d1 <= d2");
    auto [c3, c2, c1, c0] = rsr_cubic(p, d1, d2);
    RatPoly disc = Rational(18) * (c3 * c2 * c1 * c0) - Rational(4) * (c2 * c2 * c2 * c0) +
                   c2 * c2 * c1 * c1 - Rational(4) * (c3 * c1 * c1 * c1) -
                   Rational(27) * (c3 * c3 * c0 * c0);
    RatPoly trimmed = disc.shift_down(disc.low_power());
    if (trimmed.degree() > 6)
        throw std::logic_error("rsr_singularity_poly: degree exceeds 6");
    return trimmed;
}

RatPoly rsr_mu_polynomial(const Rational& p, int d1, int d2) {
    RatPoly disc = rsr_singularity_poly(p, d1, d2);
    int deg = disc.degree();
    // sum_j a_j (d2 - mu)^(deg - j)
    RatPoly base({Rational(d2), Rational(-1)});
    RatPoly acc;
    RatPoly pw = RatPoly::constant(1);
    std::vector<RatPoly> powers(deg + 1);
    for (int k = 0; k <= deg; ++k) {
        powers[k] = pw;
        pw = pw * base;
    }
    for (int j = 0; j <= deg; ++j) acc = acc + disc.coeff(j) * powers[deg - j];
    return acc;
}

double mu_rsr(const Rational& p, int d1, int d2) {
    RatPoly disc = rsr_singularity_poly(p, d1, d2);
    auto cubic = rsr_cubic(p, d1, d2);

    struct Candidate {
        double x;
        double r;
    };
    std::vector<Candidate> cands;
    for (const auto& [factor, mult] : square_free_decomposition(disc)) {
        if (mult % 2 == 0) continue;  // branch crossings, not branch points
        for (double x : real_roots(RealPolynomial{factor.to_doubles()})) {
            if (!(x > 1e-12)) continue;
            double v3 = cubic.c3.eval_double(x);
            double v2 = cubic.c2.eval_double(x);
            double v1 = cubic.c1.eval_double(x);
            double v0 = cubic.c0.eval_double(x);
            double den = 2.0 * (v2 * v2 - 3.0 * v3 * v1);
            double scale = std::abs(v2 * v2) + std::abs(v3 * v1) + 1e-300;
            double r;
            if (std::abs(den) > 1e-12 * scale)
                r = (9.0 * v3 * v0 - v2 * v1) / den;
            else
                r = -v2 / (3.0 * v3);  // triple root
            cands.push_back({x, r});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.x < b.x; });
    for (const auto& cand : cands)
        if (cand.r >= 1.0 - 1e-6) return d2 - 1.0 / cand.x;

    std::ostringstream msg;
    msg << "mu_rsr: no admissible singularity (p=" << p << ", d1=" << d1
        << ", d2=" << d2 << "); discriminant roots:";
    for (const auto& cand : cands) msg << " (x=" << cand.x << ", R=" << cand.r << ")";
    throw std::runtime_error(msg.str());
}

double mu_rsr(double p, int d1, int d2) {
    return mu_rsr(rational_from_double(p), d1, d2);
}

RatPoly mixed23_polynomial(const Rational& p) {
    // mu(mu-4)(mu^2-4mu-1) + 2mu(3mu^3-33mu^2+89mu-19)p + (-15mu^2-30mu+1)p^2 + 8p^3
    RatPoly base({Rational(0), Rational(4), Rational(15), Rational(-8), Rational(1)});
    RatPoly lin({Rational(0), Rational(-38), Rational(178), Rational(-66), Rational(6)});
    RatPoly quad({Rational(1), Rational(-30), Rational(-15)});
    RatPoly cubic = RatPoly::constant(8);
    return base + p * lin + (p * p) * quad + (p * p * p) * cubic;
}

RealPolynomial mu23_polynomial(double p) {
    RatPoly exact = mixed23_polynomial(rational_from_double(p));
    return RealPolynomial{exact.to_doubles()};
}

RealPolynomial small_world_polynomial() {
    return RealPolynomial{{-136.0, 3108.0, -10368.0, 14848.0, -11400.0, 5184.0,
                           -1454.0, 249.0, -24.0, 1.0}};
}

double mu_small_world() {
    return smallest_real_root(small_world_polynomial(), 0.0, 1.0);
}

double mu_rsr_small_p(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("mu_rsr_small_p: need 0 < p <= 1");
    return 0.25 * p * p;
}

}  // namespace semireg
