#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semireg/ratpoly.hpp"

namespace semireg {

// Non-negative real with an explicit binary exponent: value = mantissa * 2^exp,
// mantissa in [0.5, 1) or exactly 0. Walk-count coefficients grow geometrically
// past double range for orders in the thousands.
class ScaledDouble {
public:
    ScaledDouble() = default;
    explicit ScaledDouble(double v);

    static ScaledDouble zero() { return {}; }
    bool is_zero() const { return m_ == 0.0; }
    double mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }

    double to_double() const;    // may overflow to inf
    double log2_value() const;   // -inf for zero
    std::string to_decimal_string(int digits = 17) const;

    friend ScaledDouble operator+(ScaledDouble a, ScaledDouble b);
    friend ScaledDouble operator*(ScaledDouble a, ScaledDouble b);
    ScaledDouble& operator+=(ScaledDouble o) { return *this = *this + o; }

private:
    void normalize();
    double m_ = 0.0;
    std::int64_t e_ = 0;
};

// Formal power series truncated at a fixed order.
struct TruncatedSeries {
    std::vector<ScaledDouble> coeffs;  // c_0 .. c_N
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// One monomial of a fixed-point equation right-hand side:
// coef * x^x_power * product of unknowns (by index).
struct GfTerm {
    Rational coef;
    int x_power = 0;
    std::vector<int> unknowns;
};

// u_lhs = constant + sum of terms.
struct GfEquation {
    Rational constant;
    std::vector<GfTerm> terms;
};

// Admissible when every term with unknown factors carries x^k, k >= 1, except
// linear combination terms (one unknown, x^0) that reference an
// earlier-listed unknown; then order-s coefficients are computable in one
// forward sweep.
struct GfSystem {
    std::vector<std::string> names;
    std::vector<GfEquation> equations;  // one per name, same order
    int output = 0;                     // index of the walk-count series
    int default_step = 1;               // ratio step for growth_rate

    void validate() const;  // throws on inadmissible systems
};

enum class GfKind { catalan, rsrb, rsrb_looped, rsr, small_world };

struct GfParams {
    int d1 = 0;
    int d2 = 0;
    Rational p = 0;
};

GfSystem builtin_system(GfKind kind, const GfParams& params = {});
GfKind gf_kind_from_name(const std::string& name);

std::map<std::string, TruncatedSeries> solve_gf_system(const GfSystem& sys, int order);
std::map<std::string, std::vector<Rational>> solve_gf_system_exact(const GfSystem& sys,
                                                                   int order);

// Coefficient growth rate lambda = lim c_{s+1}/c_s, estimated from the tail
// ratio c_N/c_{N-step} with the algebraic-singularity correction
// ((s+step)/s)^{3/2}, s = N-step. step=2 for series with vanishing odd part.
double growth_rate(const TruncatedSeries& series, int step);

// One Richardson step on the 1/s^2 tail of the corrected ratio estimate.
double growth_rate_extrapolated(const TruncatedSeries& series, int step);

}  // namespace semireg
