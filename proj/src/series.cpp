#include "semireg/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace semireg {

ScaledDouble::ScaledDouble(double v) {
    if (v < 0.0 || !std::isfinite(v))
        throw std::invalid_argument("ScaledDouble: negative or non-finite value");
    m_ = v;
    e_ = 0;
    normalize();
}

void ScaledDouble::normalize() {
    if (m_ == 0.0) {
        e_ = 0;
        return;
    }
    int sh = 0;
    m_ = std::frexp(m_, &sh);  // m in [0.5, 1)
    e_ += sh;
}

double ScaledDouble::to_double() const {
    if (m_ == 0.0) return 0.0;
    if (e_ > 2000) return std::numeric_limits<double>::infinity();
    if (e_ < -2000) return 0.0;
    return std::ldexp(m_, static_cast<int>(e_));
}

double ScaledDouble::log2_value() const {
    if (m_ == 0.0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(e_) + std::log2(m_);
}

std::string ScaledDouble::to_decimal_string(int digits) const {
    if (m_ == 0.0) return "0";
    char buf[64];
    if (e_ > -900 && e_ < 900) {  // representable: print the double exactly
        std::snprintf(buf, sizeof buf, "%.*g", digits, to_double());
        return buf;
    }
    // value = m * 2^e = 10^(e*log10(2) + log10(m))
    double l10 = static_cast<double>(e_) * 0.30102999566398119802 + std::log10(m_);
    double exp10 = std::floor(l10);
    double mant10 = std::pow(10.0, l10 - exp10);
    if (mant10 >= 10.0) {
        mant10 /= 10.0;
        exp10 += 1.0;
    }
    std::snprintf(buf, sizeof buf, "%.*ge%+d", digits - 2, mant10,
                  static_cast<int>(exp10));
    return buf;
}

ScaledDouble operator+(ScaledDouble a, ScaledDouble b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e_ < b.e_) std::swap(a, b);
    std::int64_t d = a.e_ - b.e_;
    if (d > 1074) return a;  // b below one ulp of a
    a.m_ += std::ldexp(b.m_, static_cast<int>(-d));
    a.normalize();
    return a;
}

ScaledDouble operator*(ScaledDouble a, ScaledDouble b) {
    if (a.is_zero() || b.is_zero()) return ScaledDouble::zero();
    a.m_ *= b.m_;
    a.e_ += b.e_;
    a.normalize();
    return a;
}

void GfSystem::validate() const {
    if (names.size() != equations.size())
        throw std::invalid_argument("GfSystem: one equation per unknown required");
    if (output < 0 || output >= static_cast<int>(names.size()))
        throw std::invalid_argument("GfSystem: bad output index");
    for (std::size_t k = 0; k < equations.size(); ++k) {
        for (const auto& t : equations[k].terms) {
            for (int u : t.unknowns)
                if (u < 0 || u >= static_cast<int>(names.size()))
                    throw std::invalid_argument("GfSystem: bad unknown index");
            if (t.x_power < 0) throw std::invalid_argument("GfSystem: negative x power");
            if (t.x_power == 0) {
                if (t.unknowns.size() >= 2)
                    throw std::invalid_argument(
                        "GfSystem: nonlinear term without an x factor in '" + names[k] + "'");
                if (t.unknowns.size() == 1 && t.unknowns[0] >= static_cast<int>(k))
                    throw std::invalid_argument(
                        "GfSystem: x^0 linear term must reference an earlier unknown in '" +
                        names[k] + "'");
            }
        }
    }
}

namespace {

// one forward sweep per order; Field is ScaledDouble or Rational
template <typename Field, typename FromRational>
std::vector<std::vector<Field>> sweep(const GfSystem& sys, int order,
                                      FromRational from_rational) {
    sys.validate();
    if (order < 0) throw std::invalid_argument("solve_gf_system: order < 0");
    const int k = static_cast<int>(sys.names.size());
    std::vector<std::vector<Field>> c(k, std::vector<Field>(order + 1, Field{}));
    for (int s = 0; s <= order; ++s) {
        for (int eq = 0; eq < k; ++eq) {
            Field acc{};
            if (s == 0) acc = from_rational(sys.equations[eq].constant);
            for (const auto& term : sys.equations[eq].terms) {
                int t = s - term.x_power;
                if (t < 0) continue;
                Field v{};
                if (term.unknowns.empty()) {
                    if (t != 0) continue;
                    v = from_rational(Rational(1));
                } else if (term.unknowns.size() == 1) {
                    v = c[term.unknowns[0]][t];
                } else if (term.unknowns.size() == 2) {
                    const auto& u1 = c[term.unknowns[0]];
                    const auto& u2 = c[term.unknowns[1]];
                    Field conv{};
                    for (int i = 0; i <= t; ++i) conv += u1[i] * u2[t - i];
                    v = conv;
                } else {
                    throw std::invalid_argument(
                        "solve_gf_system: products of more than two unknowns unsupported");
                }
                acc += from_rational(term.coef) * v;
            }
            c[eq][s] = acc;
        }
    }
    return c;
}

}  // namespace

std::map<std::string, TruncatedSeries> solve_gf_system(const GfSystem& sys, int order) {
    for (const auto& eq : sys.equations) {
        if (eq.constant < 0)
            throw std::invalid_argument("solve_gf_system: negative constant in scaled mode");
        for (const auto& t : eq.terms)
            if (t.coef < 0)
                throw std::invalid_argument("solve_gf_system: negative coefficient in scaled mode");
    }
    auto c = sweep<ScaledDouble>(sys, order, [](const Rational& r) {
        return ScaledDouble(static_cast<double>(r));
    });
    std::map<std::string, TruncatedSeries> out;
    for (std::size_t i = 0; i < sys.names.size(); ++i)
        out[sys.names[i]] = TruncatedSeries{std::move(c[i])};
    return out;
}

std::map<std::string, std::vector<Rational>> solve_gf_system_exact(const GfSystem& sys,
                                                                   int order) {
    auto c = sweep<Rational>(sys, order, [](const Rational& r) { return r; });
    std::map<std::string, std::vector<Rational>> out;
    for (std::size_t i = 0; i < sys.names.size(); ++i) out[sys.names[i]] = std::move(c[i]);
    return out;
}

GfKind gf_kind_from_name(const std::string& name) {
    if (name == "catalan") return GfKind::catalan;
    if (name == "rsrb") return GfKind::rsrb;
    if (name == "rsrb-looped" || name == "rsrb_looped") return GfKind::rsrb_looped;
    if (name == "rsr") return GfKind::rsr;
    if (name == "small-world" || name == "small_world") return GfKind::small_world;
    throw std::invalid_argument("unknown generating-function system: " + name);
}

GfSystem builtin_system(GfKind kind, const GfParams& params) {
    GfSystem sys;
    auto term = [](Rational coef, int xpow, std::vector<int> us) {
        return GfTerm{std::move(coef), xpow, std::move(us)};
    };
    switch (kind) {
        case GfKind::catalan: {
            sys.names = {"c"};
            sys.equations = {{Rational(1), {term(1, 1, {0, 0})}}};
            sys.output = 0;
            sys.default_step = 1;
            return sys;
        }
        case GfKind::rsrb:
        case GfKind::rsrb_looped: {
            int d1 = params.d1, d2 = params.d2;
            if (d1 < 1 || d2 < d1)
                throw std::invalid_argument("builtin_system: need 1 <= d1 <= d2");
            bool looped = kind == GfKind::rsrb_looped && d2 > d1;
            Rational c(d2 - d1);
            sys.names = {"A", "B", "phiA", "phiB", "phi"};
            GfEquation eqA{Rational(1), {term(d1 - 1, 2, {0, 1})}};
            if (looped) eqA.terms.push_back(term(c, 1, {0}));
            GfEquation eqB{Rational(1), {term(d2 - 1, 2, {1, 0})}};
            GfEquation eqPhiA{Rational(1), {term(d2, 2, {2, 0})}};
            GfEquation eqPhiB{Rational(1), {term(d1, 2, {3, 1})}};
            if (looped) eqPhiB.terms.push_back(term(c, 1, {3}));
            GfEquation eqPhi{Rational(0),
                             {term(Rational(d1) / (d1 + d2), 0, {2}),
                              term(Rational(d2) / (d1 + d2), 0, {3})}};
            sys.equations = {eqA, eqB, eqPhiA, eqPhiB, eqPhi};
            sys.output = 4;
            sys.default_step = looped ? 1 : 2;
            return sys;
        }
        case GfKind::rsr: {
            int d1 = params.d1, d2 = params.d2;
            const Rational& p = params.p;
            if (d1 < 1 || d2 < d1)
                throw std::invalid_argument("builtin_system: need 1 <= d1 <= d2");
            if (p < 0 || p > 1) throw std::invalid_argument("builtin_system: p in [0,1]");
            Rational c(d2 - d1);
            // A,B carry x^2 guards on products of unknowns; R and phi are
            // linear combinations evaluated after their inputs.
            sys.names = {"A", "B", "R", "phiA", "phiB", "phi"};
            GfEquation eqA{Rational(1), {term(d1 - 1, 2, {0, 2})}};
            if (d2 > d1) eqA.terms.push_back(term(c, 1, {0}));
            GfEquation eqB{Rational(1), {term(d2 - 1, 2, {1, 2})}};
            GfEquation eqR{Rational(0), {term(1 - p, 0, {0}), term(p, 0, {1})}};
            GfEquation eqPhiA{Rational(1), {term(d1, 2, {3, 2})}};
            if (d2 > d1) eqPhiA.terms.push_back(term(c, 1, {3}));
            GfEquation eqPhiB{Rational(1), {term(d2, 2, {4, 2})}};
            GfEquation eqPhi{Rational(0), {term(1 - p, 0, {3}), term(p, 0, {4})}};
            sys.equations = {eqA, eqB, eqR, eqPhiA, eqPhiB, eqPhi};
            sys.output = 5;
            sys.default_step = 2;
            return sys;
        }
        case GfKind::small_world: {
            sys.names = {"A", "Ah", "B", "phio", "phie", "phi"};
            GfEquation eqA{Rational(1), {term(1, 2, {0, 1}), term(1, 2, {0, 2})}};
            GfEquation eqAh{Rational(1), {term(2, 2, {1, 2})}};
            GfEquation eqB{Rational(1), {term(1, 1, {2}), term(1, 2, {0, 2})}};
            GfEquation eqPhio{Rational(1), {term(1, 2, {3, 1}), term(2, 2, {3, 2})}};
            GfEquation eqPhie{Rational(1), {term(1, 1, {4}), term(2, 2, {4, 0})}};
            GfEquation eqPhi{Rational(0),
                             {term(Rational(1) / 2, 0, {3}), term(Rational(1) / 2, 0, {4})}};
            sys.equations = {eqA, eqAh, eqB, eqPhio, eqPhie, eqPhi};
            sys.output = 5;
            sys.default_step = 1;
            return sys;
        }
    }
    throw std::invalid_argument("builtin_system: unknown kind");
}

namespace {

double corrected_ratio_estimate(const TruncatedSeries& series, int step, int at) {
    int s = at - step;
    if (s < 1) throw std::invalid_argument("growth_rate: order too small for step");
    const ScaledDouble& hi = series.coeffs[at];
    const ScaledDouble& lo = series.coeffs[s];
    if (hi.is_zero() || lo.is_zero())
        throw std::runtime_error("growth_rate: non-positive tail coefficients");
    double log2_ratio = hi.log2_value() - lo.log2_value();
    double corr = 1.5 * std::log2(static_cast<double>(at) / s);
    return std::exp2((log2_ratio + corr) / step);
}

}  // namespace

double growth_rate(const TruncatedSeries& series, int step) {
    if (step != 1 && step != 2) throw std::invalid_argument("growth_rate: step must be 1 or 2");
    return corrected_ratio_estimate(series, step, series.order());
}

double growth_rate_extrapolated(const TruncatedSeries& series, int step) {
    int n = series.order();
    double full = corrected_ratio_estimate(series, step, n);
    int half = n / 2;
    if (step == 2 && half % 2 != n % 2) half += 1;  // keep parity for even series
    double halfway = corrected_ratio_estimate(series, step, half);
    // corrected ratio error ~ C/s^2
    double w = 1.0 / (1.0 - static_cast<double>(half * half) / (static_cast<double>(n) * n));
    return halfway + (full - halfway) * w;
}

}  // namespace semireg
