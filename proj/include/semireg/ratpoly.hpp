#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace semireg {

using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over the rationals, ascending coefficients.
// The zero polynomial is an empty coefficient vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    static RatPoly constant(Rational v) { return RatPoly({std::move(v)}); }
    static RatPoly x_power(int k, Rational coef = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = std::move(coef);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }
    friend RatPoly operator*(const Rational& s, const RatPoly& a) {
        if (s == 0) return RatPoly();
        std::vector<Rational> c = a.c_;
        for (auto& v : c) v *= s;
        return RatPoly(std::move(c));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(i) * c_[i];
        return RatPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + static_cast<double>(*it);
        return acc;
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading()) * *this;
    }

    // number of trailing zero coefficients (multiplicity of the root x=0)
    int low_power() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
        return k;
    }
    // divide by x^k
    RatPoly shift_down(int k) const {
        if (k == 0) return *this;
        if (low_power() < k) throw std::invalid_argument("shift_down: not divisible by x^k");
        return RatPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
    }

    // euclidean division; returns {quotient, remainder}
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("RatPoly: division by zero");
        RatPoly r = *this;
        std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() / d.leading();
            q[k] = f;
            r = r - f * d.x_power_times(k);
        }
        return {RatPoly(std::move(q)), r};
    }
    RatPoly divexact(const RatPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("RatPoly: division was not exact");
        return q;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = static_cast<double>(c_[i]);
        return out;
    }

private:
    RatPoly x_power_times(int k) const {  // this * x^k
        std::vector<Rational> c(c_.size() + k, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return RatPoly(std::move(c));
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

// Yun's square-free decomposition: f = const * prod factors[i].first ^ factors[i].second,
// each factor square-free and monic.
inline std::vector<std::pair<RatPoly, int>> square_free_decomposition(const RatPoly& f) {
    std::vector<std::pair<RatPoly, int>> out;
    if (f.degree() <= 0) return out;
    RatPoly fm = f.monic();
    RatPoly df = fm.derivative();
    RatPoly a0 = poly_gcd(fm, df);
    if (a0.degree() == 0) {
        out.emplace_back(fm, 1);
        return out;
    }
    RatPoly b = fm.divexact(a0);
    RatPoly c = df.divexact(a0);
    RatPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RatPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b.divexact(a);
        c = d.divexact(a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Exact rational from a double (every finite double is dyadic).
inline Rational rational_from_double(double v) {
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    long long scaled = static_cast<long long>(mant * 9007199254740992.0);  // mant * 2^53
    Rational r(scaled);
    int e = exp - 53;
    boost::multiprecision::cpp_int pow2 = boost::multiprecision::cpp_int(1) << std::abs(e);
    if (e >= 0)
        r *= Rational(pow2);
    else
        r /= Rational(pow2);
    return r;
}

}  // namespace semireg
