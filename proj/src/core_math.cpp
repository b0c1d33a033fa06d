#include "wdk/core_math.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace wdk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_components(const CVec& v) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("non-finite complex component");
    }
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
    if (std::isinf(p)) {
        q_ = 1.0;
        inv_p_ = 0.0;
        inv_q_ = 1.0;
    } else if (p == 1.0) {
        q_ = kInf;
        inv_p_ = 1.0;
        inv_q_ = 0.0;
    } else {
        q_ = p / (p - 1.0);
        inv_p_ = 1.0 / p;
        inv_q_ = 1.0 - 1.0 / p;
    }
}

PExponent PExponent::inf() { return PExponent(kInf); }

PExponent PExponent::finite(double p) {
    if (std::isnan(p) || p < 1.0)
        throw DomainError("p must satisfy p >= 1");
    return PExponent(p);
}

PExponent PExponent::parse(std::string_view text) {
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "inf" || lower == "infinity")
        return inf();
    double value = 0.0;
    const char* begin = lower.data();
    const char* end = begin + lower.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw DomainError("cannot parse p exponent: '" + std::string(text) + "'");
    return finite(value);
}

double conjugate_exponent(double p) {
    if (std::isnan(p) || p < 1.0)
        throw DomainError("p must satisfy p >= 1");
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return kInf;
    return p / (p - 1.0);
}

namespace {

double p_norm_impl(const RVec& mags, const PExponent& p) {
    if (p.is_inf()) {
        double m = 0.0;
        for (double v : mags) m = std::max(m, v);
        return m;
    }
    if (p.p() == 1.0) {
        double s = 0.0;
        for (double v : mags) s += v;
        return s;
    }
    if (p.p() == 2.0) {
        double s = 0.0;
        for (double v : mags) s += v * v;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double v : mags) s += std::pow(v, p.p());
    return std::pow(s, 1.0 / p.p());
}

}  // namespace

double p_norm(const RVec& v, const PExponent& p) {
    RVec mags(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mags[i] = std::abs(v[i]);
    return p_norm_impl(mags, p);
}

double p_norm(const CVec& v, const PExponent& p) {
    return p_norm_impl(abs_vec(v), p);
}

RVec abs_vec(const CVec& x) {
    require_finite_components(x);
    RVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::abs(x[i]);
    return out;
}

RVec vec_quotient(const CVec& x, const RVec& y) {
    if (x.size() != y.size())
        throw DomainError("vec_quotient: length mismatch");
    RVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(y[i] > 0.0))
            throw DomainError("vec_quotient: denominator component must be > 0");
        out[i] = std::abs(x[i]) / y[i];
    }
    return out;
}

RVec min_pairwise_distances(const CVec& x) {
    require_finite_components(x);
    const std::size_t n = x.size();
    if (n < 2)
        throw DomainError("min_pairwise_distances needs at least two components");
    RVec out(n, kInf);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            out[i] = std::min(out[i], std::abs(x[i] - x[j]));
        }
        if (!(out[i] > 0.0))
            throw DistinctnessError();
    }
    return out;
}

bool componentwise_leq(const RVec& a, const RVec& b) {
    if (a.size() != b.size())
        throw DomainError("componentwise_leq: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] <= b[i])) return false;
    return true;
}

namespace {

double power_mean_impl(const RVec& mags, double r) {
    const std::size_t n = mags.size();
    if (n == 0) throw DomainError("power_mean: empty vector");
    if (std::isnan(r)) throw DomainError("power_mean: order must not be NaN");
    if (r <= 0.0) {
        for (double m : mags)
            if (m == 0.0) throw DomainError("power_mean: zero component with r <= 0");
    }
    if (std::isinf(r))
        return r > 0 ? *std::max_element(mags.begin(), mags.end())
                     : *std::min_element(mags.begin(), mags.end());
    if (r == 0.0) {
        // geometric mean via exp of mean log, which cannot overflow
        double s = 0.0;
        for (double m : mags) s += std::log(m);
        return std::exp(s / static_cast<double>(n));
    }
    double s = 0.0;
    for (double m : mags) s += std::pow(m, r);
    return std::pow(s / static_cast<double>(n), 1.0 / r);
}

}  // namespace

double power_mean(const RVec& x, double r) {
    RVec mags(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mags[i] = std::abs(x[i]);
    return power_mean_impl(mags, r);
}

double power_mean(const CVec& x, double r) {
    return power_mean_impl(abs_vec(x), r);
}

}  // namespace wdk
