#include "wdk/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace wdk {

Polynomial::Polynomial(CVec coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw DomainError("polynomial needs at least one coefficient");
    for (const Complex& c : coefficients_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("non-finite polynomial coefficient");
    }
    if (coefficients_.size() > 1 && coefficients_.front() == Complex(0.0, 0.0))
        throw DomainError("leading coefficient must be nonzero");
}

bool Polynomial::is_zero() const {
    return coefficients_.size() == 1 && coefficients_[0] == Complex(0.0, 0.0);
}

Complex Polynomial::eval(Complex z) const {
    Complex acc = coefficients_.front();
    for (std::size_t i = 1; i < coefficients_.size(); ++i)
        acc = acc * z + coefficients_[i];
    return acc;
}

Polynomial Polynomial::derivative(int k) const {
    if (k < 0)
        throw DomainError("derivative order must be >= 0");
    if (k == 0) return *this;
    if (k > degree()) return Polynomial(CVec{Complex(0.0, 0.0)});
    CVec cur = coefficients_;
    for (int round = 0; round < k; ++round) {
        const int deg = static_cast<int>(cur.size()) - 1;
        CVec next(static_cast<std::size_t>(deg));
        for (int i = 0; i < deg; ++i)
            next[static_cast<std::size_t>(i)] =
                cur[static_cast<std::size_t>(i)] * static_cast<double>(deg - i);
        cur = std::move(next);
    }
    return Polynomial(std::move(cur));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        throw DomainError("zero polynomial has no monic form");
    CVec scaled = coefficients_;
    const Complex a0 = scaled.front();
    for (Complex& c : scaled) c /= a0;
    scaled.front() = Complex(1.0, 0.0);
    return Polynomial(std::move(scaled));
}

Polynomial from_roots(const RootVector& roots, Complex a0) {
    if (a0 == Complex(0.0, 0.0))
        throw DomainError("from_roots: a0 must be nonzero");
    // sequential convolution with the linear factors (z - root)
    CVec coeffs{a0};
    for (const Complex& r : roots) {
        CVec next(coeffs.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i];
            next[i + 1] -= coeffs[i] * r;
        }
        coeffs = std::move(next);
    }
    return Polynomial(std::move(coeffs));
}

Complex lagrange_residual(const Polynomial& f, const CVec& x, Complex z) {
    min_pairwise_distances(x);  // distinctness gate
    const Polynomial g = f.leading() == Complex(1.0, 0.0) ? f : f.monic();
    const std::size_t n = x.size();
    if (static_cast<int>(n) != g.degree())
        throw DomainError("lagrange_residual: node count must equal the degree");

    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        Complex denom(1.0, 0.0);
        Complex prod_z(1.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= x[i] - x[j];
            prod_z *= z - x[j];
        }
        const Complex w_i = g.eval(x[i]) / denom;
        sum += w_i * prod_z;
    }
    Complex prod_all(1.0, 0.0);
    for (const Complex& xi : x) prod_all *= z - xi;
    return g.eval(z) - (sum + prod_all);
}

double separation(const RootVector& roots) {
    const RVec d = min_pairwise_distances(roots);
    return *std::min_element(d.begin(), d.end());
}

double smale_gamma_at(const Polynomial& f, Complex z) {
    const int n = f.degree();
    if (n < 2)
        throw DomainError("smale_gamma_at: degree must be >= 2");
    const Complex fprime = f.derivative(1).eval(z);
    if (fprime == Complex(0.0, 0.0))
        throw CriticalPointError("f'(z) = 0");
    double best = 0.0;
    double factorial = 1.0;
    Polynomial dk = f.derivative(1);
    for (int k = 2; k <= n; ++k) {
        dk = dk.derivative(1);
        factorial *= static_cast<double>(k);
        const double term = std::abs(dk.eval(z) / (factorial * fprime));
        best = std::max(best, std::pow(term, 1.0 / static_cast<double>(k - 1)));
    }
    return best;
}

double smale_gamma(const Polynomial& f, const RootVector& roots) {
    min_pairwise_distances(roots);
    double best = 0.0;
    for (const Complex& r : roots) best = std::max(best, smale_gamma_at(f, r));
    return best;
}

}  // namespace wdk
