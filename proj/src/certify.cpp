#include "wdk/certify.hpp"

#include <cmath>
#include <limits>

namespace wdk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RVec step_difference(const CVec& xk, const CVec& xk1) {
    if (xk.size() != xk1.size())
        throw DomainError("iterate length mismatch");
    RVec d(xk.size());
    for (std::size_t i = 0; i < xk.size(); ++i) d[i] = std::abs(xk1[i] - xk[i]);
    return d;
}

}  // namespace

Certificate certificate_from_correction(const CVec& w0, const CVec& x0,
                                        const GaugeParams& gp) {
    Certificate cert;
    cert.n = gp.n;
    cert.p = gp.p;
    cert.e0 = e_semilocal_from(w0, x0, gp.p);
    if (cert.e0 < gp.inv_b()) {
        cert.lambda = phi_semi(cert.e0, gp);
        cert.theta = psi_semi(cert.e0, gp);
        const double beta = beta_semi(cert.e0, gp);
        cert.rho.resize(w0.size());
        for (std::size_t i = 0; i < w0.size(); ++i)
            cert.rho[i] = beta < 1.0 ? std::abs(w0[i]) / (1.0 - beta) : kInf;
        cert.passed = cert.lambda <= 1.0;
        cert.quadratic = cert.lambda < 1.0;
    } else {
        cert.lambda = kInf;
        cert.theta = 1.0 - gp.b() * cert.e0;
        cert.rho.assign(w0.size(), kInf);
        cert.passed = false;
        cert.quadratic = false;
    }
    return cert;
}

Certificate check_semilocal(const Polynomial& f, const CVec& x0, const PExponent& p) {
    const CVec w0 = correction(f, x0);
    return certificate_from_correction(w0, x0, GaugeParams(f.degree(), p));
}

BoundVec a_priori_bound(const Certificate& cert, const RVec& first_step, int k) {
    if (!cert.passed)
        throw PreconditionError("a_priori_bound needs a passing certificate");
    if (k < 0)
        throw DomainError("a_priori_bound: k must be >= 0");
    if (first_step.size() != static_cast<std::size_t>(cert.n))
        throw DomainError("a_priori_bound: first_step length must equal the degree");
    const double two_k = std::exp2(static_cast<double>(k));
    const double denom = 1.0 - cert.theta * std::pow(cert.lambda, two_k);
    if (!(denom > 0.0))
        throw BoundUndefinedError("a_priori_bound: theta * lambda^(2^k) >= 1");
    const double coeff = std::pow(cert.theta, static_cast<double>(k)) *
                         std::pow(cert.lambda, two_k - 1.0) / denom;
    BoundVec bv{BoundKind::a_priori, k, RVec(first_step.size())};
    for (std::size_t i = 0; i < first_step.size(); ++i) bv.values[i] = coeff * first_step[i];
    return bv;
}

BoundVec a_posteriori_1(const Polynomial& f, const CVec& xk, const CVec& xk1,
                        const PExponent& p, int k) {
    const GaugeParams gp(f.degree(), p);
    const double e = e_semilocal(f, xk, p);
    if (!(e < gp.inv_b()))
        throw BoundUndefinedError("a_posteriori_1: E(x^k) >= 2^(-1/q)");
    const double beta = beta_semi(e, gp);
    if (!(beta < 1.0))
        throw BoundUndefinedError("a_posteriori_1: beta(E(x^k)) >= 1");
    RVec diff = step_difference(xk, xk1);
    for (double& v : diff) v /= 1.0 - beta;
    return BoundVec{BoundKind::a_post_1, k, std::move(diff)};
}

BoundVec a_posteriori_2(const Polynomial& f, const CVec& xk, const CVec& xk1,
                        const PExponent& p, int k) {
    const GaugeParams gp(f.degree(), p);
    const double e = e_semilocal(f, xk, p);
    if (!(e < gp.inv_b()))
        throw BoundUndefinedError("a_posteriori_2: E(x^k) >= 2^(-1/q)");
    const double lambda_k = phi_semi(e, gp);
    const double theta_k = psi_semi(e, gp);
    const double denom = 1.0 - theta_k * lambda_k * lambda_k;
    if (!(denom > 0.0))
        throw BoundUndefinedError("a_posteriori_2: theta_k * lambda_k^2 >= 1");
    const double coeff = theta_k * lambda_k / denom;
    RVec diff = step_difference(xk, xk1);
    for (double& v : diff) v *= coeff;
    return BoundVec{BoundKind::a_post_2, k, std::move(diff)};
}

std::pair<double, double> step_decay_bounds(const Certificate& cert, int k) {
    if (!cert.passed)
        throw PreconditionError("step_decay_bounds needs a passing certificate");
    if (k < 0)
        throw DomainError("step_decay_bounds: k must be >= 0");
    const double two_k = std::exp2(static_cast<double>(k));
    const double first = cert.theta * std::pow(cert.lambda, two_k);
    const double second =
        std::pow(cert.theta, static_cast<double>(k)) * std::pow(cert.lambda, two_k - 1.0);
    return {first, second};
}

InclusionDiskSet inclusion_disks_from_correction(const CVec& w, const CVec& xk,
                                                 const GaugeParams& gp) {
    const double e = e_semilocal_from(w, xk, gp.p);
    if (!(e < gp.inv_b()) || !(phi_semi(e, gp) < 1.0))
        throw NotCertifiableError("inclusion disks require phi(E(x^k)) < 1");
    const double beta = beta_semi(e, gp);
    InclusionDiskSet set;
    set.disks.resize(xk.size());
    for (std::size_t i = 0; i < xk.size(); ++i)
        set.disks[i] = InclusionDisk{xk[i], std::abs(w[i]) / (1.0 - beta)};
    for (std::size_t i = 0; i < set.disks.size(); ++i) {
        for (std::size_t j = i + 1; j < set.disks.size(); ++j) {
            const double gap = std::abs(xk[i] - xk[j]);
            if (!(set.disks[i].radius + set.disks[j].radius < gap))
                throw InternalInconsistencyError("inclusion disks are not disjoint");
        }
    }
    return set;
}

InclusionDiskSet inclusion_disks(const Polynomial& f, const CVec& xk, const PExponent& p) {
    return inclusion_disks_from_correction(correction(f, xk), xk,
                                           GaugeParams(f.degree(), p));
}

}  // namespace wdk
