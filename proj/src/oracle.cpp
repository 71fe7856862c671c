#include "bose/oracle.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <vector>

#include "bose/errors.hpp"

namespace bose::oracle {
namespace {

struct KahanLong {
    long double sum = 0.0L;
    long double c = 0.0L;
    void add(long double x) {
        const long double y = x - c;
        const long double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

int auto_cutoff(const GasSpec& spec, const BoxSpec& box, double T) {
    const double eps_cut = 40.0 * T;
    const double k_cut = std::pow(eps_cut / spec.dispersion_coefficient(), 1.0 / spec.sigma);
    return static_cast<int>(std::ceil(k_cut * box.L / (2.0 * std::numbers::pi))) + 1;
}

double finite_density(const GasSpec& spec, const BoxSpec& box, double T, double mu, unsigned threads) {
    spec.validate();
    if (box.d < 1 || box.d > 3) throw DomainError("finite_density: box dimension must be 1, 2 or 3");
    if (!(box.L > 0.0)) throw DomainError("finite_density: box length must be positive");
    if (!(T > 0.0)) throw DomainError("finite_density: temperature must be positive");
    if (!(mu < 0.0)) throw DomainError("finite_density: mu must be negative (k = 0 occupation diverges)");

    const int n_max = box.n_max > 0 ? box.n_max : auto_cutoff(spec, box, T);
    const double c = spec.dispersion_coefficient();
    const double half_sigma = 0.5 * spec.sigma;
    const double step = 2.0 * std::numbers::pi / box.L;
    std::vector<double> k2(static_cast<std::size_t>(2 * n_max + 1));
    for (int n = -n_max; n <= n_max; ++n) k2[static_cast<std::size_t>(n + n_max)] = (step * n) * (step * n);

    auto occupation = [&](double ksq) {
        const double x = (c * std::pow(ksq, half_sigma) - mu) / T;
        return 1.0 / std::expm1(x);
    };

    // One slab per value of the first mode index.
    auto slab = [&](std::size_t i) {
        KahanLong acc;
        const double base = k2[i];
        if (box.d == 1) {
            acc.add(occupation(base));
        } else if (box.d == 2) {
            for (double b : k2) acc.add(occupation(base + b));
        } else {
            for (double b : k2) {
                for (double e : k2) acc.add(occupation(base + b + e));
            }
        }
        return acc.sum;
    };

    const std::size_t slabs = k2.size();
    std::vector<long double> partial(slabs);
    const unsigned workers = std::max(1u, threads);
    if (workers == 1) {
        for (std::size_t i = 0; i < slabs; ++i) partial[i] = slab(i);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < slabs; i += workers) partial[i] = slab(i);
            }));
        }
        for (auto& j : jobs) j.get();
    }
    KahanLong total;
    for (long double p : partial) total.add(p);
    return static_cast<double>(total.sum / std::pow(static_cast<long double>(box.L), box.d));
}

double series_sum_highprec(double nu, double y, double tol) {
    if (!(nu > 0.0) || !(y >= 0.0)) throw DomainError("series_sum_highprec: need nu > 0 and y >= 0");
    const long double s = nu;
    KahanLong acc;
    if (y == 0.0) {
        if (nu <= 1.0) throw DivergentValue("series_sum_highprec: divergent at y = 0 for nu <= 1");
        constexpr long N = 4000;
        for (long n = N - 1; n >= 1; --n) acc.add(std::pow(static_cast<long double>(n), -s));
        const long double n = N;
        const long double np = std::pow(n, -s);
        // sum_{n >= N} n^-s = N^(1-s)/(s-1) + N^-s/2 + s N^(-s-1)/12 - s(s+1)(s+2) N^(-s-3)/720 + ...
        acc.add(n * np / (s - 1.0L));
        acc.add(np / 2.0L);
        acc.add(s * np / n / 12.0L);
        acc.add(-s * (s + 1.0L) * (s + 2.0L) * np / (n * n * n) / 720.0L);
        return static_cast<double>(acc.sum);
    }
    const long double ly = y;
    const long double ratio = std::exp(-ly);
    // e^{-ny} by repeated multiplication, reset from exp() every 256 terms
    long double decay = ratio;
    for (long n = 1;; ++n) {
        const long double ln = n;
        if (n % 256 == 0) decay = std::exp(-ln * ly);
        const long double term = decay * std::pow(ln, -s);
        acc.add(term);
        if (term * ratio / (1.0L - ratio) < tol) break;
        decay *= ratio;
    }
    return static_cast<double>(acc.sum);
}

Derivative finite_difference(const std::function<double(double)>& fn, double x, double h, Stencil stencil) {
    if (!(h > 0.0)) throw DomainError("finite_difference: step must be positive");
    auto estimate = [&](double step) {
        switch (stencil) {
            case Stencil::forward: return (fn(x + step) - fn(x)) / step;
            case Stencil::backward: return (fn(x) - fn(x - step)) / step;
            case Stencil::central: break;
        }
        return (fn(x + step) - fn(x - step)) / (2.0 * step);
    };
    const double coarse = estimate(h);
    const double fine = estimate(0.5 * h);
    if (stencil == Stencil::central) {
        return {(4.0 * fine - coarse) / 3.0, std::abs(fine - coarse) / 3.0};
    }
    return {2.0 * fine - coarse, std::abs(fine - coarse)};
}

}  // namespace bose::oracle
