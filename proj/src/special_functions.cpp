#include "bose/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bose/errors.hpp"

namespace bose::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// Below this argument the direct Bose series is replaced.
constexpr double kSmallY = 1e-3;
// Non-integer orders closer than this to an integer lose too many digits to
// cancellation between Gamma(1-nu) y^(nu-1) and the zeta(nu-k) pole.
constexpr double kNearIntegerGap = 1e-3;
constexpr std::size_t kMaxDirectTerms = 200'000'000;

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,           -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,         5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,           -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0,   854513.0 / 138.0,     -236364091.0 / 2730.0};

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;
    double abs_sum = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
        abs_sum += std::abs(x);
    }
    double value() const { return sum + carry; }
};

double sin_pi(double x) {
    if (x == std::round(x)) return 0.0;
    double r = std::fmod(x, 2.0);  // r in (-2, 2)
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    return std::sin(kPi * r);
}

double zeta_euler_maclaurin(double s) {
    constexpr int kN = 16;
    Accumulator acc;
    for (int n = kN - 1; n >= 1; --n) acc.add(std::pow(static_cast<double>(n), -s));
    const double n_pow = std::pow(static_cast<double>(kN), -s);
    acc.add(kN * n_pow / (s - 1.0));
    acc.add(0.5 * n_pow);

    // term_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^(-s-2k+1)
    double rising = s;
    double factorial = 2.0;
    double n_power = n_pow / kN;
    for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
        const double term = kBernoulli[k] / factorial * rising * n_power;
        acc.add(term);
        if (std::abs(term) < kEps * 1e-3 * std::abs(acc.value())) break;
        const double j = 2.0 * static_cast<double>(k) + 1.0;
        rising *= (s + j) * (s + j + 1.0);
        factorial *= (j + 2.0) * (j + 3.0);
        n_power /= static_cast<double>(kN) * kN;
    }
    return acc.value();
}

// Direct summation of sum exp(-n y) n^-nu for y > 0 and any real order.
EvalResult direct_series(double nu, double y) {
    Accumulator acc;
    const double decay = std::exp(-y);
    // Terms are decreasing once n exceeds the peak of n^-nu exp(-n y).
    const double peak = nu < 0.0 ? -nu / y : 0.0;
    std::size_t n = 1;
    double tail = 0.0;
    for (;; ++n) {
        const double dn = static_cast<double>(n);
        const double term = std::exp(-dn * y) * std::pow(dn, -nu);
        acc.add(term);
        if (dn < peak) continue;
        const double next = std::exp(-(dn + 1.0) * y) * std::pow(dn + 1.0, -nu);
        const double ratio = nu >= 0.0 ? decay : decay * std::pow(1.0 + 1.0 / dn, -nu);
        if (ratio < 1.0) {
            tail = next / (1.0 - ratio);
            if (tail < 1e-16 * std::max(1.0, std::abs(acc.value()))) break;
        }
        if (n >= kMaxDirectTerms) {
            throw ConvergenceError("bose_g: direct series did not converge for nu=" +
                                   std::to_string(nu) + ", y=" + std::to_string(y));
        }
    }
    const double value = acc.value();
    return {value, tail + 4.0 * kEps * acc.abs_sum, n};
}

// Small-y expansion. With adaptive = true, k_max is an upper bound and the
// sum stops once the terms fall below round-off.
EvalResult expansion(double nu, double y, int k_max, bool adaptive) {
    Accumulator acc;
    acc.add(std::tgamma(1.0 - nu) * std::pow(y, nu - 1.0));
    double y_pow = 1.0;  // y^k / k!
    int k = 0;
    for (; k <= k_max; ++k) {
        if (k > 0) y_pow *= y / k;
        const double term = ((k % 2 == 0) ? 1.0 : -1.0) * zeta(nu - k) * y_pow;
        acc.add(term);
        if (adaptive && k > 1 && std::abs(term) < 1e-3 * kEps * std::abs(acc.value())) {
            ++k;
            break;
        }
    }
    const double next = zeta(nu - k) * y_pow * y / k;
    return {acc.value(), std::abs(next) + 4.0 * kEps * acc.abs_sum, static_cast<std::size_t>(k + 1)};
}

// E_1(z) for 0 < z < 1 via its convergent series.
double exp_integral_e1(double z) {
    constexpr double kEulerGamma = std::numbers::egamma;
    Accumulator acc;
    acc.add(-kEulerGamma);
    acc.add(-std::log(z));
    double term = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= -z / k;
        acc.add(-term / k);
        if (std::abs(term) < kEps * 1e-3) break;
    }
    return acc.value();
}

// Integer order at small y: sum the first M - 1 terms and replace the rest
// with the Euler-Maclaurin tail, whose integral is M^(1-n) E_n(M y).
EvalResult integer_order_small_y(int order, double y) {
    constexpr int kM = 20;
    constexpr int kCorrections = 8;
    const double nu = order;
    Accumulator acc;
    for (int n = kM - 1; n >= 1; --n) acc.add(std::exp(-n * y) * std::pow(n, -nu));

    const double z = kM * y;
    double en = exp_integral_e1(z);
    for (int j = 1; j < order; ++j) en = (std::exp(-z) - z * en) / j;
    acc.add(std::pow(static_cast<double>(kM), 1.0 - nu) * en);

    const double m = kM;
    const double fm = std::exp(-m * y) * std::pow(m, -nu);
    acc.add(0.5 * fm);

    // Derivative j of x^-nu exp(-x y) at x = M, via Leibniz.
    auto derivative = [&](int j) {
        double total = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= j; ++i) {
            if (i > 0) binom *= static_cast<double>(j - i + 1) / i;
            double power_part = std::pow(m, -nu - i);
            for (int q = 0; q < i; ++q) power_part *= -(nu + q);
            total += binom * power_part * std::pow(-y, j - i);
        }
        return total * std::exp(-m * y);
    };
    double factorial = 2.0;
    double last = 0.0;
    for (int k = 1; k <= kCorrections; ++k) {
        last = -kBernoulli[k - 1] / factorial * derivative(2 * k - 1);
        acc.add(last);
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return {acc.value(), std::abs(last) + 8.0 * kEps * acc.abs_sum,
            static_cast<std::size_t>(kM - 1 + kCorrections)};
}

// g for any real order when y > 0.
EvalResult bose_positive_y(double nu, double y) {
    if (nu == 1.0) {
        const double v = -std::log(-std::expm1(-y));
        return {v, 4.0 * kEps * std::abs(v), 0};
    }
    if (nu == 0.0) {
        const double v = 1.0 / std::expm1(y);
        return {v, 4.0 * kEps * std::abs(v), 0};
    }
    if (y < kSmallY) {
        const double gap = std::abs(nu - std::round(nu));
        if (is_integer(nu, 0.0) && nu > 1.0) return integer_order_small_y(static_cast<int>(nu), y);
        if (gap >= kNearIntegerGap) return expansion(nu, y, 60, true);
    }
    return direct_series(nu, y);
}

}  // namespace

bool is_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

double gamma(double x) {
    if (std::isnan(x)) throw DomainError("gamma: NaN argument");
    if (x <= 0.0 && x == std::round(x)) {
        throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

double zeta(double s) {
    if (std::isnan(s)) throw DomainError("zeta: NaN argument");
    if (s == 1.0) throw PoleError("zeta: pole at s = 1");
    if (s >= 0.0) return zeta_euler_maclaurin(s);
    // Functional equation: zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const double sine = sin_pi(0.5 * s);
    if (sine == 0.0) return 0.0;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sine * std::tgamma(1.0 - s) *
           zeta_euler_maclaurin(1.0 - s);
}

EvalResult bose_g(double nu, double y) {
    if (!(nu > 0.0)) throw DomainError("bose_g: order must be positive, got " + std::to_string(nu));
    if (!(y >= 0.0)) throw DomainError("bose_g: argument must be non-negative, got " + std::to_string(y));
    if (y == 0.0) {
        if (nu <= 1.0) {
            throw DivergentValue("bose_g: g_nu(0) diverges for nu = " + std::to_string(nu) + " <= 1");
        }
        const double v = zeta(nu);
        return {v, 8.0 * kEps * v, 0};
    }
    if (std::isinf(y)) return {0.0, 0.0, 0};
    return bose_positive_y(nu, y);
}

EvalResult bose_g_small_y(double nu, double y, int k_max) {
    if (!(nu > 0.0)) throw DomainError("bose_g_small_y: order must be positive");
    if (is_integer(nu)) {
        throw DomainError("bose_g_small_y: integer order " + std::to_string(nu) +
                          " has a logarithmic expansion and is not supported");
    }
    if (!(y > 0.0)) throw DomainError("bose_g_small_y: argument must be positive");
    if (k_max < 0) throw DomainError("bose_g_small_y: k_max must be non-negative");
    return expansion(nu, y, k_max, false);
}

EvalResult bose_g_derivative(double nu, double y) {
    if (!(nu > 0.0)) throw DomainError("bose_g_derivative: order must be positive");
    if (!(y >= 0.0)) throw DomainError("bose_g_derivative: argument must be non-negative");
    const double lower = nu - 1.0;
    if (y == 0.0) {
        if (lower <= 1.0) {
            throw DivergentValue("bose_g_derivative: g_{nu-1}(0) diverges for nu = " +
                                 std::to_string(nu));
        }
        const double v = zeta(lower);
        return {-v, 8.0 * kEps * v, 0};
    }
    if (std::isinf(y)) return {0.0, 0.0, 0};
    EvalResult r = bose_positive_y(lower, y);
    r.value = -r.value;
    return r;
}

}  // namespace bose::special
