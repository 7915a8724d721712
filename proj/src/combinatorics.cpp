#include "paving/combinatorics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

#include "paving/errors.hpp"
#include "paving/subsets.hpp"

namespace paving {

namespace mp = boost::multiprecision;
using BigFloat = mp::cpp_bin_float_50;

BigInt binomial(int n, long long k) {
    if (n < 0) throw validation_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

namespace {

const BigFloat kGuard = mp::ldexp(BigFloat(1), -40);

InequalityReport decide(const BigFloat& lhs, const BigFloat& rhs) {
    InequalityReport rep;
    BigFloat margin = rhs - lhs;
    BigFloat larger = mp::abs(lhs) > mp::abs(rhs) ? mp::abs(lhs) : mp::abs(rhs);
    BigFloat guard = larger * kGuard;
    rep.margin = static_cast<double>(margin);
    if (margin > guard) {
        rep.ok = true;
    } else if (margin > 0) {
        rep.near_tie = true;
    }
    return rep;
}

BigFloat sqrt_2_over_pi() {
    static const BigFloat v = mp::sqrt(BigFloat(2) / boost::math::constants::pi<BigFloat>());
    return v;
}

BigFloat central_upper(int n) {
    return sqrt_2_over_pi() * mp::pow(BigFloat(2), n) / mp::sqrt(BigFloat(n));
}

}  // namespace

CentralBoundsReport check_central_bounds(int n) {
    if (n < 1) throw validation_error("check_central_bounds: n must be positive");
    BigFloat central(binomial(n, n / 2).str());
    BigFloat upper = central_upper(n);
    BigFloat lower = upper * (BigFloat(1) - BigFloat(1) / n);
    CentralBoundsReport rep;
    rep.lower = decide(lower, central);
    rep.upper = decide(central, upper);
    return rep;
}

InequalityReport check_compare_bound(int n, int m) {
    if (n < 2) throw validation_error("check_compare_bound: n must be at least 2");
    if (m < 0 || m >= n) throw validation_error("check_compare_bound: need 0 <= m < n");
    BigFloat lhs(binomial(n - m, (n - m) / 2).str());
    BigFloat rhs = BigFloat(n) / (n - 1) * mp::sqrt(BigFloat(n) / (n - m)) *
                   mp::pow(BigFloat(2), -m) * BigFloat(binomial(n, n / 2).str());
    return decide(lhs, rhs);
}

double deviation_ratio(int n, long long k) {
    if (n < 1) throw validation_error("deviation_ratio: n must be positive");
    long long idx = n / 2 + k;
    if (idx < 0 || idx > n) throw validation_error("deviation_ratio: floor(n/2)+k outside [0,n]");
    BigFloat num(binomial(n, idx).str());
    BigFloat denom = sqrt_2_over_pi() * mp::exp(BigFloat(-2) * k * k / n) *
                     mp::pow(BigFloat(2), n) / mp::sqrt(BigFloat(n));
    return static_cast<double>(num / denom);
}

double f_kappa(double kappa) {
    if (!(kappa > 0)) throw validation_error("f_kappa: kappa must be positive");
    constexpr double e = 2.718281828459045235360287;
    return kappa * std::log2(2 * e / kappa);
}

IntInterval rank_window(int n, double beta) {
    if (n < 1) throw validation_error("rank_window: n must be positive");
    if (!(beta > 0)) throw validation_error("rank_window: beta must be positive");
    double half = n / 2.0;
    double radius = beta * std::sqrt(static_cast<double>(n));
    IntInterval w;
    w.lo = std::max(0, static_cast<int>(std::ceil(half - radius)));
    w.hi = std::min(n, static_cast<int>(std::floor(half + radius)));
    return w;
}

std::string format_subset(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

std::vector<Mask> all_r_subsets(int n, int r) {
    std::vector<Mask> out;
    if (r < 0 || r > n) return out;
    if (r == 0) {
        out.push_back(0);
        return out;
    }
    Mask v = r == 64 ? ~Mask{0} : (Mask{1} << r) - 1;
    Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    while (true) {
        out.push_back(v);
        if (v == (limit ^ ((Mask{1} << (n - r)) - 1))) break;  // highest r-subset
        v = next_same_popcount(v);
    }
    return out;
}

}  // namespace paving
