#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace paving {

using BigInt = boost::multiprecision::cpp_int;

// C(n,k) as an exact integer; 0 for k outside [0,n].
BigInt binomial(int n, long long k);

// Inequalities are decided in extended precision (cpp_bin_float, 168-bit
// mantissa) with a relative guard: "holds" means the margin exceeds 2^-40 of
// the larger side. Margins in (0, guard] are flagged near_tie and not ok.
struct InequalityReport {
    bool ok = false;
    bool near_tie = false;
    double margin = 0.0;  // rhs - lhs, narrowed
};

// sqrt(2/pi) 2^n/sqrt(n) (1 - 1/n)  <=  C(n, floor(n/2))  <=  sqrt(2/pi) 2^n/sqrt(n)
struct CentralBoundsReport {
    InequalityReport lower;
    InequalityReport upper;
    bool both_ok() const { return lower.ok && upper.ok; }
};
CentralBoundsReport check_central_bounds(int n);

// C(n-m, floor((n-m)/2)) <= n/(n-1) sqrt(n/(n-m)) 2^-m C(n, floor(n/2)),  0 <= m < n
InequalityReport check_compare_bound(int n, int m);

// C(n, floor(n/2)+k) / ( sqrt(2/pi) e^{-2k^2/n} 2^n/sqrt(n) )
double deviation_ratio(int n, long long k);

// kappa * log2(2e / kappa), kappa > 0
double f_kappa(double kappa);

// {0..n} intersect [n/2 - beta sqrt(n), n/2 + beta sqrt(n)], inclusive bounds
struct IntInterval {
    int lo = 0;
    int hi = -1;  // hi < lo means empty
    bool contains(int x) const { return lo <= x && x <= hi; }
};
IntInterval rank_window(int n, double beta);

}  // namespace paving
