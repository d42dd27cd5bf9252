#include "libnet/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "libnet/errors.hpp"

namespace libnet
{
namespace
{
using boost::multiprecision::cpp_bin_float_100;
using boost::multiprecision::cpp_bin_float_50;

void check_params(Hyp2F1Params const& p, double tol)
{
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c)
        || !std::isfinite(p.z_arg))
    {
        throw DomainError("2F1 parameters must be finite");
    }
    if (p.c <= 0 && p.c == std::floor(p.c))
        throw DomainError("2F1 parameter c must not be a non-positive integer");
    if (p.z_arg > 0)
        throw DomainError("2F1 argument must be non-positive");
    if (!(tol >= 1e-15 && tol <= 1e-6))
        throw DomainError("2F1 tolerance must lie in [1e-15, 1e-6]");
}

template<class T>
struct SeriesOutcome
{
    T sum;
    //! Largest |term| / |sum|: digits lost to cancellation
    double cancellation;
};

/*!
 * Sum the Gauss series with term-ratio recursion.
 *
 * A term counts as small once |term| < tol |sum|; three small terms in a row
 * end the sum provided the geometric tail bound |term| rho / (1 - rho) is
 * also below tol |sum|, with rho = max(next ratio, |z|) bounding every later
 * ratio once the ratio sequence is monotone. The bound matters for arguments
 * near one, where terms decay polynomially for a long stretch.
 */
template<class T>
SeriesOutcome<T> gauss_series(T const& a, T const& b, T const& c, T const& z,
                              double tol)
{
    using std::abs;
    T sum = 1;
    T comp = 0;  // Neumaier compensation
    T term = 1;
    T max_term = 1;
    T const abs_z = abs(z);
    int small_run = 0;
    auto total = [&] { return sum + comp; };
    for (long n = 0; n < hyp2f1_max_terms; ++n)
    {
        T const nn = n;
        term *= (a + nn) * (b + nn) / ((c + nn) * (nn + 1)) * z;
        T const t = sum + term;
        comp += abs(sum) >= abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        if (term == 0)
            return {total(), static_cast<double>(max_term / abs(total()))};
        if (abs(term) > max_term)
            max_term = abs(term);

        T const next_n = nn + 1;
        T const next_ratio = abs((a + next_n) * (b + next_n)
                                 / ((c + next_n) * (next_n + 1)) * z);
        T const rho = next_ratio > abs_z ? next_ratio : abs_z;
        T const bound = tol * abs(total());
        if (abs(term) < bound && rho < 1)
        {
            if (++small_run >= 3 && abs(term) * rho / (1 - rho) < bound)
                return {total(), static_cast<double>(max_term / abs(total()))};
        }
        else
        {
            small_run = 0;
        }
    }
    throw ConvergenceError("2F1 series did not converge within the term cap",
                           static_cast<double>(abs(term) / abs(total())));
}

// Precision at which the observed cancellation is tolerable.
bool acceptable(double cancellation, double epsilon, double tol)
{
    return cancellation * epsilon <= std::max(tol, 1e-13);
}

// Series in double, redone at 50 then 100 digits if cancellation demands.
double sum_series(double a, double b, double c, double z, double tol)
{
    auto fast = gauss_series<double>(a, b, c, z, tol);
    if (acceptable(fast.cancellation, std::numeric_limits<double>::epsilon(), tol))
        return fast.sum;

    auto mid = gauss_series<cpp_bin_float_50>(a, b, c, z, tol);
    if (acceptable(mid.cancellation, 1e-49, tol))
        return static_cast<double>(mid.sum);

    auto wide = gauss_series<cpp_bin_float_100>(a, b, c, z, tol);
    if (!acceptable(wide.cancellation, 1e-99, tol))
    {
        throw ConvergenceError("2F1 series lost all precision to cancellation",
                               wide.cancellation * 1e-99);
    }
    return static_cast<double>(wide.sum);
}
}  // namespace

double hyp2f1_direct(Hyp2F1Params const& p, double tol)
{
    check_params(p, tol);
    if (!(p.z_arg > -1))
        throw DomainError("direct 2F1 series requires -1 < z <= 0");
    if (p.z_arg == 0)
        return 1;
    return sum_series(p.a, p.b, p.c, p.z_arg, tol);
}

double hyp2f1_pfaff(Hyp2F1Params const& p, double tol)
{
    check_params(p, tol);
    if (p.z_arg == 0)
        return 1;
    double const w = p.z_arg / (p.z_arg - 1);
    return std::pow(1 - p.z_arg, -p.a) * sum_series(p.a, p.c - p.b, p.c, w, tol);
}

double hyp2f1(Hyp2F1Params const& p, double tol)
{
    check_params(p, tol);
    if (p.z_arg >= -0.5)
        return hyp2f1_direct(p, tol);
    return hyp2f1_pfaff(p, tol);
}

}  // namespace libnet
