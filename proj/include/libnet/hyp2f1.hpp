#pragma once

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Arguments of the Gauss hypergeometric function 2F1(a, b; c; z).
 *
 * Only real z <= 0 is supported; c must not be a non-positive integer.
 */
struct Hyp2F1Params
{
    double a;
    double b;
    double c;
    double z_arg;
};

inline constexpr double default_hyp2f1_tol = 1e-15;
inline constexpr long hyp2f1_max_terms = 1'000'000;

/*!
 * Evaluate 2F1(a, b; c; z) for z <= 0.
 *
 * Arguments in [-1/2, 0] are summed directly. Below -1/2 the Pfaff
 * transformation
 * \f[ {}_2F_1(a,b;c;z) = (1-z)^{-a}\, {}_2F_1(a, c-b; c; z/(z-1)) \f]
 * moves the argument into (1/3, 1), where the series has no sign
 * alternation to cancel.
 *
 * Summation stops once three consecutive terms fall below tol times the
 * partial sum and a geometric bound on the remaining tail does too. Throws
 * DomainError for bad parameters and ConvergenceError when the term cap is
 * reached.
 */
double hyp2f1(Hyp2F1Params const& p, double tol = default_hyp2f1_tol);

/*!
 * Gauss series summed at the raw argument, for -1 < z <= 0.
 *
 * Near z = -1 with large b the alternating terms grow far beyond the result;
 * the sum is redone in 50 and then 100 decimal digits when the observed
 * cancellation would swamp tol in double precision.
 */
double hyp2f1_direct(Hyp2F1Params const& p, double tol = default_hyp2f1_tol);

//! Pfaff-transformed series, valid for any z <= 0 (same precision fallback).
double hyp2f1_pfaff(Hyp2F1Params const& p, double tol = default_hyp2f1_tol);

}  // namespace libnet
