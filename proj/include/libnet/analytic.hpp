#pragma once

#include "channel.hpp"
#include "quadrature.hpp"
#include "region.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Scenario parameters shared by the mean-interference formulas.
 *
 * theta_f == unbounded_fov means no FOV limit (infinite support).
 */
struct MeanInterferenceInputs
{
    double lambda{0};
    double h{1};
    double z{0};
    double theta_f{unbounded_fov};
    double beta{4};
};

void validate(MeanInterferenceInputs const& in);

//! Mean interference together with its support status.
struct MeanInterference
{
    double value{0};
    //! z exceeded the FOV radius, so no interferer is visible
    bool empty_support{false};
};

//! Which side(s) of the receiver contribute in one dimension.
enum class Sides
{
    one_sided,  //!< interferers on [z, h tan theta_f] only
    two_sided,  //!< mirrored contribution from [-h tan theta_f, -z]
};

//---------------------------------------------------------------------------//
/*!
 * Mean co-channel interference on a line of Poisson balloons.
 *
 * \f[
 *  E(I) = \lambda\big[h^{1-2\beta}\tan\theta_f\,
 *        {}_2F_1(\tfrac12,\beta;\tfrac32;-\tan^2\theta_f)
 *        - z h^{-2\beta}\,{}_2F_1(\tfrac12,\beta;\tfrac32;-z^2/h^2)\big]
 * \f]
 *
 * Both terms are antiderivatives G(x) = int_0^x (t^2+h^2)^-beta dt. When z
 * and the FOV radius both exceed h their difference cancels badly, so the
 * complementary tails T(x) = int_x^inf are subtracted instead, with
 * \f$ T(x) = x^{1-2\beta}/(2\beta-1)\,
 *     {}_2F_1(\beta,\beta-\tfrac12;\beta+\tfrac12;-h^2/x^2) \f$.
 */
MeanInterference mean_interference_1d(MeanInterferenceInputs const& in,
                                      Sides sides = Sides::one_sided);

/*!
 * Mean co-channel interference on a plane of Poisson balloons.
 *
 * \f[
 *  E(I) = \frac{\lambda\pi}{\beta-1}\big[(h^2+z^2)^{1-\beta}
 *          - h^{2-2\beta}\cos^{2\beta-2}\theta_f\big]
 * \f]
 * evaluated as a scaled expm1 so the boundary z = h tan theta_f yields 0.
 */
MeanInterference mean_interference_2d(MeanInterferenceInputs const& in);

//! Integral of the gain kernel over [r_lo, r_hi] (1D) scaled by lambda.
double interval_interference_1d(double lambda, double h, double beta,
                                double r_lo, double r_hi);

//! Integral of the gain kernel over the annulus [r_lo, r_hi] scaled by lambda.
double annulus_interference_2d(double lambda, double h, double beta,
                               double r_lo, double r_hi);

//---------------------------------------------------------------------------//
//! Quadrature of the Campbell integral for the same inputs (oracle route).
QuadResult mean_interference_quadrature(MeanInterferenceInputs const& in,
                                        int dimension,
                                        QuadTolerance tol = {1e-13, 0});

//---------------------------------------------------------------------------//
/*!
 * Laplace functional of the interference over a support.
 *
 * \f[ L(s) = \exp\Big(-\lambda\int_S \big(1 - e^{-s f(x)}\big)\,dx\Big) \f]
 * with f the channel path gain (polar-reduced on an annulus). Requires
 * s >= 0.
 */
double laplace_functional(double s,
                          double lambda,
                          LambertianChannel const& channel,
                          Region const& support,
                          QuadTolerance tol = {1e-13, 0});

/*!
 * Slope -L'(0) by central difference around s = 0.
 *
 * The exponent is finite for negative s on a bounded support, so the
 * symmetric stencil with step delta / f_max is used. The result estimates
 * E(I).
 */
double laplace_slope_at_zero(double lambda,
                             LambertianChannel const& channel,
                             Region const& support,
                             double delta = 1e-5);

}  // namespace libnet
