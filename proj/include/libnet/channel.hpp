#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "region.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Lambertian emission order for a half-power semi-angle.
 *
 * \f[ m = -\ln 2 / \ln\cos\theta_h \f]
 * Throws DomainError unless 0 < theta_h < pi/2.
 */
double lambertian_order(double theta_h);

//---------------------------------------------------------------------------//
/*!
 * Downlink optical channel of one balloon at height h.
 *
 * The received power from a balloon at horizontal distance d is proportional
 * to \f$ (d^2 + h^2)^{-\beta} \f$ with \f$ \beta = m + 3 \f$.
 */
class LambertianChannel
{
  public:
    LambertianChannel(double theta_h, double height);

    double theta_h() const { return theta_h_; }
    double order() const { return m_; }
    double beta() const { return beta_; }
    double height() const { return h_; }

    //! Path gain at horizontal distance d
    double path_gain(double d) const
    {
        return std::pow(d * d + h_ * h_, -beta_);
    }

  private:
    double theta_h_;
    double m_;
    double beta_;
    double h_;
};

//---------------------------------------------------------------------------//
//! Sentinel FOV meaning the receiver accepts every direction.
inline constexpr double unbounded_fov = std::numbers::pi / 2;

//! Horizontal radius seen by a receiver; +inf for the unbounded sentinel.
double fov_radius(double h, double fov);

//! FOV gate: 1 if |d| <= h tan(fov) (inclusive), otherwise 0.
int fov_gate(double horizontal_distance, double h, double fov);

//! Validate a FOV half-angle in (0, pi/2].
void check_fov(double fov);

//---------------------------------------------------------------------------//
/*!
 * Photodiode receiver at horizontal offset z from its tagged balloon.
 */
struct Receiver
{
    double fov{unbounded_fov};  //!< half-angle, radians
    double offset_z{0};  //!< distance to tagged balloon, m
    double noise_omega{0};  //!< noise power

    double fov_radius(double h) const { return libnet::fov_radius(h, fov); }
};

//---------------------------------------------------------------------------//
//! Outcome of an SINR evaluation.
struct SinrValue
{
    enum class Kind
    {
        finite,
        infinite,  //!< no noise and no visible interferer
        undefined,  //!< 0/0: tagged balloon gated and no denominator
    };

    Kind kind{Kind::finite};
    double value{0};

    bool is_finite() const { return kind == Kind::finite; }
};

//! Gated interference sum over receiver-anchored interferer positions.
double gated_interference(std::span<Point const> interferers,
                          LambertianChannel const& channel,
                          double fov);

/*!
 * Instantaneous SINR at the receiver.
 *
 * The tagged balloon sits at horizontal distance rx.offset_z; every point in
 * the field is a co-channel interferer. Throws DomainError when the tagged
 * balloon lies outside the FOV radius.
 */
SinrValue sinr(PointField const& field,
               LambertianChannel const& channel,
               Receiver const& rx);

//! SINR from a precomputed interference sum.
SinrValue sinr_from_interference(double interference,
                                 LambertianChannel const& channel,
                                 Receiver const& rx);

}  // namespace libnet
