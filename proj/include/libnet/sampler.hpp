#pragma once

#include <cstdint>
#include <iosfwd>

#include "region.hpp"

namespace libnet
{
//! Default cap on the expected point count of one realization.
inline constexpr double default_max_expected_points = 1e7;

//! Poisson mean measure lambda * |region|.
double expected_count(Region const& region, double lambda);

//---------------------------------------------------------------------------//
/*!
 * Draw one homogeneous Poisson point process realization.
 *
 * The count is Poisson(lambda * measure); given the count, points are
 * i.i.d. uniform on the region (annulus radius by inverse CDF). The stream is
 * fully determined by (seed, index).
 *
 * Throws DomainError for lambda < 0 or an unbounded region, CapacityError if
 * the expected count exceeds max_expected_points.
 */
PointField sample_ppp(Region const& region,
                      double lambda,
                      std::uint64_t seed,
                      std::uint64_t index,
                      double max_expected_points = default_max_expected_points);

//! Write one point per row as "x" or "x,y" with a header line.
void write_field_csv(std::ostream& os, PointField const& field);

}  // namespace libnet
