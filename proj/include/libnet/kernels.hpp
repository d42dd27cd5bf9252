#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "summation.hpp"

namespace libnet::kernels
{
//---------------------------------------------------------------------------//
// Trial-level kernels. Each has a serial reference and an OpenMP version;
// both evaluate the same per-index function, so per-trial values are
// identical and only the reduction order differs.
//---------------------------------------------------------------------------//

using TrialFn = std::function<double(std::uint64_t)>;
using Transform = std::function<double(double)>;

//! Trials per reduction block in the parallel reduction.
inline constexpr std::size_t reduction_block = 4096;

//! out[i] = trial(i), in index order
void fill_serial(std::span<double> out, TrialFn const& trial);

//! out[i] = trial(i), dynamically scheduled over OpenMP threads
void fill_parallel(std::span<double> out, TrialFn const& trial);

//! Moments of g(x[i]) accumulated in index order
MomentAccumulator reduce_serial(std::span<double const> x, Transform const& g);

/*!
 * Moments of g(x[i]) over fixed-size blocks merged in block order.
 *
 * The block partition does not depend on the thread count, so the result is
 * reproducible for any OMP_NUM_THREADS.
 */
MomentAccumulator reduce_parallel(std::span<double const> x, Transform const& g);

//! Number of threads an OpenMP region would use
int max_threads();

}  // namespace libnet::kernels
