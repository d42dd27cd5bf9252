#include "libnet/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace libnet::kernels
{
void fill_serial(std::span<double> out, TrialFn const& trial)
{
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = trial(i);
}

void fill_parallel(std::span<double> out, TrialFn const& trial)
{
    auto const n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = trial(static_cast<std::uint64_t>(i));
}

MomentAccumulator reduce_serial(std::span<double const> x, Transform const& g)
{
    if (x.empty())
        return MomentAccumulator{};
    MomentAccumulator acc(g(x.front()));
    for (double v : x)
        acc.add(g(v));
    return acc;
}

MomentAccumulator reduce_parallel(std::span<double const> x, Transform const& g)
{
    if (x.empty())
        return MomentAccumulator{};
    double const shift = g(x.front());
    std::size_t const blocks = (x.size() + reduction_block - 1) / reduction_block;
    std::vector<MomentAccumulator> partial(blocks, MomentAccumulator(shift));

    auto const nb = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nb; ++b)
    {
        std::size_t const lo = static_cast<std::size_t>(b) * reduction_block;
        std::size_t const hi = std::min(x.size(), lo + reduction_block);
        for (std::size_t i = lo; i < hi; ++i)
            partial[b].add(g(x[i]));
    }

    MomentAccumulator total(shift);
    for (auto const& p : partial)
        total.merge(p);
    return total;
}

int max_threads()
{
    return omp_get_max_threads();
}

}  // namespace libnet::kernels
