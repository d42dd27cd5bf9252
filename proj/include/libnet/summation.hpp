#pragma once

#include <cmath>
#include <cstdint>

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Neumaier-compensated running sum.
 */
class CompensatedSum
{
  public:
    void add(double x)
    {
        double const t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void add(CompensatedSum const& other)
    {
        this->add(other.sum_);
        this->add(other.comp_);
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_{0};
    double comp_{0};
};

//---------------------------------------------------------------------------//
/*!
 * First two sample moments from compensated sums of shifted values.
 *
 * Every value is shifted by a fixed reference (the first sample of the run)
 * before accumulation, which keeps the variance free of the catastrophic
 * cancellation of a raw sum of squares. Accumulators built over disjoint
 * blocks with the same shift can be merged.
 */
class MomentAccumulator
{
  public:
    explicit MomentAccumulator(double shift = 0) : shift_(shift) {}

    void add(double x)
    {
        double const d = x - shift_;
        sum_.add(d);
        sum_sq_.add(d * d);
        ++count_;
    }

    void merge(MomentAccumulator const& other)
    {
        sum_.add(other.sum_);
        sum_sq_.add(other.sum_sq_);
        count_ += other.count_;
    }

    std::uint64_t count() const { return count_; }
    double mean() const
    {
        return count_ == 0 ? 0 : shift_ + sum_.value() / static_cast<double>(count_);
    }

    //! Unbiased sample variance (0 for fewer than two samples)
    double variance() const
    {
        if (count_ < 2)
            return 0;
        double const n = static_cast<double>(count_);
        double const s = sum_.value();
        double const v = (sum_sq_.value() - s * s / n) / (n - 1);
        return v > 0 ? v : 0;
    }

  private:
    double shift_;
    CompensatedSum sum_;
    CompensatedSum sum_sq_;
    std::uint64_t count_{0};
};

}  // namespace libnet
