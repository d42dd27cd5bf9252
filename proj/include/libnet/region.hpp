#pragma once

#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Receiver-anchored horizontal position of a balloon.
 *
 * One-dimensional fields leave y at zero.
 */
struct Point
{
    double x{0};
    double y{0};

    //! Horizontal distance to the receiver at the origin
    double distance() const
    {
        return y == 0 ? std::fabs(x) : std::hypot(x, y);
    }

    friend bool operator==(Point const&, Point const&) = default;
};

//! Interval [a, b] on the line.
struct Interval
{
    double a;
    double b;
};

//! Annulus r_min <= |p| <= r_max centered on the receiver.
struct Annulus
{
    double r_min;
    double r_max;
};

//! Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Rectangle
{
    double x0;
    double x1;
    double y0;
    double y1;
};

//---------------------------------------------------------------------------//
/*!
 * Sampling or integration support.
 *
 * Upper edges may be +inf for integration supports; such regions have
 * infinite measure and cannot be sampled.
 */
class Region
{
  public:
    using Shape = std::variant<Interval, Annulus, Rectangle>;

    static Region interval(double a, double b);
    static Region annulus(double r_min, double r_max);
    static Region rectangle(double x0, double x1, double y0, double y1);

    Shape const& shape() const { return shape_; }
    int dimension() const;
    double measure() const;
    bool contains(Point p) const;
    bool is_bounded() const { return std::isfinite(this->measure()); }

  private:
    explicit Region(Shape s) : shape_(s) {}
    Shape shape_;
};

//---------------------------------------------------------------------------//
//! Identifies the random stream a field was drawn from.
struct SeedInfo
{
    std::uint64_t seed{0};
    std::uint64_t index{0};
};

//! One realization of the balloon point process.
struct PointField
{
    int dimension{1};
    std::vector<Point> points;
    Region region{Region::interval(0, 1)};
    SeedInfo seed_info{};
};

}  // namespace libnet
