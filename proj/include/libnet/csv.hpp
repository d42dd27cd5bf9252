#pragma once

#include <string>

namespace libnet
{
//! Shortest-exact formatting capped at 17 significant digits, "." decimal.
std::string format_real(double x);

}  // namespace libnet
