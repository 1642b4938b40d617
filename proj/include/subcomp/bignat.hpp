#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subcomp {

/// Exact unbounded non-negative integer used for all word counts and
/// complexity values (p(n) can reach alpha^n, which overflows any
/// fixed-width type already at desk scale).
using BigNat = boost::multiprecision::cpp_int;

}  // namespace subcomp
