#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace shchain {

/// Exact nonnegative count of algebras (or of candidate rows).
using BigCount = boost::multiprecision::cpp_int;

}  // namespace shchain
