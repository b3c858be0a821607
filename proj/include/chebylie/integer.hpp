#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chebylie {

/// Arbitrary-precision signed integer used for every coefficient.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_decimal(const Integer& value) { return value.str(); }

Integer parse_decimal(std::string_view text);

}  // namespace chebylie
