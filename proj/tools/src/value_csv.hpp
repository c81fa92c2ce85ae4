#pragma once

#include <iosfwd>

#include "epifair/indices.hpp"

namespace epifair::cli {

/// Reads a CSV with a `value` column and an optional `group` column
/// (any column order, extra columns rejected).
Distribution read_value_csv(std::istream& in);

}  // namespace epifair::cli
