#pragma once

#include <string>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon {

// Loads the named columns from a CSV file with a header row and a `date`
// column formatted YYYY-MM. Rows must be consecutive months with no gaps;
// cells use '.' as the decimal separator and no thousands separators.
// Returns one series per requested column, in request order.
std::vector<TimeSeries> load_csv(const std::string& path,
                                 const std::vector<std::string>& columns);

// Same, parsing from an in-memory string (the file loader's core).
std::vector<TimeSeries> load_csv_text(const std::string& text, const std::string& origin,
                                      const std::vector<std::string>& columns);

}  // namespace tsecon
