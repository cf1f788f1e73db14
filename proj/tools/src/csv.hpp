#pragma once

#include <string>
#include <vector>

#include "experiment.hpp"

namespace relaysec::cli {

/// Formats a double with 12 significant digits (the CSV contract).
std::string format_value(double v);

/// Writes the result table; header is
/// sweep_var,sweep_value,scheme,metric,value,std_error,seed.
/// Byte-identical output for identical rows. Throws IoError.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

/// Reads a table previously written by write_csv. Throws IoError.
std::vector<ResultRow> read_csv(const std::string& path);

}  // namespace relaysec::cli
