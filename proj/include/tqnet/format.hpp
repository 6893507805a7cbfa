#pragma once

#include <iosfwd>
#include <string>

#include "tqnet/temporal_quantity.hpp"

namespace tqnet {

/// Integral values print without a decimal point; everything else uses the
/// shortest representation that reads back to the same double.
std::string format_value(Value v);

/// `[(s, f, v), ...]`, the listing style used throughout the reports.
std::string to_string(const TemporalQuantity& q);
std::ostream& operator<<(std::ostream& os, const TemporalQuantity& q);

enum class CsvLayout {
  Triples,   ///< header `start,finish,value`, one row per interval
  Instants,  ///< header `t,value`, one row per defined instant
};

void write_csv(std::ostream& os, const TemporalQuantity& q, CsvLayout layout);

/// Reads the triple layout back. Throws std::runtime_error with the line
/// number on malformed rows.
TemporalQuantity read_csv_triples(std::istream& is);

}  // namespace tqnet
