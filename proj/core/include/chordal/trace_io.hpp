#pragma once

#include <iosfwd>

#include "chordal/sampler.hpp"

namespace chordal {

/// Trace CSV: UTF-8, header row, comma separated. Columns: iteration,
/// edges, acceptance_window (applied proportion over the trailing window),
/// log_pi. Identical configs and seeds produce byte-identical files.
void write_trace_header(std::ostream& out);
void write_trace_row(std::ostream& out, const StepRecord& rec);

/// Formats a double the same way everywhere traces are written (shortest
/// round-trippable form).
std::string format_double(double v);

} // namespace chordal
