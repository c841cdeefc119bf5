#include "chordal/trace_io.hpp"

#include <cstdio>
#include <ostream>
#include <string>

namespace chordal {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trace_header(std::ostream& out) {
    out << "iteration,edges,acceptance_window,log_pi\n";
}

void write_trace_row(std::ostream& out, const StepRecord& rec) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%llu,%llu,%.6f,%.17g\n",
                  static_cast<unsigned long long>(rec.iteration),
                  static_cast<unsigned long long>(rec.edge_count), rec.window_acceptance,
                  rec.log_pi);
    out << buf;
}

} // namespace chordal
