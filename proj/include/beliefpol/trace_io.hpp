#pragma once

// Trace serialization. CSV columns are
//   t,spread,pol_0,...,pol_{d-1},belief_0,...,belief_{n-1}
// with floats in shortest round-trip form; JSONL writes one object per step:
//   {"t":0,"spread":...,"polarization":[...],"beliefs":[...]}

#include <iosfwd>
#include <string>

#include "beliefpol/update.hpp"

namespace beliefpol {

enum class TraceFormat { Csv, Jsonl };

TraceFormat trace_format_from_name(std::string_view name);

/// Shortest decimal string that parses back to the same double.
std::string format_real(double v);

class TraceWriter {
public:
    TraceWriter(std::ostream& out, TraceFormat format, std::size_t agents, std::size_t discretizations);

    void write(const StepRecord& record);

private:
    std::ostream& out_;
    TraceFormat format_;
    std::size_t agents_;
    std::size_t discretizations_;
    std::string line_;
};

/// Reads a CSV trace back. The update kind is not stored in the file and is
/// taken from the caller; the status is left as MaxStepsReached.
SimulationTrace read_trace_csv(std::istream& in, UpdateKind kind);

}  // namespace beliefpol
