#include "beliefpol/trace_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace beliefpol {

TraceFormat trace_format_from_name(std::string_view name) {
    if (name == "csv") return TraceFormat::Csv;
    if (name == "jsonl") return TraceFormat::Jsonl;
    throw ModelError("unknown trace format '" + std::string(name) + "' (expected csv or jsonl)");
}

std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

TraceWriter::TraceWriter(std::ostream& out, TraceFormat format, std::size_t agents,
                         std::size_t discretizations)
    : out_(out), format_(format), agents_(agents), discretizations_(discretizations) {
    if (format_ != TraceFormat::Csv) return;
    std::string header = "t,spread";
    for (std::size_t d = 0; d < discretizations_; ++d) header += ",pol_" + std::to_string(d);
    for (std::size_t i = 0; i < agents_; ++i) header += ",belief_" + std::to_string(i);
    out_ << header << '\n';
}

void TraceWriter::write(const StepRecord& rec) {
    if (rec.beliefs.size() != agents_ || rec.polarization.size() != discretizations_) {
        throw ModelError("record shape does not match the trace header");
    }
    line_.clear();
    if (format_ == TraceFormat::Csv) {
        line_ += std::to_string(rec.t);
        line_ += ',';
        line_ += format_real(rec.spread);
        for (double p : rec.polarization) {
            line_ += ',';
            line_ += format_real(p);
        }
        for (double b : rec.beliefs) {
            line_ += ',';
            line_ += format_real(b);
        }
    } else {
        line_ += "{\"t\":" + std::to_string(rec.t) + ",\"spread\":" + format_real(rec.spread) +
                 ",\"polarization\":[";
        for (std::size_t d = 0; d < rec.polarization.size(); ++d) {
            if (d) line_ += ',';
            line_ += format_real(rec.polarization[d]);
        }
        line_ += "],\"beliefs\":[";
        for (std::size_t i = 0; i < rec.beliefs.size(); ++i) {
            if (i) line_ += ',';
            line_ += format_real(rec.beliefs[i]);
        }
        line_ += "]}";
    }
    line_ += '\n';
    out_ << line_;
}

namespace {

double parse_real(std::string_view field, std::size_t line) {
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw ModelError("trace line " + std::to_string(line) + ": bad number '" +
                         std::string(field) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

SimulationTrace read_trace_csv(std::istream& in, UpdateKind kind) {
    std::string line;
    if (!std::getline(in, line)) throw ModelError("trace is empty");
    const auto header = split(line);
    if (header.size() < 3 || header[0] != "t" || header[1] != "spread") {
        throw ModelError("trace header must start with t,spread");
    }
    std::size_t pols = 0;
    while (2 + pols < header.size() && header[2 + pols].starts_with("pol_")) ++pols;
    const std::size_t agents = header.size() - 2 - pols;
    if (agents == 0) throw ModelError("trace has no belief columns");

    SimulationTrace trace;
    trace.update_kind = kind;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != header.size()) {
            throw ModelError("trace line " + std::to_string(line_no) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(header.size()));
        }
        StepRecord rec{static_cast<std::size_t>(parse_real(fields[0], line_no)), BeliefConfig({0.0}),
                       parse_real(fields[1], line_no), {}};
        for (std::size_t d = 0; d < pols; ++d) rec.polarization.push_back(parse_real(fields[2 + d], line_no));
        std::vector<double> beliefs(agents);
        for (std::size_t i = 0; i < agents; ++i) beliefs[i] = parse_real(fields[2 + pols + i], line_no);
        try {
            rec.beliefs = BeliefConfig(std::move(beliefs));
        } catch (const ModelError& e) {
            throw ModelError("trace line " + std::to_string(line_no) + ": " + e.what());
        }
        trace.records.push_back(std::move(rec));
    }
    if (trace.records.empty()) throw ModelError("trace has no records");
    return trace;
}

}  // namespace beliefpol
