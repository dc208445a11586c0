#include "pwll/experiment_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pwll/errors.hpp"

namespace pwll {

namespace {

constexpr const char* kHeader =
    "iteration,query_index,class,accuracy,cluster_proportion,tau,ms";

void PutDouble(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

void write_log_csv(const IterationLog& log, std::ostream& out) {
  out << kHeader << '\n';
  for (const IterationRecord& r : log.records) {
    out << r.iteration << ',' << r.query_index << ',' << r.observed_class
        << ',';
    PutDouble(out, r.accuracy);
    out << ',';
    PutDouble(out, r.cluster_proportion);
    out << ',';
    PutDouble(out, r.tau);
    out << ',';
    PutDouble(out, r.ms);
    out << '\n';
  }
}

IterationLog read_log_csv(std::istream& in) {
  IterationLog log;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line.rfind(kHeader, 0) != 0) {
    throw FormatError("line 1: expected log header");
  }
  ++lineno;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    IterationRecord r;
    char c1, c2, c3, c4, c5, c6;
    row >> r.iteration >> c1 >> r.query_index >> c2 >> r.observed_class >>
        c3 >> r.accuracy >> c4 >> r.cluster_proportion >> c5 >> r.tau >> c6 >>
        r.ms;
    if (!row || c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' ||
        c5 != ',' || c6 != ',') {
      throw FormatError("line " + std::to_string(lineno) +
                        ": malformed log row");
    }
    log.records.push_back(r);
  }
  return log;
}

}  // namespace pwll
