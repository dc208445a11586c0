#pragma once

#include <iosfwd>

#include "pwll/active_loop.hpp"

namespace pwll {

// iteration,query_index,class,accuracy,cluster_proportion,tau,ms
void write_log_csv(const IterationLog& log, std::ostream& out);
IterationLog read_log_csv(std::istream& in);

}  // namespace pwll
