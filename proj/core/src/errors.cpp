#include "pwll/errors.hpp"

#include <sstream>

namespace pwll {

DisconnectedGraph::DisconnectedGraph(std::size_t components)
    : Error("similarity graph is disconnected (" + std::to_string(components) +
            " components)"),
      components_(components) {}

EmptyLabeledSet::EmptyLabeledSet() : Error("labeled set is empty") {}

EmptyUnlabeledSet::EmptyUnlabeledSet()
    : Error("no unlabeled points left to query") {}

namespace {
std::string DescribeResiduals(const std::vector<double>& residuals,
                              double tolerance, std::size_t iterations) {
  std::ostringstream os;
  os << "conjugate gradient did not reach tolerance " << tolerance << " in "
     << iterations << " iterations; relative residual per column:";
  for (std::size_t c = 0; c < residuals.size(); ++c) {
    os << " [" << c << "]=" << residuals[c];
  }
  return os.str();
}
}  // namespace

SolverDiverged::SolverDiverged(std::vector<double> residuals, double tolerance,
                               std::size_t iterations)
    : Error(DescribeResiduals(residuals, tolerance, iterations)),
      residuals_(std::move(residuals)) {}

KTooLarge::KTooLarge(int k, int classes)
    : Error("mod-k relabeling needs 1 <= k <= C; got k=" + std::to_string(k) +
            ", C=" + std::to_string(classes)) {}

OracleOutOfRange::OracleOutOfRange(std::size_t index, int label, int classes)
    : Error("oracle returned class " + std::to_string(label) + " for index " +
            std::to_string(index) + "; expected 0.." +
            std::to_string(classes - 1)) {}

BetaOutOfRange::BetaOutOfRange(double beta)
    : Error("beta must lie in [0, 1/sqrt(2)]; got " + std::to_string(beta)) {}

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace pwll
