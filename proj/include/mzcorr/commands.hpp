#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mzcorr/config.hpp"
#include "mzcorr/correlation.hpp"

namespace mzcorr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,   // command line could not be parsed
  kConfig = 2,  // configuration rejected
  kIo = 3,      // an output could not be written
};

/// Curve written by `sweep`: closed form at quadrature, the spectral path
/// otherwise, or the two-segment matrix ensemble for engine=matrix.
CorrelationCurve compute_sweep(const RunConfig& cfg, std::ostream& warn);

/// Curve written by `ensemble`: segment averages over the configured sequence.
CorrelationCurve compute_ensemble(const RunConfig& cfg);

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ensemble(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sequence(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name). Output goes to `out`
/// when no --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzcorr::cli
