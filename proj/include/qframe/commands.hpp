#pragma once

#include <ostream>
#include <string>

#include "qframe/coefficients.hpp"
#include "qframe/simulate.hpp"

namespace qframe::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,        ///< bad input, unreadable/invalid files
    kNotAFrame = 2,
    kNoConvergence = 3,
};

int cmd_analyze(const std::string& frame_path, bool json_mode, std::ostream& out);
int cmd_dual(const std::string& frame_path, const std::string& out_path,
             std::ostream& out);
int cmd_reconstruct(const std::string& frame_path, const std::string& signal_path,
                    bool json_mode, std::ostream& out);
int cmd_project(const std::string& vectors_path, const std::string& signal_path,
                bool json_mode, std::ostream& out);
int cmd_minl1(const std::string& frame_path, const std::string& signal_path,
              const SolverParams& params, bool json_mode, std::ostream& out);
int cmd_simulate(const std::string& frame_path, const std::string& signal_path,
                 const NoiseSpec& spec, unsigned threads, bool json_mode,
                 std::ostream& out);

/// Maps a thrown library error to the exit-code contract, printing the
/// message to err.
int exit_code_for(const std::exception& e, std::ostream& err);

} // namespace qframe::cli
