/**
 * @file cli.h
 * @brief Command-line front end.
 *
 *   chromanote [options] <input.png|jpg> <output.mid>
 *
 * Exit codes: 0 success, 1 unreadable/undecodable image, 2 invalid
 * configuration, 3 output write failure.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "chromanote/pipeline.h"

namespace chromanote::cli {

enum ExitCode : int {
  kOk = 0,
  kBadImage = 1,
  kBadConfig = 2,
  kWriteFailed = 3,
};

struct Config {
  PipelineOptions pipeline;
  std::optional<std::filesystem::path> mapping_table_path;
  std::filesystem::path input_path;
  std::filesystem::path output_midi_path;
  std::optional<std::filesystem::path> output_report_path;
};

/// Parses flags, runs the pipeline and writes outputs. Diagnostics go to
/// `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chromanote::cli
