/**
 * @file report.h
 * @brief Structured analysis report (JSON text, fixed key order, numbers in
 *        4-decimal fixed point).
 */

#pragma once

#include <filesystem>
#include <string>

#include "chromanote/pipeline.h"

namespace chromanote {

std::string emit_report(const ImageAnalysis& analysis);

/// Throws WriteFailure.
void write_report(const std::filesystem::path& path, const ImageAnalysis& analysis);

}  // namespace chromanote
