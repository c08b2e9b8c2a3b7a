#include "chromanote/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "chromanote/errors.h"
#include "chromanote/image.h"
#include "chromanote/midi.h"
#include "chromanote/report.h"

namespace chromanote::cli {

namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedImage("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config config;
  PipelineOptions& opt = config.pipeline;
  std::string input;
  std::string output;
  std::string mapping_table;
  std::string report;

  CLI::App app{"Convert a painting or photograph into a MIDI melody", "chromanote"};
  app.add_option("input", input, "Input image (PNG or JPEG)")->required();
  app.add_option("output", output, "Output MIDI file")->required();
  app.add_option("--max-dim", opt.max_dim, "Longest side after downsizing")->capture_default_str();
  app.add_option("--segments", opt.n_segments, "Number of left-to-right segments")->capture_default_str();
  app.add_option("--threshold", opt.threshold, "Minimum pixel share for a sector to sound")->capture_default_str();
  app.add_option("--dark-cutoff", opt.filter.dark_cutoff, "Drop pixels darker than this luminosity")
      ->capture_default_str();
  app.add_option("--bright-cutoff", opt.filter.bright_cutoff, "Drop pixels brighter than this luminosity")
      ->capture_default_str();
  app.add_option("--gray-cutoff", opt.filter.gray_cutoff, "Drop pixels less saturated than this")
      ->capture_default_str();
  std::string velocity_source = "saturation";
  std::string triad = "60";
  app.add_option("--velocity-source", velocity_source, "Pixel statistic driving note velocity")
      ->check(CLI::IsMember({"saturation", "luminosity"}))
      ->capture_default_str();
  app.add_option("--triad", triad, "Triad geometry: 60 (consecutive 60-degree steps) or 120")
      ->check(CLI::IsMember({"60", "120"}))
      ->capture_default_str();
  app.add_option("--mapping-table", mapping_table, "Sector-to-pitch table file (12 lines: 'sector pitch')");
  app.add_option("--report", report, "Write the JSON analysis report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "chromanote: " << e.what() << "\n";
    return kBadConfig;
  }

  opt.velocity_source = velocity_source == "luminosity" ? VelocitySource::kLuminosity : VelocitySource::kSaturation;
  opt.triad = triad == "120" ? TriadConvention::kStandard120 : TriadConvention::kConsecutive60;
  config.input_path = input;
  config.output_midi_path = output;
  if (!mapping_table.empty()) config.mapping_table_path = mapping_table;
  if (!report.empty()) config.output_report_path = report;

  try {
    opt.validate();
    const MappingTable table =
        config.mapping_table_path ? MappingTable::load(*config.mapping_table_path) : MappingTable::scriabin();

    const PixelGrid image = decode_image(read_bytes(config.input_path));
    const ImageAnalysis analysis = analyze_image(image, opt, table);

    write_file(config.output_midi_path, serialize_score(analysis.score));
    if (config.output_report_path) write_report(*config.output_report_path, analysis);
    return kOk;
  } catch (const MalformedImage& e) {
    err << "chromanote: malformed image: " << e.what() << "\n";
    return kBadImage;
  } catch (const UnsupportedFormat& e) {
    err << "chromanote: unsupported format: " << e.what() << "\n";
    return kBadImage;
  } catch (const ConfigError& e) {
    err << "chromanote: invalid configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const TooManySegments& e) {
    err << "chromanote: invalid configuration: " << e.what() << "\n";
    return kBadConfig;
  } catch (const WriteFailure& e) {
    err << "chromanote: write failure: " << e.what() << "\n";
    return kWriteFailed;
  }
}

}  // namespace chromanote::cli
