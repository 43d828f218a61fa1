#ifndef MODFILTER_COMMANDS_HPP
#define MODFILTER_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "modfilter/bench.hpp"
#include "modfilter/impulse_filter.hpp"
#include "modfilter/noise.hpp"
#include "modfilter/synthetic.hpp"

namespace modfilter {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Each command returns a process exit code and reports failures on `err`.
/// File-format and I/O problems map to kExitIo, bad arguments to
/// kExitUsage.

int cmd_noise(const std::string& in_path, const std::string& out_path,
              const std::string& mask_path, const NoiseSpec& spec, std::ostream& err);

int cmd_denoise(const std::string& in_path, const std::string& out_path,
                const std::string& mask_out_path, const FilterConfig& config, std::ostream& err);

int cmd_median(const std::string& in_path, const std::string& out_path, std::ostream& err);

int cmd_compare(const std::string& orig_path, const std::string& noisy_path,
                const std::string& restored_path, const std::optional<std::string>& truth_mask_path,
                const std::optional<std::string>& detected_mask_path, std::ostream& out,
                std::ostream& err);

/// Image source for the bench command: a PNM file or a synthetic spec.
struct BenchSource {
    std::optional<std::string> input_path;
    SyntheticSpec synthetic;
};

int cmd_bench(const BenchSource& source, const BenchOptions& options, const std::string& csv_path,
              std::ostream& err);

} // namespace modfilter

#endif // MODFILTER_COMMANDS_HPP
