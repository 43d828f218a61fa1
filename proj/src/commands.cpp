#include "modfilter/commands.hpp"

#include <cstdio>
#include <fstream>

#include "modfilter/median.hpp"
#include "modfilter/metrics.hpp"

namespace modfilter {

namespace {

// I/O, format and dimension problems -> kExitIo; bad parameter values
// -> kExitUsage.
int report(std::ostream& err, const std::exception& e, int code) {
    err << "error: " << e.what() << '\n';
    return code;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return report(err, e, kExitUsage);
    } catch (const std::length_error& e) {
        return report(err, e, kExitUsage);
    } catch (const std::domain_error& e) {
        return report(err, e, kExitIo);
    } catch (const std::exception& e) {
        return report(err, e, kExitIo);
    }
}

void print_fixed(std::ostream& out, const char* name, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s = %.6f", name, value);
    out << buf << '\n';
}

} // namespace

int cmd_noise(const std::string& in_path, const std::string& out_path,
              const std::string& mask_path, const NoiseSpec& spec, std::ostream& err) {
    return guarded(err, [&] {
        const Image input = load_pnm_file(in_path);
        const InjectResult result = inject(input, spec);
        save_pnm_file(result.image, out_path);
        if (!mask_path.empty()) save_pnm_file(mask_to_image(result.mask), mask_path);
        return kExitOk;
    });
}

int cmd_denoise(const std::string& in_path, const std::string& out_path,
                const std::string& mask_out_path, const FilterConfig& config, std::ostream& err) {
    return guarded(err, [&] {
        const Image input = load_pnm_file(in_path);
        const DenoiseResult result = denoise(input, config);
        save_pnm_file(result.image, out_path);
        if (!mask_out_path.empty()) save_pnm_file(mask_to_image(result.mask), mask_out_path);
        return kExitOk;
    });
}

int cmd_median(const std::string& in_path, const std::string& out_path, std::ostream& err) {
    return guarded(err, [&] {
        save_pnm_file(median_filter(load_pnm_file(in_path)), out_path);
        return kExitOk;
    });
}

int cmd_compare(const std::string& orig_path, const std::string& noisy_path,
                const std::string& restored_path, const std::optional<std::string>& truth_mask_path,
                const std::optional<std::string>& detected_mask_path, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&] {
        const Image orig = load_pnm_file(orig_path);
        const Image noisy = load_pnm_file(noisy_path);
        const Image restored = load_pnm_file(restored_path);

        EvalReport report;
        report.d_orig_noisy = image_distance(orig, noisy);
        report.d_orig_restored = image_distance(orig, restored);
        report.delta_improvement_percent = relative_improvement(orig, noisy, restored);

        print_fixed(out, "d_orig_noisy", report.d_orig_noisy);
        print_fixed(out, "d_orig_restored", report.d_orig_restored);
        print_fixed(out, "delta_improvement_percent", report.delta_improvement_percent);

        if (truth_mask_path && detected_mask_path) {
            const DamageMask truth = image_to_mask(load_pnm_file(*truth_mask_path));
            const DamageMask detected = image_to_mask(load_pnm_file(*detected_mask_path));
            const MaskScores scores = mask_scores(truth, detected);
            report.precision = scores.precision;
            report.recall = scores.recall;
            print_fixed(out, "precision", report.precision);
            print_fixed(out, "recall", report.recall);
        }
        return kExitOk;
    });
}

int cmd_bench(const BenchSource& source, const BenchOptions& options, const std::string& csv_path,
              std::ostream& err) {
    return guarded(err, [&] {
        const Image base = source.input_path ? load_pnm_file(*source.input_path)
                                             : generate_synthetic(source.synthetic);
        const std::vector<BenchRow> rows = run_bench(base, options);
        std::ofstream csv(csv_path, std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot open " + csv_path + " for writing");
        write_bench_csv(rows, csv);
        if (!csv) throw std::runtime_error("failed writing " + csv_path);
        return kExitOk;
    });
}

} // namespace modfilter
