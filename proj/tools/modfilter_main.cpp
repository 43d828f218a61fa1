#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modfilter/commands.hpp"

namespace {

using namespace modfilter;

// Colors parse as a single gray level ("128") or an "r,g,b" triple.
Rgb parse_color(const std::string& text) {
    Rgb color;
    int fields = std::sscanf(text.c_str(), "%d,%d,%d", &color.r, &color.g, &color.b);
    if (fields == 1) {
        color.g = color.r;
        color.b = color.r;
        fields = 3;
    }
    if (fields != 3) throw CLI::ValidationError("color", "expected GRAY or R,G,B: " + text);
    for (int v : {color.r, color.g, color.b})
        if (v < 0 || v > 255) throw CLI::ValidationError("color", "components must be 0..255");
    return color;
}

void add_color_option(CLI::App* cmd, const std::string& name, Rgb* target,
                      const std::string& desc) {
    cmd->add_option_function<std::string>(
           name, [target](const std::string& text) { *target = parse_color(text); }, desc)
        ->default_str(std::to_string(target->r) + "," + std::to_string(target->g) + "," +
                      std::to_string(target->b));
}

void add_filter_options(CLI::App* cmd, FilterConfig* config) {
    cmd->add_option("--h", config->graph.h, "color-distance scale of the edge weight")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--epsilon", config->epsilon, "detection tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--k", config->k_min_negative,
                    "negative neighbor deltas needed to flag a pixel")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    cmd->add_option("--max-passes", config->max_passes, "restoration pass limit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    const std::map<std::string, GraphScope> scopes{{"window3x3", GraphScope::kWindow3x3},
                                                   {"global", GraphScope::kGlobal}};
    cmd->add_option("--scope", config->scope, "graph scope for detection")
        ->transform(CLI::CheckedTransformer(scopes, CLI::ignore_case))
        ->default_str("window3x3");
    const std::map<std::string, Aggregation> aggregations{{"count", Aggregation::kCount},
                                                          {"all", Aggregation::kAll}};
    cmd->add_option("--aggregation", config->aggregation,
                    "negative-delta rule: count (calibrated) or all (paper-literal)")
        ->transform(CLI::CheckedTransformer(aggregations, CLI::ignore_case))
        ->default_str("count");
}

void add_noise_options(CLI::App* cmd, NoiseSpec* spec) {
    cmd->add_option("--p", spec->p, "fraction of damaged pixels (0..1)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    const std::map<std::string, NoiseMode> modes{{"random_value", NoiseMode::kRandomValue},
                                                 {"salt_pepper", NoiseMode::kSaltPepper}};
    cmd->add_option("--mode", spec->mode, "noise value model")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("random_value");
    cmd->add_option("--seed", spec->seed, "LCG seed")->capture_default_str();
    cmd->add_option("--lcg-a", spec->lcg_a, "LCG multiplier")->capture_default_str();
    cmd->add_option("--lcg-c", spec->lcg_c, "LCG increment")->capture_default_str();
}

void add_synthetic_options(CLI::App* cmd, SyntheticSpec* spec) {
    cmd->add_option("--width", spec->width, "synthetic image width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--height", spec->height, "synthetic image height")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--channels", spec->channels, "1 = grayscale, 3 = color")
        ->check(CLI::IsMember({1, 3}))
        ->capture_default_str();
    add_color_option(cmd, "--background", &spec->background, "background / left-half fill");
    add_color_option(cmd, "--foreground", &spec->foreground, "rectangle fill (solid_rect)");
    add_color_option(cmd, "--gradient-from", &spec->gradient_from, "gradient start color");
    add_color_option(cmd, "--gradient-to", &spec->gradient_to, "gradient end color");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impulse-noise detection and repair via modularity merge tests on the "
                 "8-connected pixel graph, with a median-filter baseline and a noise-sweep "
                 "benchmark harness"};
    app.require_subcommand(1);

    // noise
    std::string noise_in, noise_out, noise_mask;
    NoiseSpec noise_spec;
    CLI::App* noise = app.add_subcommand("noise", "inject reproducible impulse noise");
    noise->add_option("input", noise_in, "input PNM (P5/P6)")->required();
    noise->add_option("output", noise_out, "noised PNM path")->required();
    noise->add_option("--mask", noise_mask, "ground-truth mask path (P5, 255=damaged)");
    add_noise_options(noise, &noise_spec);

    // denoise
    std::string den_in, den_out, den_mask;
    FilterConfig den_config;
    CLI::App* den = app.add_subcommand("denoise", "detect and restore damaged pixels");
    den->add_option("input", den_in, "input PNM (P5/P6)")->required();
    den->add_option("output", den_out, "restored PNM path")->required();
    den->add_option("--mask-out", den_mask, "detected mask path (P5, 255=damaged)");
    add_filter_options(den, &den_config);

    // median
    std::string med_in, med_out;
    CLI::App* med = app.add_subcommand("median", "3x3 median filter baseline");
    med->add_option("input", med_in, "input PNM (P5/P6)")->required();
    med->add_option("output", med_out, "filtered PNM path")->required();

    // compare
    std::string cmp_orig, cmp_noisy, cmp_restored;
    std::string cmp_truth, cmp_detected;
    CLI::App* cmp = app.add_subcommand("compare", "distances and relative improvement");
    cmp->add_option("original", cmp_orig, "original PNM")->required();
    cmp->add_option("noisy", cmp_noisy, "noised PNM")->required();
    cmp->add_option("restored", cmp_restored, "restored PNM")->required();
    cmp->add_option("--truth-mask", cmp_truth, "ground-truth mask PNM");
    cmp->add_option("--detected-mask", cmp_detected, "detected mask PNM");

    // bench
    BenchSource source;
    std::string bench_input;
    std::string bench_kind = "solid_plus_gradient";
    BenchOptions options;
    std::string csv_path;
    CLI::App* bench = app.add_subcommand("bench", "noise sweep over both filters, CSV output");
    bench->add_option("--input", bench_input, "base image PNM (instead of a synthetic)");
    bench->add_option("--synthetic", bench_kind, "synthetic kind: solid_rect|solid_plus_gradient")
        ->check(CLI::IsMember({"solid_rect", "solid_plus_gradient"}))
        ->capture_default_str();
    add_synthetic_options(bench, &source.synthetic);
    bench->add_option("--p-list", options.p_percent, "noise percentages, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--seeds", options.seeds, "LCG seeds, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    const std::map<std::string, NoiseMode> modes{{"random_value", NoiseMode::kRandomValue},
                                                 {"salt_pepper", NoiseMode::kSaltPepper}};
    bench->add_option("--mode", options.noise_mode, "noise value model")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("random_value");
    add_filter_options(bench, &options.filter);
    bench->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return modfilter::kExitUsage;
    }

    if (*noise) return cmd_noise(noise_in, noise_out, noise_mask, noise_spec, std::cerr);
    if (*den) return cmd_denoise(den_in, den_out, den_mask, den_config, std::cerr);
    if (*med) return cmd_median(med_in, med_out, std::cerr);
    if (*cmp) {
        std::optional<std::string> truth =
            cmp_truth.empty() ? std::nullopt : std::optional(cmp_truth);
        std::optional<std::string> detected =
            cmp_detected.empty() ? std::nullopt : std::optional(cmp_detected);
        return cmd_compare(cmp_orig, cmp_noisy, cmp_restored, truth, detected, std::cout,
                           std::cerr);
    }
    if (*bench) {
        if (!bench_input.empty()) source.input_path = bench_input;
        source.synthetic.kind = bench_kind == "solid_rect" ? SyntheticKind::kSolidRect
                                                           : SyntheticKind::kSolidPlusGradient;
        return cmd_bench(source, options, csv_path, std::cerr);
    }
    return modfilter::kExitUsage;
}
