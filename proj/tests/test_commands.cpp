#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "modfilter/commands.hpp"
#include "modfilter/metrics.hpp"

using namespace modfilter;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               fs::path("modfilter_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }

    static int& counter() {
        static int n = 0;
        return n;
    }
};

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("cmd_noise: p = 0 copies the image, same seed gives identical bytes") {
    TempDir dir;
    const Image img(10, 10, 1, std::uint8_t{90});
    save_pnm_file(img, dir.file("in.pgm"));

    std::ostringstream err;
    NoiseSpec zero;
    CHECK(cmd_noise(dir.file("in.pgm"), dir.file("out0.pgm"), dir.file("mask0.pgm"), zero, err) ==
          kExitOk);
    CHECK(read_bytes(dir.file("out0.pgm")) == read_bytes(dir.file("in.pgm")));

    NoiseSpec spec;
    spec.p = 0.25;
    spec.seed = 7;
    CHECK(cmd_noise(dir.file("in.pgm"), dir.file("a.pgm"), dir.file("ma.pgm"), spec, err) ==
          kExitOk);
    CHECK(cmd_noise(dir.file("in.pgm"), dir.file("b.pgm"), dir.file("mb.pgm"), spec, err) ==
          kExitOk);
    CHECK(read_bytes(dir.file("a.pgm")) == read_bytes(dir.file("b.pgm")));
    CHECK(read_bytes(dir.file("ma.pgm")) == read_bytes(dir.file("mb.pgm")));
}

TEST_CASE("cmd_noise: mask file flags exactly floor(p*N) pixels") {
    TempDir dir;
    save_pnm_file(Image(100, 100, 1, std::uint8_t{50}), dir.file("in.pgm"));
    NoiseSpec spec;
    spec.p = 0.2;
    std::ostringstream err;
    REQUIRE(cmd_noise(dir.file("in.pgm"), dir.file("out.pgm"), dir.file("mask.pgm"), spec, err) ==
            kExitOk);
    const Image mask = load_pnm_file(dir.file("mask.pgm"));
    std::size_t damaged = 0;
    for (std::uint8_t v : mask.data()) {
        CHECK((v == 0 || v == 255));
        if (v == 255) ++damaged;
    }
    CHECK(damaged == 2000);
}

TEST_CASE("cmd_noise: missing input file") {
    TempDir dir;
    std::ostringstream err;
    CHECK(cmd_noise(dir.file("absent.pgm"), dir.file("x.pgm"), "", {}, err) == kExitIo);
    CHECK(err.str().find("error") != std::string::npos);
}

TEST_CASE("cmd_denoise: flat image is byte-identical, outlier fixture recovers") {
    TempDir dir;
    save_pnm_file(Image(12, 12, 1, std::uint8_t{128}), dir.file("flat.pgm"));
    std::ostringstream err;
    REQUIRE(cmd_denoise(dir.file("flat.pgm"), dir.file("flat_out.pgm"), "", {}, err) == kExitOk);
    CHECK(read_bytes(dir.file("flat_out.pgm")) == read_bytes(dir.file("flat.pgm")));

    Image outlier(16, 16, 1, std::uint8_t{128});
    outlier.set_pixel(8, 8, {10, 10, 10});
    save_pnm_file(outlier, dir.file("noisy.pgm"));
    REQUIRE(cmd_denoise(dir.file("noisy.pgm"), dir.file("restored.pgm"), dir.file("mask.pgm"), {},
                        err) == kExitOk);
    const Image restored = load_pnm_file(dir.file("restored.pgm"));
    CHECK(restored == Image(16, 16, 1, std::uint8_t{128}));
    const Image mask = load_pnm_file(dir.file("mask.pgm"));
    CHECK(mask.value(8, 8, 0) == 255);
}

TEST_CASE("cmd_median: flat identity and missing input") {
    TempDir dir;
    save_pnm_file(Image(9, 7, 3, std::uint8_t{61}), dir.file("in.ppm"));
    std::ostringstream err;
    REQUIRE(cmd_median(dir.file("in.ppm"), dir.file("out.ppm"), err) == kExitOk);
    CHECK(read_bytes(dir.file("out.ppm")) == read_bytes(dir.file("in.ppm")));
    CHECK(cmd_median(dir.file("nope.ppm"), dir.file("out2.ppm"), err) == kExitIo);
}

TEST_CASE("cmd_compare: prints the report") {
    TempDir dir;
    Image orig(8, 8, 1, std::uint8_t{100});
    Image noisy = orig;
    noisy.set_pixel(1, 1, {200, 200, 200});
    save_pnm_file(orig, dir.file("orig.pgm"));
    save_pnm_file(noisy, dir.file("noisy.pgm"));

    std::ostringstream out, err;
    REQUIRE(cmd_compare(dir.file("orig.pgm"), dir.file("noisy.pgm"), dir.file("orig.pgm"),
                        std::nullopt, std::nullopt, out, err) == kExitOk);
    CHECK(out.str().find("delta_improvement_percent = 100.000000") != std::string::npos);
    CHECK(out.str().find("precision") == std::string::npos);

    std::ostringstream out2;
    REQUIRE(cmd_compare(dir.file("orig.pgm"), dir.file("noisy.pgm"), dir.file("noisy.pgm"),
                        std::nullopt, std::nullopt, out2, err) == kExitOk);
    CHECK(out2.str().find("delta_improvement_percent = 0.000000") != std::string::npos);
}

TEST_CASE("cmd_compare: with masks prints precision and recall") {
    TempDir dir;
    Image orig(6, 6, 1, std::uint8_t{100});
    Image noisy = orig;
    noisy.set_pixel(2, 2, {0, 0, 0});
    save_pnm_file(orig, dir.file("orig.pgm"));
    save_pnm_file(noisy, dir.file("noisy.pgm"));

    DamageMask truth(6, 6);
    truth.set(2, 2, true);
    save_pnm_file(mask_to_image(truth), dir.file("truth.pgm"));
    save_pnm_file(mask_to_image(truth), dir.file("detected.pgm"));

    std::ostringstream out, err;
    REQUIRE(cmd_compare(dir.file("orig.pgm"), dir.file("noisy.pgm"), dir.file("orig.pgm"),
                        dir.file("truth.pgm"), dir.file("detected.pgm"), out, err) == kExitOk);
    CHECK(out.str().find("precision = 1.000000") != std::string::npos);
    CHECK(out.str().find("recall = 1.000000") != std::string::npos);
}

TEST_CASE("cmd_bench: writes a schema-conformant CSV") {
    TempDir dir;
    BenchSource source;
    source.synthetic.kind = SyntheticKind::kSolidRect;
    source.synthetic.width = 24;
    source.synthetic.height = 24;

    BenchOptions options;
    options.p_percent = {10, 20};
    options.seeds = {1};

    std::ostringstream err;
    REQUIRE(cmd_bench(source, options, dir.file("bench.csv"), err) == kExitOk);

    std::ifstream csv(dir.file("bench.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == kBenchCsvHeader);
    int lines = 0;
    for (std::string line; std::getline(csv, line);)
        if (!line.empty()) ++lines;
    CHECK(lines == 2 + 2); // 2 data rows + 2 averages
}
