#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "clocksim/config.hpp"
#include "clocksim/csv.hpp"
#include "clocksim/errors.hpp"

using namespace clocksim;

namespace {

const char* kMinimalFixed = R"(
[units]
c = 10
g = 1
hbar = 1
m = 1

[clock]
levels = [0, 0.1]

[potential]
kind = harmonic
omega = 1

[grid]
x_min = -15
x_max = 15
n = 1024

[evolution]
dt = 1e-3
steps = 1000

[scenario]
kind = fixed_height_clocks
heights = [0, 5]
)";

}  // namespace

TEST_CASE("minimal config parses with defaults filled") {
    const auto cfg = parse_config(kMinimalFixed);
    CHECK(cfg.kind == ScenarioKind::fixed_height_clocks);
    CHECK(cfg.evolution.record_every == 10);
    CHECK(cfg.tolerances.shift == 1e-4);
    CHECK(cfg.clock.amplitudes.size() == 2);
    CHECK(std::abs(cfg.clock.amplitudes[0]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(cfg.sigma > 0.0);  // derived from the trap
    CHECK(cfg.heights[0] == 0.0);
    CHECK(cfg.heights[1] == 5.0);
}

TEST_CASE("unknown keys and sections are rejected with location") {
    try {
        parse_config("[grid]\nbogus = 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("[nonsense]\n"), ParseError);
    CHECK_THROWS_AS(parse_config("orphan = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[grid]\nx_min -15\n"), ParseError);
}

TEST_CASE("guard violations surface as ValidationError") {
    std::string text = kMinimalFixed;
    const auto pos = text.find("levels = [0, 0.1]");
    text.replace(pos, 17, "levels = [0, 20]");
    try {
        parse_config(text);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("ApproximationBreach") != std::string::npos);
    }
}

TEST_CASE("amplitude arity mismatch is a parse error") {
    std::string text = kMinimalFixed;
    const auto pos = text.find("levels = [0, 0.1]");
    text.insert(pos + 17, "\namplitudes = [1,0]");
    try {
        parse_config(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("arity") != std::string::npos);
    }
}

TEST_CASE("config hash ignores formatting but tracks semantics") {
    const auto base = parse_config(kMinimalFixed);
    std::string noisy = kMinimalFixed;
    noisy.insert(0, "# a comment\n\n");
    noisy += "\n; trailing comment\n";
    CHECK(config_hash(parse_config(noisy)) == config_hash(base));

    std::string changed = kMinimalFixed;
    const auto pos = changed.find("heights = [0, 5]");
    changed.replace(pos, 16, "heights = [0, 6]");
    CHECK(config_hash(parse_config(changed)) != config_hash(base));
}

TEST_CASE("constants file parsing") {
    const auto konst = parse_constants_text("[units]\nc = 3\ng = 2\n");
    CHECK(konst.c == 3.0);
    CHECK(konst.g == 2.0);
    CHECK(konst.hbar == 1.0);
    CHECK_THROWS_AS(parse_constants_text("[grid]\nn = 8\n"), ParseError);
}

TEST_CASE("csv reals survive a parse round trip bit-exactly") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(mant(rng), expo(rng));
        const std::string s = format_real(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv layout: 3 samples, 2 levels gives 4 lines and 9 columns") {
    SeriesRecord rec;
    rec.label = "demo";
    for (int i = 0; i < 3; ++i) {
        SeriesSample s;
        s.t = 0.1 * i;
        s.phases = {0.01 * i};
        s.populations = {0.5, 0.5};
        rec.samples.push_back(s);
    }
    std::ostringstream sink;
    emit_series_csv(rec, 2, sink);
    const std::string text = sink.str();

    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 4);

    const std::string header = text.substr(0, text.find('\n'));
    CHECK(header == "t,norm,mean_x,mean_p,purity,visibility,phase_1,level_pop_0,level_pop_1");
    std::size_t commas = 0;
    for (char c : header)
        if (c == ',') ++commas;
    CHECK(commas + 1 == 9);
}

TEST_CASE("empty series emits only the header") {
    SeriesRecord rec;
    rec.label = "empty";
    std::ostringstream sink;
    emit_series_csv(rec, 2, sink);
    const std::string text = sink.str();
    CHECK(text.find('\n') == text.size() - 1);
}
