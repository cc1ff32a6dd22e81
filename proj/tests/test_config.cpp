#include <catch2/catch_amalgamated.hpp>

#include "dcf/config.hpp"

using namespace dcf;

TEST_CASE("round trip is lossless at full double precision") {
    RunConfig rc;
    rc.params.lambda = 0.1;  // not exactly representable
    rc.params.c = 1.0 / 3.0;
    rc.params.Omega = std::nextafter(1.0, 2.0);
    rc.state = State{0.1 + 0.2, -1e-17, 3.141592653589793, 6.02e23, 1e-300};
    rc.integrator.rel_tol = 1e-10;
    rc.integrator.abs_tol = 2.2250738585072014e-308;  // DBL_MIN

    const std::string text = to_json(rc).dump(2);
    const RunConfig back = run_config_from_json(Json::parse(text));
    CHECK(back.params.lambda == rc.params.lambda);
    CHECK(back.params.c == rc.params.c);
    CHECK(back.params.Omega == rc.params.Omega);
    CHECK(back.state.q1 == rc.state.q1);
    CHECK(back.state.q2 == rc.state.q2);
    CHECK(back.state.v1 == rc.state.v1);
    CHECK(back.state.v2 == rc.state.v2);
    CHECK(back.state.s == rc.state.s);
    CHECK(back.integrator.rel_tol == rc.integrator.rel_tol);
    CHECK(back.integrator.abs_tol == rc.integrator.abs_tol);
}

TEST_CASE("defaults are applied for missing sections and fields") {
    const RunConfig rc = run_config_from_json(Json::parse(R"({"units":"natural"})"));
    CHECK(rc.params.m == 1.0);
    CHECK(rc.params.k == 1.0);
    CHECK(rc.params.lambda == 0.0);
    CHECK(rc.params.c == 0.25);
    CHECK(rc.integrator.rel_tol == IntegratorConfig{}.rel_tol);

    const RunConfig rc2 =
        run_config_from_json(Json::parse(R"({"params":{"lambda":0.3}})"));
    CHECK(rc2.params.lambda == 0.3);
    CHECK(rc2.params.m == 1.0);
}

TEST_CASE("malformed fields raise ConfigError naming the field") {
    auto expect_error = [](const char* text, const char* needle) {
        try {
            run_config_from_json(Json::parse(text));
            FAIL("expected ConfigError for " << text);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error(R"({"params":{"lambda":"big"}})", "lambda");
    expect_error(R"({"state":{"q1":[1]}})", "q1");
    expect_error(R"({"integrator":{"rel_tol":null}})", "rel_tol");
    expect_error(R"({"units":"SI"})", "units");
    expect_error(R"([1,2,3])", "object");
}

TEST_CASE("semantic validation still runs on parsed values") {
    CHECK_THROWS_AS(run_config_from_json(Json::parse(R"({"params":{"m":-2}})")),
                    ConfigError);
    CHECK_THROWS_AS(
        run_config_from_json(Json::parse(R"({"integrator":{"rel_tol":0}})")),
        ConfigError);
}

TEST_CASE("emitted config carries the units marker") {
    const Json j = to_json(RunConfig{});
    CHECK(j.at("units") == "natural");
    CHECK(j.at("params").contains("lambda"));
    CHECK(j.at("state").contains("v2"));
}
