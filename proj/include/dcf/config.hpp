#pragma once

#include <json.hpp>

#include <string>

#include "dcf/dynamics.hpp"
#include "dcf/errors.hpp"
#include "dcf/params.hpp"
#include "dcf/state.hpp"

namespace dcf {

using Json = nlohmann::json;

// Config schema: { "units": "natural", "params": {...}, "state": {...},
// "integrator": {...} }. Doubles round-trip losslessly (nlohmann emits
// shortest-round-trip decimals).

inline Json to_json(const PhysParams& p) {
    return Json{{"m", p.m},     {"k", p.k},         {"lambda", p.lambda},
                {"hbar", p.hbar}, {"Omega", p.Omega}, {"c", p.c},
                {"gamma", p.gamma}};
}

inline Json to_json(const State& st) {
    return Json{{"q1", st.q1}, {"q2", st.q2}, {"v1", st.v1}, {"v2", st.v2},
                {"s", st.s}};
}

inline Json to_json(const IntegratorConfig& c) {
    Json j{{"rel_tol", c.rel_tol},
           {"abs_tol", c.abs_tol},
           {"initial_step", c.initial_step},
           {"r_min_event", c.r_min_event},
           {"dense_output", c.dense_output}};
    if (std::isfinite(c.max_step)) j["max_step"] = c.max_step;
    return j;
}

namespace detail {

inline double get_num(const Json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw ConfigError(std::string("field '") + key + "' must be a number");
    return j.at(key).get<double>();
}

}  // namespace detail

inline PhysParams params_from_json(const Json& j) {
    PhysParams p;
    p.m = detail::get_num(j, "m", p.m);
    p.k = detail::get_num(j, "k", p.k);
    p.lambda = detail::get_num(j, "lambda", p.lambda);
    p.hbar = detail::get_num(j, "hbar", p.hbar);
    p.Omega = detail::get_num(j, "Omega", p.Omega);
    p.c = detail::get_num(j, "c", p.c);
    p.gamma = detail::get_num(j, "gamma", p.gamma);
    p.validate();
    return p;
}

inline State state_from_json(const Json& j) {
    State st;
    st.q1 = detail::get_num(j, "q1", 0.0);
    st.q2 = detail::get_num(j, "q2", 0.0);
    st.v1 = detail::get_num(j, "v1", 0.0);
    st.v2 = detail::get_num(j, "v2", 0.0);
    st.s = detail::get_num(j, "s", 0.0);
    return st;
}

inline IntegratorConfig integrator_from_json(const Json& j) {
    IntegratorConfig c;
    c.rel_tol = detail::get_num(j, "rel_tol", c.rel_tol);
    c.abs_tol = detail::get_num(j, "abs_tol", c.abs_tol);
    c.max_step = detail::get_num(j, "max_step", c.max_step);
    c.initial_step = detail::get_num(j, "initial_step", c.initial_step);
    c.r_min_event = detail::get_num(j, "r_min_event", c.r_min_event);
    if (j.contains("dense_output")) c.dense_output = j.at("dense_output").get<bool>();
    c.validate();
    return c;
}

struct RunConfig {
    PhysParams params;
    State state;
    IntegratorConfig integrator;
};

inline Json to_json(const RunConfig& rc) {
    return Json{{"units", "natural"},
                {"params", to_json(rc.params)},
                {"state", to_json(rc.state)},
                {"integrator", to_json(rc.integrator)}};
}

inline RunConfig run_config_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    if (j.contains("units") && j.at("units") != "natural")
        throw ConfigError("field 'units' must be \"natural\"");
    RunConfig rc;
    if (j.contains("params")) rc.params = params_from_json(j.at("params"));
    if (j.contains("state")) rc.state = state_from_json(j.at("state"));
    if (j.contains("integrator")) rc.integrator = integrator_from_json(j.at("integrator"));
    return rc;
}

}  // namespace dcf
