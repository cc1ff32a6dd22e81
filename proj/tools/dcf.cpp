#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcf/dcf.hpp"

namespace {

using dcf::Json;

// shortest round-trip decimal
std::string fmt(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        f << content;
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        atomic_write(out, content);
}

dcf::RunConfig load_config(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream f(path);
    if (!f) throw dcf::ConfigError("cannot read config file " + path);
    Json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw dcf::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return dcf::run_config_from_json(j);
}

dcf::Frame parse_frame(const std::string& s) {
    using dcf::Frame;
    for (Frame f : {Frame::DampedKepler, Frame::TransformedKepler, Frame::SexticOsc,
                    Frame::DampedHO, Frame::ShiftedHO, Frame::BohlinKepler})
        if (s == dcf::frame_name(f)) return f;
    throw dcf::ConfigError("unknown system '" + s + "'");
}

Json report_json(const dcf::MapReport& r) {
    return Json{{"pipeline", r.pipeline},
                {"max_position_deviation", r.max_position_deviation},
                {"max_conserved_drift", r.max_conserved_drift},
                {"n_samples", r.n_samples},
                {"tolerance", r.tolerance},
                {"pass", r.pass}};
}

int cmd_simulate(const std::string& system, const std::string& config_path,
                 double span0, double span1, const std::string& out) {
    const dcf::Frame frame = parse_frame(system);
    dcf::RunConfig rc = load_config(config_path);
    dcf::FrameContext ctx;
    if (frame == dcf::Frame::SexticOsc)
        ctx.cal_E = dcf::cal_E_from_sextic(rc.state, rc.params);

    auto res = dcf::integrate(frame, rc.params, rc.state, span0, span1, rc.integrator, ctx);

    std::ostringstream csv;
    csv << "s,q1,q2,v1,v2,conserved1,conserved2\n";
    for (std::size_t i = 0; i < res.trajectory.size(); ++i) {
        const auto& st = res.trajectory.samples[i];
        const auto& d = res.trajectory.diagnostics[i];
        csv << fmt(st.s) << ',' << fmt(st.q1) << ',' << fmt(st.q2) << ',' << fmt(st.v1)
            << ',' << fmt(st.v2) << ',' << fmt(d[0]) << ',' << fmt(d[1]) << '\n';
    }
    Json stats{{"n_steps", res.n_steps},
               {"n_rejected", res.n_rejected},
               {"status", res.status == dcf::IntegrationStatus::Ok ? "ok"
                          : res.status == dcf::IntegrationStatus::EventHit ? "event"
                                                                          : "step-collapse"}};
    csv << "# stats: " << stats.dump() << '\n';
    csv << "# config: " << dcf::to_json(rc).dump() << '\n';
    emit(out, csv.str());

    if (res.status != dcf::IntegrationStatus::Ok) {
        Json ev{{"event", res.status == dcf::IntegrationStatus::EventHit ? "r_min"
                                                                        : "step_collapse"},
                {"time", res.event_time},
                {"system", system}};
        std::cerr << ev.dump() << '\n';
        return 3;
    }
    return 0;
}

int cmd_mapcheck(const std::string& pipeline, const std::string& config_path, double tol,
                 double span, const std::string& out) {
    dcf::RunConfig rc = load_config(config_path);
    dcf::MapReport r;
    if (pipeline == "point-kepler")
        r = dcf::run_point_kepler(rc.params, rc.state, span, rc.integrator, tol);
    else if (pipeline == "levi-civita")
        r = dcf::run_levi_civita(rc.params, rc.state, span, rc.integrator, tol);
    else if (pipeline == "point-ho")
        r = dcf::run_point_ho(rc.params, rc.state, span, rc.integrator, tol);
    else if (pipeline == "bohlin")
        r = dcf::run_bohlin(rc.params, rc.state, span, rc.integrator, tol);
    else if (pipeline == "full-kepler-chain")
        r = dcf::run_full_kepler_chain(rc.params, rc.state, span, rc.integrator, tol);
    else if (pipeline == "full-ho-chain")
        r = dcf::run_full_ho_chain(rc.params, rc.state, span, rc.integrator, tol);
    else
        throw dcf::ConfigError("unknown pipeline '" + pipeline + "'");

    Json j = report_json(r);
    j["config"] = dcf::to_json(rc);
    emit(out, j.dump(2) + "\n");
    return r.pass ? 0 : 1;
}

int cmd_spectrum(const std::string& side, long nmax, long lmax, const std::string& method,
                 const std::string& config_path, const std::string& out) {
    dcf::RunConfig rc = load_config(config_path);
    const dcf::PhysParams& p = rc.params;
    const double omega0 = p.Omega;  // oscillator frequency of the quantum tower
    const double alpha = p.m * omega0 / p.hbar;
    const double beta = 0.5 * alpha;

    Json rows = Json::array();
    Json rejected = Json::array();
    for (long n = 0; n <= nmax; ++n) {
        for (long l = -lmax; l <= lmax; ++l) {
            Json row{{"n", n}, {"l", l}};
            try {
                if (side == "oscillator") {
                    row["E0"] = dcf::spectra::osc_sextic_E0(n, l, omega0, p.hbar);
                    if (method == "paper" || method == "both")
                        row["E1_paper"] = dcf::spectra::osc_sextic_E1_paper(n, l, p, alpha);
                    if (method == "oracle" || method == "both")
                        row["E1_oracle"] = dcf::spectra::osc_sextic_E1_oracle(n, l, p, alpha);
                } else if (side == "shifted-ho") {
                    row["E0"] = dcf::spectra::shifted_ho_E(n, l, p.omega_tilde(), p.hbar);
                } else if (side == "mapped-hatom") {
                    auto mp = dcf::spectra::map_quantum_numbers(n, l);
                    if (!mp) {
                        rejected.push_back(Json{{"n_rho", n},
                                                {"l", l},
                                                {"reason", "parity-odd"}});
                        continue;
                    }
                    row["n_r"] = mp->n_r;
                    row["l_tilde"] = mp->l_tilde;
                    row["E0"] = dcf::spectra::hatom_like_E0(mp->n_r, mp->l_tilde, p.m,
                                                            p.k, p.hbar);
                    if (method == "paper" || method == "both")
                        row["E1_paper"] =
                            dcf::spectra::hatom_like_E1_paper(mp->n_r, mp->l_tilde, p, beta);
                    if (method == "oracle" || method == "both")
                        row["E1_oracle"] =
                            dcf::spectra::hatom_like_E1_oracle(mp->n_r, mp->l_tilde, p, beta);
                } else {
                    throw dcf::ConfigError("unknown side '" + side + "'");
                }
                if (method == "both" && row.contains("E1_paper") &&
                    row.contains("E1_oracle")) {
                    const double eo = row["E1_oracle"].get<double>();
                    if (eo != 0.0)
                        row["ratio"] = row["E1_paper"].get<double>() / eo;
                }
            } catch (const dcf::NonCancellableSingularity& e) {
                row["error"] = e.what();
            }
            rows.push_back(row);
        }
    }
    Json j{{"side", side},
           {"method", method},
           {"rows", rows},
           {"rejected", rejected},
           {"config", dcf::to_json(rc)}};
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_oracle(const std::string& check, const std::string& config_path, unsigned seed,
               const std::string& out) {
    dcf::RunConfig rc = load_config(config_path);
    dcf::PhysParams p = rc.params;
    Json j{{"check", check}};
    if (check == "me") {
        double max_asym = 0.0, max_band = 0.0, max_route_diff = 0.0;
        for (long n = 0; n <= 8; ++n)
            for (long np = 0; np <= 8; ++np) {
                auto me = dcf::oracle::me_rho6(n, np, 0, 1.0);
                auto me_t = dcf::oracle::me_rho6(np, n, 0, 1.0);
                max_asym = std::max(max_asym, std::abs(me.closed_form - me_t.closed_form));
                max_route_diff =
                    std::max(max_route_diff, std::abs(me.closed_form - me.quadrature));
                if (std::labs(n - np) > 3)
                    max_band = std::max(max_band, std::abs(me.closed_form));
            }
        j["max_asymmetry"] = max_asym;
        j["max_band_violation"] = max_band;
        j["max_route_difference"] = max_route_diff;
    } else if (check == "diag") {
        auto pot = dcf::oracle::sextic_oscillator_potential(p, p.Omega);
        double worst = 0.0;
        for (long l = 0; l <= 1; ++l) {
            auto gd = dcf::oracle::grid_diag(pot, p, l, 3);
            for (int i = 0; i < 3; ++i)
                worst = std::max(worst,
                                 std::abs(gd.eigenvalues[i] -
                                          dcf::spectra::osc_sextic_E0(i, l, p.Omega, p.hbar)));
        }
        auto hp = dcf::oracle::hydrogen_potential(p, p.k);
        double worst_h = 0.0;
        for (long l = 0; l <= 1; ++l) {
            auto gd = dcf::oracle::grid_diag(hp, p, l, 3, 6000);
            for (int i = 0; i < 3; ++i)
                worst_h = std::max(worst_h,
                                   std::abs(gd.eigenvalues[i] -
                                            dcf::spectra::hatom_like_E0(i, l, p.m, p.k,
                                                                        p.hbar)));
        }
        j["max_oscillator_error"] = worst;
        j["max_hydrogen_error"] = worst_h;
    } else if (check == "residual") {
        const double alpha = p.m * p.Omega / p.hbar;
        auto pot = dcf::oracle::sextic_oscillator_potential(p, p.Omega);
        auto radial = [&](double rho) {
            return dcf::wavefn::psi0_osc_radial(0, 0, alpha, rho);
        };
        j["oscillator_residual"] = dcf::oracle::schrodinger_residual(
            radial, pot, p, 0, dcf::spectra::osc_sextic_E0(0, 0, p.Omega, p.hbar));
        const double beta = 2.0 * p.m * p.k / (p.hbar * p.hbar);  // ground-state decay
        auto hpot = dcf::oracle::hydrogen_potential(p, p.k, 30.0);
        hpot.rho_min = 1e-4;
        auto hradial = [&](double r) {
            return dcf::wavefn::psi_hatom_radial(0, 0, beta, r);
        };
        j["hydrogen_residual"] = dcf::oracle::schrodinger_residual(
            hradial, hpot, p, 0, dcf::spectra::hatom_like_E0(0, 0, p.m, p.k, p.hbar));
    } else if (check == "canonical") {
        dcf::PhysParams pc = p;
        if (pc.lambda == 0.0) pc.lambda = 0.4;
        dcf::State ic{1.0, 0.0, 0.0, std::sqrt(1.0 - 0.25 * pc.lambda * pc.lambda), 0.0};
        dcf::IntegratorConfig cfg;
        auto res = dcf::integrate(dcf::Frame::DampedKepler, pc, ic, 0.0, 10.0 * M_PI, cfg);
        j["max_violation_trajectory"] = dcf::oracle::canonical_check(res.trajectory);
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            double x1 = u(rng), x2 = u(rng);
            if (std::hypot(x1, x2) < 0.1) x1 += 0.5;
            worst = std::max(worst, dcf::oracle::canonical_identity_violation(
                                        x1, x2, u(rng), u(rng), u(rng), pc));
        }
        j["max_violation_random"] = worst;
        j["seed"] = seed;
    } else if (check == "chainrule") {
        const double lam = (p.lambda == 0.0) ? 0.4 : p.lambda;
        auto f = [](std::complex<double> X1, std::complex<double> X2,
                    std::complex<double> t) {
            return std::exp(-0.5 * ((X1 - t) * (X1 - t) + X2 * X2)) + 0.3 * X1 * t;
        };
        std::vector<std::array<double, 3>> pts;
        for (double x : {-1.0, 0.3, 1.2})
            for (double y : {-0.7, 0.5})
                for (double t : {0.0, 0.8}) pts.push_back({x, y, t});
        auto rep = dcf::oracle::chainrule_check(f, lam, pts);
        j["printed_relation_err"] = rep.printed_relation_err;
        j["weighted_relation_err"] = rep.weighted_relation_err;
    } else {
        throw dcf::ConfigError("unknown check '" + check + "'");
    }
    emit(out, j.dump(2) + "\n");
    return 0;
}

int cmd_wavefn(const std::string& side, long n, long l, const std::string& grid,
               const std::string& variant, const std::string& config_path,
               const std::string& out) {
    dcf::RunConfig rc = load_config(config_path);
    const dcf::PhysParams& p = rc.params;
    const double alpha = p.m * p.Omega / p.hbar;
    const double beta = 0.5 * alpha;

    double r0, r1, t0, t1;
    int N, M;
    if (std::sscanf(grid.c_str(), "%lf,%lf,%d,%lf,%lf,%d", &r0, &r1, &N, &t0, &t1, &M) != 6)
        throw dcf::ConfigError("grid must be r0,r1,N,t0,t1,M");
    if (N < 1 || M < 1 || r0 < 0.0 || r1 <= r0)
        throw dcf::ConfigError("invalid grid ranges");

    std::ostringstream csv;
    csv << "coord1,coord2,re,im\n";
    for (int i = 0; i < N; ++i) {
        const double r = (N == 1) ? r0 : r0 + (r1 - r0) * i / (N - 1);
        for (int jm = 0; jm < M; ++jm) {
            const double th = (M == 1) ? t0 : t0 + (t1 - t0) * jm / (M - 1);
            std::complex<double> v;
            if (side == "oscillator") {
                if (variant == "normalized")
                    v = dcf::wavefn::psi0_osc(n, l, alpha, r, th, true);
                else
                    v = dcf::wavefn::psi0_osc(n, l, alpha, r, th, false);
                if (variant == "gauge") {
                    v += dcf::wavefn::psi1_osc(n, l, p, alpha, p.Omega, r, th);
                    v = dcf::wavefn::gauge_restore(v, r * r, p.lambda, p.m, p.hbar);
                }
            } else if (side == "mapped-hatom") {
                if (variant == "normalized")
                    v = dcf::wavefn::psi_hatom(n, l, beta, r, th, true);
                else
                    v = dcf::wavefn::psi_hatom(n, l, beta, r, th, false);
                if (variant == "gauge") {
                    v += dcf::wavefn::psi1_hatom(n, l, p, beta, r, th);
                    v = dcf::wavefn::gauge_restore(v, r, p.lambda, p.m, p.hbar);
                }
            } else {
                throw dcf::ConfigError("unknown side '" + side + "'");
            }
            csv << fmt(r) << ',' << fmt(th) << ',' << fmt(v.real()) << ',' << fmt(v.imag())
                << '\n';
        }
    }
    csv << "# config: " << dcf::to_json(rc).dump() << '\n';
    emit(out, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"damped central forces in 2d: simulation, duality maps, spectra"};
    app.require_subcommand(1);

    std::string config_path, out, system_name, pipeline, side = "oscillator";
    std::string method = "both", check, variant = "raw", grid = "0,6,50,0,6.283185307179586,8";
    double span0 = 0.0, span1 = 10.0, tol = 1e-6, span = 10.0;
    long n = 0, l = 0, nmax = 2, lmax = 2;
    unsigned seed = 12345;

    auto* sim = app.add_subcommand("simulate", "integrate one frame, emit trajectory CSV");
    sim->add_option("--system", system_name)->required();
    sim->add_option("--config", config_path);
    sim->add_option("--span", [&span0, &span1](const std::vector<std::string>& v) {
        return std::sscanf(v[0].c_str(), "%lf,%lf", &span0, &span1) == 2;
    })->description("a,b time span");
    sim->add_option("--out", out);

    auto* mc = app.add_subcommand("mapcheck", "run a duality pipeline equivalence check");
    mc->add_option("--pipeline", pipeline)->required();
    mc->add_option("--config", config_path);
    mc->add_option("--tol", tol);
    mc->add_option("--span", span);
    mc->add_option("--out", out);

    auto* sp = app.add_subcommand("spectrum", "emit spectrum table JSON");
    sp->add_option("--side", side);
    sp->add_option("--nmax", nmax);
    sp->add_option("--lmax", lmax);
    sp->add_option("--method", method);
    sp->add_option("--config", config_path);
    sp->add_option("--out", out);

    auto* orc = app.add_subcommand("oracle", "run an independent validator");
    orc->add_option("--check", check)->required();
    orc->add_option("--config", config_path);
    orc->add_option("--seed", seed);
    orc->add_option("--out", out);

    auto* wf = app.add_subcommand("wavefn", "evaluate eigenfunctions on a grid");
    wf->add_option("--side", side);
    wf->add_option("--n", n);
    wf->add_option("--l", l);
    wf->add_option("--grid", grid);
    wf->add_option("--variant", variant);
    wf->add_option("--config", config_path);
    wf->add_option("--out", out);

    auto* pc = app.add_subcommand("print-config", "dump the default config JSON");
    pc->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(system_name, config_path, span0, span1, out);
        if (mc->parsed()) return cmd_mapcheck(pipeline, config_path, tol, span, out);
        if (sp->parsed()) return cmd_spectrum(side, nmax, lmax, method, config_path, out);
        if (orc->parsed()) return cmd_oracle(check, config_path, seed, out);
        if (wf->parsed()) return cmd_wavefn(side, n, l, grid, variant, config_path, out);
        if (pc->parsed()) {
            emit(out, dcf::to_json(dcf::RunConfig{}).dump(2) + "\n");
            return 0;
        }
    } catch (const dcf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
