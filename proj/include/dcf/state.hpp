#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dcf/errors.hpp"
#include "dcf/params.hpp"

namespace dcf {

// Which of the six dynamical systems a state obeys, and in which time variable.
enum class Frame {
    DampedKepler,       // physical time t, explicit damping + decaying coupling
    TransformedKepler,  // physical time t, Kepler + inverted harmonic
    SexticOsc,          // fictitious time tau, oscillator + inverted sextic
    DampedHO,           // time tau, damped harmonic motion
    ShiftedHO,          // time tau, frequency Omega_tilde
    BohlinKepler,       // physical time t, plain Kepler with k = E/4
};

inline const char* frame_name(Frame f) {
    switch (f) {
        case Frame::DampedKepler: return "damped-kepler";
        case Frame::TransformedKepler: return "transformed-kepler";
        case Frame::SexticOsc: return "sextic-osc";
        case Frame::DampedHO: return "damped-ho";
        case Frame::ShiftedHO: return "shifted-ho";
        case Frame::BohlinKepler: return "bohlin-kepler";
    }
    return "?";
}

// Kepler-type frames have a 1/r^2 force and cannot reach the origin.
inline bool is_kepler_type(Frame f) {
    return f == Frame::DampedKepler || f == Frame::TransformedKepler ||
           f == Frame::BohlinKepler;
}

// Planar phase-space sample; s is the value of the frame's time variable.
struct State {
    double q1 = 0.0, q2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double s = 0.0;

    double r() const { return std::hypot(q1, q2); }
    std::complex<double> pos() const { return {q1, q2}; }
    std::complex<double> vel() const { return {v1, v2}; }
};

inline State make_state(std::complex<double> pos, std::complex<double> vel, double s) {
    return State{pos.real(), pos.imag(), vel.real(), vel.imag(), s};
}

struct Trajectory {
    Frame frame = Frame::TransformedKepler;
    PhysParams params;
    std::vector<State> samples;
    // Per-sample conserved-quantity pair (frame appropriate, e.g. {calE, L}).
    std::vector<std::array<double, 2>> diagnostics;

    std::size_t size() const { return samples.size(); }
    const State& front() const { return samples.front(); }
    const State& back() const { return samples.back(); }
};

// Outcome of a pipeline equivalence check.
struct MapReport {
    std::string pipeline;
    double max_position_deviation = 0.0;
    double max_conserved_drift = 0.0;
    std::size_t n_samples = 0;
    double tolerance = 0.0;
    bool pass = false;
};

}  // namespace dcf
