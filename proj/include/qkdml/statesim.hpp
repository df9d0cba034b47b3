// Exact small-register quantum simulation in two representations:
// pure statevectors for noiseless circuits, density matrices for noisy ones.
//
// Basis convention: qubit 0 is the most significant bit of the basis index,
// i.e. index m = m_{n-1}*2^0 + ... + m_0*2^{n-1}.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qkdml {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 12;

// Bit value of `qubit` inside basis index `index` of an n-qubit register.
inline int bit_of(std::size_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - 1 - qubit)) & 1u);
}

// 2x2 complex matrix, row-major.
using Mat2 = std::array<cplx, 4>;

enum class GateKind { H, RX, RY, RZ, Phase, RZZ, CNOT, U3 };

std::string to_string(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<double, 3> angles{};   // U3 uses (omega, phi, lambda)
    std::array<int, 2> targets{};
    int arity = 1;

    static Gate h(int q) { return {GateKind::H, {}, {q, 0}, 1}; }
    static Gate rx(int q, double theta) { return {GateKind::RX, {theta}, {q, 0}, 1}; }
    static Gate ry(int q, double theta) { return {GateKind::RY, {theta}, {q, 0}, 1}; }
    static Gate rz(int q, double theta) { return {GateKind::RZ, {theta}, {q, 0}, 1}; }
    static Gate phase(int q, double theta) { return {GateKind::Phase, {theta}, {q, 0}, 1}; }
    static Gate rzz(int q0, int q1, double theta) { return {GateKind::RZZ, {theta}, {q0, q1}, 2}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, {}, {control, target}, 2}; }
    static Gate u3(int q, double omega, double phi, double lambda) {
        return {GateKind::U3, {omega, phi, lambda}, {q, 0}, 1};
    }

    bool is_two_qubit() const { return arity == 2; }

    // Dense 2x2 realization; only valid for single-qubit kinds.
    Mat2 matrix2() const;

    // Inverse as a gate of the same family.
    Gate dagger() const;
};

enum class ChannelLabel { BFC, ADC, PDC, AP, DPC };

std::string to_string(ChannelLabel label);

// Operator-sum (Kraus) representation of a single-qubit channel.
struct KrausChannel {
    ChannelLabel label;
    std::vector<Mat2> operators;

    // Max deviation of sum_s M_s^dag M_s from the identity.
    double cptp_error() const;
};

// A channel applied to one qubit of a register.
struct ChannelApp {
    KrausChannel channel;
    int qubit;
};

using CircuitOp = std::variant<Gate, ChannelApp>;

// Ordered gate list with optional interleaved noise channels.
struct CircuitSpec {
    int n = 0;
    std::vector<CircuitOp> ops;
    bool instrumented = false;

    void push(const Gate& g) { ops.push_back(g); }
    void push(const ChannelApp& c) { ops.push_back(c); }

    std::size_t gate_count() const;
    std::size_t channel_count() const;
    bool has_channels() const { return channel_count() > 0; }
    bool has_two_qubit_gates() const;
};

// Reversed circuit with every gate replaced by its inverse.
// Rejects circuits that contain channels (channels are not invertible).
CircuitSpec inverse_circuit(const CircuitSpec& c);

struct PureState {
    int n = 0;
    std::vector<cplx> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

struct MixedState {
    int n = 0;
    std::vector<cplx> rho;   // dim x dim, row-major

    std::size_t dim() const { return std::size_t{1} << n; }
    cplx& at(std::size_t r, std::size_t c) { return rho[r * dim() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return rho[r * dim() + c]; }
};

PureState new_zero_state(int n);
MixedState new_zero_density(int n);
MixedState to_density(const PureState& psi);

void apply_gate(PureState& state, const Gate& g);
void apply_gate(MixedState& state, const Gate& g);

// rho <- sum_s (M_s x I) rho (M_s x I)^dag on the given qubit.
// Validates CPTP; renormalizes the trace if it drifted by less than 1e-8,
// errors on larger drift.
void apply_channel(MixedState& state, const KrausChannel& channel, int qubit);

double probability_all_zero(const PureState& state);
double probability_all_zero(const MixedState& state);

double expectation_z(const PureState& state, int qubit);
double expectation_z(const MixedState& state, int qubit);

cplx inner_product(const PureState& a, const PureState& b);

// |sum_m |amp_m|^2 - 1|
double norm_error(const PureState& state);
// |tr(rho) - 1|
double trace_error(const MixedState& state);

// Run a channel-free circuit on |0...0>.
PureState simulate_pure(const CircuitSpec& c);
// Run any circuit on |0...0><0...0|.
MixedState simulate_mixed(const CircuitSpec& c);

}  // namespace qkdml
