#pragma once

#include "ciqw/spectral.hpp"

#include <complex>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace ciqw {

using Complex = std::complex<double>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Complex amplitudes over the vertex space (ancilla_count == 0, dimension
/// n) or the joint ancilla⊗vertex space (dimension 2^s·n). Joint index is
/// a·n + v with a the ancilla basis integer, bit i of a being control
/// qubit i.
class StateVector {
public:
    StateVector() = default;

    static StateVector vertex_basis(int n, int v);
    /// |π⟩, the uniform superposition over n vertices.
    static StateVector uniform(int n);
    /// |0^s⟩ ⊗ |vertex⟩.
    static StateVector with_ancilla(const StateVector& vertex, int s);
    /// A bare ancilla register (n_vertices = 1). Amplitude count must be a
    /// power of two.
    static StateVector register_state(std::vector<Complex> amps);
    static StateVector from_amplitudes(int s, int n, std::vector<Complex> amps);

    int n_vertices() const { return n_vertices_; }
    int ancilla_count() const { return ancilla_count_; }
    int ancilla_dim() const { return 1 << ancilla_count_; }
    std::size_t dimension() const { return amps_.size(); }

    Complex& amp(int a, int v) { return amps_[static_cast<std::size_t>(a) * n_vertices_ + v]; }
    Complex amp(int a, int v) const { return amps_[static_cast<std::size_t>(a) * n_vertices_ + v]; }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm() const;
    /// Norm of the component whose ancilla register differs from |0^s⟩.
    double ancilla_residue() const;
    /// Marginal probability per vertex (sums ancilla branches).
    std::vector<double> vertex_distribution() const;
    /// The a = 0 block as a vertex-space state (not renormalized).
    StateVector vertex_register() const;

private:
    int n_vertices_ = 0;
    int ancilla_count_ = 0;
    std::vector<Complex> amps_;
};

/// Per-run cost tallies. controlled_evolve adds s walk calls and
/// (2^s - 1)·|t| evolution time.
struct WalkCounters {
    long long walk_calls = 0;
    double evolution_time = 0.0;
};

/// Phase-estimation register sizing: s is the smallest integer with
/// 2^s > λ_N, and t0 = 2π/2^s so that e^{i t0 λ} = e^{2πi λ/2^s}.
struct PhaseEstimationConfig {
    int s = 0;
    double t0 = 0.0;

    static PhaseEstimationConfig for_max_eigenvalue(double lambda_max);
};

/// CTQW e^{+iLt} applied through the eigendecomposition. Vertex layout only.
void evolve(StateVector& state, const Spectrum& sp, double t);

/// Λ_s(e^{iLt}) = Σ_l |l⟩⟨l| ⊗ e^{ilLt}, realized as the s controlled
/// blocks c-e^{iLt·2^j} for j = 0..s-1.
void controlled_evolve(StateVector& joint, const Spectrum& sp, double t,
                       WalkCounters* counters = nullptr);

/// QFT over the ancilla register: QFT|λ⟩ = 2^{-s/2} Σ_j e^{2πi jλ/2^s}|j⟩.
void qft(StateVector& state, bool inverse);

/// e^{iβ|π⟩⟨π|} = I - (1 - e^{iβ})|π⟩⟨π| applied directly.
void reflection_exact(StateVector& state, double beta);

/// Phase-estimation circuit for e^{iβ|π⟩⟨π|}: H^{⊗s}, controlled walk for
/// t0, inverse QFT, phase e^{iβ} on the all-zeros ancilla pattern, then the
/// mirror half. Requires the ancilla in |0^s⟩; restores it exactly when the
/// spectrum is integral (callers certify; if bypassed the leftover ancilla
/// weight shows up in ancilla_residue()).
void reflection_circuit(StateVector& joint, const Spectrum& sp,
                        const PhaseEstimationConfig& cfg, double beta,
                        WalkCounters* counters = nullptr);

struct HadamardAll {};
struct QftBlock {};
struct InverseQftBlock {};
struct ZeroControlledPhase {
    double beta = 0.0;
};
struct ExplicitBlock {
    std::vector<Complex> matrix; // row-major 2^s × 2^s, must be unitary
};
using AncillaBlock =
    std::variant<HadamardAll, QftBlock, InverseQftBlock, ZeroControlledPhase, ExplicitBlock>;

/// A controlled intermittent quantum walk with m steps: blocks U_0..U_m on
/// the ancilla register interleaved with controlled walk times t_1..t_m.
struct CiqwSchedule {
    int ancilla_count = 0;
    std::vector<AncillaBlock> blocks;  // size m+1
    std::vector<double> walk_times;    // size m
};

/// Applies (U_0 ⊗ I), then alternately Λ_s(e^{iLt_j}) and (U_j ⊗ I) for
/// j = 1..m.
void run_ciqw(const CiqwSchedule& schedule, const Spectrum& sp, StateVector& state,
              WalkCounters* counters = nullptr);

/// Dense 2^s × 2^s matrix of an ancilla block (for composing explicit blocks).
std::vector<Complex> ancilla_block_matrix(const AncillaBlock& block, int s);

} // namespace ciqw
