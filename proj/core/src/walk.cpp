#include "ciqw/walk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace ciqw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// V diag(e^{iλt}) Vᵀ applied to one contiguous vertex slice.
void evolve_span(std::span<Complex> amps, const Spectrum& sp, double t) {
    const int n = sp.n;
    std::vector<Complex> modal(n, Complex{0.0, 0.0});
    for (int j = 0; j < n; ++j) {
        Complex y{0.0, 0.0};
        for (int i = 0; i < n; ++i) y += sp.vec(i, j) * amps[i];
        modal[j] = y * std::polar(1.0, sp.eigenvalues[j] * t);
    }
    for (int i = 0; i < n; ++i) {
        Complex x{0.0, 0.0};
        for (int j = 0; j < n; ++j) x += sp.vec(i, j) * modal[j];
        amps[i] = x;
    }
}

void check_spectrum_dim(const StateVector& state, const Spectrum& sp) {
    if (sp.n != state.n_vertices())
        throw DimensionError("spectrum dimension " + std::to_string(sp.n) +
                             " does not match vertex count " +
                             std::to_string(state.n_vertices()));
}

void apply_explicit_block(StateVector& state, const std::vector<Complex>& u) {
    const int dim = state.ancilla_dim();
    const int n = state.n_vertices();
    if (u.size() != static_cast<std::size_t>(dim) * dim)
        throw DimensionError("explicit ancilla block has wrong size");
    // unitarity: ‖U†U - I‖_max <= 1e-10
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Complex dot{0.0, 0.0};
            for (int k = 0; k < dim; ++k)
                dot += std::conj(u[static_cast<std::size_t>(k) * dim + i]) *
                       u[static_cast<std::size_t>(k) * dim + j];
            const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(dot - expected) > 1e-10)
                throw std::invalid_argument("explicit ancilla block is not unitary");
        }
    std::vector<Complex> column(dim);
    for (int v = 0; v < n; ++v) {
        for (int a = 0; a < dim; ++a) column[a] = state.amp(a, v);
        for (int a = 0; a < dim; ++a) {
            Complex out{0.0, 0.0};
            for (int b = 0; b < dim; ++b)
                out += u[static_cast<std::size_t>(a) * dim + b] * column[b];
            state.amp(a, v) = out;
        }
    }
}

void apply_hadamard_all(StateVector& state) {
    const int s = state.ancilla_count();
    const int n = state.n_vertices();
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (int qubit = 0; qubit < s; ++qubit) {
        const int bit = 1 << qubit;
        for (int a = 0; a < (1 << s); ++a) {
            if (a & bit) continue;
            for (int v = 0; v < n; ++v) {
                const Complex lo = state.amp(a, v);
                const Complex hi = state.amp(a | bit, v);
                state.amp(a, v) = (lo + hi) * inv_sqrt2;
                state.amp(a | bit, v) = (lo - hi) * inv_sqrt2;
            }
        }
    }
}

void apply_zero_phase(StateVector& state, double beta) {
    const Complex phase = std::polar(1.0, beta);
    for (int v = 0; v < state.n_vertices(); ++v) state.amp(0, v) *= phase;
}

} // namespace

StateVector StateVector::vertex_basis(int n, int v) {
    if (n < 1) throw DimensionError("state needs at least one vertex");
    if (v < 0 || v >= n) throw DimensionError("basis vertex out of range");
    StateVector st;
    st.n_vertices_ = n;
    st.amps_.assign(n, Complex{0.0, 0.0});
    st.amps_[v] = Complex{1.0, 0.0};
    return st;
}

StateVector StateVector::uniform(int n) {
    if (n < 1) throw DimensionError("state needs at least one vertex");
    StateVector st;
    st.n_vertices_ = n;
    st.amps_.assign(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    return st;
}

StateVector StateVector::with_ancilla(const StateVector& vertex, int s) {
    if (vertex.ancilla_count_ != 0)
        throw DimensionError("with_ancilla expects a vertex-layout state");
    if (s < 0) throw DimensionError("ancilla count must be nonnegative");
    StateVector st;
    st.n_vertices_ = vertex.n_vertices_;
    st.ancilla_count_ = s;
    st.amps_.assign(static_cast<std::size_t>(1ULL << s) * vertex.n_vertices_,
                    Complex{0.0, 0.0});
    std::copy(vertex.amps_.begin(), vertex.amps_.end(), st.amps_.begin());
    return st;
}

StateVector StateVector::register_state(std::vector<Complex> amps) {
    if (!is_power_of_two(amps.size()))
        throw DimensionError("register dimension must be a power of two");
    StateVector st;
    st.n_vertices_ = 1;
    st.ancilla_count_ = 0;
    std::size_t dim = amps.size();
    while (dim > 1) {
        dim >>= 1;
        ++st.ancilla_count_;
    }
    st.amps_ = std::move(amps);
    return st;
}

StateVector StateVector::from_amplitudes(int s, int n, std::vector<Complex> amps) {
    if (n < 1 || s < 0) throw DimensionError("bad state shape");
    if (amps.size() != static_cast<std::size_t>(1ULL << s) * n)
        throw DimensionError("amplitude count does not match 2^s * n");
    StateVector st;
    st.n_vertices_ = n;
    st.ancilla_count_ = s;
    st.amps_ = std::move(amps);
    return st;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex& a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

double StateVector::ancilla_residue() const {
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(n_vertices_); i < amps_.size(); ++i)
        sum += std::norm(amps_[i]);
    return std::sqrt(sum);
}

std::vector<double> StateVector::vertex_distribution() const {
    std::vector<double> dist(n_vertices_, 0.0);
    for (int a = 0; a < ancilla_dim(); ++a)
        for (int v = 0; v < n_vertices_; ++v) dist[v] += std::norm(amp(a, v));
    return dist;
}

StateVector StateVector::vertex_register() const {
    StateVector st;
    st.n_vertices_ = n_vertices_;
    st.amps_.assign(amps_.begin(), amps_.begin() + n_vertices_);
    return st;
}

PhaseEstimationConfig PhaseEstimationConfig::for_max_eigenvalue(double lambda_max) {
    if (lambda_max < 0) throw std::invalid_argument("lambda_max must be nonnegative");
    // integer-valued inputs are used exactly
    const double rounded = std::round(lambda_max);
    if (std::abs(lambda_max - rounded) < 1e-9) lambda_max = rounded;
    PhaseEstimationConfig cfg;
    while (static_cast<double>(1LL << cfg.s) <= lambda_max) ++cfg.s;
    cfg.t0 = kTwoPi / static_cast<double>(1LL << cfg.s);
    return cfg;
}

void evolve(StateVector& state, const Spectrum& sp, double t) {
    if (state.ancilla_count() != 0)
        throw DimensionError("evolve expects a vertex-layout state");
    check_spectrum_dim(state, sp);
    evolve_span(state.amplitudes(), sp, t);
}

void controlled_evolve(StateVector& joint, const Spectrum& sp, double t,
                       WalkCounters* counters) {
    check_spectrum_dim(joint, sp);
    const int s = joint.ancilla_count();
    const int n = joint.n_vertices();
    for (int qubit = 0; qubit < s; ++qubit) {
        const int bit = 1 << qubit;
        const double block_time = t * static_cast<double>(bit);
        for (int a = 0; a < (1 << s); ++a) {
            if (!(a & bit)) continue;
            std::span<Complex> slice =
                joint.amplitudes().subspan(static_cast<std::size_t>(a) * n, n);
            evolve_span(slice, sp, block_time);
        }
        if (counters) {
            counters->walk_calls += 1;
            counters->evolution_time += std::abs(block_time);
        }
    }
}

void qft(StateVector& state, bool inverse) {
    const int s = state.ancilla_count();
    if (s == 0 && state.n_vertices() > 1)
        throw DimensionError("qft: state has no ancilla register");
    if (s == 0) return;
    const int dim = 1 << s;
    const int n = state.n_vertices();
    const double sign = inverse ? -1.0 : 1.0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> twiddle(dim);
    for (int m = 0; m < dim; ++m)
        twiddle[m] = std::polar(1.0, sign * kTwoPi * static_cast<double>(m) / dim);
    std::vector<Complex> column(dim);
    for (int v = 0; v < n; ++v) {
        for (int a = 0; a < dim; ++a) column[a] = state.amp(a, v);
        for (int j = 0; j < dim; ++j) {
            Complex out{0.0, 0.0};
            for (int a = 0; a < dim; ++a)
                out += twiddle[static_cast<std::size_t>(j) * a % dim] * column[a];
            state.amp(j, v) = out * scale;
        }
    }
}

void reflection_exact(StateVector& state, double beta) {
    const int n = state.n_vertices();
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    const Complex factor = Complex{1.0, 0.0} - std::polar(1.0, beta);
    for (int a = 0; a < state.ancilla_dim(); ++a) {
        Complex overlap{0.0, 0.0};
        for (int v = 0; v < n; ++v) overlap += inv_sqrt_n * state.amp(a, v);
        const Complex shift = factor * overlap * inv_sqrt_n;
        for (int v = 0; v < n; ++v) state.amp(a, v) -= shift;
    }
}

void reflection_circuit(StateVector& joint, const Spectrum& sp,
                        const PhaseEstimationConfig& cfg, double beta,
                        WalkCounters* counters) {
    check_spectrum_dim(joint, sp);
    if (joint.ancilla_count() != cfg.s)
        throw DimensionError("reflection_circuit: ancilla count does not match config");
    if (joint.ancilla_residue() > 1e-10)
        throw std::invalid_argument("reflection_circuit: ancilla register is not |0^s>");

    apply_hadamard_all(joint);
    controlled_evolve(joint, sp, cfg.t0, counters);
    qft(joint, true);
    apply_zero_phase(joint, beta);
    qft(joint, false);
    controlled_evolve(joint, sp, -cfg.t0, counters);
    apply_hadamard_all(joint);
}

void run_ciqw(const CiqwSchedule& schedule, const Spectrum& sp, StateVector& state,
              WalkCounters* counters) {
    if (schedule.blocks.size() != schedule.walk_times.size() + 1)
        throw DimensionError("ciqw schedule needs m+1 ancilla blocks for m walk times");
    if (state.ancilla_count() != schedule.ancilla_count)
        throw DimensionError("ciqw schedule ancilla count does not match state");
    check_spectrum_dim(state, sp);

    auto apply_block = [&](const AncillaBlock& block) {
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, HadamardAll>) {
                    apply_hadamard_all(state);
                } else if constexpr (std::is_same_v<T, QftBlock>) {
                    qft(state, false);
                } else if constexpr (std::is_same_v<T, InverseQftBlock>) {
                    qft(state, true);
                } else if constexpr (std::is_same_v<T, ZeroControlledPhase>) {
                    apply_zero_phase(state, b.beta);
                } else {
                    apply_explicit_block(state, b.matrix);
                }
            },
            block);
    };

    apply_block(schedule.blocks[0]);
    for (std::size_t j = 0; j < schedule.walk_times.size(); ++j) {
        controlled_evolve(state, sp, schedule.walk_times[j], counters);
        apply_block(schedule.blocks[j + 1]);
    }
}

std::vector<Complex> ancilla_block_matrix(const AncillaBlock& block, int s) {
    const int dim = 1 << s;
    std::vector<Complex> m(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    auto at = [&](int i, int j) -> Complex& {
        return m[static_cast<std::size_t>(i) * dim + j];
    };
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, HadamardAll>) {
                const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        at(i, j) = scale * (std::popcount(static_cast<unsigned>(i & j)) % 2 ? -1.0
                                                                                            : 1.0);
            } else if constexpr (std::is_same_v<T, QftBlock> ||
                                 std::is_same_v<T, InverseQftBlock>) {
                const double sign = std::is_same_v<T, InverseQftBlock> ? -1.0 : 1.0;
                const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        at(i, j) = scale * std::polar(1.0, sign * kTwoPi *
                                                               static_cast<double>(i) * j / dim);
            } else if constexpr (std::is_same_v<T, ZeroControlledPhase>) {
                for (int i = 0; i < dim; ++i) at(i, i) = Complex{1.0, 0.0};
                at(0, 0) = std::polar(1.0, b.beta);
            } else {
                if (b.matrix.size() != static_cast<std::size_t>(dim) * dim)
                    throw DimensionError("explicit ancilla block has wrong size");
                m = b.matrix;
            }
        },
        block);
    return m;
}

} // namespace ciqw
