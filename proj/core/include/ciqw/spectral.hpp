#pragma once

#include "ciqw/graphs.hpp"

#include <optional>
#include <vector>

namespace ciqw {

/// Full eigendecomposition of a Laplacian. eigenvalues are ascending and
/// eigenvectors is a row-major n×n orthonormal matrix whose column j is
/// the eigenvector paired with eigenvalues[j].
struct Spectrum {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;

    double vec(int i, int j) const {
        return eigenvectors[static_cast<std::size_t>(i) * n + j];
    }
};

/// Certified integer spectrum: distinct ascending values with positive
/// multiplicities summing to n.
struct IntegralSpectrum {
    std::vector<long long> values;
    std::vector<long long> multiplicities;

    long long n() const;
    long long max_value() const { return values.back(); }
    long long trace() const; // Σ value·multiplicity = Σ degrees
    long long multiplicity_of(long long value) const;
};

struct NonIntegralValue {
    double eigenvalue;
    long long nearest;
    double distance;
};

/// Outcome of certify_integral: either the rounded spectrum, or the list
/// of eigenvalues that are farther than tol from any integer. Rejection
/// is a value, not an error.
struct CertifyResult {
    std::optional<IntegralSpectrum> spectrum;
    std::vector<NonIntegralValue> offenders;

    bool integral() const { return spectrum.has_value(); }
};

/// Depth of an integral spectrum: repeatedly divide the set by the gcd of
/// its nonzero members and keep the values with even quotient, until only
/// {0} remains. chain holds Λ_0 ⊇ Λ_1 ⊇ ... ⊇ Λ_{d}, gcds[k] is the gcd
/// used to go from Λ_k to Λ_{k+1}.
struct DepthResult {
    int d = 0;
    std::vector<std::vector<long long>> chain;
    std::vector<long long> gcds;
};

/// Cyclic Jacobi eigensolver; sweeps until the off-diagonal Frobenius
/// norm falls below 1e-12·‖L‖_F. Throws std::invalid_argument for
/// non-symmetric input.
Spectrum eigendecompose(const LaplacianMatrix& L);

/// tol must lie in (0, 0.5).
CertifyResult certify_integral(const Spectrum& sp, double tol = 1e-6);

/// Closed-form spectrum of a named family instance (not Custom).
IntegralSpectrum analytic_spectrum(const GraphSpec& spec);

/// Requires 0 ∈ isp.values.
DepthResult depth(const IntegralSpectrum& isp);
DepthResult depth(std::vector<long long> values);

/// Replaces each eigenvalue by its nearest integer. Meaningful only after
/// certify_integral has accepted the spectrum.
Spectrum with_integer_eigenvalues(Spectrum sp);

long long binomial(long long n, long long k);
long long gaussian_binomial(long long n, long long k, long long q);

} // namespace ciqw
