#include "ciqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ciqw {

namespace {

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a[static_cast<std::size_t>(i) * n + j] *
                               a[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(sum);
}

// Accumulates (value, multiplicity) pairs, merging duplicates.
class SpectrumBuilder {
public:
    void add(long long value, long long mult) {
        if (mult < 0) throw std::logic_error("negative multiplicity in analytic spectrum");
        if (mult == 0) return;
        acc_[value] += mult;
    }

    IntegralSpectrum take() {
        IntegralSpectrum out;
        for (auto [v, m] : acc_) {
            out.values.push_back(v);
            out.multiplicities.push_back(m);
        }
        return out;
    }

private:
    std::map<long long, long long> acc_;
};

long long q_int(long long k, long long q) { // [k]_q = (q^k - 1)/(q - 1)
    long long r = 0, p = 1;
    for (long long i = 0; i < k; ++i) {
        r += p;
        p *= q;
    }
    return r;
}

long long ipow(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

long long IntegralSpectrum::n() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0LL);
}

long long IntegralSpectrum::trace() const {
    long long t = 0;
    for (std::size_t i = 0; i < values.size(); ++i) t += values[i] * multiplicities[i];
    return t;
}

long long IntegralSpectrum::multiplicity_of(long long value) const {
    auto it = std::lower_bound(values.begin(), values.end(), value);
    if (it == values.end() || *it != value) return 0;
    return multiplicities[static_cast<std::size_t>(it - values.begin())];
}

Spectrum eigendecompose(const LaplacianMatrix& L) {
    const int n = L.n;
    if (n < 1) throw std::invalid_argument("eigendecompose: empty matrix");
    auto at = [n](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(L(i, j) - L(j, i)) > 1e-12)
                throw std::invalid_argument("eigendecompose: matrix is not symmetric");

    std::vector<double> a = L.entries;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) at(v, i, i) = 1.0;

    double norm_f = 0.0;
    for (double x : a) norm_f += x * x;
    norm_f = std::sqrt(norm_f);
    const double threshold = 1e-12 * norm_f;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(a, n) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double app = at(a, p, p);
                const double aqq = at(a, q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(a, i, p);
                    const double aiq = at(a, i, q);
                    at(a, i, p) = c * aip - s * aiq;
                    at(a, i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = at(a, p, j);
                    const double aqj = at(a, q, j);
                    at(a, p, j) = c * apj - s * aqj;
                    at(a, q, j) = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = at(v, i, p);
                    const double viq = at(v, i, q);
                    at(v, i, p) = c * vip - s * viq;
                    at(v, i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return at(a, i, i) < at(a, j, j); });

    Spectrum sp;
    sp.n = n;
    sp.eigenvalues.resize(n);
    sp.eigenvectors.resize(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        sp.eigenvalues[j] = at(a, order[j], order[j]);
        for (int i = 0; i < n; ++i)
            sp.eigenvectors[static_cast<std::size_t>(i) * n + j] = at(v, i, order[j]);
    }
    return sp;
}

CertifyResult certify_integral(const Spectrum& sp, double tol) {
    if (!(tol > 0.0 && tol < 0.5))
        throw std::invalid_argument("certify_integral: tol must lie in (0, 0.5)");
    CertifyResult result;
    SpectrumBuilder builder;
    for (double ev : sp.eigenvalues) {
        const long long nearest = std::llround(ev);
        const double distance = std::abs(ev - static_cast<double>(nearest));
        if (distance > tol) {
            result.offenders.push_back({ev, nearest, distance});
        } else {
            builder.add(nearest, 1);
        }
    }
    if (result.offenders.empty()) result.spectrum = builder.take();
    return result;
}

IntegralSpectrum analytic_spectrum(const GraphSpec& spec) {
    validate_spec(spec);
    if (spec.family == Family::Custom)
        throw ParameterError("analytic_spectrum: no closed form for custom graphs");
    const auto& p = spec.params;
    SpectrumBuilder b;
    switch (spec.family) {
        case Family::Complete: {
            const long long n = p[0];
            b.add(0, 1);
            b.add(n, n - 1);
            break;
        }
        case Family::Johnson: {
            const long long n = p[0], k = p[1];
            const long long m = std::min(k, n - k);
            for (long long i = 0; i <= m; ++i)
                b.add(i * (n + 1 - i), binomial(n, i) - binomial(n, i - 1));
            break;
        }
        case Family::Kneser: {
            const long long n = p[0], k = p[1];
            for (long long i = 0; i <= k; ++i) {
                const long long sign = (i % 2 == 0) ? 1 : -1;
                b.add(binomial(n - k, k) - sign * binomial(n - k - i, k - i),
                      binomial(n, i) - binomial(n, i - 1));
            }
            break;
        }
        case Family::Hamming: {
            const long long d = p[0], q = p[1];
            for (long long i = 0; i <= d; ++i)
                b.add(q * i, binomial(d, i) * ipow(q - 1, i));
            break;
        }
        case Family::Grassmann: {
            const long long q = p[0], n = p[1], k = p[2];
            const long long m = std::min(k, n - k);
            for (long long i = 0; i <= m; ++i) {
                const long long value = q * q_int(k, q) * q_int(n - k, q) -
                                        ipow(q, i + 1) * q_int(k - i, q) * q_int(n - k - i, q) +
                                        q_int(i, q);
                b.add(value, gaussian_binomial(n, i, q) - gaussian_binomial(n, i - 1, q));
            }
            break;
        }
        case Family::Rook: {
            const long long m = p[0], n = p[1];
            b.add(0, 1);
            b.add(n, n - 1);
            b.add(m, m - 1);
            b.add(n + m, (m - 1) * (n - 1));
            break;
        }
        case Family::CompleteSquare: {
            const long long n = p[0];
            b.add(0, 1);
            b.add(2, 2);
            b.add(4, 1);
            b.add(n, n - 1);
            b.add(n + 2, 2 * (n - 1));
            b.add(n + 4, n - 1);
            break;
        }
        case Family::CocktailParty: {
            const long long n = p[0];
            b.add(0, 1);
            b.add(2 * n - 2, n);
            b.add(2 * n, n - 1);
            break;
        }
        case Family::CompleteMultipartite: {
            const long long n = p[0], k = p[1];
            b.add(0, 1);
            b.add(n - n / k, n - k);
            b.add(n, k - 1);
            break;
        }
        case Family::Star: {
            const long long n = p[0];
            b.add(0, 1);
            b.add(1, n - 1);
            b.add(n + 1, 1);
            break;
        }
        case Family::Antiregular: {
            const long long n = p[0];
            const long long skipped = (n + 1) / 2;
            for (long long v = 0; v <= n; ++v)
                if (v != skipped) b.add(v, 1);
            break;
        }
        case Family::Custom: break; // unreachable
    }
    return b.take();
}

DepthResult depth(std::vector<long long> values) {
    std::set<long long> distinct(values.begin(), values.end());
    if (!distinct.count(0))
        throw std::invalid_argument("depth: the value set must contain 0");

    DepthResult result;
    std::vector<long long> current(distinct.begin(), distinct.end());
    result.chain.push_back(current);
    while (!(current.size() == 1 && current[0] == 0)) {
        long long g = 0;
        for (long long v : current)
            if (v != 0) g = std::gcd(g, v);
        result.gcds.push_back(g);
        std::vector<long long> next;
        for (long long v : current)
            if ((v / g) % 2 == 0) next.push_back(v);
        result.chain.push_back(next);
        current = std::move(next);
        ++result.d;
    }
    return result;
}

DepthResult depth(const IntegralSpectrum& isp) { return depth(isp.values); }

Spectrum with_integer_eigenvalues(Spectrum sp) {
    for (double& ev : sp.eigenvalues) ev = static_cast<double>(std::llround(ev));
    return sp;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        r = r * (n - i);
        r /= i + 1;
    }
    return r;
}

long long gaussian_binomial(long long n, long long k, long long q) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // [n choose k]_q = Π_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1)
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= ipow(q, n - i) - 1;
        r /= ipow(q, i + 1) - 1;
    }
    return r;
}

} // namespace ciqw
