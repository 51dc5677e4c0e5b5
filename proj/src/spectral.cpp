#include "homometry/spectral.hpp"

#include <cmath>
#include <numbers>

#include "homometry/diffsets.hpp"

namespace homometry {

std::vector<double> autocorrelation(const Signal& x) {
    int n = x.length();
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    for (int l = 0; l < n; ++l) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += x[k] * x[(k + l) % n];
        a[static_cast<std::size_t>(l)] = sum;
    }
    return a;
}

std::vector<std::complex<double>> dft(const std::vector<double>& x) {
    std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> sum = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(t) / static_cast<double>(n);
            sum += x[t] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = sum;
    }
    return out;
}

std::vector<double> power_spectrum(const Signal& x) {
    auto hat = dft(x.values());
    std::vector<double> out(hat.size());
    for (std::size_t k = 0; k < hat.size(); ++k) out[k] = std::norm(hat[k]);
    return out;
}

AutocorrForm::AutocorrForm(Ring ring, int k, std::vector<std::int64_t> coeff)
    : ring_(ring), k_(k), coeff_(std::move(coeff)) {
    if (k < 1) throw ArityMismatch("form needs at least one block");
    if (coeff_.size() != static_cast<std::size_t>(ring.size()) *
                             static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
        throw Error("coefficient storage must be N*K*K entries");
}

AutocorrForm::AutocorrForm(const OrderedPartition& p)
    : ring_(p.ring()),
      k_(p.block_count()),
      coeff_(static_cast<std::size_t>(p.ring().size()) * static_cast<std::size_t>(k_) *
                 static_cast<std::size_t>(k_),
             0) {
    int n = ring_.size();
    for (int i = 0; i < k_; ++i) {
        for (int j = i; j < k_; ++j) {
            auto forward = directed_lag_histogram(p.block(i), p.block(j));
            if (i == j) {
                for (int l = 0; l < n; ++l)
                    coeff_[at(l, i, i)] = forward[static_cast<std::size_t>(l)];
            } else {
                // both directions: c_ij[l] + c_ji[l]; c_ji[l] = c_ij[N-l].
                for (int l = 0; l < n; ++l) {
                    std::int64_t both = forward[static_cast<std::size_t>(l)] +
                                        forward[static_cast<std::size_t>((n - l) % n)];
                    coeff_[at(l, i, j)] = both;
                    coeff_[at(l, j, i)] = both;
                }
            }
        }
    }
}

std::size_t AutocorrForm::at(int lag, int i, int j) const {
    return (static_cast<std::size_t>(lag) * static_cast<std::size_t>(k_) +
            static_cast<std::size_t>(i)) *
               static_cast<std::size_t>(k_) +
           static_cast<std::size_t>(j);
}

std::int64_t AutocorrForm::coefficient(int lag, int i, int j) const {
    if (lag < 0 || lag >= ring_.size())
        throw IndexOutOfRange("lag " + std::to_string(lag) + " outside [0," +
                              std::to_string(ring_.size() - 1) + "]");
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
        throw IndexOutOfRange("block index outside [0," + std::to_string(k_ - 1) + "]");
    return coeff_[at(lag, i, j)];
}

std::vector<double> AutocorrForm::evaluate(const Alphabet& alphabet) const {
    if (alphabet.size() != k_)
        throw ArityMismatch("alphabet has " + std::to_string(alphabet.size()) +
                            " letters for a " + std::to_string(k_) + "-block form");
    int n = ring_.size();
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    for (int l = 0; l < n; ++l) {
        double sum = 0.0;
        for (int i = 0; i < k_; ++i)
            for (int j = i; j < k_; ++j)
                sum += static_cast<double>(coeff_[at(l, i, j)]) * alphabet.letter(i) *
                       alphabet.letter(j);
        a[static_cast<std::size_t>(l)] = sum;
    }
    return a;
}

std::int64_t AutocorrForm::total_coefficient_mass() const {
    std::int64_t mass = 0;
    for (int l = 0; l < ring_.size(); ++l)
        for (int i = 0; i < k_; ++i)
            for (int j = i; j < k_; ++j) mass += coeff_[at(l, i, j)];
    return mass;
}

bool forms_equal(const AutocorrForm& a, const AutocorrForm& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.block_count() != b.block_count())
        throw ArityMismatch("forms have different block counts");
    return a.raw() == b.raw();
}

bool forms_equal_sparse(const AutocorrForm& a, const AutocorrForm& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.block_count() != b.block_count())
        throw ArityMismatch("forms have different block counts");
    int k = a.block_count();
    if (k < 2)
        throw ArityMismatch("sparse comparison needs at least two blocks");
    for (int l = 0; l < a.ring().size(); ++l)
        for (int i = 1; i < k; ++i)
            for (int j = i; j < k; ++j)
                if (a.coefficient(l, i, j) != b.coefficient(l, i, j)) return false;
    return true;
}

bool numeric_collision_check(const OrderedPartition& p, const OrderedPartition& q,
                             const Alphabet& alphabet, double tolerance) {
    require_same_ring(p.ring(), q.ring());
    require_same_arity(p, q);
    auto ap = autocorrelation(signal_of(p, alphabet));
    auto aq = autocorrelation(signal_of(q, alphabet));
    for (std::size_t l = 0; l < ap.size(); ++l)
        if (std::abs(ap[l] - aq[l]) > tolerance) return false;
    return true;
}

}  // namespace homometry
