#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "homometry/alphabet.hpp"

namespace homometry {

// Periodic autocorrelation a_x[l] = sum_n x[n] * x[n+l], indices mod N.
// Direct O(N^2) sum in a fixed order; real signals give a_x[l] = a_x[N-l].
std::vector<double> autocorrelation(const Signal& x);

// Naive O(N^2) DFT; the sizes here never justify an FFT.
std::vector<std::complex<double>> dft(const std::vector<double>& x);

// |x_hat[k]|^2 for k = 0..N-1. DFT of the autocorrelation equals this.
std::vector<double> power_spectrum(const Signal& x);

// Exact integer bookkeeping of the autocorrelation of any signal built from a
// K-block partition: for each lag l, a symmetric K x K matrix C_l where
// C_l[i][i] counts directed pairs within block i at lag l and C_l[i][j]
// (i != j) counts directed pairs between blocks i and j in both directions.
// Then a_x[l] = sum_{i<=j} C_l[i][j] * alpha_i * alpha_j for the signal with
// letter alpha_k on block k. Total coefficient mass over all lags is N^2.
class AutocorrForm {
public:
    explicit AutocorrForm(const OrderedPartition& p);

    Ring ring() const { return ring_; }
    int block_count() const { return k_; }

    // Coefficient of alpha_i * alpha_j at lag l, i <= j (symmetric storage).
    std::int64_t coefficient(int lag, int i, int j) const;

    // a_x[l] for the signal with alphabet letters on the blocks.
    std::vector<double> evaluate(const Alphabet& alphabet) const;

    std::int64_t total_coefficient_mass() const;

    friend bool operator==(const AutocorrForm& a, const AutocorrForm& b) {
        return a.ring_ == b.ring_ && a.k_ == b.k_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const AutocorrForm& a, const AutocorrForm& b) {
        return !(a == b);
    }

    // Flat storage, lag-major then row-major K x K; exposed for serialization.
    const std::vector<std::int64_t>& raw() const { return coeff_; }
    AutocorrForm(Ring ring, int k, std::vector<std::int64_t> coeff);

private:
    std::size_t at(int lag, int i, int j) const;

    Ring ring_;
    int k_;
    std::vector<std::int64_t> coeff_;
};

// Coefficient-wise equality over all lags and all index pairs. Equality for
// every alphabet is exactly equality of the integer forms.
bool forms_equal(const AutocorrForm& a, const AutocorrForm& b);

// Equality restricted to index pairs (i,j) with i,j >= 2 (1-based), i.e. with
// the first letter pinned to 0 so block 1 drops out. Requires K >= 2
// (ArityMismatch otherwise). Agrees with forms_equal on every partition pair.
bool forms_equal_sparse(const AutocorrForm& a, const AutocorrForm& b);

// Max-norm comparison of the two numeric autocorrelations at one concrete
// alphabet. A true result with unequal forms exhibits a non-generic alphabet.
bool numeric_collision_check(const OrderedPartition& p, const OrderedPartition& q,
                             const Alphabet& alphabet, double tolerance);

}  // namespace homometry
