#pragma once

#include <vector>

#include "homometry/partition.hpp"

namespace homometry {

// Finite signal alphabet: K pairwise distinct real letters. Letter k labels
// block k of an ordered partition. An alphabet whose first letter is exactly
// 0 is "sparse" (block 1 contributes nothing to the signal).
class Alphabet {
public:
    explicit Alphabet(std::vector<double> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    double letter(int k) const { return letters_.at(static_cast<std::size_t>(k)); }
    const std::vector<double>& letters() const { return letters_; }
    bool sparse() const { return letters_.front() == 0.0; }

private:
    std::vector<double> letters_;
};

// Length-N real signal over the ring.
class Signal {
public:
    Signal(Ring ring, std::vector<double> values);

    Ring ring() const { return ring_; }
    int length() const { return ring_.size(); }
    double operator[](int n) const { return values_[static_cast<std::size_t>(n)]; }
    const std::vector<double>& values() const { return values_; }

private:
    Ring ring_;
    std::vector<double> values_;
};

// x[n] = letter(k) for n in block k. Requires alphabet size == block count.
Signal signal_of(const OrderedPartition& partition, const Alphabet& alphabet);

// Inverse of signal_of: groups indices by exact letter value. Every signal
// value must equal some letter; signal_of then partition_of is the identity.
OrderedPartition partition_of(const Signal& signal, const Alphabet& alphabet);

}  // namespace homometry
