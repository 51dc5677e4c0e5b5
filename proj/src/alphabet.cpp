#include "homometry/alphabet.hpp"

namespace homometry {

Alphabet::Alphabet(std::vector<double> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error("alphabet needs at least one letter");
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw Error("alphabet letters must be pairwise distinct");
}

Signal::Signal(Ring ring, std::vector<double> values)
    : ring_(ring), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(ring.size()))
        throw Error("signal length " + std::to_string(values_.size()) +
                    " does not match ring size " + std::to_string(ring.size()));
}

Signal signal_of(const OrderedPartition& partition, const Alphabet& alphabet) {
    if (alphabet.size() != partition.block_count())
        throw ArityMismatch("alphabet has " + std::to_string(alphabet.size()) +
                            " letters for " + std::to_string(partition.block_count()) +
                            " blocks");
    std::vector<double> values(static_cast<std::size_t>(partition.ring().size()), 0.0);
    for (int k = 0; k < partition.block_count(); ++k)
        for (int i : partition.block(k).indices())
            values[static_cast<std::size_t>(i)] = alphabet.letter(k);
    return Signal(partition.ring(), std::move(values));
}

OrderedPartition partition_of(const Signal& signal, const Alphabet& alphabet) {
    Ring ring = signal.ring();
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(alphabet.size()));
    for (int n = 0; n < ring.size(); ++n) {
        int k = -1;
        for (int c = 0; c < alphabet.size(); ++c)
            if (signal[n] == alphabet.letter(c)) {
                k = c;
                break;
            }
        if (k < 0)
            throw Error("signal value at index " + std::to_string(n) +
                        " matches no alphabet letter");
        blocks[static_cast<std::size_t>(k)].push_back(n);
    }
    return OrderedPartition::from_indices(ring, blocks);
}

}  // namespace homometry
