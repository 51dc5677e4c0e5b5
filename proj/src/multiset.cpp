#include "homometry/multiset.hpp"

#include <sstream>

namespace homometry {

DistanceMultiset multiset_sum(Ring ring, std::span<const DistanceMultiset> parts) {
    DistanceMultiset out = DistanceMultiset::zero(ring);
    std::vector<std::int64_t> acc = out.multiplicities();
    for (const DistanceMultiset& m : parts) {
        require_same_ring(ring, m.ring());
        const auto& mult = m.multiplicities();
        for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += mult[d];
    }
    return DistanceMultiset(ring, std::move(acc));
}

std::string to_pretty_string(const DistanceMultiset& m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int d = 0; d <= m.max_distance(); ++d) {
        std::int64_t count = m.multiplicity(d);
        if (count == 0) continue;
        if (!first) out << ',';
        first = false;
        out << d;
        if (count > 1) out << '^' << count;
    }
    out << '}';
    return out.str();
}

}  // namespace homometry
