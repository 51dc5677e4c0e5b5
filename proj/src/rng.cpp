#include "homometry/rng.hpp"

#include <algorithm>
#include <unordered_set>

#include "homometry/errors.hpp"

namespace homometry {

std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population,
                                                      std::uint64_t count, Rng& rng) {
    if (count > population)
        throw CountExceedsPopulation("cannot draw " + std::to_string(count) +
                                     " distinct items from a population of " +
                                     std::to_string(population));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(count) * 2);
    // Floyd: for j in [population-count, population), insert a uniform draw
    // from [0, j]; on collision insert j itself. Uniform over count-subsets.
    for (std::uint64_t j = population - count; j < population; ++j) {
        std::uint64_t v = rng.below(j + 1);
        if (!chosen.insert(v).second) chosen.insert(j);
    }
    std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace homometry
