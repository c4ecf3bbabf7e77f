#include "hecke/abacus.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace hecke {

Abacus to_abacus(const Partition& lambda, int l, int bead_count) {
    if (l < 1)
        throw precondition_error("to_abacus: l must be >= 1");
    if (bead_count < lambda.length())
        throw precondition_error("to_abacus: bead count " + std::to_string(bead_count) +
                                 " is smaller than the number of parts " +
                                 std::to_string(lambda.length()));
    Abacus abacus;
    abacus.runner_count = l;
    abacus.beads.reserve(bead_count);
    for (int i = 1; i <= bead_count; ++i)
        abacus.beads.push_back(lambda.row(i) + bead_count - i);
    return abacus;
}

Partition abacus_decode(const Abacus& abacus) {
    const int b = abacus.bead_count();
    std::vector<int> parts;
    parts.reserve(b);
    for (int i = 1; i <= b; ++i)
        parts.push_back(abacus.beads[i - 1] - (b - i));
    return Partition(std::move(parts));
}

SlideResult slide_to_core(const Abacus& abacus) {
    const int l = abacus.runner_count;
    // Bead heights per runner, ascending: beta = runner + l * height.
    std::vector<std::vector<int>> heights(l);
    for (int beta : abacus.beads)
        heights[beta % l].push_back(beta / l);
    SlideResult result;
    result.slid.runner_count = l;
    result.slid.beads.reserve(abacus.beads.size());
    for (int runner = 0; runner < l; ++runner) {
        auto& h = heights[runner];
        std::sort(h.begin(), h.end());
        for (size_t j = 0; j < h.size(); ++j) {
            result.steps += h[j] - static_cast<int>(j);
            result.slid.beads.push_back(runner + l * static_cast<int>(j));
        }
    }
    std::sort(result.slid.beads.begin(), result.slid.beads.end(), std::greater<int>());
    return result;
}

Partition l_core(const Partition& lambda, int l) {
    const Abacus abacus = to_abacus(lambda, l, lambda.length());
    return abacus_decode(slide_to_core(abacus).slid);
}

int l_weight(const Partition& lambda, int l) {
    const Abacus abacus = to_abacus(lambda, l, lambda.length());
    return slide_to_core(abacus).steps;
}

} // namespace hecke
