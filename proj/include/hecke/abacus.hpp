#pragma once

#include <vector>

#include "hecke/partition.hpp"

/*
  The l-abacus. A partition with parts lambda_1 >= ... and b beads is
  encoded by the strictly decreasing beta-numbers

      beta_i = lambda_i + b - i,   i = 1..b  (lambda_i = 0 past the end),

  each bead sitting on runner beta mod l. Sliding every bead to the lowest
  unoccupied spot on its runner removes rim l-hooks one per step: the total
  step count is the l-weight and the slid configuration decodes to the
  l-core. Both are independent of the bead count.
*/

namespace hecke {

struct Abacus {
    int runner_count = 1;       // l
    std::vector<int> beads;     // strictly decreasing, nonnegative

    int bead_count() const { return static_cast<int>(beads.size()); }
};

// Requires bead_count >= length(lambda) and l >= 1.
Abacus to_abacus(const Partition& lambda, int l, int bead_count);

// Inverse of to_abacus at the same bead count.
Partition abacus_decode(const Abacus& abacus);

// Beads slid fully down their runners, plus the number of one-step moves
// it took. The moved abacus decodes to the l-core.
struct SlideResult {
    Abacus slid;
    int steps = 0;
};
SlideResult slide_to_core(const Abacus& abacus);

Partition l_core(const Partition& lambda, int l);   // l >= 1
int l_weight(const Partition& lambda, int l);       // l >= 1

} // namespace hecke
