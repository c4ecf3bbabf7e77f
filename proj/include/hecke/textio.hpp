#pragma once

#include <string>

#include "hecke/partition.hpp"
#include "hecke/typebd.hpp"

/*
  Text forms of the domain types.

  Partition / composition: comma-separated positive integers, "4,2,1";
  the empty string is the empty partition. Exponent shorthand "2^3,1^2"
  is accepted on input and never emitted.

  Bipartition: "left|right", either side possibly empty, e.g. "4,2,1|3,1".

  Q parameter: "+q^2", "-q^0"; also accepted are "q" (power 1), "1"
  (power 0) and a bare exponentless sign.
*/

namespace hecke {

Partition parse_partition(const std::string& text);       // throws usage_error
Composition parse_composition(const std::string& text);
Bipartition parse_bipartition(const std::string& text);
QSpec parse_qspec(const std::string& text);

std::string format_partition(const Partition& lambda);    // "" for the empty one
std::string format_composition(const Composition& lambda);
std::string format_bipartition(const Bipartition& bipartition);
std::string format_qspec(QSpec Q);                        // canonical "+q^2" form

} // namespace hecke
