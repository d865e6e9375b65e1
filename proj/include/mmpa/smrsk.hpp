// The biword of a restricted multiset partition and the smRSK bijection onto
// pairs of semistandard multiset partition tableaux.
#pragma once

#include <utility>

#include "mmpa/partitions.hpp"
#include "mmpa/super_rsk.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

Biword biword_of(const MultisetPartition& pt);

std::pair<Tableau, Tableau> smrsk(const MultisetPartition& pt, int n);
MultisetPartition smrsk_inverse(const Tableau& p, const Tableau& q, int n);

}  // namespace mmpa
