#pragma once

#include <string>
#include <vector>

#include "lsd/galois_ring.hpp"

namespace lsd {

// Split finite groups whose full flag varieties are enumerated directly.
//   PGL2: lines in F^2, Weyl group {1, s}.
//   SO5:  isotropic flags (line in plane) for Q = x1 x5 + x2 x4 + x3^2, Weyl group of type B2
//         with s1 = (1 2)(4 5) and s2 = (2 4) acting on the completed flag.
enum class DlGroup { PGL2, SO5 };

struct DlEntry {
    std::string word;  // reduced word in 1-based simple reflections, "" for the identity
    long long count = 0;
};

struct DlTable {
    long long q = 0;
    int d = 1;
    long long total_flags = 0;     // flags over F_{q^d}
    long long rational_flags = 0;  // flags over F_q, enumerated separately
    std::vector<DlEntry> entries;  // every Weyl element, by length then word
};

// Relative position of every F_{q^d}-flag with its q-Frobenius translate.
// q must be a prime; throws ResourceError past q^d = 81 or 10^6 flags.
DlTable dl_table(DlGroup g, long long q, int d);         // OpenMP over flags
DlTable dl_table_serial(DlGroup g, long long q, int d);

// Number of flags in relative position w; `word` is any word for w.
long long count_dl_variety(DlGroup g, const std::vector<int>& word, long long q, int d);

std::vector<std::string> dl_weyl_words(DlGroup g);

}  // namespace lsd
