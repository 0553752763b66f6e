#pragma once

#include <string>
#include <vector>

#include "orb/matrix.hpp"

namespace orb {

// A group description parsed from JSON:
// {
//   "name": "...",                 (optional)
//   "cyclotomic_order": N,
//   "dimension": n,
//   "generators": [ [[entry, ...], ...], ... ]
// }
// Entries are "p/q" rationals, "z^k" roots of unity (optionally negated),
// or arrays of rationals read as power-basis coefficients.
struct GroupSpec {
    std::string name;
    unsigned cyclotomic_order = 1;
    size_t dimension = 0;
    std::vector<Matrix> generators;
};

// Throws usage_error with a line/column (or entry-position) diagnostic.
GroupSpec parse_group_spec(const std::string& text);

}  // namespace orb
