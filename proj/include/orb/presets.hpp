#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orb/matrix.hpp"

namespace orb {

struct Preset {
    std::string name;
    size_t dim = 0;
    std::vector<Matrix> generators;
};

// Complex-linear groups used throughout the test suite and the CLI.
const std::vector<Preset>& complex_presets();
std::optional<Preset> find_preset(const std::string& name);

// Rational symplectic groups (Darboux pairing of y_i with y_{i+n}) for the
// star-product lab.
const std::vector<Preset>& symplectic_presets();
std::optional<Preset> find_symplectic_preset(const std::string& name);

}  // namespace orb
