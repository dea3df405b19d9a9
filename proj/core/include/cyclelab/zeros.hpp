#pragma once

#include <string>
#include <vector>

namespace cyclelab {

/// Imaginary parts of nontrivial zeta zeros, strictly increasing.
struct ZetaZeros {
    std::vector<double> values;
};

/// Load the first `count` zeros from a text file, one value per line with an
/// optional leading index column. Throws std::runtime_error with a line number
/// on parse failure, non-monotone data, or short files.
ZetaZeros load_zeros(const std::string& path, std::size_t count);

}  // namespace cyclelab
