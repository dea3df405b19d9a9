#include "cyclelab/zeros.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclelab {

ZetaZeros load_zeros(const std::string& path, std::size_t count) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zeros file: " + path);
    ZetaZeros out;
    out.values.reserve(count);
    std::string line;
    std::size_t lineno = 0;
    while (out.values.size() < count && std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        double first = 0.0, second = 0.0;
        if (!(ss >> first)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;  // blank line
            throw std::runtime_error("parse failure in " + path + " at line " +
                                     std::to_string(lineno));
        }
        // Two-column rows carry an index first; the zero is the second token.
        const double value = (ss >> second) ? second : first;
        if (!out.values.empty() && value <= out.values.back()) {
            throw std::runtime_error("non-monotone zero at line " + std::to_string(lineno) +
                                     " of " + path);
        }
        out.values.push_back(value);
    }
    if (out.values.empty()) throw std::runtime_error("no zeros found in " + path);
    if (out.values.size() < count) {
        throw std::runtime_error("requested " + std::to_string(count) + " zeros but " + path +
                                 " holds only " + std::to_string(out.values.size()));
    }
    return out;
}

}  // namespace cyclelab
