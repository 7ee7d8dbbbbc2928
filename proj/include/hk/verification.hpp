#pragma once

// Exhaustive checks of the correspondences between the crystals, insertions and maps,
// over bounded instance spaces.

#include <string>
#include <vector>

namespace hk {

enum class Exec { serial, parallel };

// Every field bounds one dimension of an instance space; zero empties the space.
struct Bounds {
    int cells = 0;    // cells of lambda/mu
    int m = 0;        // factors, or largest tableau entry
    int excess = 0;   // tableau excess
    int n = 0;        // letters lie in [1, n-1]
    int letters = 0;  // letters of a factorization or length of a word
};

struct Report {
    std::string tag;
    long long instances = 0;
    long long failures = 0;
    double seconds = 0;
    std::string witness;  // first failure in enumeration order
    bool ok() const { return failures == 0; }
};

const std::vector<std::string>& theorem_tags();
std::string theorem_summary(const std::string& tag);
Bounds default_bounds(const std::string& tag);
Bounds deep_bounds(const std::string& tag);

// Throws std::invalid_argument on an unknown tag.
Report check_theorem(const std::string& tag, const Bounds& bounds, Exec exec = Exec::parallel);

}  // namespace hk
