#pragma once

#include <string>
#include <vector>

namespace candec {

// A named check pairing a frozen expected rendering with the one the library
// produces.  The two must be byte-identical.
struct WorkedExample {
    std::string name;
    std::string expected;
    std::string actual;

    bool ok() const { return expected == actual; }
};

std::vector<WorkedExample> run_worked_examples();

}  // namespace candec
