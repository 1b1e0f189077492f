#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "doco/linalg.hpp"

namespace doco {

struct Example {
    SparseVec features;
    double label = 1.0;  // -1 or +1
};

struct LibsvmData {
    std::vector<Example> examples;
    int dimension = 0;  // max feature index seen
};

// LIBSVM text: one example per line, "label idx:val idx:val ...", indices
// 1-based and strictly increasing within a line. Labels must be -1, +1 or
// 0/1 (0 is mapped to -1). Malformed input raises ParseError with the line
// number; an input without any example is an error.
LibsvmData parse_libsvm(std::istream& in);
LibsvmData parse_libsvm_file(const std::string& path);
LibsvmData parse_libsvm_text(const std::string& text);

void write_libsvm(std::span<const Example> examples, std::ostream& out);
std::string to_libsvm_text(std::span<const Example> examples);

}  // namespace doco
