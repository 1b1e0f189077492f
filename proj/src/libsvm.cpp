#include "doco/libsvm.hpp"

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace doco {

namespace {

double parse_double(const char* tok, const char** end_out, int line_no) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(tok, &end);
    if (end == tok || errno == ERANGE) throw ParseError(line_no, std::string("non-numeric token '") + tok + "'");
    if (end_out) *end_out = end;
    return v;
}

}  // namespace

LibsvmData parse_libsvm(std::istream& in) {
    LibsvmData data;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and trailing whitespace
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;

        std::istringstream tokens(line);
        std::string tok;
        tokens >> tok;
        const char* end = nullptr;
        double raw_label = parse_double(tok.c_str(), &end, line_no);
        if (*end != '\0') throw ParseError(line_no, "malformed label '" + tok + "'");
        double label;
        if (raw_label == 1.0) label = 1.0;
        else if (raw_label == -1.0) label = -1.0;
        else if (raw_label == 0.0) label = -1.0;  // {0,1} datasets
        else throw ParseError(line_no, "label must be -1, 0 or +1, got '" + tok + "'");

        Example ex;
        ex.label = label;
        std::int32_t prev_index = 0;
        while (tokens >> tok) {
            std::size_t colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError(line_no, "expected idx:val pair, got '" + tok + "'");
            std::string idx_s = tok.substr(0, colon);
            std::string val_s = tok.substr(colon + 1);
            double idx_d = parse_double(idx_s.c_str(), &end, line_no);
            if (*end != '\0' || idx_d != static_cast<std::int32_t>(idx_d))
                throw ParseError(line_no, "feature index must be an integer, got '" + idx_s + "'");
            auto idx = static_cast<std::int32_t>(idx_d);
            if (idx < 1) throw ParseError(line_no, "feature index must be >= 1");
            if (idx <= prev_index)
                throw ParseError(line_no, "feature indices must be strictly increasing (" +
                                              std::to_string(idx) + " after " + std::to_string(prev_index) + ")");
            double val = parse_double(val_s.c_str(), &end, line_no);
            if (*end != '\0') throw ParseError(line_no, "malformed feature value '" + val_s + "'");
            ex.features.index.push_back(idx);
            ex.features.value.push_back(val);
            prev_index = idx;
        }
        if (prev_index > data.dimension) data.dimension = prev_index;
        data.examples.push_back(std::move(ex));
    }
    if (data.examples.empty()) throw ParseError(line_no, "no examples in input");
    return data;
}

LibsvmData parse_libsvm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_libsvm(in);
}

LibsvmData parse_libsvm_text(const std::string& text) {
    std::istringstream in(text);
    return parse_libsvm(in);
}

void write_libsvm(std::span<const Example> examples, std::ostream& out) {
    out.precision(17);
    for (const Example& ex : examples) {
        out << (ex.label > 0 ? "+1" : "-1");
        for (std::size_t k = 0; k < ex.features.index.size(); ++k)
            out << ' ' << ex.features.index[k] << ':' << ex.features.value[k];
        out << '\n';
    }
}

std::string to_libsvm_text(std::span<const Example> examples) {
    std::ostringstream out;
    write_libsvm(examples, out);
    return out.str();
}

}  // namespace doco
