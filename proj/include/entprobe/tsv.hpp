#pragma once
// Line-oriented TSV reading with positional error reporting.

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace entprobe {

// Hard input/validation error. Messages carry file and line where known.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

inline std::vector<std::string> split_spaces(const std::string& s) {
    std::vector<std::string> tokens;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

// Calls fn(lineNumber, fields) for every non-empty line. A trailing '\r' is
// stripped so CRLF inputs fail loudly on content, not invisibly on the last
// field.
inline void for_each_tsv_row(const std::string& path,
                             const std::function<void(size_t, const std::vector<std::string>&)>& fn) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        fn(lineno, split_tabs(line));
    }
}

}  // namespace entprobe
