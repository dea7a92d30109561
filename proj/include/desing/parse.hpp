#ifndef DESING_PARSE_HPP
#define DESING_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/polynomial.hpp"

namespace desing {

struct ParseError : error {
    ParseError(std::size_t line, std::size_t col, const std::string& what)
        : error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    std::size_t line, col;
};

struct ProblemSpec {
    FieldSpec field;
    std::vector<std::string> var_names;
    std::string b_text;
    Polynomial b;  // over make_ring(field, {}, var_names)
    std::optional<long> max_depth;
    std::optional<long> series_order;
};

// Input format, one `key: value` entry per line (blank lines and lines
// starting with '#' are ignored):
//   char: 0
//   vars: x0 x1
//   b: x0^3 + x0*x1 + x1^5
// Optional entries: maxdepth, seriesorder.
ProblemSpec parse_problem(const std::string& text);

// Polynomial expression over an existing ring; `+ - * ^`, rational
// coefficients, parentheses; errors carry line/column. line0 offsets the
// reported line for embedded strings.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line0 = 1,
                            std::size_t col0 = 1);

}  // namespace desing

#endif
