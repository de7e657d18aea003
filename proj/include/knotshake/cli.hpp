#pragma once

#include "knotshake/error.hpp"
#include "knotshake/knot_expr.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace knotshake {

class ParseError : public DomainError {
public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// expr := "U" | "T(" int "," int ")" | "twist(" int ")"
//       | "seifert(" path-or-inline ")" | "mirror(" expr ")"
//       | "sum(" expr { "," expr } ")" | "cable(" int "," int ";" expr ")"
KnotExprPtr parse_knot_expr(std::string_view text);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int computation = 2;
inline constexpr int obstructed = 3;
} // namespace exit_code

// args excludes the program name. JSON goes to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace knotshake
