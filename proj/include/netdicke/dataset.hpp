#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace netdicke {

// Tabular result with a '#'-comment metadata header. Cells are numbers or
// short strings (phase labels, method names); all floating-point output is
// printed with 12 significant digits so files are reproducible byte for
// byte for a given configuration.
struct Dataset {
    using Cell = std::variant<double, std::string>;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double x);

void write_csv(std::ostream& out, const Dataset& ds);
void write_json(std::ostream& out, const Dataset& ds);

// True when every row carries a nonzero error code (last column); the CLI
// maps this to the "entire sweep failed" exit status.
bool all_rows_failed(const Dataset& ds);

}  // namespace netdicke
