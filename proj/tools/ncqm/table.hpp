#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ncqm::cli {

using Cell = std::variant<std::string, double, long long, bool>;

struct Column
{
    std::string name;
    std::string unit;  //!< empty for labels and counters
};

/// A result table with its config echo, written as csv or json.
struct Table
{
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> notes;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::optional<std::vector<std::pair<std::string, double>>> residuals;

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

/// %.17g, with nan and inf spelled out.
std::string format_number(double v);

}  // namespace ncqm::cli
