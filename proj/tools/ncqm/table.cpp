#include "table.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace ncqm::cli {

namespace {

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string cell_text(Cell const& c)
{
    struct
    {
        std::string operator()(std::string const& s) const { return s; }
        std::string operator()(double v) const { return format_number(v); }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    } visit;
    return std::visit(visit, c);
}

nlohmann::ordered_json cell_json(Cell const& c)
{
    if (auto const* d = std::get_if<double>(&c))
        return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(format_number(*d));
    return std::visit([](auto const& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Table::write_csv(std::ostream& out) const
{
    for (auto const& [k, v] : config)
        out << "# " << k << " = " << v << '\n';
    for (auto const& n : notes)
        out << "# " << n << '\n';
    out << "# column units:";
    for (auto const& c : columns)
        if (!c.unit.empty())
            out << ' ' << c.name << " [" << c.unit << ']';
    out << '\n';
    if (residuals)
        for (auto const& [k, v] : *residuals)
            out << "# residual " << k << " = " << format_number(v) << '\n';

    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << csv_field(columns[i].name);
    out << '\n';
    for (auto const& row : rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(cell_text(row[i]));
        out << '\n';
    }
}

void Table::write_json(std::ostream& out) const
{
    nlohmann::ordered_json doc;
    auto& cfg = doc["config"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : config)
        cfg[k] = v;
    if (!notes.empty())
        cfg["notes"] = notes;
    auto& cols = doc["columns"] = nlohmann::ordered_json::array();
    for (auto const& c : columns)
        cols.push_back({{"name", c.name}, {"unit", c.unit}});
    auto& body = doc["rows"] = nlohmann::ordered_json::array();
    for (auto const& row : rows)
    {
        auto r = nlohmann::ordered_json::array();
        for (auto const& c : row)
            r.push_back(cell_json(c));
        body.push_back(std::move(r));
    }
    if (residuals)
    {
        auto& res = doc["residuals"] = nlohmann::ordered_json::object();
        for (auto const& [k, v] : *residuals)
            res[k] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(format_number(v));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace ncqm::cli
