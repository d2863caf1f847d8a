#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

#include "ncqm/spectrum.hpp"

#ifndef NCQM_DEFAULT_CONSTANTS
#define NCQM_DEFAULT_CONSTANTS "data/constants.conf"
#endif

namespace ncqm {

namespace {

std::string trim(std::string const& s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

PhysicalConstants load_constants(std::optional<std::filesystem::path> path)
{
    if (!path)
    {
        char const* env = std::getenv("NCQM_CONSTANTS");
        path = env && *env ? std::filesystem::path(env)
                           : std::filesystem::path(NCQM_DEFAULT_CONSTANTS);
    }
    std::ifstream in(*path);
    if (!in)
        throw ConfigError("cannot open constants file " + path->string());

    std::map<std::string, double> values;
    std::string line;
    for (unsigned lineno = 1; std::getline(in, line); ++lineno)
    {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path->string() + ":" + std::to_string(lineno) + ": expected key = value");
        std::string const key = trim(line.substr(0, eq));
        std::string const text = trim(line.substr(eq + 1));
        try
        {
            std::size_t used = 0;
            double const v = std::stod(text, &used);
            if (used != text.size() || !std::isfinite(v) || v <= 0)
                throw std::invalid_argument(text);
            values[key] = v;
        }
        catch (std::exception const&)
        {
            throw ConfigError(path->string() + ":" + std::to_string(lineno) + ": bad value for "
                              + key);
        }
    }

    auto get = [&](char const* key) {
        auto it = values.find(key);
        if (it == values.end())
            throw ConfigError(path->string() + ": missing key " + key);
        return it->second;
    };
    return {get("e_squared_gaussian"), get("m_electron"), get("c"), get("hbar")};
}

Lambda0 lambda0_estimate(PhysicalConstants const& k)
{
    Lambda0 out;
    double const rest = k.m_electron * k.c * k.c;
    out.classical_radius = k.e_squared / rest;
    out.lambda0 = 3.0 / 8.0 * out.classical_radius;
    out.fine_structure = k.e_squared / (k.hbar * k.c);
    out.bohr_radius = k.hbar * k.hbar / (k.m_electron * k.e_squared);
    out.ratio = out.lambda0 / out.bohr_radius;
    double const a2 = out.fine_structure * out.fine_structure;
    out.scale_printed = 9.0 / 64.0 * a2;
    out.scale_squared = out.ratio * out.ratio;
    return out;
}

}  // namespace ncqm
