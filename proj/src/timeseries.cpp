#include "mxmap/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "mxmap/errors.hpp"

namespace mxmap {

void TimeSeries::validate() const {
    if (values.empty())
        throw DataError("series '" + name + "' is empty");
    for (double v : values) {
        if (!std::isfinite(v))
            throw DataError("series '" + name + "' contains a non-finite value");
    }
}

Dataset::Dataset(std::vector<TimeSeries> variables) : variables_(std::move(variables)) {
    if (variables_.empty()) throw DataError("dataset has no variables");
    length_ = variables_.front().length();
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        v.validate();
        if (v.length() != length_)
            throw DataError("series '" + v.name + "' has length " + std::to_string(v.length()) +
                            ", expected " + std::to_string(length_));
        if (!seen.insert(v.name).second)
            throw DataError("duplicate variable name '" + v.name + "'");
    }
}

std::vector<std::string> Dataset::names() const {
    std::vector<std::string> out;
    out.reserve(variables_.size());
    for (const auto& v : variables_) out.push_back(v.name);
    return out;
}

std::size_t Dataset::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name) return i;
    throw DataError("no variable named '" + name + "' in dataset");
}

Dataset Dataset::prefix(std::size_t len) const {
    if (len == 0 || len > length_)
        throw ParameterError("prefix length " + std::to_string(len) + " out of range [1, " +
                             std::to_string(length_) + "]");
    std::vector<TimeSeries> vars;
    vars.reserve(variables_.size());
    for (const auto& v : variables_)
        vars.push_back({v.name, std::vector<double>(v.values.begin(), v.values.begin() + len)});
    return Dataset(std::move(vars));
}

void Dataset::zscore() {
    for (auto& v : variables_) {
        double mean = 0.0;
        for (double x : v.values) mean += x;
        mean /= static_cast<double>(v.length());
        double ss = 0.0;
        for (double x : v.values) ss += (x - mean) * (x - mean);
        double sd = std::sqrt(ss / static_cast<double>(v.length()));
        if (sd == 0.0)
            throw DegenerateInputError("cannot standardize constant series '" + v.name + "'");
        for (double& x : v.values) x = (x - mean) / sd;
    }
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string to_csv(const Dataset& data) {
    std::string out;
    const auto& vars = data.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ',';
        out += vars[i].name;
    }
    out += '\n';
    for (std::size_t t = 0; t < data.length(); ++t) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i) out += ',';
            out += format_double(vars[i].values[t]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const Dataset& data, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw DataError("cannot open '" + path + "' for writing");
    f << to_csv(data);
    if (!f) throw DataError("failed writing '" + path + "'");
}

Dataset parse_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw DataError("csv is empty");
    std::vector<TimeSeries> vars;
    for (const auto& field : split_fields(line)) {
        std::string name = strip(field);
        if (name.empty()) throw DataError("csv header contains an empty variable name");
        vars.push_back({name, {}});
    }
    std::size_t line_no = 1;
    while (std::getline(ss, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != vars.size())
            throw DataError("csv row " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(vars.size()));
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::string field = strip(fields[i]);
            double v = 0.0;
            auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || p != field.data() + field.size())
                throw DataError("csv row " + std::to_string(line_no) + ": cannot parse '" + field +
                                "' as a number");
            if (!std::isfinite(v))
                throw DataError("csv row " + std::to_string(line_no) + ": non-finite value");
            vars[i].values.push_back(v);
        }
    }
    if (vars.front().values.empty()) throw DataError("csv has a header but no data rows");
    return Dataset(std::move(vars));
}

Dataset read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_csv(buf.str());
}

} // namespace mxmap
