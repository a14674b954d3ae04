#include "netdicke/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace netdicke {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_csv(std::ostream& out, const Dataset& ds) {
    for (const auto& [k, v] : ds.metadata) out << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < ds.columns.size(); ++i)
        out << (i ? "," : "") << ds.columns[i];
    out << "\n";
    for (const auto& row : ds.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            if (const double* d = std::get_if<double>(&row[i]))
                out << format_double(*d);
            else
                out << std::get<std::string>(row[i]);
        }
        out << "\n";
    }
}

void write_json(std::ostream& out, const Dataset& ds) {
    nlohmann::ordered_json j;
    j["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : ds.metadata) j["metadata"][k] = v;
    j["columns"] = ds.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : ds.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (const double* d = std::get_if<double>(&cell))
                jrow.push_back(*d);  // non-finite values serialize as null
            else
                jrow.push_back(std::get<std::string>(cell));
        }
        j["rows"].push_back(std::move(jrow));
    }
    out << j.dump(2) << "\n";
}

bool all_rows_failed(const Dataset& ds) {
    if (ds.rows.empty()) return false;
    for (const auto& row : ds.rows) {
        if (row.empty()) return false;
        const double* err = std::get_if<double>(&row.back());
        if (err == nullptr || *err < 1.0) return false;
    }
    return true;
}

}  // namespace netdicke
