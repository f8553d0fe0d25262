#include "cog/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cog::io {

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw ParseError("failed to read input stream");
    }
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        }
        return ch == '{';
    }
    return false;
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
}

std::vector<double> number_array(const nlohmann::json& doc, const char* field) {
    if (!doc.contains(field)) {
        throw ParseError(std::string("missing field \"") + field + "\"");
    }
    const auto& arr = doc.at(field);
    if (!arr.is_array() || arr.empty()) {
        throw ParseError(std::string("field \"") + field + "\" must be a non-empty array");
    }
    std::vector<double> values;
    values.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) {
            throw ParseError(std::string("field \"") + field + "\" entry " +
                             std::to_string(i) + " is not a number");
        }
        values.push_back(arr[i].get<double>());
    }
    return values;
}

void check_declared_dim(const nlohmann::json& doc, std::size_t actual) {
    if (!doc.contains("n")) {
        return;
    }
    const auto& n = doc.at("n");
    if (!n.is_number_unsigned() && !n.is_number_integer()) {
        throw ParseError("field \"n\" must be an integer");
    }
    const auto declared = n.get<std::int64_t>();
    if (declared < 0 || static_cast<std::size_t>(declared) != actual) {
        throw ParseError("field \"n\" (" + std::to_string(declared) +
                         ") does not match array length " + std::to_string(actual));
    }
}

std::vector<double> parse_csv_row(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string cell = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        std::size_t begin = cell.find_first_not_of(" \t\r\n");
        if (begin == std::string::npos) {
            throw ParseError("empty csv cell at position " + std::to_string(values.size()));
        }
        std::size_t end = cell.find_last_not_of(" \t\r\n");
        cell = cell.substr(begin, end - begin + 1);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(cell, &consumed);
        } catch (const std::exception&) {
            throw ParseError("csv cell " + std::to_string(values.size()) +
                             " is not a number: \"" + cell + "\"");
        }
        if (consumed != cell.size()) {
            throw ParseError("csv cell " + std::to_string(values.size()) +
                             " has trailing characters: \"" + cell + "\"");
        }
        values.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return values;
}

}  // namespace

FileFormat format_from_path(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    if (dot == std::string::npos) {
        return FileFormat::automatic;
    }
    const std::string ext = path.substr(dot + 1);
    if (ext == "json") {
        return FileFormat::json;
    }
    if (ext == "csv") {
        return FileFormat::csv;
    }
    return FileFormat::automatic;
}

RealVector read_vector(std::istream& in, FileFormat format) {
    const std::string text = slurp(in);
    if (format == FileFormat::automatic) {
        format = looks_like_json(text) ? FileFormat::json : FileFormat::csv;
    }
    std::vector<double> components;
    if (format == FileFormat::json) {
        const nlohmann::json doc = parse_json(text);
        components = number_array(doc, "components");
        check_declared_dim(doc, components.size());
    } else {
        components = parse_csv_row(text);
    }
    try {
        return RealVector(std::move(components));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

RealVector read_vector_file(const std::string& path, FileFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    if (format == FileFormat::automatic) {
        format = format_from_path(path);
    }
    return read_vector(in, format);
}

std::vector<double> read_phases(std::istream& in) {
    const nlohmann::json doc = parse_json(slurp(in));
    std::vector<double> theta = number_array(doc, "theta");
    check_declared_dim(doc, theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (!std::isfinite(theta[i])) {
            throw ParseError("field \"theta\" entry " + std::to_string(i) + " is not finite");
        }
    }
    return theta;
}

std::vector<double> read_phases_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    return read_phases(in);
}

std::string format_number(double x) {
    if (x == 0.0) {
        return "0";  // fold the sign of zero for stable golden output
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_vector_csv(std::ostream& out, const RealVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << format_number(v[i]);
    }
    out << '\n';
}

void write_vector_json(std::ostream& out, const RealVector& v) {
    out << "{\"n\": " << v.dim() << ", \"components\": [";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i != 0) {
            out << ", ";
        }
        out << format_number(v[i]);
    }
    out << "]}\n";
}

void write_phases_json(std::ostream& out, const std::vector<double>& theta) {
    out << "{\"n\": " << theta.size() << ", \"theta\": [";
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (i != 0) {
            out << ", ";
        }
        out << format_number(theta[i]);
    }
    out << "]}\n";
}

}  // namespace cog::io
