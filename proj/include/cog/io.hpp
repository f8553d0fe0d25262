// io.hpp - vector and phase file formats.
//
// Vector files: json {"n": N, "components": [ ... ]} or a single csv row of
// N decimal numbers with no header. Phase files: json {"n": N, "theta":
// [ ... ]} with angles in radians. Writers print 12 significant digits.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cog/core.hpp"

namespace cog::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FileFormat { json, csv, automatic };

/// Pick a format from a file name extension (.json / .csv); anything else
/// stays automatic, which sniffs the payload (a leading '{' means json).
FileFormat format_from_path(const std::string& path);

RealVector read_vector(std::istream& in, FileFormat format = FileFormat::automatic);
RealVector read_vector_file(const std::string& path, FileFormat format = FileFormat::automatic);

/// Phase list from a {"n": ..., "theta": [...]} document. Values are
/// returned as-is (not canonicalized).
std::vector<double> read_phases(std::istream& in);
std::vector<double> read_phases_file(const std::string& path);

void write_vector_csv(std::ostream& out, const RealVector& v);
void write_vector_json(std::ostream& out, const RealVector& v);
void write_phases_json(std::ostream& out, const std::vector<double>& theta);

/// 12-significant-digit decimal rendering used by every writer.
std::string format_number(double x);

}  // namespace cog::io
