#pragma once

// Complex file format and atomic file output.

#include <string>

#include "lapbound/complex.hpp"

namespace lapbound {

// Parses {"vertices": [...], "maximal_faces": [[...], ...]}. Unknown fields
// are rejected. Throws ParseError with a descriptive message.
SimplicialComplex parse_complex_json(const std::string& text);
SimplicialComplex load_complex_json(const std::string& path);

// Serializes a complex in the input format (vertices plus maximal faces), so
// printed counterexamples can be fed straight back in.
std::string complex_to_json(const SimplicialComplex& x);

// Writes via a temporary file in the same directory, then renames, so
// readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace lapbound
