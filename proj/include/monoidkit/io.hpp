#pragma once

// Flat-file formats and the DOT egg-box export.
//
// Table file ("monoid v1"): size, identity, generators, optional names,
// then the row-major table; '#' starts a comment, LF line endings.
// Matrix file: "rees <I> <J>" then J rows of I group-element names.

#include <string>

#include "monoidkit/constructions.hpp"
#include "monoidkit/monoid.hpp"

namespace monoidkit {

FiniteMonoid parse_monoid_text(const std::string& text, const std::string& context = "<text>");
FiniteMonoid load_monoid_file(const std::string& path);
std::string emit_monoid_text(const FiniteMonoid& m);
void save_monoid_file(const FiniteMonoid& m, const std::string& path);

struct MatrixFile {
  std::uint32_t icount = 0, jcount = 0;
  std::vector<std::string> entries;  // row-major, jcount rows of icount names
};

MatrixFile parse_matrix_text(const std::string& text, const std::string& context = "<text>");
MatrixFile load_matrix_file(const std::string& path);
std::string emit_matrix_text(const MatrixFile& m);

// binds entry names to elements of the structure group
ReesSpec rees_spec_from_matrix(const MatrixFile& file, const FiniteMonoid& group);

// One cluster per D-class; rows are R-classes, columns L-classes, one node
// per H-class labelled with its size, a star for group H-classes, and the
// Schutzenberger group order otherwise.
std::string export_eggbox_dot(const FiniteMonoid& m);

}  // namespace monoidkit
