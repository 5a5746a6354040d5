#pragma once

#include <iosfwd>
#include <string>

#include "cmt/structure.hpp"

namespace cmt {

// Text format shared by .gst (general) and .fst (two-valued) files:
//
//   vocabulary
//     predicate P 2
//     function F 1
//     constant c
//   universe 3
//   P 0 1 = 3/4
//   F 1 -> 0
//   c = 2
//
// One line per table entry, every entry required, `#` starts a comment.
// General values are rationals like 3/4 (or 0, 1); two-valued entries are
// written true/false.  A vocabulary file is just the header block.

VocabPtr read_vocabulary(std::istream& in);
GeneralStructure read_general_structure(std::istream& in);
FOStructure read_fo_structure(std::istream& in);

void write_vocabulary(std::ostream& out, const Vocabulary& v);
void write_general_structure(std::ostream& out, const GeneralStructure& m);
void write_fo_structure(std::ostream& out, const FOStructure& k);

VocabPtr load_vocabulary(const std::string& path);
GeneralStructure load_general_structure(const std::string& path);
FOStructure load_fo_structure(const std::string& path);
void save_general_structure(const std::string& path, const GeneralStructure& m);
void save_fo_structure(const std::string& path, const FOStructure& k);

}  // namespace cmt
