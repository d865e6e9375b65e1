// Text grammars for letters, multisets, partitions, tableaux, biwords,
// algebra elements and module vectors, plus structured records.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mmpa/algebra.hpp"
#include "mmpa/representations.hpp"
#include "mmpa/super_rsk.hpp"
#include "mmpa/symfun.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// Grammar (whitespace is insignificant except as a cell separator):
//   letter      := ['~'] ['_'] digits           e.g. 3  ~3  _3  ~_3
//   multiset    := '{' [letter (',' letter)*] '}'
//   partition   := '[' [multiset (',' multiset)*] ']'
//   cell        := '.' | letter | multiset      '.' is an empty box
//   tableau     := '[' [row ('|' row)*] ']'     rows bottom first, cells by spaces
//   biword      := '[' cell* '/' cell* ']'      top row then bottom row
//   composition := [int (',' int)*]
//   shape       := '(' [int (',' int)*] ')'  or a bare composition
//   poly        := term (('+'|'-') term)*       term := [rational] ['x' ['^' int]]
//   element     := '0' | eterm ((';' | '+' | newline) eterm)*
//   eterm       := [poly '*'] partition
//   vector      := '0' | vterm ((';' | '+' | newline) vterm)*
//   vterm       := [rational '*'] tableau
// Printers emit one "coeff * key" line per term of an element or vector.
Letter parse_letter(std::string_view s);
Multiset parse_multiset(std::string_view s);
MultisetPartition parse_partition(std::string_view s);
/// A partition whose letters are plain/underlined values 1..r, as a SetPartition.
SetPartition parse_set_partition(std::string_view s);
Tableau parse_tableau(std::string_view s);
Biword parse_biword(std::string_view s);
WeakComposition parse_composition(std::string_view s);
Shape parse_shape(std::string_view s);
mpq_class parse_rational(std::string_view s);
CoeffPoly parse_poly(std::string_view s);
MPElement parse_element(std::string_view s);
ModuleVector parse_vector(std::string_view s);

std::string to_string(Letter x);
std::string to_string(const Multiset& m);
std::string to_string(const MultisetPartition& p);
std::string to_string(const SetPartition& p);
std::string to_string(const Tableau& t);
std::string to_string(const Biword& w);
std::string to_string(const WeakComposition& c);
std::string to_string(const Shape& s);
std::string to_string(const CoeffPoly& p);
std::string to_string(const MPElement& e);
std::string to_string(const PAElement& e);
std::string to_string(const ModuleVector& v);

MultisetPartition as_multiset_partition(const SetPartition& p);
SetPartition as_set_partition(const MultisetPartition& p);

}  // namespace mmpa
