// Text syntax for mapping-class words, curves, sheaf tags, B-words and
// divisors, as used on the command line.
//
//   word    := term+            term := gen ('^' int)?
//   gen     := 'TY' | 'T'<i> | 'H'<i> ('[' <a> ']')?      (a defaults to -1)
//   curve   := 'A' | 'B'<i> | 'G'<i> '[' <a> ']' | 'apply(' word ',' curve ')'
//   tag     := 'OY' | 'Ox(' i ')' | 'OG(' i ',' a ')' | 'PsiOx(' i ')'
//   bword   := bterm+           bterm := 'g'<j>'.'<i>'['<a>']' ('^' int)? | 'g'<i>'['<a>']' ('^' int)? | 'Y'<j> ('^' int)?
//   divisor := ['-'] dterm (('+'|'-') dterm)*     dterm := int? ('x' | 'G') <i>
#pragma once

#include <stdexcept>
#include <string>

#include "tmcg/bgroup.hpp"
#include "tmcg/dcat.hpp"
#include "tmcg/mcg.hpp"

namespace tmcg {

/// token is 1-based (0 when the error is not tied to a token); column is the
/// 1-based character offset in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t token, std::size_t column);
  std::size_t token() const { return token_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t token_;
  std::size_t column_;
};

/// "H3[0]" becomes T3^-1 H3 T3; "id" is the empty word.
MappingClass parse_word(const std::string& text, int n);
/// Canonical form: one generator per term, powers folded, "id" for the empty word.
std::string format_word(const MappingClass& m);

Curve parse_curve(const std::string& text, const TorusModel& model);
ObjTag parse_tag(const std::string& text, int n);
/// Y<j> expands to the fiber-class word of fiber j; g<i>[a] means fiber 1.
BWord parse_bword(const std::string& text, const FiberConfig& cfg);
std::vector<DivisorTerm> parse_divisor(const std::string& text, int n);
/// Comma-separated integers.
MultiDegree parse_multidegree(const std::string& text);
/// Comma-separated fiber component counts.
FiberConfig parse_fibers(const std::string& text);

}  // namespace tmcg
