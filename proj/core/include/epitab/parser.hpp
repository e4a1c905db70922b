#ifndef EPITAB_PARSER_HPP
#define EPITAB_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "epitab/formula.hpp"

namespace epitab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Concrete syntax, tightest first:
//   prefix:  ~φ   D{a,...}φ   C{a,...}φ   K a φ
//   infix:   &   |   ->  (right-assoc)   <->
// Atoms and agent names match [a-z][a-z0-9_]*. Derived connectives and
// K are desugared into the core grammar (atoms, ~, &, D, C) at parse
// time:
//   a | b    ==>  ~(~a & ~b)
//   a -> b   ==>  ~(a & ~b)
//   a <-> b  ==>  (a -> b) & (b -> a), each desugared
//   K a φ    ==>  D{a} φ
FormulaId parse(std::string_view text, FormulaArena& arena,
                const AgentUniverse& universe);

}  // namespace epitab

#endif
