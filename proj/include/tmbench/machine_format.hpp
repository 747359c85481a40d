#pragma once

#include <string>
#include <string_view>

#include "tmbench/machine.hpp"

namespace tmbench {

// Line-oriented machine description:
//
//   states: <id> <id> ...
//   start: <id>
//   accept: <id>
//   reject: <id>
//   input_alphabet: <sym> ...
//   tape_alphabet: <sym> ... _
//   trans: <state> <sym> -> <state> <sym> <L|R>
//
// '#' starts a comment. Symbols are single characters; the separator '#' and
// the backslash are spelled "\#" and "\\".

// Returns a machine that passes validate_machine(), or throws ParseError with
// the offending line number.
Machine parse_machine(std::string_view text);

// Canonical text: header lines, then one trans line per table entry in state
// then tape-alphabet order. parse_machine(emit_machine(m)) reproduces m.
std::string emit_machine(const Machine& m);

}  // namespace tmbench
