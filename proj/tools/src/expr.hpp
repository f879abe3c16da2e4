#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ealab/table.hpp"

namespace ealab::cli {

/// Reads a file (or stdin for "-") and returns its text.
using FileReader = std::function<std::string(const std::string&)>;

/// Evaluates a construction expression given as command-line words:
///
///   expr := chain K | product atom+ | hsum atom+ | from-oml PATH | atom
///   atom := '(' expr ')' | chain K | from-oml PATH | PATH
///
/// PATH names an .ea file. Words are split on whitespace and parentheses,
/// so
/// `product (chain 3) (hsum (chain 3) (chain 3))` works unquoted.
/// Malformed expressions raise Error(kInvalidArgument).
EffectAlgebraTable evaluate_construction(const std::vector<std::string>& words,
                                         const FileReader& read);

}  // namespace ealab::cli
