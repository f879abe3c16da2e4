#pragma once

#include <string>
#include <string_view>

#include "ealab/constructions.hpp"
#include "ealab/order.hpp"
#include "ealab/table.hpp"

namespace ealab {

/// Text format, one directive per line, '#' starts a comment:
///
///   elements: 3
///   names: 0 a 1        # first name is the zero
///   one: 1
///   sum: a a 1          # a + a = 1
///
/// Sums are symmetrized and 0 + x = x is implied. Repeating a sum is fine,
/// contradicting one is not (ErrorKind::kContradictorySum). Undeclared
/// names raise kUnknownName; everything else malformed raises kParseError.
/// All three are thrown as ParseError carrying the line number.
EffectAlgebraTable parse_ea(std::string_view text);

/// Writes the header and one `sum:` line per defined pair x <= y of
/// non-zero elements, in index order. parse_ea(serialize_ea(t)) == t.
std::string serialize_ea(const EffectAlgebraTable& t);

/// Same skeleton with `leq: a b` lines (closed reflexively and
/// transitively) instead of sums; `one:` is optional and ignored.
Poset parse_poset(std::string_view text);

/// Header plus one `leq:` line per cover, in the order of Poset::covers().
std::string serialize_poset(const Poset& p);

/// `leq:` lines plus one `ortho: a b` line per pair (a^perp = b, stated
/// once per unordered pair).
OrthoLattice parse_ortholattice(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ealab
