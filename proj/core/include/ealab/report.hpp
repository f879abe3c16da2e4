#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ealab/table.hpp"

namespace ealab {

inline constexpr int kReportSchemaVersion = 1;

/// Full analysis as a JSON document (schema documented in
/// docs/report-schema.md). Keys are emitted in a fixed order and elements
/// are referred to by name, so equal inputs give byte-identical output.
///
/// An algebra failing the axioms yields a report with only the axiom
/// section filled in. Lattice-only sections are omitted for non-lattices.
std::string analysis_report(const EffectAlgebraTable& t);

/// Re-checks a report against the algebra it describes: states are
/// replayed with verify_state(), certificates against a freshly built
/// state system, and every predicate is recomputed. Returns one message
/// per discrepancy; empty means the report checks out.
std::vector<std::string> verify_report(const EffectAlgebraTable& t,
                                       std::string_view report_json);

}  // namespace ealab
