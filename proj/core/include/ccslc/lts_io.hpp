// Serialization of transition systems: plain text records, Graphviz DOT,
// and JSON (schema version 1).

#pragma once

#include <string>

#include "ccslc/semantics.hpp"

namespace ccslc {

// Line records: a header, then one `state` line and one `trans` line per
// state and transition, in deterministic order.
std::string lts_to_text(const Lts& lts);

// A digraph with the root drawn as a double circle.
std::string lts_to_dot(const Lts& lts);

// {"schema": 1, "root": ..., "states": [...], "transitions": [...]}
std::string lts_to_json(const Lts& lts);

}  // namespace ccslc
