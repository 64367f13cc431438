/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/element.hpp"
#include "tbar/qembed.hpp"
#include "tbar/report.hpp"
#include "tbar/roots.hpp"
#include "tbar/words.hpp"

#include <json.hpp>

// JSON forms. Dyadic values are always strings in the dyadic text grammar.
//
//   PLMap     {"domain": ["0","1"], "breakpoints": [["x","y"], ...]}
//   Element   {"type": "tbar", "breakpoints": [["0","1/2"], ..., ["1","3/2"]]}
//   RootGerm  {"n": 3, "partition": ["0", ...], "pieces": [<PLMap>, ...]}
//   Chain     {"kind": "standard", "elements": [<Element>, ...]}
//   Report    {"pass": true, "checks": [{"name": ..., "pass": ..., "detail": ...}]}
//   Word      ["b", "a", "a", "B"]
//
// The from_json functions throw ParseError on malformed input and the
// usual InvariantError when the data is well-formed but not a valid value.

namespace tbar {

using json = nlohmann::ordered_json;

json to_json(const Dyadic &x);
json to_json(const PLMap &f);
json to_json(const Element &e);
json to_json(const RootGerm &germ);
json to_json(const Chain &chain);
json to_json(const Report &report);
json to_json(const Word &w);

Dyadic dyadic_from_json(const json &j);
PLMap plmap_from_json(const json &j);
Element element_from_json(const json &j);
RootGerm root_germ_from_json(const json &j);
Chain chain_from_json(const json &j);
Word word_from_json(const json &j);

} // namespace tbar
