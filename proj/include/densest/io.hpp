#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "densest/hypergraph.hpp"

namespace densest {

enum class InstanceFormat { kText, kJson };

using WarningSink = std::function<void(const std::string&)>;

/// Reads an instance in the line-based text format or its JSON mirror.
///
/// Text: first non-comment line `n m`, then m lines `k v1 .. vk SPEC` with
/// SPEC one of `table w0 .. wk`, `linear w`, `allornothing w`, `power w a`.
/// `#` starts a comment. Weights are decimal strings or `a/b`.
///
/// JSON: {"n": 3, "edges": [{"vertices": [0,1,2],
///        "weight": {"type": "table", "values": ["0","1","3","6"]}}]}
/// with type one of table/linear/allornothing/power and the closed forms
/// using "w" (and "a" for power). Numbers may be JSON numbers or strings.
///
/// Throws ParseError for malformed input and ValidationError for weight
/// tables that break the non-decreasing/non-negative contract. Tables with
/// f(0) != 0 are shifted and reported through `warn`.
WeightedHypergraph load_instance(std::istream& in, InstanceFormat format,
                                 const WarningSink& warn = {});

/// Format from the extension: ".json" is JSON, anything else text.
WeightedHypergraph load_instance_file(const std::string& path,
                                      const WarningSink& warn = {});

InstanceFormat format_for_path(const std::string& path);

void write_text(std::ostream& out, const WeightedHypergraph& instance);
void write_json(std::ostream& out, const WeightedHypergraph& instance);

}  // namespace densest
