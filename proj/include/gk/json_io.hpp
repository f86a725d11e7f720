#pragma once

#include <string>

#include <json.hpp>

#include "gk/graph.hpp"
#include "gk/spectrum.hpp"

namespace gk {

using json = nlohmann::json;

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"name": ..., "maximal_orders": [...]}. Unknown keys are rejected.
json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

// {"vertices": [...], "edges": [[a, b], ...]}. Unknown keys are rejected.
json graph_to_json(const GkGraph& g);
GkGraph graph_from_json(const json& j);

bool looks_like_spectrum(const json& j);
bool looks_like_graph(const json& j);

// Reads and parses a JSON file; format_error on I/O or syntax failure.
json read_json_file(const std::string& path);

// Two-space indented, trailing newline.
std::string dump(const json& j);

}  // namespace gk
