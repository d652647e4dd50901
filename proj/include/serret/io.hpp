#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "serret/algorithm.hpp"
#include "serret/expansion.hpp"
#include "serret/graph.hpp"
#include "serret/transducer.hpp"

namespace serret {

using Json = nlohmann::ordered_json;

struct SpecFile {
  SlowAlgorithm algorithm;
  std::optional<Window> window;
};

/// {"branches": ["LLL", [[1,0],[1,1]], ...]} or
/// {"partition": [{"interval": ["0/1","1/3"], "e": 1}, ...]}, with an
/// optional "window": {"i":0,"j":0,"open_left":false,"open_right":true}.
/// Throws Error(Parse) on malformed input and the validation errors.
SpecFile parse_spec(const Json& j);
SpecFile load_spec(const std::string& path);

Window parse_window(const Json& j);
/// "i,j" or "i,j,open_right" (also "open_left", "open").
Window parse_window_text(const std::string& text);

Json to_json(const Integer& n);
Json to_json(const ProjMatrix& m);
Json to_json(const Point& x);
std::string symbols_text(const Symbols& s, bool letters = false);

Json algorithm_json(const SlowAlgorithm& t);
Json graph_json(const AlgGraph& g, const OpFibration* phi = nullptr);
Json schreier_json(const SchreierGraph& s);
Json transducer_json(const Transducer& t, bool letters_in);
Json fingerprint_json(const Fingerprint& f);
Json defect_json(const DefectReport& d, const AlgGraph& g);
Json sync_json(const SyncResult& r, const Transducer& t);
Json verdict_json(const SerretVerdict& v);
Json orbit_json(const OrbitResult& r, bool quadratic, int alphabet);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace serret
