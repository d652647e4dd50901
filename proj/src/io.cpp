#include "serret/io.hpp"

#include <fstream>
#include <sstream>

#include "serret/errors.hpp"

namespace serret {

namespace {

Integer integer_of(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

ProjMatrix matrix_of_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw Error(ErrorKind::Parse, "expected a matrix [[a,b],[c,d]], got " + j.dump());
  }
  return {integer_of(j[0][0]), integer_of(j[0][1]), integer_of(j[1][0]), integer_of(j[1][1])};
}

ExtRational rational_of(const Json& j) {
  if (j.is_number_integer()) return ExtRational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected a rational, got " + j.dump());
}

}  // namespace

Window parse_window(const Json& j) {
  if (!j.is_object() || !j.contains("i")) throw Error(ErrorKind::Parse, "window needs at least \"i\"");
  Window w;
  w.first = j.at("i").get<int>();
  w.last = j.value("j", w.first);
  w.open_left = j.value("open_left", false);
  w.open_right = j.value("open_right", false);
  return w;
}

Window parse_window_text(const std::string& text) {
  std::stringstream in(text);
  std::string item;
  std::vector<std::string> parts;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (parts.size() < 2) throw Error(ErrorKind::Parse, "window must be i,j[,open_right]");
  Window w;
  try {
    w.first = std::stoi(parts[0]);
    w.last = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "window indices must be integers: " + text);
  }
  for (std::size_t k = 2; k < parts.size(); ++k) {
    if (parts[k] == "open_right") {
      w.open_right = true;
    } else if (parts[k] == "open_left") {
      w.open_left = true;
    } else if (parts[k] == "open") {
      w.open_left = w.open_right = true;
    } else {
      throw Error(ErrorKind::Parse, "unknown window flag '" + parts[k] + "'");
    }
  }
  return w;
}

SpecFile parse_spec(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "spec must be a JSON object");
  std::optional<SlowAlgorithm> t;
  if (j.contains("branches")) {
    const Json& b = j.at("branches");
    if (!b.is_array()) throw Error(ErrorKind::Parse, "\"branches\" must be an array");
    std::vector<ProjMatrix> ms;
    for (const auto& x : b) {
      ms.push_back(x.is_string() ? eval_word(GenWord::parse(x.get<std::string>())) : matrix_of_json(x));
    }
    t = SlowAlgorithm::from_matrices(std::move(ms));
  } else if (j.contains("partition")) {
    const Json& p = j.at("partition");
    if (!p.is_array()) throw Error(ErrorKind::Parse, "\"partition\" must be an array");
    std::vector<PartitionCell> cells;
    for (const auto& c : p) {
      if (!c.contains("interval") || !c.at("interval").is_array() || c.at("interval").size() != 2) {
        throw Error(ErrorKind::Parse, "partition cell needs \"interval\": [left, right]");
      }
      PartitionCell cell;
      cell.interval = {rational_of(c.at("interval")[0]), rational_of(c.at("interval")[1])};
      cell.e = c.value("e", 1);
      cells.push_back(cell);
    }
    t = SlowAlgorithm::from_partition(cells);
  } else {
    throw Error(ErrorKind::Parse, "spec needs \"branches\" or \"partition\"");
  }
  SpecFile out{std::move(*t), std::nullopt};
  if (j.contains("window")) out.window = parse_window(j.at("window"));
  return out;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return parse_spec(j);
}

Json to_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(n);
  }
  return n.str();
}

Json to_json(const ProjMatrix& m) {
  return Json::array({Json::array({to_json(m.a()), to_json(m.b())}), Json::array({to_json(m.c()), to_json(m.d())})});
}

Json to_json(const Point& x) { return to_string(x); }

std::string symbols_text(const Symbols& s, bool letters) {
  std::string out;
  bool commas = false;
  for (int x : s) commas = commas || x > 9;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (letters) {
      out += s[i] == 0 ? 'L' : 'N';
    } else {
      if (commas && i > 0) out += ',';
      out += std::to_string(s[i]);
    }
  }
  return out;
}

Json algorithm_json(const SlowAlgorithm& t) {
  Json branches = Json::array();
  for (int a = 0; a < t.size(); ++a) {
    const auto& iv = t.interval(a);
    branches.push_back({{"symbol", a},
                        {"word", t.branch_word(a)},
                        {"matrix", to_json(t.branch(a))},
                        {"interval", Json::array({iv.left.to_string(), iv.right.to_string()})},
                        {"e", t.flip(a) ? -1 : 1}});
  }
  return {{"branches", branches}};
}

Json graph_json(const AlgGraph& g, const OpFibration* phi) {
  Json vertices = Json::array(), edges = Json::array();
  for (int v = 0; v < g.size(); ++v) {
    vertices.push_back(g.vertices[v].name);
    for (int z = 0; z < 3; ++z) {
      Json e = {{"from", v}, {"to", g.next(v, z)}, {"label", std::string(1, label_char(z))}};
      if (z < 2 && g.vertices[v].emits[z] >= 0) e["emits"] = g.vertices[v].emits[z];
      edges.push_back(e);
    }
  }
  Json out = {{"vertices", vertices}, {"edges", edges}, {"root", 0}};
  if (phi) out["phi"] = phi->phi;
  return out;
}

Json schreier_json(const SchreierGraph& s) {
  Json vertices = Json::array(), edges = Json::array();
  for (int v = 0; v < s.size(); ++v) {
    vertices.push_back(v);
    for (int z = 0; z < 3; ++z) edges.push_back({{"from", v}, {"to", s.next(v, z)}, {"label", std::string(1, label_char(z))}});
  }
  return {{"index", s.size()}, {"vertices", vertices}, {"edges", edges}, {"root", 0}};
}

Json transducer_json(const Transducer& t, bool letters_in) {
  Json edges = Json::array();
  for (int s = 0; s < t.size(); ++s) {
    for (int a = 0; a < t.alphabet; ++a) {
      const auto& e = t.edge(s, a);
      if (!e) continue;
      edges.push_back({{"from", t.names[s]},
                       {"to", t.names[e->to]},
                       {"in", letters_in ? std::string(1, a == 0 ? 'L' : 'N') : std::to_string(a)},
                       {"out", symbols_text(e->out)}});
    }
  }
  Json initial = Json::array();
  for (int s : t.initial) initial.push_back(t.names[s]);
  return {{"states", t.names}, {"edges", edges}, {"initial", initial}};
}

Json fingerprint_json(const Fingerprint& f) {
  Json j = {{"index", f.index},
            {"in_gamma", f.in_gamma},
            {"contains_SRS", f.has_srs},
            {"contains_SRSF", f.has_srsf},
            {"contains_SR2SF", f.has_sr2sf},
            {"class", f.group_class}};
  if (!f.parity_class.empty()) j["parity_class"] = f.parity_class;
  return j;
}

Json defect_json(const DefectReport& d, const AlgGraph& g) {
  Json branches = Json::array();
  for (std::size_t a = 0; a < d.branches.size(); ++a) {
    Json names = Json::array();
    for (int v : d.branches[a].vertices) names.push_back(g.vertices[v].name);
    branches.push_back({{"symbol", a}, {"vertices", names}, {"over_root", d.branches[a].hits}});
  }
  return {{"defect", d.defect}, {"branches", branches}};
}

Json sync_json(const SyncResult& r, const Transducer& t) {
  Json j = {{"synchronizing", r.synchronizing}, {"states", r.states}, {"pair_graph_size", r.pair_graph_size}};
  if (r.synchronizing) {
    j["word"] = symbols_text(r.word, true);
    j["shortest"] = r.shortest;
    j["reset_state"] = t.names[r.reset_state];
  }
  return j;
}

Json verdict_json(const SerretVerdict& v) {
  Json j = {{"verdict", to_string(v.kind)}, {"bound", v.bound}};
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (v.witness) {
    const auto& w = *v.witness;
    j["witness"] = {{"state", w.state},
                    {"state_matrix", to_json(w.state_matrix)},
                    {"cycle", symbols_text(w.cycle_input) + "|" + symbols_text(w.cycle_output)},
                    {"alpha", to_json(w.alpha)},
                    {"beta", to_json(w.beta)},
                    {"orbit_alpha", w.orbit_alpha.to_digits()},
                    {"orbit_beta", w.orbit_beta.to_digits()},
                    {"verified", w.verified}};
  }
  if (v.sampling) {
    j["sampling"] = {{"samples", v.sampling->samples},
                     {"length", v.sampling->length},
                     {"still_running", v.sampling->still_running}};
  }
  return j;
}

Json orbit_json(const OrbitResult& r, bool quadratic, int alphabet) {
  Json j = {{"status", to_string(r.status)}};
  if (quadratic) {
    j["orbit"] = r.periodic.to_digits(alphabet > 10);
    return j;
  }
  j["orbit"] = symbols_text(r.finite);
  if (r.alternative) {
    j["ambiguous_at"] = r.ambiguous_at;
    j["alternative"] = symbols_text(*r.alternative);
  }
  return j;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& x : j) {
    if (x.is_structured() && !(x.is_array() && all_scalars(x))) return false;
  }
  return true;
}

std::string inline_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
  return s + "]";
}

void render(const Json& j, int indent, std::ostringstream& out) {
  std::string pad(indent, ' ');
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      out << pad << key << ":\n";
      render(val, indent + 2, out);
    } else if (val.is_array() && !all_scalars(val)) {
      out << pad << key << ":\n";
      for (const auto& item : val) {
        if (item.is_object()) {
          std::ostringstream sub;
          render(item, indent + 4, sub);
          std::string text = sub.str();
          text.replace(indent, 2, "- ");
          out << text;
        } else {
          out << pad << "  - " << inline_text(item) << "\n";
        }
      }
    } else {
      out << pad << key << ": " << inline_text(val) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace serret
