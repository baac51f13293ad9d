#include "omegastar/codec.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace omegastar::codec {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Int parse_int(std::string_view s, const char* what) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(std::string(what) + ": not an integer: " + std::string(s));
  return v;
}

Int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + ": expected an integer");
  return j.get<Int>();
}

std::size_t get_index(const Json& j, const char* what) {
  const Int v = get_int(j, what);
  if (v < 0) fail(std::string(what) + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) fail(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array");
  return j;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// ---- EP sets

Json bits_json(const Bits& b) {
  Json out = Json::array();
  for (bool x : b) out.push_back(x ? 1 : 0);
  return out;
}

Bits json_bits(const Json& j, const char* what) {
  Bits out;
  for (const auto& x : array(j, what)) {
    const Int v = get_int(x, what);
    if (v != 0 && v != 1) fail(std::string(what) + ": bits must be 0 or 1");
    out.push_back(v == 1);
  }
  return out;
}

Json to_json(const EpSet& a) {
  Json j;
  j["prefix"] = bits_json(a.prefix());
  j["period"] = a.period();
  j["pattern"] = bits_json(a.pattern());
  return j;
}

EpSet ep_set_from(const Json& j) {
  if (j.is_string()) {
    const auto w = words(j.get<std::string>());
    if (w.size() == 1 && w[0] == "evens") return EpSet::evens();
    if (w.size() == 1 && w[0] == "odds") return EpSet::odds();
    if (w.size() == 1 && w[0] == "all") return EpSet::all();
    if (w.size() == 1 && w[0] == "empty") return EpSet::empty();
    if (w.size() == 3 && w[0] == "mod") {
      const Int k = parse_int(w[1], "set"), r = parse_int(w[2], "set");
      if (k < 1 || r < 0 || r >= k) fail("set: \"mod k r\" needs k >= 1 and 0 <= r < k");
      return EpSet::residue_class(k, r);
    }
    fail("set: unknown shorthand \"" + j.get<std::string>() + "\"");
  }
  Bits prefix = json_bits(field(j, "prefix", "set"), "set prefix");
  Bits pattern = json_bits(field(j, "pattern", "set"), "set pattern");
  if (pattern.empty()) fail("set: pattern must be nonempty");
  if (const auto it = j.find("period"); it != j.end() && get_int(*it, "set period") != static_cast<Int>(pattern.size()))
    fail("set: period does not match the pattern length");
  return EpSet::make(std::move(prefix), std::move(pattern));
}

// ---- permutations

Json exceptions_json(const std::map<Int, Int>& ex) {
  Json out = Json::object();
  for (const auto& [n, m] : ex) out[std::to_string(n)] = m;
  return out;
}

std::map<Int, Int> json_exceptions(const Json& j) {
  if (!j.is_object()) fail("permutation exceptions: expected an object");
  std::map<Int, Int> out;
  for (const auto& [k, v] : j.items()) {
    const Int n = parse_int(k, "permutation exception key");
    const Int m = get_int(v, "permutation exception value");
    if (n < 0 || m < 0) fail("permutation exceptions: negative entry");
    if (!out.emplace(n, m).second) fail("permutation exceptions: duplicate key");
  }
  return out;
}

Json to_json(const Permutation& p) {
  Json j;
  if (const auto form = p.as_residue_shift()) {
    j["threshold"] = form->threshold;
    j["exceptions"] = exceptions_json(form->exceptions);
    j["period"] = form->period;
    j["offsets"] = form->offsets;
    return j;
  }
  j["exceptions"] = exceptions_json(p.exceptions());
  Json pieces = Json::array();
  for (const auto& pc : p.pieces())
    pieces.push_back(Json::array({pc.domain.start, pc.domain.step, pc.image.start, pc.image.step}));
  j["pieces"] = std::move(pieces);
  return j;
}

Permutation permutation_from(const Json& j) {
  if (j.is_string()) {
    const auto w = words(j.get<std::string>());
    if (w.size() == 1 && w[0] == "identity") return Permutation::identity();
    if (w.size() == 1 && w[0] == "successor") return Permutation::successor();
    if (w.size() == 1 && w[0] == "predecessor") return Permutation::predecessor();
    if (w.size() == 2 && w[0] == "shift") {
      const Int k = parse_int(w[1], "permutation");
      if (k < 0) fail("permutation: \"shift k\" needs k >= 0");
      return Permutation::translation(k);
    }
    fail("permutation: unknown name \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) fail("permutation: expected an object or a name");
  const auto ex_it = j.find("exceptions");
  std::map<Int, Int> exceptions = ex_it == j.end() ? std::map<Int, Int>{} : json_exceptions(*ex_it);
  if (j.contains("pieces")) {
    std::vector<AffinePiece> pieces;
    for (const auto& pc : array(j["pieces"], "permutation pieces")) {
      if (!pc.is_array() || pc.size() != 4) fail("permutation pieces: expected [dom_start,dom_step,img_start,img_step]");
      AffinePiece piece{{get_int(pc[0], "piece"), get_int(pc[1], "piece")},
                        {get_int(pc[2], "piece"), get_int(pc[3], "piece")}};
      if (piece.domain.start < 0 || piece.image.start < 0 || piece.domain.step < 1 || piece.image.step < 1)
        fail("permutation pieces: starts must be >= 0 and steps >= 1");
      pieces.push_back(piece);
    }
    return Permutation(std::move(exceptions), std::move(pieces));
  }
  ResidueShiftForm form;
  form.threshold = get_int(field(j, "threshold", "permutation"), "permutation threshold");
  form.period = get_int(field(j, "period", "permutation"), "permutation period");
  for (const auto& o : array(field(j, "offsets", "permutation"), "permutation offsets"))
    form.offsets.push_back(get_int(o, "permutation offset"));
  form.exceptions = std::move(exceptions);
  if (form.period < 1) fail("permutation: period must be >= 1");
  if (static_cast<Int>(form.offsets.size()) != form.period) fail("permutation: need one offset per residue");
  if (form.threshold < 0) fail("permutation: negative threshold");
  for (const auto& [n, m] : form.exceptions) {
    (void)m;
    if (n >= form.threshold) fail("permutation: exception key at or beyond the threshold");
  }
  try {
    return Permutation::from_residue_shift(form);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

// ---- partitions and digraphs

Json to_json(const ClopenPartition& v) {
  Json j = Json::array();
  for (const auto& c : v.classes()) j.push_back(to_json(c));
  return j;
}

ClopenPartition partition_from(const Json& j) {
  if (j.is_string()) {
    const auto w = words(j.get<std::string>());
    if (w.size() == 2 && w[0] == "mod") {
      const Int k = parse_int(w[1], "partition");
      if (k < 1) fail("partition: \"mod k\" needs k >= 1");
      return ClopenPartition::residues(k);
    }
    fail("partition: unknown shorthand \"" + j.get<std::string>() + "\"");
  }
  std::vector<EpSet> sets;
  for (const auto& c : array(j, "partition")) sets.push_back(ep_set_from(c));
  return ClopenPartition::make(std::move(sets));
}

Json to_json(const HitDigraph& g) {
  Json j;
  j["n"] = g.size();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

HitDigraph digraph_from(const Json& j) {
  const std::size_t n = get_index(field(j, "n", "digraph"), "digraph n");
  HitDigraph g(n);
  for (const auto& e : array(field(j, "edges", "digraph"), "digraph edges")) {
    if (!e.is_array() || e.size() != 2) fail("digraph edges: expected [i,j] pairs");
    const std::size_t a = get_index(e[0], "digraph edge"), b = get_index(e[1], "digraph edge");
    if (a >= n || b >= n) fail("digraph edges: endpoint out of range");
    g.add_edge(a, b);
  }
  return g;
}

// ---- walks, bundles, chains

std::vector<std::size_t> indices_from(const Json& j, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& x : array(j, what)) out.push_back(get_index(x, what));
  return out;
}

Json to_json(const WalkSpec& w) {
  Json j;
  j["prelude"] = w.prelude;
  j["cycle"] = w.cycle;
  if (!w.level_marks.empty()) {
    Json marks = Json::array();
    for (const auto& m : w.level_marks) marks.push_back(Json::array({m.start, m.level}));
    j["level_marks"] = std::move(marks);
  }
  return j;
}

WalkSpec walk_from(const Json& j) {
  WalkSpec w;
  w.prelude = indices_from(field(j, "prelude", "walk"), "walk prelude");
  w.cycle = indices_from(field(j, "cycle", "walk"), "walk cycle");
  if (w.cycle.empty()) fail("walk: cycle must be nonempty");
  if (const auto it = j.find("level_marks"); it != j.end()) {
    for (const auto& m : array(*it, "walk level_marks")) {
      if (!m.is_array() || m.size() != 2) fail("walk level_marks: expected [start,level] pairs");
      w.level_marks.push_back({get_index(m[0], "level mark"), get_index(m[1], "level mark")});
    }
  }
  return w;
}

template <class F>
auto guarded(std::string_view text, F f) {
  const Json j = parse_text(text);
  try {
    return f(j);
  } catch (const Json::exception& e) {
    fail(std::string("malformed value: ") + e.what());
  }
}

}  // namespace

std::string encode(const EpSet& a) { return to_json(a).dump(); }
std::string encode(const Permutation& p) { return to_json(p).dump(); }
std::string encode(const ClopenPartition& v) { return to_json(v).dump(); }
std::string encode(const HitDigraph& g) { return to_json(g).dump(); }

std::string encode(const Realization& r) {
  Json j;
  j["h"] = to_json(r.h);
  j["f"] = to_json(r.f);
  j["walk"] = to_json(r.walk);
  return j.dump();
}

std::string encode(const IntervalFlip& r) {
  Json j;
  j["h"] = to_json(r.h);
  j["f"] = to_json(r.f);
  return j.dump();
}

std::string encode(const RefinementChain& chain) {
  Json j = Json::array();
  for (const auto& l : chain) {
    Json level;
    level["partition"] = to_json(l.partition);
    level["digraph"] = to_json(l.digraph);
    j.push_back(std::move(level));
  }
  return j.dump();
}

EpSet decode_ep_set(std::string_view text) { return guarded(text, ep_set_from); }
Permutation decode_permutation(std::string_view text) { return guarded(text, permutation_from); }
ClopenPartition decode_partition(std::string_view text) { return guarded(text, partition_from); }
HitDigraph decode_digraph(std::string_view text) { return guarded(text, digraph_from); }

Realization decode_realization(std::string_view text) {
  return guarded(text, [](const Json& j) {
    return Realization{permutation_from(field(j, "h", "bundle")), permutation_from(field(j, "f", "bundle")),
                       walk_from(field(j, "walk", "bundle"))};
  });
}

IntervalFlip decode_interval_flip(std::string_view text) {
  return guarded(text, [](const Json& j) {
    return IntervalFlip{permutation_from(field(j, "h", "flip")), permutation_from(field(j, "f", "flip"))};
  });
}

RefinementChain decode_chain(std::string_view text) {
  return guarded(text, [](const Json& j) {
    RefinementChain chain;
    for (const auto& l : array(j, "chain"))
      chain.push_back({partition_from(field(l, "partition", "chain level")),
                       digraph_from(field(l, "digraph", "chain level"))});
    return chain;
  });
}

std::string to_dot(const HitDigraph& g, const ClopenPartition* v) {
  std::ostringstream os;
  os << "digraph hit {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  " << i;
    if (v != nullptr && i < v->size()) os << " [label=\"" << i << ": " << to_string((*v)[i]) << "\"]";
    os << ";\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace omegastar::codec
