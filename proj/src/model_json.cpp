#include "ptel/model_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ptel {

namespace {

using nlohmann::json;

Rat rat_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw ModelFormatError("rational must be a \"num/den\" string: " + where);
  auto r = parse_rat(j.get<std::string>());
  if (!r) throw ModelFormatError("malformed rational in " + where);
  return *r;
}

std::vector<std::set<std::string>> valuations(const json& j, const std::string& where) {
  if (!j.is_array()) throw ModelFormatError(where + " must be an array of valuations");
  std::vector<std::set<std::string>> out;
  for (const auto& v : j) {
    if (!v.is_array()) throw ModelFormatError("valuation must be an array of atoms: " + where);
    std::set<std::string> val;
    for (const auto& a : v) val.insert(a.get<std::string>());
    out.push_back(std::move(val));
  }
  return out;
}

std::string world_key(std::uint32_t run, std::uint32_t pos) {
  return std::to_string(run) + "," + std::to_string(pos);
}

}  // namespace

Model model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ModelFormatError(std::string("JSON parse error: ") + e.what());
  }
  Model m;
  try {
    m.sig = AgentSignature(j.at("agents").get<std::vector<std::string>>());
  } catch (const std::invalid_argument& e) {
    throw ModelFormatError(e.what());
  }
  if (j.contains("atoms")) m.atoms = j.at("atoms").get<std::vector<std::string>>();
  for (const std::string& a : m.sig.agents()) {
    std::string act = activity_atom(a);
    if (std::find(m.atoms.begin(), m.atoms.end(), act) == m.atoms.end()) m.atoms.push_back(act);
  }
  if (!j.contains("runs") || !j.at("runs").is_array() || j.at("runs").empty())
    throw ModelFormatError("model must declare a non-empty \"runs\" array");
  for (const auto& rj : j.at("runs")) {
    Run r;
    if (rj.contains("stem")) r.stem = valuations(rj.at("stem"), "run stem");
    r.loop = valuations(rj.at("loop"), "run loop");
    if (r.loop.empty()) throw ModelFormatError("run loop must be non-empty");
    m.runs.push_back(std::move(r));
  }
  m.reindex();
  const std::size_t W = m.world_count();

  auto world_of = [&](const json& pair, const std::string& where) -> std::uint32_t {
    if (!pair.is_array() || pair.size() != 2)
      throw ModelFormatError("world must be [run,pos]: " + where);
    std::uint32_t run = pair[0].get<std::uint32_t>();
    std::uint32_t pos = pair[1].get<std::uint32_t>();
    if (run >= m.runs.size() || pos >= m.runs[run].period_worlds())
      throw ModelFormatError("world out of range: " + where);
    return m.world_index({run, pos});
  };

  m.access.assign(m.sig.size(), std::vector<std::vector<std::uint32_t>>(W));
  if (j.contains("access")) {
    for (const auto& [agent, pairs] : j.at("access").items()) {
      auto ai = m.sig.index_of(agent);
      if (!ai) throw ModelFormatError("access for unknown agent " + agent);
      for (const auto& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2)
          throw ModelFormatError("access entry must be a pair of worlds");
        std::uint32_t from = world_of(pr[0], "access " + agent);
        std::uint32_t to = world_of(pr[1], "access " + agent);
        m.access[*ai][from].push_back(to);
      }
    }
  }
  for (auto& per_agent : m.access)
    for (auto& succ : per_agent) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }

  // Run measures: explicit "run,pos" entries fall back to "default".
  const json empty = json::object();
  const json& rm = j.contains("run_measure") ? j.at("run_measure") : empty;
  m.run_measure.assign(W, {});
  for (std::uint32_t w = 0; w < W; ++w) {
    WorldId id = m.world_at(w);
    std::string key = world_key(id.run, id.pos);
    const json* entry = nullptr;
    if (rm.contains(key)) entry = &rm.at(key);
    else if (rm.contains("default")) entry = &rm.at("default");
    if (!entry) throw ModelFormatError("no run measure for world " + key + " and no default");
    std::vector<Rat> weights(m.runs.size(), Rat(0));
    for (const auto& [rk, wv] : entry->items()) {
      std::size_t run_idx = std::stoul(rk);
      if (run_idx >= m.runs.size()) throw ModelFormatError("run measure names unknown run " + rk);
      weights[run_idx] = rat_field(wv, "run_measure " + key);
    }
    m.run_measure[w] = std::move(weights);
  }

  // Agent spaces: "run,pos,agent", then "default_<agent>", then "default".
  const json& as = j.contains("agent_spaces") ? j.at("agent_spaces") : empty;
  m.agent_space.assign(W, std::vector<std::vector<Sample>>(m.sig.size()));
  for (std::uint32_t w = 0; w < W; ++w) {
    WorldId id = m.world_at(w);
    for (std::size_t a = 0; a < m.sig.size(); ++a) {
      const std::string& agent = m.sig.agents()[a];
      std::string key = world_key(id.run, id.pos) + "," + agent;
      const json* entry = nullptr;
      if (as.contains(key)) entry = &as.at(key);
      else if (as.contains("default_" + agent)) entry = &as.at("default_" + agent);
      else if (as.contains("default")) entry = &as.at("default");
      if (!entry) throw ModelFormatError("no agent space for " + key + " and no default");
      std::vector<Sample> samples;
      for (const auto& sj : *entry) {
        Sample s;
        if (!sj.contains("world")) throw ModelFormatError("sample missing world in " + key);
        const auto& wv = sj.at("world");
        s.run = wv.at(0).get<std::uint32_t>();
        s.time = wv.at(1).get<std::uint64_t>();
        if (s.run >= m.runs.size()) throw ModelFormatError("sample names unknown run in " + key);
        s.weight = rat_field(sj.at("w"), "agent_spaces " + key);
        samples.push_back(std::move(s));
      }
      m.agent_space[w][a] = std::move(samples);
    }
  }
  return m;
}

std::string model_to_json(const Model& m) {
  json j;
  j["agents"] = m.sig.agents();
  j["atoms"] = m.atoms;
  json runs = json::array();
  for (const Run& r : m.runs) {
    json rj;
    json stem = json::array();
    for (const auto& v : r.stem) stem.push_back(std::vector<std::string>(v.begin(), v.end()));
    json loop = json::array();
    for (const auto& v : r.loop) loop.push_back(std::vector<std::string>(v.begin(), v.end()));
    rj["stem"] = stem;
    rj["loop"] = loop;
    runs.push_back(rj);
  }
  j["runs"] = runs;
  json access = json::object();
  for (std::size_t a = 0; a < m.sig.size(); ++a) {
    json pairs = json::array();
    for (std::uint32_t w = 0; w < m.world_count(); ++w) {
      WorldId from = m.world_at(w);
      for (std::uint32_t t : m.access[a][w]) {
        WorldId to = m.world_at(t);
        pairs.push_back(json::array(
            {json::array({from.run, from.pos}), json::array({to.run, to.pos})}));
      }
    }
    access[m.sig.agents()[a]] = pairs;
  }
  j["access"] = access;
  json rm = json::object();
  for (std::uint32_t w = 0; w < m.world_count(); ++w) {
    WorldId id = m.world_at(w);
    json entry = json::object();
    for (std::size_t r = 0; r < m.run_measure[w].size(); ++r)
      if (m.run_measure[w][r] != Rat(0))
        entry[std::to_string(r)] = rat_string(m.run_measure[w][r]);
    rm[world_key(id.run, id.pos)] = entry;
  }
  j["run_measure"] = rm;
  json as = json::object();
  for (std::uint32_t w = 0; w < m.world_count(); ++w) {
    WorldId id = m.world_at(w);
    for (std::size_t a = 0; a < m.sig.size(); ++a) {
      json list = json::array();
      for (const Sample& s : m.agent_space[w][a]) {
        json sj;
        sj["world"] = json::array({s.run, s.time});
        sj["w"] = rat_string(s.weight);
        list.push_back(sj);
      }
      as[world_key(id.run, id.pos) + "," + m.sig.agents()[a]] = list;
    }
  }
  j["agent_spaces"] = as;
  return j.dump(2);
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelFormatError("cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

}  // namespace ptel
