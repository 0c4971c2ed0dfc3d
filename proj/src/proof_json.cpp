#include "ptel/proof_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ptel/syntax.hpp"

namespace ptel {

namespace {

using nlohmann::json;

Formula formula_field(const json& j, const AgentSignature& sig, const std::string& where) {
  if (!j.is_string()) throw ProofFormatError("formula must be a string: " + where);
  try {
    return parse(j.get<std::string>(), sig);
  } catch (const ParseError& e) {
    throw ProofFormatError("bad formula in " + where + ": " + e.what());
  }
}

}  // namespace

Proof proof_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ProofFormatError(std::string("JSON parse error: ") + e.what());
  }
  Proof p;
  try {
    p.sig = AgentSignature(j.at("agents").get<std::vector<std::string>>());
  } catch (const std::exception& e) {
    throw ProofFormatError(std::string("bad agents: ") + e.what());
  }
  if (j.contains("theory"))
    for (const auto& t : j.at("theory"))
      p.theory.push_back(formula_field(t, p.sig, "theory"));
  if (j.contains("bound")) p.default_bound = j.at("bound").get<std::uint64_t>();
  if (!j.contains("steps") || !j.at("steps").is_array())
    throw ProofFormatError("proof must have a \"steps\" array");
  for (const auto& sj : j.at("steps")) {
    ProofStep s;
    s.id = sj.at("id").get<std::string>();
    std::string kind = sj.at("kind").get<std::string>();
    std::string where = "step " + s.id;
    s.formula = formula_field(sj.at("formula"), p.sig, where);
    if (kind == "axiom") {
      s.kind = StepKind::Axiom;
      if (sj.contains("axiom")) {
        auto id = axiom_from_name(sj.at("axiom").get<std::string>());
        if (!id) throw ProofFormatError("unknown axiom name in " + where);
        s.axiom = id;
      }
    } else if (kind == "hyp") {
      s.kind = StepKind::Hyp;
    } else if (kind == "mp") {
      s.kind = StepKind::MP;
      s.from = sj.at("from").get<std::vector<std::string>>();
    } else if (kind == "nec") {
      s.kind = StepKind::Nec;
      auto r = nec_rule_from_name(sj.at("rule").get<std::string>());
      if (!r) throw ProofFormatError("unknown necessitation rule in " + where);
      s.nec = *r;
      s.from = sj.at("from").get<std::vector<std::string>>();
      if (sj.contains("agent")) s.agent = sj.at("agent").get<std::string>();
    } else if (kind == "inf") {
      s.kind = StepKind::Inf;
      auto r = inf_rule_from_name(sj.at("rule").get<std::string>());
      if (!r) throw ProofFormatError("unknown infinitary rule in " + where);
      s.inf = *r;
      const json& cj = sj.at("ctx");
      std::size_t k = cj.at("k").get<std::size_t>();
      for (const auto& b : cj.at("B")) s.ctx.B.push_back(formula_field(b, p.sig, where));
      for (const auto& x : cj.at("X")) {
        auto op = NestedOp::parse(x.get<std::string>());
        if (!op) throw ProofFormatError("bad context operator in " + where);
        s.ctx.X.push_back(*op);
      }
      if (s.ctx.B.size() != k + 1 || s.ctx.X.size() != k)
        throw ProofFormatError("context sizes disagree with k in " + where);
      s.alpha = formula_field(sj.at("alpha"), p.sig, where);
      if (sj.contains("beta")) s.beta = formula_field(sj.at("beta"), p.sig, where);
      if (sj.contains("agent")) s.agent = sj.at("agent").get<std::string>();
      if (sj.contains("r")) {
        auto rr = parse_rat(sj.at("r").get<std::string>());
        if (!rr) throw ProofFormatError("bad threshold in " + where);
        s.r = *rr;
      }
      if (sj.contains("bound")) s.bound = sj.at("bound").get<std::uint64_t>();
      if (sj.contains("premises"))
        for (const auto& [ik, sid] : sj.at("premises").items())
          s.premises[std::stoull(ik)] = sid.get<std::string>();
    } else {
      throw ProofFormatError("unknown step kind \"" + kind + "\" in " + where);
    }
    p.steps.push_back(std::move(s));
  }
  return p;
}

std::string proof_to_json(const Proof& p) {
  json j;
  j["agents"] = p.sig.agents();
  json theory = json::array();
  for (const Formula& t : p.theory) theory.push_back(print(t));
  j["theory"] = theory;
  j["bound"] = p.default_bound;
  json steps = json::array();
  for (const ProofStep& s : p.steps) {
    json sj;
    sj["id"] = s.id;
    sj["formula"] = print(s.formula);
    switch (s.kind) {
      case StepKind::Axiom:
        sj["kind"] = "axiom";
        if (s.axiom) sj["axiom"] = axiom_name(*s.axiom);
        break;
      case StepKind::Hyp:
        sj["kind"] = "hyp";
        break;
      case StepKind::MP:
        sj["kind"] = "mp";
        sj["from"] = s.from;
        break;
      case StepKind::Nec:
        sj["kind"] = "nec";
        sj["rule"] = nec_rule_name(s.nec);
        sj["from"] = s.from;
        if (!s.agent.empty()) sj["agent"] = s.agent;
        break;
      case StepKind::Inf: {
        sj["kind"] = "inf";
        sj["rule"] = inf_rule_name(s.inf);
        json cj;
        cj["k"] = s.ctx.k();
        json bs = json::array();
        for (const Formula& b : s.ctx.B) bs.push_back(print(b));
        cj["B"] = bs;
        json xs = json::array();
        for (const NestedOp& x : s.ctx.X) xs.push_back(x.str());
        cj["X"] = xs;
        sj["ctx"] = cj;
        sj["alpha"] = print(s.alpha);
        if (s.beta.valid()) sj["beta"] = print(s.beta);
        if (!s.agent.empty()) sj["agent"] = s.agent;
        if (s.inf == InfRule::RGA || s.inf == InfRule::RA) sj["r"] = rat_string(s.r);
        if (s.bound) sj["bound"] = *s.bound;
        json prem = json::object();
        for (const auto& [i, sid] : s.premises) prem[std::to_string(i)] = sid;
        sj["premises"] = prem;
        break;
      }
    }
    steps.push_back(sj);
  }
  j["steps"] = steps;
  return j.dump(2);
}

Proof load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofFormatError("cannot open proof file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return proof_from_json(ss.str());
}

}  // namespace ptel
