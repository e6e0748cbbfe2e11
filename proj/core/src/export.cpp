/* Copyright 2026 The gtcut Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "gtcut/export.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gtcut/measures.hpp"
#include "gtcut/script.hpp"
#include "gtcut/text.hpp"

namespace gtcut {
namespace {

using nlohmann::json;

json occurrences(const std::vector<Occurrence>& v, const Measures& m) {
  json out = json::array();
  for (const auto& o : v) {
    out.push_back({{"id", o.id}, {"formula", print(o.formula)}, {"tau", m.tau_of(o.id)}});
  }
  return out;
}

json node_json(const Derivation& d, const Measures& m, const std::string& path) {
  json j;
  j["rule"] = std::string(rule_name(d.rule()));
  j["path"] = path;
  j["principal"] = d.principal();
  j["ante"] = occurrences(d.conclusion().ante, m);
  j["succ"] = occurrences(d.conclusion().succ, m);
  json prem = json::array();
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    std::string p = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    prem.push_back(node_json(d.premises()[i], m, p));
  }
  j["premises"] = std::move(prem);
  return j;
}

json measures_object(const Measures& m) {
  json tau = json::object();
  for (const auto& [id, t] : m.tau) tau[std::to_string(id)] = t;
  return {{"length", m.length}, {"cutRank", m.cut_rank}, {"proofTau", m.proof_tau}, {"tau", tau}};
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string derivation_json(const Derivation& d, int indent) {
  Measures m = compute_measures(d);
  return dump(node_json(d, m, ""), indent);
}

std::string derivation_tree(const Derivation& d) {
  Measures m = compute_measures(d);
  std::ostringstream out;
  visit(d, [&](const std::string& path, const Derivation& n) {
    std::size_t depth = path.empty() ? 0 : std::count(path.begin(), path.end(), '.') + 1;
    out << std::string(2 * depth, ' ') << (path.empty() ? "." : path) << " " << rule_name(n.rule())
        << " | " << print(n.conclusion()) << " | tau";
    for (std::size_t i = 0; i < n.conclusion().ante.size(); ++i) {
      out << " a" << i << "=" << m.tau_of(n.conclusion().ante[i].id);
    }
    for (std::size_t i = 0; i < n.conclusion().succ.size(); ++i) {
      out << " s" << i << "=" << m.tau_of(n.conclusion().succ[i].id);
    }
    out << "\n";
  });
  return out.str();
}

std::string measures_json(const Measures& m, int indent) { return dump(measures_object(m), indent); }

std::string report_json(const ValidationReport& r, int indent) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"path", x.path}, {"reason", x.reason}, {"detail", x.detail}});
  }
  return dump({{"valid", r.valid()}, {"violations", v}}, indent);
}

std::string certificate_json(const Certificate& c, int indent) {
  json checks = json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"detail", k.detail}, {"ok", k.ok}});
  json ids = json::object();
  for (const auto& [a, b] : c.id_map) ids[std::to_string(a)] = b;
  json before = measures_object(c.before);
  json after = measures_object(c.after);
  before.erase("tau");
  after.erase("tau");
  return dump({{"ok", c.ok()}, {"before", before}, {"after", after}, {"checks", checks}, {"idMap", ids}},
              indent);
}

std::string search_json(const SearchResult& r, int indent) {
  json j;
  j["found"] = r.found();
  j["goals"] = r.goals;
  if (r.proof) {
    j["proof"] = print_script(*r.proof);
  } else {
    json f = json::array();
    for (const auto& l : r.frontier) f.push_back({{"sequent", l.sequent}, {"reason", l.reason}});
    j["frontier"] = f;
  }
  return dump(j, indent);
}

std::string fixed_point_json(const FixedPoint& fp, const SentenceUniverse& u, int indent) {
  json members = json::array();
  for (const auto& [c, f] : u.members) {
    json row = {{"sentence", print(f)}, {"member", fp.members.contains(c)}};
    auto it = fp.norms.find(c);
    row["norm"] = it == fp.norms.end() ? json(nullptr) : json(it->second);
    members.push_back(row);
  }
  json stages = json::array();
  for (const auto& s : fp.stages) stages.push_back(s.size());
  return dump({{"universe", u.size()},
               {"termBound", u.term_bound},
               {"exact", u.exact},
               {"saturationIndex", fp.saturation_index},
               {"stageSizes", stages},
               {"sentences", members}},
              indent);
}

}  // namespace gtcut
