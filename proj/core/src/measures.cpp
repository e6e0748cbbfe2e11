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

#include "gtcut/measures.hpp"

#include <algorithm>

namespace gtcut {

std::size_t Measures::tau_of(OccId id) const {
  auto it = tau.find(id);
  if (it == tau.end()) {
    throw Error(ErrorCode::kUnknownOccurrence, "no occurrence " + std::to_string(id));
  }
  return it->second;
}

namespace {

[[noreturn]] void broken(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kBrokenLineage,
              "node '" + path + "': " + what);
}

struct Walk {
  Measures& m;

  // Returns the length of `d`.
  std::size_t run(const Derivation& d, const std::string& path) {
    std::size_t len = 0;
    const auto& prem = d.premises();
    for (std::size_t i = 0; i < prem.size(); ++i) {
      std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
      len = std::max(len, run(prem[i], sub) + 1);
    }
    if (d.rule() == Rule::kCut) {
      if (d.active().size() != 2 || d.active()[0].size() != 1) broken(path, "cut without cut formula");
      const Occurrence* c = prem[0].conclusion().lookup(d.active()[0][0]);
      if (!c) broken(path, "cut formula missing from left premise");
      m.cut_rank = std::max(m.cut_rank, logical_complexity(c->formula) + 1);
    }

    auto premise_tau = [&](std::size_t i, OccId id, const Formula* expect) {
      const Occurrence* o = i < prem.size() ? prem[i].conclusion().lookup(id) : nullptr;
      if (!o) broken(path, "missing premise occurrence " + std::to_string(id));
      if (expect && !(o->formula == *expect)) {
        broken(path, "ancestor " + std::to_string(id) + " carries a different formula");
      }
      return m.tau.at(id);
    };

    std::size_t active_max = 0;
    for (std::size_t i = 0; i < d.active().size(); ++i) {
      for (OccId a : d.active()[i]) active_max = std::max(active_max, premise_tau(i, a, nullptr));
    }

    for (Side s : {Side::kAntecedent, Side::kSuccedent}) {
      for (const auto& o : d.conclusion().side(s)) {
        std::size_t t = 0;
        bool is_principal = std::find(d.principal().begin(), d.principal().end(), o.id) !=
                            d.principal().end();
        if (is_principal) {
          switch (d.rule()) {
            case Rule::kTruthLeft:
            case Rule::kTruthRight:
            case Rule::kCompAnd:
              t = active_max + 1;
              break;
            default:
              t = is_axiom(d.rule()) ? 0 : active_max;
              break;
          }
        } else {
          auto it = d.lineage().find(o.id);
          if (it == d.lineage().end()) {
            broken(path, "occurrence " + std::to_string(o.id) + " has no lineage");
          }
          if (it->second.size() != prem.size()) {
            broken(path, "lineage of " + std::to_string(o.id) + " has wrong arity");
          }
          for (std::size_t i = 0; i < prem.size(); ++i) {
            t = std::max(t, premise_tau(i, it->second[i], &o.formula));
          }
        }
        if (!o.formula.contains_truth()) t = 0;
        if (!m.tau.emplace(o.id, t).second) {
          broken(path, "occurrence id " + std::to_string(o.id) + " used twice");
        }
        m.proof_tau = std::max(m.proof_tau, t);
      }
    }
    return len;
  }
};

}  // namespace

Measures compute_measures(const Derivation& d) {
  Measures m;
  Walk walk{m};
  m.length = walk.run(d, "");
  return m;
}

std::size_t derivation_length(const Derivation& d) {
  std::size_t len = 0;
  for (const auto& p : d.premises()) len = std::max(len, derivation_length(p) + 1);
  return len;
}

std::size_t cut_rank(const Derivation& d) {
  std::size_t r = 0;
  if (d.rule() == Rule::kCut && !d.active().empty() && !d.active()[0].empty()) {
    if (const Occurrence* c = d.premises()[0].conclusion().lookup(d.active()[0][0])) {
      r = logical_complexity(c->formula) + 1;
    }
  }
  for (const auto& p : d.premises()) r = std::max(r, cut_rank(p));
  return r;
}

namespace {

Ancestry trace(const Derivation& d, OccId id, const std::string& path) {
  Ancestry a;
  a.id = id;
  a.path = path;
  const Occurrence* o = d.conclusion().lookup(id);
  if (!o) throw Error(ErrorCode::kUnknownOccurrence, "no occurrence " + std::to_string(id));
  a.formula = o->formula;
  auto sub = [&](std::size_t i) {
    return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
  };
  bool is_principal =
      std::find(d.principal().begin(), d.principal().end(), id) != d.principal().end();
  if (is_principal) {
    for (std::size_t i = 0; i < d.active().size(); ++i) {
      for (OccId x : d.active()[i]) a.ancestors.push_back(trace(d.premises()[i], x, sub(i)));
    }
  } else if (auto it = d.lineage().find(id); it != d.lineage().end()) {
    for (std::size_t i = 0; i < it->second.size() && i < d.premises().size(); ++i) {
      a.ancestors.push_back(trace(d.premises()[i], it->second[i], sub(i)));
    }
  } else {
    throw Error(ErrorCode::kBrokenLineage, "occurrence " + std::to_string(id) + " has no lineage");
  }
  return a;
}

}  // namespace

Ancestry occurrence_lineage(const Derivation& d, OccId id) { return trace(d, id, ""); }

Natural hyperexp(std::size_t j, const Natural& n, const Natural& cap) {
  Natural v = n;
  for (std::size_t i = 0; i < j; ++i) {
    if (v > Natural(boost::multiprecision::msb(cap))) return cap;
    v = Natural(1) << v.convert_to<unsigned>();
    if (v > cap) return cap;
  }
  return v;
}

}  // namespace gtcut
