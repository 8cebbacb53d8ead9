// Copyright 2026 The gamedec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamedec/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gamedec/errors.hpp"

namespace gamedec {
namespace {

// Schema checks phrased as IoError: file contents are user input.
void require(bool ok, const std::string& what) {
  if (!ok) throw IoError("malformed input: " + what);
}

std::string format_strength(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

Json game_to_json(const GameTables& tables) {
  Json j;
  j["players"] = static_cast<int>(tables.choice_counts.size());
  j["choices"] = tables.choice_counts;
  j["tables"] = Json::array();
  for (const UtilityTable& t : tables.tables) {
    Json jt;
    jt["player"] = t.player;
    jt["scope"] = t.scope;
    jt["values"] = t.values;
    j["tables"].push_back(std::move(jt));
  }
  if (tables.seed.has_value()) j["seed"] = *tables.seed;
  return j;
}

GameTables game_from_json(const Json& j) {
  require(j.is_object(), "game file must be a JSON object");
  require(j.contains("players") && j["players"].is_number_integer(),
          "\"players\" must be an integer");
  const int n = j["players"].get<int>();
  require(n >= 1, "\"players\" must be at least 1");

  GameTables out;
  require(j.contains("choices") && j["choices"].is_array() &&
              static_cast<int>(j["choices"].size()) == n,
          "\"choices\" must list one count per player");
  for (const auto& c : j["choices"]) {
    require(c.is_number_integer() && c.get<int>() >= 1,
            "every choice count must be an integer >= 1");
    out.choice_counts.push_back(c.get<int>());
  }

  require(j.contains("tables") && j["tables"].is_array(),
          "\"tables\" must be an array");
  for (const auto& jt : j["tables"]) {
    require(jt.is_object(), "every table must be an object");
    require(jt.contains("player") && jt["player"].is_number_integer(),
            "table \"player\" must be an integer");
    require(jt.contains("scope") && jt["scope"].is_array(),
            "table \"scope\" must be an array");
    require(jt.contains("values") && jt["values"].is_array(),
            "table \"values\" must be an array");
    UtilityTable t;
    t.player = jt["player"].get<int>();
    for (const auto& p : jt["scope"]) {
      require(p.is_number_integer(), "scope entries must be integers");
      t.scope.push_back(p.get<int>());
    }
    for (const auto& v : jt["values"]) {
      require(v.is_number(), "table values must be numbers");
      t.values.push_back(v.get<double>());
    }
    out.tables.push_back(std::move(t));
  }

  if (j.contains("seed")) {
    require(j["seed"].is_number_unsigned() || j["seed"].is_number_integer(),
            "\"seed\" must be an integer");
    out.seed = j["seed"].get<std::uint64_t>();
  }
  return out;
}

Json interaction_to_json(const InteractionMatrix& im) {
  Json j;
  j["subject"] = im.subject;
  j["n"] = im.c.rows();
  j["L"] = im.samples_per_player;
  Json rows = Json::array();
  for (int r = 0; r < im.c.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < im.c.cols(); ++c) row.push_back(im.c(r, c));
    rows.push_back(std::move(row));
  }
  j["C"] = std::move(rows);
  return j;
}

Json reports_to_json(const std::vector<InfluenceReport>& reports) {
  Json j = Json::array();
  for (const InfluenceReport& r : reports) {
    Json jr;
    jr["subject"] = r.subject;
    jr["n"] = r.n_players;
    jr["influencers"] = r.influencers;
    jr["pairs"] = Json::array();
    for (const EigenPair& p : r.pairs) {
      Json jp;
      jp["value"] = p.value;
      jp["cluster"] = p.cluster;
      jp["vector"] = p.vector;
      jr["pairs"].push_back(std::move(jp));
    }
    j.push_back(std::move(jr));
  }
  return j;
}

std::vector<InfluenceReport> reports_from_json(const Json& j) {
  require(j.is_array(), "spectral report file must be a JSON array");
  std::vector<InfluenceReport> out;
  for (const auto& jr : j) {
    require(jr.is_object(), "every report must be an object");
    require(jr.contains("subject") && jr["subject"].is_number_integer(),
            "report \"subject\" must be an integer");
    require(jr.contains("n") && jr["n"].is_number_integer(),
            "report \"n\" must be an integer");
    require(jr.contains("pairs") && jr["pairs"].is_array(),
            "report \"pairs\" must be an array");
    InfluenceReport r;
    r.subject = jr["subject"].get<int>();
    r.n_players = jr["n"].get<int>();
    for (const auto& jp : jr["pairs"]) {
      require(jp.is_object() && jp.contains("value") &&
                  jp["value"].is_number() && jp.contains("vector") &&
                  jp["vector"].is_array(),
              "every eigenpair needs \"value\" and \"vector\"");
      EigenPair p;
      p.value = jp["value"].get<double>();
      if (jp.contains("cluster")) p.cluster = jp["cluster"].get<int>();
      for (const auto& v : jp["vector"]) {
        require(v.is_number(), "eigenvector entries must be numbers");
        p.vector.push_back(v.get<double>());
      }
      require(static_cast<int>(p.vector.size()) == r.n_players,
              "eigenvector length must equal \"n\"");
      r.pairs.push_back(std::move(p));
    }
    if (jr.contains("influencers")) {
      require(jr["influencers"].is_array(),
              "\"influencers\" must be an array");
      for (const auto& v : jr["influencers"]) {
        r.influencers.push_back(v.get<int>());
      }
    } else {
      r.influencers = influencers_at(r, 0.0, 0.0);
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json truth_to_json(
    const std::vector<std::vector<PlayerId>>& influencer_sets) {
  const InteractionGraph g = graph_from_influencers(influencer_sets);
  Json j;
  j["players"] = g.n_players;
  j["influencers"] = influencer_sets;
  const Json jg = graph_to_json(g);
  j["edges"] = jg["edges"];
  j["components"] = jg["components"];
  return j;
}

std::vector<std::vector<PlayerId>> truth_from_json(const Json& j) {
  require(j.is_object() && j.contains("influencers") &&
              j["influencers"].is_array(),
          "ground-truth file needs an \"influencers\" array");
  std::vector<std::vector<PlayerId>> sets;
  for (const auto& js : j["influencers"]) {
    require(js.is_array(), "every influencer set must be an array");
    std::vector<PlayerId> set;
    for (const auto& v : js) {
      require(v.is_number_integer(), "influencers must be integers");
      set.push_back(v.get<int>());
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

Json recovery_to_json(const RecoveryScore& score) {
  Json j;
  j["true_edges"] = score.true_edges;
  j["found_edges"] = score.found_edges;
  j["correct"] = score.correct;
  j["precision"] = score.precision;
  j["recall"] = score.recall;
  j["exact"] = score.exact;
  return j;
}

Json graph_to_json(const InteractionGraph& graph) {
  Json j;
  j["edges"] = Json::array();
  for (const GraphEdge& e : graph.edges) {
    j["edges"].push_back(
        Json{{"from", e.from}, {"to", e.to}, {"strength", e.strength}});
  }
  j["components"] = graph.components;
  if (!graph.cut_edges.empty()) {
    j["cut_edges"] = Json::array();
    for (const GraphEdge& e : graph.cut_edges) {
      j["cut_edges"].push_back(
          Json{{"from", e.from}, {"to", e.to}, {"strength", e.strength}});
    }
  }
  return j;
}

Json decomposition_to_json(const LinearDecomposition& decomposition,
                           double residual) {
  Json j;
  j["parts"] = Json::array();
  for (const PartialGame& part : decomposition.parts) {
    Json jp;
    jp["members"] = part.members();
    jp["tables"] = Json::array();
    for (int m = 0; m < part.num_members(); ++m) {
      Json jt;
      jt["player"] = part.members()[static_cast<std::size_t>(m)];
      jt["scope"] = part.members();
      jt["values"] = part.table_backed()
                         ? part.tables()[static_cast<std::size_t>(m)]
                         : std::vector<double>{};
      jp["tables"].push_back(std::move(jt));
    }
    j["parts"].push_back(std::move(jp));
  }
  j["weights"] = decomposition.weights;
  j["residual"] = residual;
  return j;
}

LinearDecomposition decomposition_from_json(
    const Json& j, std::shared_ptr<const Game> combined) {
  require(j.is_object() && j.contains("parts") && j["parts"].is_array(),
          "decomposition file needs a \"parts\" array");
  LinearDecomposition d;
  for (const auto& jp : j["parts"]) {
    require(jp.is_object() && jp.contains("members") &&
                jp["members"].is_array() && jp.contains("tables") &&
                jp["tables"].is_array(),
            "every part needs \"members\" and \"tables\"");
    std::vector<PlayerId> members;
    for (const auto& m : jp["members"]) {
      require(m.is_number_integer(), "part members must be integers");
      members.push_back(m.get<int>());
    }
    require(jp["tables"].size() == members.size(),
            "every part needs one table per member");
    std::vector<std::vector<double>> tables(members.size());
    for (const auto& jt : jp["tables"]) {
      require(jt.is_object() && jt.contains("player") &&
                  jt["player"].is_number_integer() && jt.contains("values") &&
                  jt["values"].is_array(),
              "every part table needs \"player\" and \"values\"");
      const PlayerId player = jt["player"].get<int>();
      const auto pos =
          std::find(members.begin(), members.end(), player) - members.begin();
      require(static_cast<std::size_t>(pos) < members.size(),
              "part table player must be a member");
      auto& values = tables[static_cast<std::size_t>(pos)];
      require(values.empty(), "duplicate table for one member");
      for (const auto& v : jt["values"]) {
        require(v.is_number(), "table values must be numbers");
        values.push_back(v.get<double>());
      }
    }
    try {
      d.parts.push_back(
          PartialGame::from_tables(combined, members, std::move(tables)));
    } catch (const std::invalid_argument& e) {
      throw IoError(std::string("malformed decomposition part: ") + e.what());
    }
  }
  if (j.contains("weights")) {
    require(j["weights"].is_array() &&
                j["weights"].size() == j["parts"].size(),
            "\"weights\" must list one number per part");
    for (const auto& w : j["weights"]) {
      require(w.is_number(), "weights must be numbers");
      d.weights.push_back(w.get<double>());
    }
  } else {
    d.weights.assign(d.parts.size(), 1.0);
  }
  return d;
}

Json equilibria_to_json(const std::vector<StrategyProfile>& profiles,
                        const std::string& status, std::uint64_t evals) {
  Json j;
  j["profiles"] = profiles;
  j["status"] = status;
  j["evals"] = evals;
  return j;
}

std::string graph_to_dot(const InteractionGraph& graph) {
  std::ostringstream o;
  o << "digraph influence {\n";
  o << "  rankdir=LR;\n";
  o << "  node [shape=circle];\n";
  for (int p = 0; p < graph.n_players; ++p) {
    o << "  p" << p << " [label=\"" << p << "\"];\n";
  }
  for (const GraphEdge& e : graph.edges) {
    o << "  p" << e.from << " -> p" << e.to << " [label=\""
      << format_strength(e.strength) << "\"];\n";
  }
  for (const GraphEdge& e : graph.cut_edges) {
    o << "  p" << e.from << " -> p" << e.to << " [label=\""
      << format_strength(e.strength)
      << "\", style=dashed, color=gray];\n";
  }
  o << "}\n";
  return o.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) throw IoError("cannot write " + path);
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace gamedec
