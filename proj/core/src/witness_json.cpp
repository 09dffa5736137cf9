#include <stdexcept>

#include "herencode/errors.hpp"
#include "herencode/witness.hpp"
#include "json_util.hpp"

namespace herencode {

namespace {

using detail::Json;

const char* measure_name(DegreeMeasure m) {
  switch (m) {
    case DegreeMeasure::Degree: return "degree";
    case DegreeMeasure::CoDegree: return "co-degree";
    case DegreeMeasure::BipartiteCoDegree: return "bipartite-co-degree";
  }
  return "degree";
}

DegreeMeasure measure_from(const std::string& s) {
  if (s == "degree") return DegreeMeasure::Degree;
  if (s == "co-degree") return DegreeMeasure::CoDegree;
  if (s == "bipartite-co-degree") return DegreeMeasure::BipartiteCoDegree;
  throw std::invalid_argument("unknown degree measure: " + s);
}

const char* check_name(PartCheck c) {
  switch (c) {
    case PartCheck::Complete: return "complete";
    case PartCheck::CoDegreeAtMost: return "co-degree-at-most";
    case PartCheck::InClass: return "in-class";
  }
  return "in-class";
}

PartCheck check_from(const std::string& s) {
  if (s == "complete") return PartCheck::Complete;
  if (s == "co-degree-at-most") return PartCheck::CoDegreeAtMost;
  if (s == "in-class") return PartCheck::InClass;
  throw std::invalid_argument("unknown part check: " + s);
}

Json params_json(const ClassParams& p) {
  Json j = Json::object();
  j["p"] = p.p;
  j["s"] = p.s;
  j["k"] = p.k;
  return j;
}

ClassParams params_from(const Json& j) {
  ClassParams p;
  p.p = j.value("p", 0);
  p.s = j.value("s", 0);
  p.k = j.value("k", 0);
  return p;
}

Json to_json(const Certificate& c);
Certificate from_json(const Json& j);

Json piece_json(const Piece& pc) {
  Json j = Json::object();
  j["vertices"] = pc.vertices;
  if (pc.tag) {
    Json t = Json::object();
    t["name"] = pc.tag->name;
    t["check"] = check_name(pc.tag->check);
    if (pc.tag->check == PartCheck::CoDegreeAtMost) t["bound"] = pc.tag->bound;
    if (pc.tag->check == PartCheck::InClass) {
      t["spec"] = detail::class_spec_to_json_value(pc.tag->spec);
      t["implicit"] = pc.tag->implicit;
    }
    j["tag"] = std::move(t);
  }
  if (!pc.inner.empty()) j["certificate"] = to_json(pc.inner.front());
  return j;
}

Piece piece_from(const Json& j) {
  Piece pc;
  pc.vertices = j.at("vertices").get<std::vector<Vertex>>();
  if (j.contains("tag")) {
    const Json& t = j.at("tag");
    PartTag tag;
    tag.name = t.value("name", "");
    tag.check = check_from(t.at("check").get<std::string>());
    tag.bound = t.value("bound", 0u);
    if (t.contains("spec")) tag.spec = detail::class_spec_from_json_value(t.at("spec"));
    tag.implicit = t.value("implicit", false);
    pc.tag = std::move(tag);
  }
  if (j.contains("certificate")) pc.inner.push_back(from_json(j.at("certificate")));
  return pc;
}

Json pieces_json(const std::vector<Piece>& ps) {
  Json a = Json::array();
  for (const auto& pc : ps) a.push_back(piece_json(pc));
  return a;
}

std::vector<Piece> pieces_from(const Json& a) {
  std::vector<Piece> out;
  for (const auto& e : a) out.push_back(piece_from(e));
  return out;
}

Json to_json(const Certificate& c) {
  Json j = Json::object();
  j["kind"] = certificate_kind(c);
  j["class"] = c.class_id;
  j["params"] = params_json(c.params);
  j["claims_checked"] = c.claims_checked;
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, LowDegree>) {
          j["vertices"] = b.vertices;
          j["bound"] = b.bound;
          j["measure"] = measure_name(b.measure);
        } else if constexpr (std::is_same_v<T, Delta>) {
          j["x"] = b.x;
          j["y"] = b.y;
          j["delta"] = b.delta;
          j["bound"] = b.bound;
          j["achieved"] = b.achieved;
          j["same_part"] = b.same_part;
        } else if constexpr (std::is_same_v<T, Cover>) {
          j["multiplicity"] = b.multiplicity;
          j["parts"] = pieces_json(b.parts);
        } else if constexpr (std::is_same_v<T, Peel>) {
          j["d"] = b.d;
          j["layers"] = pieces_json(b.layers);
        } else if constexpr (std::is_same_v<T, Reduce>) {
          j["target_id"] = b.target_id;
          j["target_params"] = params_json(b.target_params);
          j["target"] = detail::class_spec_to_json_value(b.target);
          j["on_bipartite_complement"] = b.on_bipartite_complement;
          if (!b.inner.empty()) j["certificate"] = to_json(b.inner.front());
        } else {
          j["parts"] = pieces_json(b.parts);
        }
      },
      c.body);
  return j;
}

Certificate from_json(const Json& j) {
  Certificate c;
  c.class_id = j.at("class").get<std::string>();
  c.params = params_from(j.at("params"));
  c.claims_checked = j.value("claims_checked", std::vector<std::string>{});
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "LowDegree") {
    LowDegree b;
    b.vertices = j.at("vertices").get<std::vector<Vertex>>();
    b.bound = j.at("bound").get<unsigned>();
    b.measure = measure_from(j.at("measure").get<std::string>());
    c.body = std::move(b);
  } else if (kind == "Delta") {
    Delta b;
    b.x = j.at("x").get<Vertex>();
    b.y = j.at("y").get<Vertex>();
    b.delta = j.at("delta").get<std::vector<Vertex>>();
    b.bound = j.at("bound").get<unsigned>();
    b.achieved = j.at("achieved").get<unsigned>();
    b.same_part = j.value("same_part", false);
    c.body = std::move(b);
  } else if (kind == "Cover") {
    c.body = Cover{pieces_from(j.at("parts")), j.at("multiplicity").get<unsigned>()};
  } else if (kind == "Peel") {
    c.body = Peel{pieces_from(j.at("layers")), j.at("d").get<unsigned>()};
  } else if (kind == "Reduce") {
    Reduce b;
    b.target_id = j.value("target_id", "");
    b.target_params = params_from(j.at("target_params"));
    b.target = detail::class_spec_from_json_value(j.at("target"));
    b.on_bipartite_complement = j.value("on_bipartite_complement", false);
    if (j.contains("certificate")) b.inner.push_back(from_json(j.at("certificate")));
    c.body = std::move(b);
  } else if (kind == "Components") {
    c.body = Components{pieces_from(j.at("parts"))};
  } else if (kind == "Quotient") {
    c.body = Quotient{pieces_from(j.at("parts"))};
  } else {
    throw std::invalid_argument("unknown certificate kind: " + kind);
  }
  return c;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) { return to_json(c).dump(); }

Certificate certificate_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
}

}  // namespace herencode
