#include <json.hpp>

#include "gcmonad/programs.hpp"

namespace gcmonad {

namespace {

nlohmann::json key_json(const Outcome& o) {
  switch (o.kind()) {
    case Outcome::Kind::Bool:
      return o.as_bool();
    case Outcome::Kind::Int:
      return o.as_int();
    case Outcome::Kind::Symbol:
      return o.as_symbol().name;
    default:
      return to_text(o);
  }
}

}  // namespace

std::string render(const Gcm& v, Format format) {
  if (format == Format::Text) return render_lines(v);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& d : v.generators()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, w] : d.entries()) entries.push_back(nlohmann::json::array({key_json(k), w.str()}));
    gens.push_back(std::move(entries));
  }
  return nlohmann::json{{"generators", std::move(gens)}}.dump();
}

}  // namespace gcmonad
