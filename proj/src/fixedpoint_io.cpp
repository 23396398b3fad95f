#include "quartics/fixedpoint_io.hpp"

#include <sstream>
#include <stdexcept>

#include "quartics/bott.hpp"

namespace quartics {

nlohmann::ordered_json to_json(const FixedPoint& p) {
  nlohmann::ordered_json j;
  j["stage"] = std::string(to_string(p.stage));
  j["hyperplane"] = p.hyperplane ? nlohmann::ordered_json(*p.hyperplane) : nullptr;
  auto& ideal = j["ideal"] = nlohmann::ordered_json::array();
  for (const auto& g : p.ideal.generators())
    ideal.push_back(g.to_string());
  auto& tangent = j["tangent"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.tangent.terms())
    tangent.push_back({{"monomial", m.to_string()}, {"multiplicity", c.get_si()}});
  auto& fiber = j["fiber"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.fiber.terms())
    fiber.push_back(m.to_string());
  return j;
}

FixedPoint fixed_point_from_json(const nlohmann::json& j) {
  try {
    FixedPoint p;
    p.stage = stage_from_string(j.at("stage").get<std::string>());
    if (!j.at("hyperplane").is_null())
      p.hyperplane = j.at("hyperplane").get<int>();
    std::vector<LaurentMonomial> gens;
    for (const auto& g : j.at("ideal"))
      gens.push_back(LaurentMonomial::parse(g.get<std::string>()));
    p.ideal = MonomialIdeal(std::move(gens));
    for (const auto& t : j.at("tangent"))
      p.tangent.add(LaurentMonomial::parse(t.at("monomial").get<std::string>()),
                    t.at("multiplicity").get<long>());
    for (const auto& f : j.at("fiber"))
      p.fiber.add(LaurentMonomial::parse(f.get<std::string>()));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed fixed-point record: ") + e.what());
  }
}

std::string dump_json(const std::vector<FixedPoint>& points) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : points)
    arr.push_back(to_json(p));
  return arr.dump(2) + "\n";
}

std::vector<FixedPoint> parse_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!arr.is_array())
    throw std::invalid_argument("fixed-point dump must be a JSON array");
  std::vector<FixedPoint> out;
  out.reserve(arr.size());
  for (const auto& j : arr)
    out.push_back(fixed_point_from_json(j));
  return out;
}

std::string dump_text(const std::vector<FixedPoint>& points) {
  std::ostringstream os;
  for (const auto& p : points) {
    os << point_label(p) << '\n';
    os << "  tangent: " << p.tangent.to_string() << '\n';
    os << "  fiber:   " << p.fiber.to_string() << '\n';
  }
  return os.str();
}

}  // namespace quartics
