#include "expdioph/report.hpp"

#include <sstream>
#include <stdexcept>

#include "expdioph/aux.hpp"
#include "expdioph/equation.hpp"
#include "expdioph/linform.hpp"

namespace expdioph {

const char* family_equation_text() { return "(2am+1)^x+(2m)^y=(2am-1)^z"; }
const char* corollary_equation_text() { return "b^x+2^y=(b-2)^z"; }

namespace {

bool reverify(const SearchReport& r, const std::vector<std::uint64_t>& t) {
  switch (r.kind) {
    case EquationKind::Family:
      return t.size() == 5 && t[0] >= 2 && t[1] >= 1 &&
             Solution::verify(Instance(t[0], t[1]), ExponentTriple(t[2], t[3], t[4])).has_value();
    case EquationKind::Corollary:
      return t.size() == 4 && t[0] >= 5 && t[0] % 2 == 1 &&
             check_generic(PowerSumEquation(big(t[0]), BigInt(2), big(t[0] - 2)),
                           ExponentTriple(t[1], t[2], t[3]));
    case EquationKind::Aux:
      return aux_tuple_holds(parse_aux_id(r.region.at("id").get<std::string>()), t);
  }
  return false;
}

}  // namespace

nlohmann::json report_to_json(const SearchReport& r, bool canonical) {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& t : r.solutions) {
    if (!reverify(r, t)) throw std::logic_error("report contains a tuple that does not verify");
    sols.push_back(t);
  }
  nlohmann::json j = {
      {"equation", r.equation},
      {"region", r.region},
      {"bounds_version", r.bounds_version},
      {"solutions", sols},
      {"units_done", r.units_done},
      {"units_total", r.units_total},
  };
  if (!canonical) j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::json bounds_to_json(const BoundSet& b) {
  nlohmann::json constants = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::object();
  for (const auto& e : b.entries) {
    nlohmann::json v = std::holds_alternative<std::int64_t>(e.value)
                           ? nlohmann::json(std::get<std::int64_t>(e.value))
                           : nlohmann::json(std::get<std::string>(e.value));
    constants.push_back({{"name", e.name}, {"value", v}, {"anchor", e.anchor}, {"derivation", e.derivation}});
    values[e.name] = v;
  }
  return {{"bounds_version", kBoundsVersion}, {"constants", constants}, {"values", values}};
}

std::string report_to_csv(const SearchReport& r) {
  for (const auto& t : r.solutions) {
    if (!reverify(r, t)) throw std::logic_error("report contains a tuple that does not verify");
  }
  std::ostringstream os;
  switch (r.kind) {
    case EquationKind::Family: os << "a,m,x,y,z\n"; break;
    case EquationKind::Corollary: os << "b,x,y,z\n"; break;
    case EquationKind::Aux: {
      const std::string id = r.region.at("id").get<std::string>();
      if (id == "na53") os << "x,z\n";
      else if (id == "pillai35") os << "X,Z\n";
      else if (id == "le") os << "U,V,k,l\n";
      else if (id == "terai4") os << "x,y,z,k\n";
      else if (id == "fhyz") os << "n,x,y,z\n";
      else os << "B,t,x,y,z\n";
      break;
    }
  }
  for (const auto& t : r.solutions) {
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace expdioph
