#include "linerec/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linerec {

namespace {

using nlohmann::json;

std::vector<Conductor> parse_conductors(const json& list, double unit) {
  std::vector<Conductor> out;
  out.reserve(list.size());
  for (const auto& item : list) {
    const double x = item.at("x").get<double>() * unit;
    const double y = item.at("y").get<double>() * unit;
    const double re = item.value("re", 0.0);
    const double im = item.value("im", 0.0);
    out.emplace_back(Point2(x, y), Phasor(re, im));
  }
  return out;
}

json conductors_to_json(const std::vector<Conductor>& list) {
  json out = json::array();
  for (const auto& c : list)
    out.push_back({{"x", c.position.x},
                   {"y", c.position.y},
                   {"re", c.current.real()},
                   {"im", c.current.imag()}});
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw IoError(std::string("scenario parse error: ") + e.what());
  }
  try {
    Scenario s;
    s.r_meas = doc.at("r_meas").get<double>();
    s.n_meas = doc.at("n_meas").get<int>();

    const std::string coords = doc.value("coordinates", std::string("meters"));
    double unit = 1.0;
    if (coords == "r_meas")
      unit = s.r_meas;
    else if (coords != "meters")
      throw IoError("scenario: coordinates must be \"meters\" or \"r_meas\"");

    if (doc.contains("internal"))
      s.internal_conductors = parse_conductors(doc.at("internal"), unit);
    if (doc.contains("external"))
      s.external_conductors = parse_conductors(doc.at("external"), unit);

    if (doc.contains("noise")) {
      const auto& noise = doc.at("noise");
      s.noise.sigma_ref = noise.value("sigma_ref", 0.0);
      s.noise.seed = noise.value("seed", std::uint64_t{0});
      s.noise.runs = noise.value("runs", 1);
    }
    s.recon.n = static_cast<int>(s.internal_conductors.size());
    if (doc.contains("recon")) {
      const auto& recon = doc.at("recon");
      s.recon.n = recon.value("n", s.recon.n);
      s.recon.m_offset = recon.value("m_offset", 1);
      s.recon.l_offset = recon.value("l_offset", 1);
      s.recon.quadrature_order = recon.value("quadrature_order", 8);
    }
    return s;
  } catch (const json::exception& e) {
    throw IoError(std::string("scenario schema error: ") + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["r_meas"] = s.r_meas;
  doc["n_meas"] = s.n_meas;
  doc["coordinates"] = "meters";
  doc["internal"] = conductors_to_json(s.internal_conductors);
  doc["external"] = conductors_to_json(s.external_conductors);
  doc["noise"] = {{"sigma_ref", s.noise.sigma_ref},
                  {"seed", s.noise.seed},
                  {"runs", s.noise.runs}};
  doc["recon"] = {{"n", s.recon.n},
                  {"m_offset", s.recon.m_offset},
                  {"l_offset", s.recon.l_offset},
                  {"quadrature_order", s.recon.quadrature_order}};
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file: " + path.string());
  out << scenario_to_json(s);
}

}  // namespace linerec
