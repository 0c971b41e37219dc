#include "monoclt/measure_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace monoclt {

namespace {
using nlohmann::json;
}

MeasureSpec parse_measure_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("bad measure spec JSON: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  if (kind == "arcsine") return MeasureSpec::arcsine();
  if (kind == "nu_r") {
    if (!j.contains("r")) throw InvalidSpec("nu_r spec needs \"r\"");
    return MeasureSpec::nu(j["r"].get<double>());
  }
  if (kind == "atomic") {
    if (!j.contains("atoms") || !j["atoms"].is_array()) {
      throw InvalidSpec("atomic spec needs an \"atoms\" array");
    }
    std::vector<Atom> atoms;
    for (const auto& a : j["atoms"]) {
      atoms.push_back(Atom{a.at("t").get<double>(), a.at("w").get<double>()});
    }
    return MeasureSpec::atomic(AtomicMeasure::from_pairs(std::move(atoms)));
  }
  throw InvalidSpec("unknown measure kind \"" + kind + "\"");
}

MeasureSpec load_measure_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open measure spec " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_spec(buf.str());
}

std::string measure_spec_to_json(const MeasureSpec& m) {
  json j;
  switch (m.kind()) {
    case MeasureKind::arcsine:
      j["kind"] = "arcsine";
      break;
    case MeasureKind::nu_r:
      j["kind"] = "nu_r";
      j["r"] = m.r();
      break;
    case MeasureKind::atomic: {
      j["kind"] = "atomic";
      j["atoms"] = json::array();
      for (const Atom& a : m.atomic_measure().atoms()) {
        j["atoms"].push_back({{"t", a.t}, {"w", a.w}});
      }
      break;
    }
  }
  return j.dump();
}

}  // namespace monoclt
