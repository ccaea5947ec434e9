#include "valuator/json_io.hpp"

#include <fstream>
#include <limits>

namespace valuator {

namespace {

Json rat_to_json(const Rat& r) {
  if (denominator(r) == 1) {
    const auto num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return Json(static_cast<long long>(num));
  }
  return Json(r.str());
}

std::string deg_key(int dt, int du) {
  return "t^" + std::to_string(dt) + " u^" + std::to_string(du);
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground();
  Json bases = Json::array();
  for (Mask b : m.bases()) bases.push_back(m.labels_of(b));
  j["bases"] = std::move(bases);
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("bases"))
    throw ValidationError("matroid JSON must be an object with 'ground' and 'bases'");
  if (!j.at("ground").is_array() || !j.at("bases").is_array())
    throw ValidationError("'ground' and 'bases' must be arrays");
  std::vector<std::string> ground;
  for (const auto& g : j.at("ground")) {
    if (!g.is_string()) throw ValidationError("ground labels must be strings");
    ground.push_back(g.get<std::string>());
  }
  std::vector<std::vector<std::string>> bases;
  for (const auto& b : j.at("bases")) {
    if (!b.is_array()) throw ValidationError("each basis must be an array of labels");
    std::vector<std::string> basis;
    for (const auto& e : b) {
      if (!e.is_string()) throw ValidationError("basis elements must be strings");
      basis.push_back(e.get<std::string>());
    }
    bases.push_back(std::move(basis));
  }
  return Matroid::from_bases(ground, bases);
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["target"] = matroid_to_json(d.target());
  Json faces = Json::array();
  for (const Matroid& f : d.faces()) faces.push_back(matroid_to_json(f));
  j["faces"] = std::move(faces);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("faces"))
    throw ValidationError("decomposition JSON must be an object with 'target' and 'faces'");
  const Matroid target = matroid_from_json(j.at("target"));
  std::vector<Matroid> faces;
  for (const auto& f : j.at("faces")) faces.push_back(matroid_from_json(f));
  return Decomposition::build(target, faces);
}

Json upoly_to_json(const UPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.coeffs()) j[std::to_string(d)] = rat_to_json(c);
  return j;
}

Json bpoly_to_json(const BPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.coeffs()) j[deg_key(d.first, d.second)] = rat_to_json(c);
  return j;
}

Json homreport_to_json(const HomologyReport& r) {
  Json degrees = Json::object();
  for (const auto& [d, dims] : r.dims) {
    Json entry;
    Json dj = Json::object(), hj = Json::object();
    for (int k = 0; k <= r.top; ++k) {
      dj[std::to_string(k)] = dims[k];
      hj[std::to_string(k)] = r.homology.at(d)[k];
    }
    entry["dims"] = std::move(dj);
    entry["homology"] = std::move(hj);
    degrees[deg_key(d.first, d.second)] = std::move(entry);
  }
  Json j;
  j["top"] = r.top;
  j["degrees"] = std::move(degrees);
  j["exact"] = r.exact;
  return j;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace valuator
