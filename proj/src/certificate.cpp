#include "topoclique/certificate.hpp"

#include "topoclique/errors.hpp"

namespace topoclique {

using nlohmann::json;

SubdivisionCertificate SubdivisionCertificate::lifted(const std::vector<Vertex>& to_parent) const {
  auto map = [&](Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= to_parent.size()) throw InputError("lift: vertex out of range");
    return to_parent[static_cast<std::size_t>(v)];
  };
  SubdivisionCertificate out;
  out.meta = meta;
  for (Vertex v : cores) out.cores.push_back(map(v));
  for (const auto& cp : paths) {
    CertificatePath lifted_path{{map(cp.pair.first), map(cp.pair.second)}, {}};
    for (Vertex v : cp.path.vertices) lifted_path.path.vertices.push_back(map(v));
    out.paths.push_back(std::move(lifted_path));
  }
  return out;
}

json to_json(const SubdivisionCertificate& cert) {
  json paths = json::array();
  for (const auto& cp : cert.paths) {
    paths.push_back({{"pair", {cp.pair.first, cp.pair.second}}, {"vertices", cp.path.vertices}});
  }
  return {{"cores", cert.cores}, {"paths", paths}, {"meta", {{"route", cert.meta.route}, {"params", cert.meta.params}}}};
}

namespace {

std::vector<Vertex> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("certificate: '") + what + "' must be an array");
  std::vector<Vertex> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string("certificate: '") + what + "' holds a non-integer");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

}  // namespace

SubdivisionCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InputError("certificate: top level must be an object");
  if (!j.contains("cores") || !j.contains("paths")) throw InputError("certificate: needs 'cores' and 'paths'");
  SubdivisionCertificate cert;
  cert.cores = int_array(j.at("cores"), "cores");
  const json& paths = j.at("paths");
  if (!paths.is_array()) throw InputError("certificate: 'paths' must be an array");
  for (const auto& p : paths) {
    if (!p.is_object() || !p.contains("pair") || !p.contains("vertices")) {
      throw InputError("certificate: each path needs 'pair' and 'vertices'");
    }
    auto pair = int_array(p.at("pair"), "pair");
    if (pair.size() != 2) throw InputError("certificate: 'pair' must have two entries");
    cert.paths.push_back({{pair[0], pair[1]}, Path{int_array(p.at("vertices"), "vertices")}});
  }
  if (j.contains("meta")) {
    const json& meta = j.at("meta");
    if (!meta.is_object()) throw InputError("certificate: 'meta' must be an object");
    if (meta.contains("route")) {
      if (!meta.at("route").is_string()) throw InputError("certificate: 'route' must be a string");
      cert.meta.route = meta.at("route").get<std::string>();
    }
    if (meta.contains("params")) cert.meta.params = meta.at("params");
  }
  return cert;
}

std::string dump_certificate(const SubdivisionCertificate& cert) { return to_json(cert).dump() + "\n"; }

}  // namespace topoclique
