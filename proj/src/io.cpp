#include "lapbound/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "lapbound/errors.hpp"

namespace lapbound {

namespace {

using nlohmann::json;

std::vector<VertexId> parse_vertex_array(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<VertexId> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(v.get<VertexId>());
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "vertices" && key != "maximal_faces")
      throw ParseError("unknown field \"" + key + "\"");
  }
  if (!doc.contains("vertices")) throw ParseError("missing field \"vertices\"");
  if (!doc.contains("maximal_faces"))
    throw ParseError("missing field \"maximal_faces\"");

  std::vector<VertexId> vertices = parse_vertex_array(doc["vertices"], "vertices");
  const json& faces = doc["maximal_faces"];
  if (!faces.is_array()) throw ParseError("maximal_faces must be an array");
  std::vector<Simplex> maximal;
  maximal.reserve(faces.size());
  for (const json& f : faces) maximal.push_back(parse_vertex_array(f, "face"));

  try {
    return from_maximal_faces(vertices, maximal);
  } catch (const FaceBudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex load_complex_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex_json(buffer.str());
}

std::string complex_to_json(const SimplicialComplex& x) {
  json doc;
  doc["vertices"] = x.vertices();
  json faces = json::array();
  for (const Simplex& f : x.maximal_faces()) faces.push_back(f);
  doc["maximal_faces"] = std::move(faces);
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(),
                                      "cannot open " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::system_error(errno, std::generic_category(),
                                      "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::system_error(errno, std::generic_category(),
                            "cannot rename " + tmp + " to " + path);
}

}  // namespace lapbound
