#include "rainbow/family_io.hpp"

#include <fstream>

namespace rainbow {

nlohmann::json family_to_json(const Family& fam) {
  return nlohmann::json{{"n", fam.n()}, {"cycles", fam.cycles()}};
}

Family family_from_json(const nlohmann::json& j) {
  int n = 0;
  std::vector<VertexCycle> cycles;
  try {
    if (!j.is_object()) throw Error(Errc::kMalformedInput, "family must be a JSON object");
    n = j.at("n").get<int>();
    cycles = j.at("cycles").get<std::vector<VertexCycle>>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::kMalformedInput, ex.what());
  }
  return Family(n, std::move(cycles));
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kMalformedInput, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::kMalformedInput, path + ": " + ex.what());
  }
  return family_from_json(j);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace rainbow
