#include "slword/problem.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace slword {

namespace {

using nlohmann::json;

ModMatrix matrix_from_json(const json& j, const GroupSpec& spec,
                           const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != spec.m) {
    throw ParseError(what + ": expected " + std::to_string(spec.m) +
                     " rows");
  }
  std::vector<std::vector<Int>> rows;
  rows.reserve(spec.m);
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != spec.m) {
      throw ParseError(what + ": expected " + std::to_string(spec.m) +
                       " entries per row");
    }
    std::vector<Int> r;
    r.reserve(spec.m);
    for (const json& e : row) {
      if (!e.is_number_integer()) {
        throw ParseError(what + ": entries must be integers");
      }
      r.emplace_back(e.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return ModMatrix::from_rows(spec.ring(), rows);
}

std::int64_t int_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_number_integer()) {
    throw ParseError(std::string("problem: missing integer field '") + name +
                     "'");
  }
  return it->get<std::int64_t>();
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem: top level must be an object");

  std::int64_t p = int_field(j, "p");
  std::int64_t m = int_field(j, "m");
  std::int64_t n = int_field(j, "n");
  GroupSpec spec = [&] {
    try {
      return GroupSpec::make(p, static_cast<int>(m), static_cast<int>(n));
    } catch (const InvalidGroupSpec& e) {
      throw ParseError(std::string("problem: ") + e.what());
    }
  }();

  auto git = j.find("generators");
  if (git == j.end() || !git->is_array() || git->empty()) {
    throw ParseError("problem: 'generators' must be a nonempty array");
  }
  Problem prob{spec, {}, std::nullopt};
  int idx = 0;
  for (const json& g : *git) {
    ModMatrix mat =
        matrix_from_json(g, spec, "generator " + std::to_string(idx));
    if (mat.det() != 1) {
      throw ParseError("generator " + std::to_string(idx) +
                       ": determinant is " + mat.det().str() + ", not 1");
    }
    prob.generators.push_back(std::move(mat));
    ++idx;
  }
  if (auto tit = j.find("target"); tit != j.end() && !tit->is_null()) {
    ModMatrix mat = matrix_from_json(*tit, spec, "target");
    if (mat.det() != 1) {
      throw ParseError("target: determinant is " + mat.det().str() +
                       ", not 1");
    }
    prob.target = std::move(mat);
  }
  return prob;
}

Problem load_problem(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("problem: cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_problem(buf.str());
}

ModMatrix parse_matrix_text(const std::string& text, const GroupSpec& spec) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  return matrix_from_json(j, spec, "matrix");
}

}  // namespace slword
