#include "qconc/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qconc {
namespace {

using nlohmann::json;

// byte offset -> "line:column" for parse diagnostics
std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw std::runtime_error(name + ": " + msg);
}

}  // namespace

MultipartiteState parse_state_json(const std::string& text,
                                   const std::string& name,
                                   const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte points just past the offending character
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw std::runtime_error(name + ":" + locate(text, byte) + ": " +
                             e.what());
  }

  if (!doc.is_object()) fail(name, "top-level value must be an object");
  if (!doc.contains("dims")) fail(name, "missing required field \"dims\"");
  if (!doc.contains("matrix")) fail(name, "missing required field \"matrix\"");

  const json& jdims = doc["dims"];
  if (!jdims.is_array() || jdims.empty())
    fail(name, "\"dims\" must be a nonempty array of integers");
  std::vector<int> dims;
  for (const json& v : jdims) {
    if (!v.is_number_integer())
      fail(name, "\"dims\" must contain integers only");
    dims.push_back(v.get<int>());
  }

  long d = 1;
  for (int v : dims) d *= std::max(v, 1);

  const json& jmat = doc["matrix"];
  if (!jmat.is_array() || static_cast<long>(jmat.size()) != d)
    fail(name, "\"matrix\" must have " + std::to_string(d) +
                   " rows, found " + std::to_string(jmat.size()));

  std::vector<cplx> entries;
  entries.reserve(static_cast<std::size_t>(d) * d);
  for (long r = 0; r < d; ++r) {
    const json& row = jmat[r];
    if (!row.is_array() || static_cast<long>(row.size()) != d)
      fail(name, "matrix row " + std::to_string(r) + " must have " +
                     std::to_string(d) + " entries, found " +
                     std::to_string(row.size()));
    for (long c = 0; c < d; ++c) {
      const json& cell = row[c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        fail(name, "matrix entry (" + std::to_string(r) + ", " +
                       std::to_string(c) + ") must be a [re, im] pair");
      entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
    }
  }

  try {
    return validate(std::move(dims),
                    ComplexMatrix(d, d, std::move(entries)), tol);
  } catch (const StateError& e) {
    throw StateError(e.defect(), name + ": " + e.what());
  } catch (const std::exception& e) {
    fail(name, e.what());
  }
}

MultipartiteState load_state_file(const std::string& path,
                                  const Tolerances& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str(), path, tol);
}

std::string state_to_json(const MultipartiteState& s) {
  json doc;
  doc["dims"] = s.dims;
  json rows = json::array();
  const long d = s.total_dim();
  for (long r = 0; r < d; ++r) {
    json row = json::array();
    for (long c = 0; c < d; ++c) {
      const cplx v = s.rho(r, c);
      row.push_back(json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(1);
}

}  // namespace qconc
