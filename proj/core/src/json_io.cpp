#include "liecoh/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "liecoh/errors.hpp"

namespace liecoh {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error(std::string(what) + ": malformed JSON");
  return j;
}

int require_int(const ordered_json& j, const char* field, const char* what) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw input_error(std::string(what) + ": missing or non-integer field \"" + field + "\"");
  return j[field].get<int>();
}

Rational require_rational(const ordered_json& j, const char* what) {
  if (!j.is_string())
    throw input_error(std::string(what) + ": rational values must be strings");
  return Rational::parse(j.get<std::string>());
}

} // namespace

std::string algebra_to_json(const LieAlgebra& g) {
  ordered_json j;
  j["dim"] = g.dim();
  j["names"] = g.names();
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, vec] : g.brackets()) {
    ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    ordered_json v;
    for (const auto& [k, c] : vec) v[std::to_string(k)] = c.str();
    entry["v"] = std::move(v);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

LieAlgebra algebra_from_json(const std::string& text) {
  const ordered_json j = parse_json(text, "algebra");
  const int dim = require_int(j, "dim", "algebra");
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw input_error("algebra: field \"names\" must be an array");
    for (const auto& n : j["names"]) {
      if (!n.is_string()) throw input_error("algebra: field \"names\" must hold strings");
      names.push_back(n.get<std::string>());
    }
  }
  BracketMap brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array())
      throw input_error("algebra: field \"brackets\" must be an array");
    for (const auto& entry : j["brackets"]) {
      const int i = require_int(entry, "i", "algebra bracket");
      const int jj = require_int(entry, "j", "algebra bracket");
      if (!entry.contains("v") || !entry["v"].is_object())
        throw input_error("algebra bracket: missing object field \"v\"");
      SparseVec vec;
      for (const auto& [tk, tv] : entry["v"].items()) {
        int target = 0;
        try {
          target = std::stoi(tk);
        } catch (...) {
          throw input_error("algebra bracket: non-integer target key \"" + tk + "\"");
        }
        vec[target] = require_rational(tv, "algebra bracket value");
      }
      brackets[{i, jj}] = std::move(vec);
    }
  }
  return LieAlgebra::raw(dim, std::move(brackets), std::move(names));
}

std::string cochain_to_json(const Cochain& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, c] : f.coeffs()) {
    ordered_json entry;
    entry["args"] = key.first;
    entry["target"] = key.second;
    entry["c"] = c.str();
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

Cochain cochain_from_json(const std::string& text, int degree, int dim) {
  const ordered_json j = parse_json(text, "cochain");
  if (!j.is_array()) throw input_error("cochain: top-level JSON must be an array");
  Cochain f(degree, dim);
  for (const auto& entry : j) {
    if (!entry.contains("args") || !entry["args"].is_array())
      throw input_error("cochain: missing array field \"args\"");
    std::vector<int> args;
    for (const auto& a : entry["args"]) {
      if (!a.is_number_integer()) throw input_error("cochain: non-integer entry in \"args\"");
      args.push_back(a.get<int>());
    }
    const int target = require_int(entry, "target", "cochain");
    if (!entry.contains("c")) throw input_error("cochain: missing field \"c\"");
    f.add(std::move(args), target, require_rational(entry["c"], "cochain coefficient"));
  }
  return f;
}

std::string one_form_to_json(const KForm& f) {
  ordered_json j = ordered_json::object();
  for (const auto& [idx, c] : f.coeffs()) j[std::to_string(idx[0])] = c.str();
  return j.dump() + "\n";
}

KForm one_form_from_json(const std::string& text, int dim) {
  const ordered_json j = parse_json(text, "1-form");
  if (!j.is_object()) throw input_error("1-form: top-level JSON must be an object");
  KForm f(1, dim);
  for (const auto& [k, v] : j.items()) {
    int idx = 0;
    try {
      idx = std::stoi(k);
    } catch (...) {
      throw input_error("1-form: non-integer index key \"" + k + "\"");
    }
    f.add({idx}, require_rational(v, "1-form coefficient"));
  }
  return f;
}

namespace {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

} // namespace

std::string suite_report_to_json(const SuiteReport& rep) {
  ordered_json j;
  j["p"] = rep.params.p;
  ordered_json phi = ordered_json::array();
  for (const auto& x : rep.params.phi) phi.push_back(x.str());
  j["phi"] = std::move(phi);
  j["in_omega"] = !rep.omega.generic();
  if (!rep.omega.generic()) {
    ordered_json hits = ordered_json::array();
    for (const auto& h : rep.omega.violated) hits.push_back(h.rendered);
    j["omega_hits"] = std::move(hits);
  }
  ordered_json dims;
  dims["der"] = rep.dims.der;
  dims["h1"] = rep.dims.h1;
  dims["h2"] = rep.dims.h2;
  dims["z2_total"] = rep.dims.z2_total;
  dims["b2_total"] = rep.dims.b2_total;
  ordered_json gz;
  for (const auto& [w, d] : rep.dims.graded_z2) gz[std::to_string(w)] = d;
  dims["graded_z2"] = std::move(gz);
  ordered_json gb;
  for (const auto& [w, d] : rep.dims.graded_b2) gb[std::to_string(w)] = d;
  dims["graded_b2"] = std::move(gb);
  j["dims"] = std::move(dims);
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  ordered_json conv;
  conv["d_sign"] = "+";
  conv["sq1_factor"] = "1";
  j["conventions"] = std::move(conv);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

} // namespace liecoh
