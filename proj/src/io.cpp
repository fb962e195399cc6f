#include "bgmu/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bgmu {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("datum field '" + field + "': " + what);
}

RootDatum parse_type(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.rfind("GL", 0) == 0) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2) fail("type", "trailing characters in '" + text + "'");
    } catch (const std::logic_error&) {
      fail("type", "cannot read the GL rank in '" + text + "'");
    }
    if (n < 2) fail("type", "GL rank must be at least 2");
    return make_gl_datum(n);
  }
  std::vector<std::pair<char, int>> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (pos > 0) {
      if (s[pos] != 'x') fail("type", "expected 'x' between factors in '" + text + "'");
      ++pos;
    }
    if (pos >= s.size() || !std::isupper(static_cast<unsigned char>(s[pos])))
      fail("type", "expected a letter A..G in '" + text + "'");
    char letter = s[pos++];
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("type", "missing rank after '" + std::string(1, letter) + "'");
    parts.push_back({letter, std::stoi(s.substr(start, pos - start))});
  }
  if (parts.empty()) fail("type", "empty type string");
  try {
    return make_root_datum(parts);
  } catch (const std::invalid_argument& e) {
    fail("type", e.what());
  }
}

std::vector<int> parse_sigma0(const json& j, const RootDatum& rd) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "id") return identity_perm(rd);
    if (s == "flip") return flip_perm(rd);
    fail("sigma0", "expected \"id\", \"flip\", or a permutation array, got \"" + s + "\"");
  }
  if (!j.is_array()) fail("sigma0", "expected a string or an array");
  if (static_cast<int>(j.size()) != rd.rank)
    fail("sigma0", "permutation length " + std::to_string(j.size()) + " does not match rank " +
                       std::to_string(rd.rank));
  std::vector<int> perm;
  for (const json& e : j) {
    if (!e.is_number_integer()) fail("sigma0", "permutation entries must be integers");
    int v = e.get<int>();
    if (v < 1 || v > rd.rank)
      fail("sigma0", "entry " + std::to_string(v) + " is outside 1.." + std::to_string(rd.rank));
    perm.push_back(v - 1);
  }
  return perm;
}

TauSpec parse_tau(const json& j, const RootDatum& rd) {
  if (j.is_object()) {
    if (j.size() != 1 || !j.contains("rotate"))
      fail("tau", "the only object form is {\"rotate\": i}");
    const json& r = j.at("rotate");
    if (!r.is_number_integer()) fail("tau", "rotate power must be an integer");
    if (!rd.gl_mode) fail("tau", "rotate twists need a GL type");
    return TauSpec::rotate(r.get<int>());
  }
  if (!j.is_number_integer()) fail("tau", "expected an integer or {\"rotate\": i}");
  int k = j.get<int>();
  if (k == 0) return TauSpec::identity();
  if (k < 1 || k > rd.rank)
    fail("tau", "node " + std::to_string(k) + " is outside 1.." + std::to_string(rd.rank));
  return TauSpec::node(k);
}

Vec parse_mu(const json& j, const RootDatum& rd) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() < 2 || s[0] != 'w') fail("mu", "labels look like \"w2\", got \"" + s + "\"");
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(s.substr(1), &used);
      if (used != s.size() - 1) fail("mu", "trailing characters in \"" + s + "\"");
    } catch (const std::logic_error&) {
      fail("mu", "cannot read the node number in \"" + s + "\"");
    }
    if (k < 1 || k > rd.rank)
      fail("mu", "node " + std::to_string(k) + " is outside 1.." + std::to_string(rd.rank));
    if (rd.gl_mode) {
      Vec v = Vec::Zero(rd.dim);
      for (int i = 0; i < k; ++i) v(i) = 1;
      return v;
    }
    return Vec(rd.lattice.col(k - 1));
  }
  if (!j.is_array()) fail("mu", "expected an integer array or a \"w2\"-style label");
  int cols = static_cast<int>(rd.lattice.cols());
  if (static_cast<int>(j.size()) != cols)
    fail("mu", "expected " + std::to_string(cols) + " lattice coordinates, got " +
                   std::to_string(j.size()));
  Vec v = Vec::Zero(rd.dim);
  int i = 0;
  for (const json& e : j) {
    if (!e.is_number_integer()) fail("mu", "coordinates must be integers");
    v += Vec(rd.lattice.col(i)) * Rat(e.get<long>());
    ++i;
  }
  return v;
}

}  // namespace

CoxeterDatum parse_datum_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("datum is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("datum must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "type" && key != "sigma0" && key != "tau" && key != "mu")
      throw std::invalid_argument("datum field '" + key + "': unknown key");
  }
  if (!j.contains("type")) fail("type", "missing");
  if (!j.at("type").is_string()) fail("type", "expected a string");
  if (!j.contains("mu")) fail("mu", "missing");

  RootDatum rd = parse_type(j.at("type").get<std::string>());
  std::vector<int> sigma0 =
      j.contains("sigma0") ? parse_sigma0(j.at("sigma0"), rd) : identity_perm(rd);
  TauSpec tau = j.contains("tau") ? parse_tau(j.at("tau"), rd) : TauSpec::identity();
  Vec mu = parse_mu(j.at("mu"), rd);
  return make_coxeter_datum(rd, sigma0, tau, mu);
}

CoxeterDatum parse_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open datum file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum_text(ss.str());
}

}  // namespace bgmu
