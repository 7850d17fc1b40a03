#include "wick/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wick/error.hpp"

namespace wick {

namespace {

using Json = nlohmann::ordered_json;

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

Vec vec_from_json(const Json& a, size_t dim, const std::string& field) {
  if (!a.is_array() || a.size() != dim)
    fail(Errc::ParseError, "field '" + field + "' must be an array of " + std::to_string(dim) +
                               " rational strings");
  Vec v;
  for (const auto& x : a) {
    if (!x.is_string()) fail(Errc::ParseError, "field '" + field + "' holds a non-string entry");
    v.push_back(Rational::parse(x.get<std::string>()));
  }
  return v;
}

}  // namespace

std::string algebra_to_spec(const SuperAlgebra& alg) {
  Json j;
  j["name"] = alg.name;
  j["basis"] = Json::array();
  for (size_t i = 0; i < alg.dim(); ++i)
    j["basis"].push_back(Json{{"name", alg.basis[i]}, {"parity", alg.parity[i]}});
  j["form"] = Json::array();
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t k = 0; k < alg.dim(); ++k)
      if (!alg.form.at(i, k).is_zero())
        j["form"].push_back(Json{{"i", i}, {"j", k}, {"value", alg.form.at(i, k).str()}});
  j["brackets"] = Json::array();
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t k = 0; k < alg.dim(); ++k) {
      if (vec_is_zero(alg.brk[i][k])) continue;
      Json terms = Json::array();
      for (size_t t = 0; t < alg.dim(); ++t)
        if (!alg.brk[i][k][t].is_zero())
          terms.push_back(Json{{"k", t}, {"coeff", alg.brk[i][k][t].str()}});
      j["brackets"].push_back(Json{{"i", i}, {"j", k}, {"terms", terms}});
    }
  j["x"] = vec_to_json(alg.x);
  j["f"] = vec_to_json(alg.f);
  if (alg.identity_element) j["identity_element"] = vec_to_json(*alg.identity_element);
  return j.dump(2) + "\n";
}

SuperAlgebra algebra_from_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  try {
    SuperAlgebra alg;
    if (!j.contains("name") || !j["name"].is_string())
      fail(Errc::ParseError, "missing string field 'name'");
    alg.name = j["name"].get<std::string>();
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
      fail(Errc::ParseError, "missing non-empty array field 'basis'");
    for (const auto& b : j["basis"]) {
      if (!b.contains("name") || !b.contains("parity"))
        fail(Errc::ParseError, "basis entries need 'name' and 'parity'");
      alg.basis.push_back(b["name"].get<std::string>());
      int p = b["parity"].get<int>();
      if (p != 0 && p != 1) fail(Errc::ParseError, "parity must be 0 or 1");
      alg.parity.push_back(p);
    }
    size_t n = alg.basis.size();
    alg.form = Mat(n, n);
    auto index_ok = [&](const Json& e, const char* key) -> size_t {
      if (!e.contains(key)) fail(Errc::ParseError, std::string("missing index '") + key + "'");
      long v = e[key].get<long>();
      if (v < 0 || v >= static_cast<long>(n))
        fail(Errc::ParseError, std::string("index '") + key + "' out of range");
      return static_cast<size_t>(v);
    };
    if (j.contains("form"))
      for (const auto& e : j["form"]) {
        size_t a = index_ok(e, "i"), b = index_ok(e, "j");
        alg.form.at(a, b) = Rational::parse(e.at("value").get<std::string>());
      }
    alg.brk.assign(n, std::vector<Vec>(n, vec_zero(n)));
    if (j.contains("brackets"))
      for (const auto& e : j["brackets"]) {
        size_t a = index_ok(e, "i"), b = index_ok(e, "j");
        if (!e.contains("terms") || !e["terms"].is_array())
          fail(Errc::ParseError, "bracket entries need a 'terms' array");
        for (const auto& t : e["terms"]) {
          size_t k = index_ok(t, "k");
          alg.brk[a][b][k] = Rational::parse(t.at("coeff").get<std::string>());
        }
      }
    alg.x = vec_from_json(j.at("x"), n, "x");
    alg.f = vec_from_json(j.at("f"), n, "f");
    if (j.contains("identity_element"))
      alg.identity_element = vec_from_json(j["identity_element"], n, "identity_element");
    return alg;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

SuperAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return algebra_from_spec(ss.str());
}

void save_algebra(const SuperAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::BadArgument, "cannot write '" + path + "'");
  out << algebra_to_spec(alg);
}

Datum load_datum(const std::string& path) {
  SuperAlgebra alg = load_algebra(path);
  MakeOptions opts;
  opts.mode = alg.identity_element ? Mode::GlNN : Mode::Standard;
  return make_datum(std::move(alg), opts);
}

void save_datum(const Datum& dt, const std::string& path) { save_algebra(*dt.alg, path); }

}  // namespace wick
