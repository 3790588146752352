#include "latpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace latpoly {

namespace detail {

Integer integerFromJson(const nlohmann::json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    Integer out;
    const auto& s = value.get_ref<const std::string&>();
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError("not an integer: \"" + s + "\"");
    return out;
  }
  throw ParseError("expected an integer, got " + value.dump());
}

std::vector<IntVector> pointsFromJson(const nlohmann::json& value) {
  if (!value.is_array() || value.empty()) throw ParseError("expected a nonempty array of points");
  std::vector<IntVector> out;
  for (const auto& row : value) {
    if (!row.is_array()) throw ParseError("expected a point as an array, got " + row.dump());
    IntVector p;
    for (const auto& x : row) p.push_back(integerFromJson(x));
    if (!out.empty() && p.size() != out.front().size())
      throw ParseError("points have different lengths");
    out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json pointsToJson(const std::vector<IntVector>& points) {
  auto out = nlohmann::json::array();
  for (const auto& p : points) {
    auto row = nlohmann::json::array();
    for (const auto& x : p) {
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

namespace {

nlohmann::json parseJson(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> splitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

}  // namespace

NamedPolytope parsePolytope(const std::string& text) {
  const auto doc = parseJson(text);
  if (!doc.is_object() || !doc.contains("vertices"))
    throw ParseError("polytope JSON needs a \"vertices\" field");
  NamedPolytope out{LatticePolytope::fromVertices(detail::pointsFromJson(doc["vertices"])),
                    std::nullopt};
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

NamedPolytope readPolytopeFile(const std::string& path) { return parsePolytope(readTextFile(path)); }

std::string polytopeToJson(const LatticePolytope& p, const std::optional<std::string>& name) {
  nlohmann::json doc;
  if (name) doc["name"] = *name;
  doc["vertices"] = detail::pointsToJson(p.vertices());
  return doc.dump();
}

PointConfiguration parseConfiguration(const std::string& text) {
  const auto doc = parseJson(text);
  if (doc.is_object() && doc.contains("points")) {
    auto pts = detail::pointsFromJson(doc["points"]);
    const std::size_t n = pts.front().size();
    return PointConfiguration(n, std::move(pts));
  }
  return PointConfiguration::fromPolytope(parsePolytope(text).polytope);
}

PointConfiguration readConfigurationFile(const std::string& path) {
  return parseConfiguration(readTextFile(path));
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string formatRational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string formatMonomial(const IntVector& exponents) {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exponents[i] != 1) out += "^" + exponents[i].get_str();
  }
  return out.empty() ? "1" : out;
}

std::string formatVector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

RatVector parseRationalList(const std::string& text) {
  RatVector out;
  for (const auto& part : splitCommas(text)) {
    Rational r;
    const auto slash = part.find('/');
    Integer num, den = 1;
    const std::string numText = part.substr(0, slash);
    if (numText.empty() || num.set_str(numText, 10) != 0)
      throw ParseError("not a rational number: \"" + part + "\"");
    if (slash != std::string::npos) {
      const std::string denText = part.substr(slash + 1);
      if (denText.empty() || den.set_str(denText, 10) != 0 || den == 0)
        throw ParseError("not a rational number: \"" + part + "\"");
    }
    r = Rational(num, den);
    r.canonicalize();
    out.push_back(r);
  }
  if (out.empty()) throw ParseError("empty coordinate list");
  return out;
}

std::vector<std::size_t> parseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : splitCommas(text)) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("not an index: \"" + part + "\"");
    out.push_back(std::stoul(part));
  }
  if (out.empty()) throw ParseError("empty index list");
  return out;
}

}  // namespace latpoly
