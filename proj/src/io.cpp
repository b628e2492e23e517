#include "regrade/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "regrade/error.hpp"

namespace regrade {

namespace {

constexpr double kPi = 3.14159265358979323846;

long json_to_long(const json& j, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<long> parse_moduli_string(const std::string& s) {
  if (s.empty() || s == "e" || s == "()") return {};
  std::vector<long> moduli;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('x', pos);
    std::string piece = s.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      moduli.push_back(std::stol(piece));
    } catch (...) {
      throw ParseError("bad group spec '" + s + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return moduli;
}

}  // namespace

json group_to_json(const GroupSpec& g) {
  json j;
  j["moduli"] = g.moduli();
  return j;
}

GroupSpec group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("moduli") || !j["moduli"].is_array())
    throw ParseError("group must be {\"moduli\": [...]}");
  std::vector<long> moduli;
  for (const auto& m : j["moduli"]) moduli.push_back(json_to_long(m, "modulus"));
  return GroupSpec(std::move(moduli));
}

GroupSpec group_from_spec(const std::string& s) {
  if (!s.empty() && s[0] == '{') return group_from_json(json::parse(s));
  return GroupSpec(parse_moduli_string(s));
}

json element_to_json(const GroupElement& e) { return json(e.r); }

GroupElement element_from_json(const json& j, const GroupSpec& g) {
  if (!j.is_array()) throw ParseError("group element must be an array of residues");
  GroupElement e;
  for (const auto& v : j) e.r.push_back(json_to_long(v, "residue"));
  if (!g.canonical(e)) throw ParseError("element " + e.str() + " is not canonical for " + g.str());
  return e;
}

json scalar_to_json(const Cyclotomic& v) {
  if (v.is_rational() && v.rational_value().get_den() == 1) {
    const BigInt& n = v.rational_value().get_num();
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
  }
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) {
    auto [num, den] = rational_parts(c);
    coeffs.push_back(json::array({num, den}));
  }
  json j;
  j["conductor"] = v.conductor();
  j["coeffs"] = std::move(coeffs);
  return j;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(j.get<long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return make_rational(s.substr(0, slash), s.substr(slash + 1));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal '" + s + "'");
    }
  }
  if (j.is_array() && j.size() == 2) {
    auto part = [](const json& p) -> std::string {
      if (p.is_string()) return p.get<std::string>();
      if (p.is_number_integer() || p.is_number_unsigned())
        return std::to_string(p.get<long long>());
      throw ParseError("rational parts must be integers or decimal strings");
    };
    try {
      return make_rational(part(j[0]), part(j[1]));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational pair");
    }
  }
  throw ParseError("expected a rational value");
}

}  // namespace

Cyclotomic scalar_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Cyclotomic(j.get<long>());
  if (j.is_number_float()) {
    double d = j.get<double>();
    if (d != std::floor(d)) throw ParseError("floating point scalars are not accepted");
    return Cyclotomic(static_cast<long>(d));
  }
  if (j.is_string()) return Cyclotomic(rational_from_json(j));
  if (j.is_object() && j.contains("zeta")) {
    const json& z = j["zeta"];
    if (!z.is_array() || z.size() != 2) throw ParseError("zeta shorthand must be [m, k]");
    return Cyclotomic::zeta(json_to_long(z[0], "zeta conductor"), json_to_long(z[1], "zeta power"));
  }
  if (j.is_object() && j.contains("conductor") && j.contains("coeffs")) {
    const long m = json_to_long(j["conductor"], "conductor");
    if (m < 1) throw ParseError("conductor must be >= 1");
    if (!j["coeffs"].is_array()) throw ParseError("coeffs must be an array");
    if (static_cast<long>(j["coeffs"].size()) > euler_phi(m))
      throw ParseError("coefficient list longer than phi(conductor)");
    std::vector<Rational> poly;
    for (const auto& c : j["coeffs"]) poly.push_back(rational_from_json(c));
    return Cyclotomic::from_poly(m, std::move(poly));
  }
  throw ParseError("unrecognized scalar encoding");
}

std::complex<double> scalar_approx(const Cyclotomic& v) {
  std::complex<double> acc(0.0, 0.0);
  const double m = static_cast<double>(v.conductor());
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    const double c = v.coeffs()[i].get_d();
    if (c == 0.0) continue;
    const double arg = 2.0 * kPi * static_cast<double>(i) / m;
    acc += c * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

namespace {

json table_to_json(const PairingTable& t, const char* kind) {
  const std::size_t n = static_cast<std::size_t>(t.group().order());
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(scalar_to_json(t.at(i, j)));
    rows.push_back(std::move(row));
  }
  json j;
  j["group"] = group_to_json(t.group());
  j["kind"] = kind;
  j["table"] = std::move(rows);
  return j;
}

std::vector<Cyclotomic> table_from_json(const json& j, const GroupSpec& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (!j.is_array() || j.size() != n) throw ParseError("table must have |G| rows");
  std::vector<Cyclotomic> flat;
  flat.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw ParseError("table must have |G| columns");
    for (const auto& v : row) flat.push_back(scalar_from_json(v));
  }
  return flat;
}

}  // namespace

json bicharacter_to_json(const Bicharacter& b) { return table_to_json(b, "bicharacter"); }
json cocycle_to_json(const Cocycle& c) { return table_to_json(c, "cocycle"); }

Pairing pairing_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("pairing input must be a JSON object");
  const std::string kind = j.value("kind", "bicharacter");
  if (!j.contains("group")) throw ParseError("pairing input needs a group");
  GroupSpec g = group_from_json(j["group"]);
  if (kind == "bicharacter") {
    if (j.contains("generators")) {
      const json& gen = j["generators"];
      if (!gen.is_array() || gen.size() != g.rank())
        throw ParseError("generator matrix must be rank x rank");
      Mat m;
      for (const auto& row : gen) {
        if (!row.is_array() || row.size() != g.rank())
          throw ParseError("generator matrix must be rank x rank");
        Vec r;
        for (const auto& v : row) r.push_back(scalar_from_json(v));
        m.push_back(std::move(r));
      }
      return bicharacter_from_generators(g, m);
    }
    if (!j.contains("table")) throw ParseError("bicharacter input needs a table or generators");
    return Bicharacter(g, table_from_json(j["table"], g));
  }
  if (kind == "cocycle") {
    if (!j.contains("table")) throw ParseError("cocycle input needs a table");
    return Cocycle(g, table_from_json(j["table"], g));
  }
  throw ParseError("kind must be \"bicharacter\" or \"cocycle\"");
}

json load_json_input(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && path_or_inline[0] == '{') {
    try {
      return json::parse(path_or_inline);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  std::ifstream in(path_or_inline);
  if (!in) throw ParseError("cannot open '" + path_or_inline + "'");
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError("bad JSON in '" + path_or_inline + "': " + e.what());
  }
}

Cocycle cocycle_from_spec(const std::string& s) {
  if (s == "trivial") return trivial_cocycle(GroupSpec{std::vector<long>{}});
  if (s.rfind("trivial@", 0) == 0) return trivial_cocycle(group_from_spec(s.substr(8)));
  if (s.rfind("pauli", 0) == 0 && s.size() > 5 && std::isdigit(static_cast<unsigned char>(s[5]))) {
    try {
      return cyclic_cocycle(std::stol(s.substr(5)));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad cocycle spec '" + s + "'");
    }
  }
  if (s.rfind("standard", 0) == 0) {
    std::string rest = s.substr(8);
    if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
    long k = 1;
    const std::size_t caret = rest.find('^');
    try {
      if (caret != std::string::npos) {
        k = std::stol(rest.substr(caret + 1));
        rest = rest.substr(0, caret);
      }
      return standard_cocycle(std::stol(rest), k);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad cocycle spec '" + s + "'");
    }
  }
  json j = load_json_input(s);
  Pairing p = pairing_from_json(j);
  if (auto* c = std::get_if<Cocycle>(&p)) return *c;
  throw ParseError("'" + s + "' does not describe a cocycle");
}

Pairing pairing_from_spec(const std::string& s) {
  if (s == "grassmann") return grassmann_bicharacter();
  if (s == "trivial") return trivial_bicharacter(GroupSpec{std::vector<long>{}});
  if (s.rfind("trivial@", 0) == 0) return trivial_bicharacter(group_from_spec(s.substr(8)));
  if (s.rfind("pauli:", 0) == 0) {
    try {
      return pauli_bicharacter(std::stol(s.substr(6)));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad pairing spec '" + s + "'");
    }
  }
  if (s.rfind("cocycle:", 0) == 0) return cocycle_from_spec(s.substr(8));
  return pairing_from_json(load_json_input(s));
}

json algebra_to_json(const GradedAlgebra& a) {
  json j;
  j["group"] = group_to_json(a.group());
  j["conductor"] = a.conductor();
  json basis = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json b;
    b["label"] = a.labels()[i];
    b["degree"] = element_to_json(a.degrees()[i]);
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  json unit = json::array();
  for (const auto& v : a.unit()) unit.push_back(scalar_to_json(v));
  j["unit"] = std::move(unit);
  json products = json::object();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto& cell = a.terms(i, k);
      if (cell.empty()) continue;
      json terms = json::array();
      for (const auto& t : cell) terms.push_back(json::array({t.k, scalar_to_json(t.c)}));
      products[std::to_string(i) + "," + std::to_string(k)] = std::move(terms);
    }
  j["products"] = std::move(products);
  return j;
}

GradedAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("basis") || !j.contains("unit"))
    throw ParseError("algebra input needs group, basis, and unit");
  GroupSpec g = group_from_json(j["group"]);
  if (!j["basis"].is_array()) throw ParseError("basis must be an array");
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (const auto& b : j["basis"]) {
    if (!b.is_object() || !b.contains("label") || !b.contains("degree"))
      throw ParseError("each basis entry needs label and degree");
    labels.push_back(b["label"].get<std::string>());
    degrees.push_back(element_from_json(b["degree"], g));
  }
  const std::size_t d = labels.size();
  if (!j["unit"].is_array() || j["unit"].size() != d)
    throw ParseError("unit must have one coordinate per basis element");
  Vec unit;
  for (const auto& v : j["unit"]) unit.push_back(scalar_from_json(v));
  ProductTable products(d, std::vector<std::vector<SparseTerm>>(d));
  if (j.contains("products")) {
    if (!j["products"].is_object()) throw ParseError("products must be an object");
    for (const auto& [key, terms] : j["products"].items()) {
      const std::size_t comma = key.find(',');
      if (comma == std::string::npos) throw ParseError("product key must be \"i,j\"");
      std::size_t i = 0, k = 0;
      try {
        i = static_cast<std::size_t>(std::stoul(key.substr(0, comma)));
        k = static_cast<std::size_t>(std::stoul(key.substr(comma + 1)));
      } catch (...) {
        throw ParseError("bad product key '" + key + "'");
      }
      if (i >= d || k >= d) throw ParseError("product key '" + key + "' out of range");
      if (!terms.is_array()) throw ParseError("product terms must be an array");
      for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) throw ParseError("each term must be [k, scalar]");
        products[i][k].push_back(
            {static_cast<std::size_t>(json_to_long(t[0], "term index")), scalar_from_json(t[1])});
      }
    }
  }
  return GradedAlgebra(g, std::move(labels), std::move(degrees), std::move(products),
                       std::move(unit));
}

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool consume(const char* word) {
    const std::size_t len = std::string(word).size();
    if (s.compare(pos, len, word) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                       " in '" + s + "'");
    ++pos;
  }
  std::string read_atom() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != '(' && s[pos] != ')') ++pos;
    return s.substr(start, pos - start);
  }
  long read_long(const char* what) {
    const std::string a = read_atom();
    try {
      return std::stol(a);
    } catch (...) {
      throw ParseError(std::string("expected ") + what + " in '" + s + "'");
    }
  }

  GradedAlgebra parse() {
    skip_ws();
    if (consume("tensor(")) {
      GradedAlgebra a = parse();
      expect(',');
      GradedAlgebra b = parse();
      expect(')');
      return tensor_product(a, b);
    }
    if (consume("dsum(")) {
      GradedAlgebra a = parse();
      expect(',');
      GradedAlgebra b = parse();
      expect(')');
      return direct_sum(a, b);
    }
    if (consume("over(")) {
      GroupSpec g = group_from_spec(read_atom());
      expect(',');
      GradedAlgebra a = parse();
      expect(')');
      return with_trivial_grading(a, g);
    }
    if (!s.empty() && pos < s.size() && s[pos] == '{') {
      // inline JSON consumes the rest of the input
      GradedAlgebra a = algebra_from_json(json::parse(s.substr(pos)));
      pos = s.size();
      return a;
    }
    const std::string atom = read_atom();
    if (atom == "paperB") return paper_example('B');
    if (atom == "paperA2") return paper_example('A');
    if (atom.rfind("pauli:", 0) == 0) {
      try {
        return pauli_matrix_algebra(std::stol(atom.substr(6)));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad algebra spec '" + atom + "'");
      }
    }
    if (atom.rfind("grassmann:", 0) == 0) {
      try {
        return truncated_grassmann(std::stol(atom.substr(10)));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad algebra spec '" + atom + "'");
      }
    }
    if (atom.rfind("local:", 0) == 0) {
      long vars = 0;
      try {
        vars = std::stol(atom.substr(6));
      } catch (...) {
        throw ParseError("local:<vars>,<cap> expected in '" + s + "'");
      }
      expect(',');
      const long cap = read_long("the nilpotency cap");
      return truncated_polynomial_local(vars, cap);
    }
    if (atom.rfind("twisted:", 0) == 0)
      return twisted_group_algebra(cocycle_from_spec(atom.substr(8)));
    if (std::filesystem::exists(atom)) return algebra_from_json(load_json_input(atom));
    throw ParseError("unknown algebra spec '" + atom + "'");
  }
};

}  // namespace

GradedAlgebra algebra_from_spec(const std::string& s) {
  SpecParser p{s};
  GradedAlgebra a = p.parse();
  p.skip_ws();
  if (p.pos != s.size())
    throw ParseError("trailing input after algebra spec at position " + std::to_string(p.pos));
  return a;
}

}  // namespace regrade
