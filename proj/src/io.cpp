#include "vgit/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace vgit::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(kMalformedInput, what); }

template <class F, class Parse>
QuadraticForm<F> parse_quadric(const json& j, Parse parse_coeff) {
  if (!j.is_object()) malformed("each quadric must be an object of monomial coefficients");
  static const std::regex key_re(R"(x([0-9])\*x([0-9]))");
  std::map<std::pair<int, int>, F> coeffs;
  std::set<std::pair<int, int>> seen;
  for (const auto& [key, value] : j.items()) {
    std::smatch m;
    if (!std::regex_match(key, m, key_re)) throw ParseError(kBadMonomialKey, "bad monomial key \"" + key + "\"");
    int i = std::stoi(m[1]), k = std::stoi(m[2]);
    if (i > 5 || k > 5) throw ParseError(kBadMonomialKey, "monomial index out of range in \"" + key + "\"");
    if (i > k) std::swap(i, k);
    if (!seen.insert({i, k}).second)
      throw ParseError(kBadMonomialKey, "asymmetric monomial keys: x" + std::to_string(i) + "*x" + std::to_string(k) +
                                            " given twice");
    coeffs[{i, k}] = parse_coeff(value);
  }
  return QuadraticForm<F>::from_monomials(coeffs);
}

RVec parse_point(const json& j) {
  if (!j.is_array() || j.size() != 6) malformed("points and equations need 6 coordinates");
  RVec v;
  for (const auto& x : j) v.push_back(parse_rational(x));
  return v;
}

template <class F, class Parse>
Matrix<F> parse_matrix(const json& j, Parse parse_coeff) {
  if (!j.is_array() || j.size() != 6) malformed("transform must be a 6x6 array");
  Matrix<F> m(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    if (!j[i].is_array() || j[i].size() != 6) malformed("transform must be a 6x6 array");
    for (std::size_t k = 0; k < 6; ++k) m(i, k) = parse_coeff(j[i][k]);
  }
  return m;
}

json character_json(const Character& c) { return json(std::vector<int>(c.begin(), c.end())); }

Character character_from(const json& j) {
  if (!j.is_array() || j.size() != 6) malformed("character needs 6 integers");
  Character c{};
  for (std::size_t i = 0; i < 6; ++i) c[i] = j[i].get<int>();
  return c;
}

}  // namespace

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(kMalformedFraction, "malformed fraction: " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Cyclotomic5 parse_cyclotomic(const json& j) {
  if (j.is_array()) {
    if (j.size() != 4) throw ParseError(kMalformedFraction, "cyclotomic coefficient needs 4 fractions");
    return Cyclotomic5(Cyclotomic5::Coefficients{parse_rational(j[0]), parse_rational(j[1]), parse_rational(j[2]),
                                                 parse_rational(j[3])});
  }
  return Cyclotomic5(parse_rational(j));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(kUnreadableFile, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

PairInput parse_input(const json& j) {
  if (!j.is_object()) malformed("input must be a JSON object");
  PairInput in;
  if (j.contains("schema") && j["schema"] != kSchema) malformed("unsupported schema version");
  if (j.contains("field")) {
    if (!j["field"].is_string()) malformed("field must be a string");
    in.field = j["field"].get<std::string>();
  }
  if (in.field != "rational" && in.field != "cyclotomic5") malformed("unknown field " + in.field);
  const bool cyc = in.field == "cyclotomic5";

  if (j.contains("quadrics")) {
    const auto& q = j["quadrics"];
    if (!q.is_array() || q.size() != 2) malformed("quadrics must be an array of two objects");
    if (cyc) {
      in.cyclo_pencil.emplace(parse_quadric<Cyclotomic5>(q[0], parse_cyclotomic),
                              parse_quadric<Cyclotomic5>(q[1], parse_cyclotomic));
    } else {
      in.pencil.emplace(parse_quadric<Rational>(q[0], parse_rational), parse_quadric<Rational>(q[1], parse_rational));
    }
  }
  if (j.contains("line")) {
    const auto& l = j["line"];
    if (l.contains("points")) {
      const auto& pts = l["points"];
      if (!pts.is_array() || pts.size() != 2) malformed("line.points must hold two points");
      const RVec p = parse_point(pts[0]), q = parse_point(pts[1]);
      if (rank(RMatrix::from_rows({p, q})) != 2) throw ParseError(kDependentPoints, "dependent points");
      in.line.emplace(p, q);
    } else if (l.contains("equations")) {
      const auto& eq = l["equations"];
      if (!eq.is_array() || eq.size() != 4) malformed("line.equations must hold four linear forms");
      std::vector<RVec> rows;
      for (const auto& e : eq) rows.push_back(parse_point(e));
      if (rank(RMatrix::from_rows(rows)) != 4) throw ParseError(kDependentPoints, "dependent line equations");
      in.line = line_from_equations(rows);
    } else {
      malformed("line needs \"points\" or \"equations\"");
    }
  }
  if (j.contains("transform")) {
    if (cyc) in.cyclo_transform = parse_matrix<Cyclotomic5>(j["transform"], parse_cyclotomic);
    else in.transform = parse_matrix<Rational>(j["transform"], parse_rational);
  }
  return in;
}

PairInput parse_input_file(const std::string& path) { return parse_input(read_json_file(path)); }

OnePS parse_lambda(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      malformed("lambda weights must be integers: " + text);
    }
  }
  if (w.size() != 6) malformed("lambda needs 6 weights");
  long s = 0;
  for (long x : w) s += x;
  if (s != 0) malformed("lambda weights must sum to zero");
  return OnePS(OnePS::Weights{w[0], w[1], w[2], w[3], w[4], w[5]});
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Cyclotomic5& c) {
  if (c.is_rational()) return c.coefficients()[0].str();
  json a = json::array();
  for (const auto& x : c.coefficients()) a.push_back(x.str());
  return a;
}

json to_json(const RForm& f) {
  json o{{"text", f.str()}};
  if (f.is_zero()) {
    o["zero"] = true;
  } else {
    o["degree"] = f.degree();
    o["coefficients"] = to_json(f.coefficients());
  }
  return o;
}

json to_json(const OnePS& l) { return json(std::vector<long>(l.r().begin(), l.r().end())); }

json to_json(const ProjLine& l) {
  json pl = json::object();
  const auto& pairs = pluecker_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!l.pluecker()[k].is_zero())
      pl["p" + std::to_string(pairs[k].first) + std::to_string(pairs[k].second)] = l.pluecker()[k].str();
  return {{"points", json::array({to_json(l.p()), to_json(l.q())})}, {"pluecker", pl}};
}

json to_json(const SegreSymbol& s) {
  json groups = json::array();
  for (const auto& g : s.groups) groups.push_back({{"factor", g.factor.str()}, {"blocks", g.blocks}});
  return {{"symbol", s.str()}, {"groups", groups}};
}

json to_json(const PencilClass& c) {
  json o{{"verdict", to_string(c.verdict)}, {"root_profile", c.root_profile}, {"discriminant", to_json(c.discriminant)},
         {"reason", c.reason}};
  if (c.segre) o["segre"] = to_json(*c.segre);
  if (c.common_linear_form) o["common_linear_form"] = to_json(*c.common_linear_form);
  return o;
}

json to_json(const Certificate& c) {
  json o{{"kind", to_string(c.kind)}};
  if (c.kind == Certificate::Kind::None) return o;
  o["frame"] = to_json(c.frame);
  if (c.lambda) {
    o["lambda"] = to_json(*c.lambda);
    o["weight"] = c.weight.str();
  }
  if (!c.witness.empty()) {
    json w = json::array();
    for (const auto& term : c.witness)
      w.push_back({{"pencil", character_json(term.pencil)}, {"line", character_json(term.line)}, {"weight", term.weight.str()}});
    o["witness"] = w;
  }
  if (!c.rule.empty()) o["rule"] = c.rule;
  return o;
}

json to_json(const Verdict& v) {
  return {{"schema", kSchema}, {"status", to_string(v.status)}, {"t", v.t.str()}, {"certificate", to_json(v.certificate)},
          {"trail", v.trail}};
}

json to_json(const std::vector<ScanRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    json v = to_json(r.verdict);
    v.erase("schema");
    a.push_back({{"t", r.t.str()}, {"verdict", v}, {"status_changed", r.changed}});
  }
  return {{"schema", kSchema}, {"scan", a}};
}

json to_json(const CMCoefficients& c) {
  return {{"schema", kSchema}, {"a", c.a.str()}, {"b", c.b.str()}, {"t0", c.t0.str()}};
}

json to_json(const CurveIdeal& c) {
  return {{"m12", c.m12.str()}, {"m13", c.m13.str()}, {"m23", c.m23.str()}};
}

json to_json(const LineSingularities& s) {
  json o{{"kind", to_string(s.kind)}, {"generically_smooth", s.generically_smooth()}};
  if (s.kind == LineSingularities::Kind::Finite) {
    o["locus"] = s.locus.str();
    json pts = json::array();
    for (const auto& p : s.rational_points) pts.push_back(to_json(p));
    o["rational_points"] = pts;
  }
  return o;
}

Verdict verdict_from_json(const json& j) {
  if (!j.is_object()) malformed("verdict must be an object");
  Verdict v;
  const std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (Status s : {Status::Stable, Status::Semistable, Status::Polystable, Status::Unstable, Status::Undetermined})
    if (to_string(s) == status) {
      v.status = s;
      known = true;
    }
  if (!known) malformed("unknown status " + status);
  v.t = parse_rational(j.at("t"));
  for (const auto& s : j.value("trail", json::array())) v.trail.push_back(s.get<std::string>());
  const json& c = j.at("certificate");
  const std::string kind = c.at("kind").get<std::string>();
  for (auto k : {Certificate::Kind::None, Certificate::Kind::OneParameterSubgroup, Certificate::Kind::ConvexWitness,
                 Certificate::Kind::RuleCitation})
    if (to_string(k) == kind) v.certificate.kind = k;
  if (c.contains("frame")) v.certificate.frame = parse_matrix<Rational>(c["frame"], parse_rational);
  if (c.contains("lambda")) {
    const auto w = c["lambda"].get<std::vector<long>>();
    if (w.size() != 6) malformed("lambda needs 6 weights");
    v.certificate.lambda = OnePS(OnePS::Weights{w[0], w[1], w[2], w[3], w[4], w[5]});
    v.certificate.weight = parse_rational(c.at("weight"));
  }
  for (const auto& term : c.value("witness", json::array()))
    v.certificate.witness.push_back(
        {character_from(term.at("pencil")), character_from(term.at("line")), parse_rational(term.at("weight"))});
  v.certificate.rule = c.value("rule", std::string());
  return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace vgit::io
