// vgit: stability verdicts and certificates for (pencil of quadrics, line) pairs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vgit/io.hpp"

using namespace vgit;
using io::json;

namespace {

enum Exit : int { kRan = 0, kModuleError = 2, kUnstable = 10, kStable = 11, kSemistable = 12, kUndetermined = 13 };

int exit_for(Status s) {
  switch (s) {
    case Status::Unstable: return kUnstable;
    case Status::Stable: return kStable;
    case Status::Semistable:
    case Status::Polystable: return kSemistable;
    case Status::Undetermined: return kUndetermined;
  }
  return kModuleError;
}

struct Options {
  std::string input;
  std::string t = "15/194";
  std::string lambda;
  std::string grid = "1/100,1/50,15/194,1/10";
  std::string out;
  std::string format = "json";
  int degree = -1;
};

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << "\n";
  os << "t: " << v.t << "\n";
  const auto& c = v.certificate;
  os << "certificate: " << to_string(c.kind);
  if (c.lambda) os << " " << c.lambda->str() << " weight " << c.weight;
  if (!c.witness.empty()) os << " (" << c.witness.size() << " terms)";
  if (!c.rule.empty()) os << " [" << c.rule << "]";
  os << "\ntrail:\n";
  for (const auto& s : v.trail) os << "  - " << s << "\n";
  return os.str();
}

void emit(const Options& o, const json& j, const std::string& text) {
  const std::string body = o.format == "text" ? text : io::dump(j);
  if (o.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("cannot write " + o.out);
  f << body;
}

io::PairInput load(const Options& o) { return io::parse_input_file(o.input); }

const RPencil& need_pencil(const io::PairInput& in) {
  if (!in.pencil) throw Error("input has no rational pencil");
  return *in.pencil;
}

const ProjLine& need_line(const io::PairInput& in) {
  if (!in.line) throw Error("input has no line");
  return *in.line;
}

int run_verdict(const Options& o, const Verdict& v) {
  emit(o, io::to_json(v), verdict_text(v));
  return exit_for(v.status);
}

int cmd_classify_pencil(const Options& o) {
  const auto in = load(o);
  const auto c = classify_pencil(need_pencil(in));
  json j = io::to_json(c);
  j["schema"] = io::kSchema;
  emit(o, j, "verdict: " + to_string(c.verdict) + "\nreason: " + c.reason + "\n");
  switch (c.verdict) {
    case PencilVerdict::Stable: return kStable;
    case PencilVerdict::SemistableNotStable:
    case PencilVerdict::Polystable: return kSemistable;
    default: return kUnstable;
  }
}

int cmd_classify_pair(const Options& o) {
  const auto in = load(o);
  return run_verdict(o, pair_verdict(need_pencil(in), need_line(in), Rational::parse(o.t)));
}

int cmd_weight(const Options& o) {
  const auto in = load(o);
  const OnePS lambda = io::parse_lambda(o.lambda);
  const Rational t = Rational::parse(o.t);
  const auto& p = need_pencil(in);
  const auto& l = need_line(in);
  const long mp = mu_pencil(p, lambda), ml = mu_line(l, lambda);
  const Rational w = mu_t(p, l, lambda, t);
  json j{{"schema", io::kSchema}, {"lambda", io::to_json(lambda)}, {"t", t.str()},
         {"mu_pencil", std::to_string(mp)}, {"mu_line", std::to_string(ml)}, {"weight", w.str()}};
  emit(o, j, "weight: " + w.str() + "\n");
  return kRan;
}

int cmd_torus_check(const Options& o) {
  const auto in = load(o);
  return run_verdict(o, torus_verdict(need_pencil(in), need_line(in), Rational::parse(o.t)));
}

int cmd_worst(const Options& o) {
  const auto in = load(o);
  const Rational t = Rational::parse(o.t);
  const auto w = worst_torus_1ps(need_pencil(in), need_line(in), t);
  json j{{"schema", io::kSchema}, {"t", t.str()}, {"lambda", io::to_json(w.lambda)}, {"value", w.value.str()}};
  emit(o, j, "lambda: " + w.lambda.str() + "\nvalue: " + w.value.str() + "\n");
  return kRan;
}

int cmd_wall_scan(const Options& o) {
  const auto in = load(o);
  const auto rows = wall_scan(need_pencil(in), need_line(in), io::parse_rational_list(o.grid));
  std::ostringstream os;
  os << "t\tstatus\tchange\n";
  for (const auto& r : rows) os << r.t << "\t" << to_string(r.verdict.status) << "\t" << (r.changed ? "*" : "") << "\n";
  emit(o, io::to_json(rows), os.str());
  return kRan;
}

int cmd_k_verdict(const Options& o) {
  const auto in = load(o);
  return run_verdict(o, k_stability_verdict(need_pencil(in), need_line(in)));
}

int cmd_sarkisov(const Options& o) {
  const auto in = load(o);
  const StandardPair sp = standardize_pair(need_pencil(in), need_line(in));
  const CurveIdeal ideal = curve_from_pair(sp);
  json j{{"schema", io::kSchema}, {"minors", io::to_json(ideal)}, {"frame", io::to_json(sp.frame)}};
  std::string text = "m12: " + ideal.m12.str() + "\nm13: " + ideal.m13.str() + "\nm23: " + ideal.m23.str() + "\n";
  if (!ideal.m12.is_zero()) {
    const auto q = quadric_normality(ideal);
    j["quadric"] = to_string(q);
    text += "quadric: " + to_string(q) + "\n";
  }
  try {
    const auto inv = hilbert_polynomial_check(ideal);
    j["curve"] = {{"degree", inv.degree}, {"genus", inv.genus}};
    text += "degree: " + std::to_string(inv.degree) + "\ngenus: " + std::to_string(inv.genus) + "\n";
  } catch (const Error& e) {
    j["curve"] = {{"error", e.what()}};
    text += std::string("curve: ") + e.what() + "\n";
  }
  emit(o, j, text);
  return kRan;
}

int cmd_hilbert(const Options& o) {
  const auto in = load(o);
  const CurveIdeal ideal = curve_from_pair(standardize_pair(need_pencil(in), need_line(in)));
  json values = json::object();
  std::string text;
  const int lo = o.degree >= 0 ? o.degree : 0;
  const int hi = o.degree >= 0 ? o.degree : 10;
  for (int d = lo; d <= hi; ++d) {
    const long h = hilbert_function(ideal, d);
    values[std::to_string(d)] = h;
    text += "HF(" + std::to_string(d) + ") = " + std::to_string(h) + "\n";
  }
  emit(o, {{"schema", io::kSchema}, {"hilbert_function", values}}, text);
  return kRan;
}

int cmd_cm(const Options& o) {
  const auto c = cm_coefficients();
  const auto two = testing_curve_two_numbers();
  json j = io::to_json(c);
  j["testing_curve_one"] = testing_curve_one().str();
  j["testing_curve_two"] = {{"numbers", {two.first.str(), two.second.str(), two.third.str()}}, {"degree", two.degree.str()}};
  emit(o, j, "a=" + c.a.str() + "\nb=" + c.b.str() + "\nt0=" + c.t0.str() + "\n");
  return kRan;
}

int cmd_transform(const Options& o) {
  const auto in = load(o);
  json j{{"schema", io::kSchema}};
  bool equal = false;
  if (in.field == "cyclotomic5") {
    if (!in.cyclo_pencil || !in.cyclo_transform) throw Error("transform needs quadrics and a transform matrix");
    const auto image = apply_transform(*in.cyclo_pencil, *in.cyclo_transform);
    equal = pencils_equal_as_spans(*in.cyclo_pencil, image);
    j["image"] = io::pencil_to_json(image);
  } else {
    if (!in.pencil || !in.transform) throw Error("transform needs quadrics and a transform matrix");
    const auto image = apply_transform(*in.pencil, *in.transform);
    equal = pencils_equal_as_spans(*in.pencil, image);
    j["image"] = io::pencil_to_json(image);
  }
  j["span_preserved"] = equal;
  emit(o, j, std::string("span preserved: ") + (equal ? "yes" : "no") + "\n");
  return kRan;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability verdicts for pencils of quadrics in P^5 with a line in the base locus"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto add = [&](const std::string& name, const std::string& help, auto fn, bool input, bool t) {
    auto* sub = app.add_subcommand(name, help);
    if (input) sub->add_option("input", o.input, "input JSON file")->required();
    if (t) sub->add_option("--t", o.t, "stability parameter as p/q")->capture_default_str();
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  add("classify-pencil", "discriminant classification of the pencil", cmd_classify_pencil, true, false);
  add("classify-pair", "pair verdict at --t", cmd_classify_pair, true, true);
  add("weight", "Hilbert-Mumford weight of --lambda at --t", cmd_weight, true, true)
      ->add_option("--lambda", o.lambda, "six integer weights, comma separated")
      ->required();
  add("torus-check", "exact torus (semi)stability at --t", cmd_torus_check, true, true);
  add("worst-1ps", "most destabilizing diagonal 1-PS in the box", cmd_worst, true, true);
  add("wall-scan", "pair verdicts over --grid", cmd_wall_scan, true, false)
      ->add_option("--grid", o.grid, "comma separated t values")
      ->capture_default_str();
  add("k-verdict", "K-stability verdict at the ledger threshold", cmd_k_verdict, true, false);
  add("sarkisov", "curve ideal, quadric type and (degree, genus)", cmd_sarkisov, true, false);
  add("hilbert", "Hilbert function of the curve ideal", cmd_hilbert, true, false)
      ->add_option("--d", o.degree, "single degree (default 0..10)");
  add("cm", "CM line bundle coefficients and threshold", cmd_cm, false, false);
  add("transform", "apply the input's transform and compare spans", cmd_transform, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kModuleError;
  }
  try {
    return action(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kModuleError;
  }
}
