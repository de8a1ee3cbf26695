#include "polyarc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "polyarc/errors.hpp"
#include "polyarc/render.hpp"
#include "polyarc/serialize.hpp"
#include "text_table.hpp"

namespace polyarc::cli {

namespace {

using io::Json;

// Bad input detected after CLI11 parsing but before anything is computed.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  bool color;

  std::string mark(bool ok, const std::string& yes = "yes", const std::string& no = "no") const {
    const std::string& text = ok ? yes : no;
    if (!color) return text;
    return (ok ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
  }
  void json(const Json& j) const { out << j.dump(2) << '\n'; }
};

/// Accepts "n", "n/d", sexagesimal "4;30" / "1,20" and finite decimals "4.5".
Rational parse_number(const std::string& text) {
  if (text.find_first_of(";,") != std::string::npos) {
    return Sexagesimal::parse(text).to_rational();
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    return Rational::parse(text);
  }
  const std::size_t places = text.size() - dot - 1;
  if (places == 0) {
    throw ParseError("malformed decimal '" + text + "'", dot);
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  return Rational::parse(text.substr(0, dot) + text.substr(dot + 1)) / Rational(scale);
}

std::string show(const Rational& q, int places) {
  const auto s = Sexagesimal::from_rational(q, places);
  return s.to_rational() == q ? s.to_string() : s.to_string() + "...";
}

std::string decimal(const Rational& q, int digits) { return ExactReal(q, digits).to_decimal(); }

std::string decimal(const Value& v, int digits) { return to_exact(v, digits).to_decimal(); }

std::string describe(const ApproximationContext& context) {
  std::string text;
  for (const auto& [symbol, value] : context.entries()) {
    if (!text.empty()) text += ", ";
    text += std::string(symbol_name(symbol)) + "=" + value.to_string();
  }
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

ApproximationContext load_context(const std::string& name_or_path) {
  if (auto preset = find_preset(name_or_path)) {
    return *preset;
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw UsageError("unknown context '" + name_or_path + "' (expected standard, alt-sqrt3 or a JSON file)");
  }
  return io::context_from_json(read_json(name_or_path),
                               std::filesystem::path(name_or_path).stem().string());
}

// compute ------------------------------------------------------------------

struct ComputeArgs {
  std::string figure;
  std::string size = "1";
  std::string size_kind;
  int n = 0;
  std::string mode;
  std::string context;
  int precision = kDefaultPrecision;
  int places = tablet::kDisplayPlaces;
  bool json = false;
  int oracle = 0;
};

int run_compute(const ComputeArgs& a, const Output& o) {
  PolyarcSpec spec = PolyarcSpec::named(*family_from_name(a.figure), parse_number(a.size), a.n);
  if (!a.size_kind.empty()) {
    spec.size_kind = a.size_kind == "radius" ? SizeKind::kRadius : SizeKind::kArcLength;
  }
  const bool context_mode = a.mode == "context" || (a.mode.empty() && !a.context.empty());
  if (!context_mode && !a.context.empty()) {
    throw UsageError("--context only applies to --mode context");
  }
  const EvalMode mode = context_mode ? EvalMode{ContextMode{load_context(a.context.empty() ? "standard" : a.context)}}
                                     : EvalMode{ExactMode{a.precision}};
  const FigureMetrics m = compute_metrics(spec, mode);
  std::optional<double> oracle;
  if (a.oracle > 0) {
    oracle = oracle_area(spec, a.oracle);
  }
  const std::string kind = spec.size_kind == SizeKind::kRadius ? "radius" : "arc-length";

  if (a.json) {
    Json j = io::to_json(m, a.places);
    j["size"] = Json{{"kind", kind}, {"value", io::to_json(spec.size)}};
    if (oracle) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g", *oracle);
      j["oracle"] = Json{{"chords_per_arc", a.oracle}, {"decimal", buf}};
    }
    o.json(j);
    return kOk;
  }

  o.out << "figure  " << family_name(m.family) << " (" << m.n << " arcs)\n"
        << "size    " << (spec.size_kind == SizeKind::kRadius ? "r" : "a") << " = " << spec.size.to_string()
        << '\n';
  if (const auto* c = std::get_if<ContextMode>(&m.mode)) {
    o.out << "mode    context " << c->context.name() << " (" << describe(c->context) << ")\n";
  } else {
    o.out << "mode    exact, " << a.precision << " digits\n";
  }
  o.out << '\n';
  TextTable table({"quantity", "value", "sexagesimal"});
  const auto row = [&](const std::string& name, const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) {
      table.add({name, q->to_string(), show(*q, a.places)});
    } else {
      const auto& x = std::get<ExactReal>(v);
      table.add({name, decimal(v, a.precision), Sexagesimal::from_rational(x.to_rational(), a.places).to_string() + "..."});
    }
  };
  row("area", m.area);
  for (const auto& [measure, value] : m.measures) {
    row(std::string(measure_name(measure)), value);
  }
  table.print(o.out);
  if (oracle) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", *oracle);
    o.out << "\noracle area (" << a.oracle << " chords per arc): " << buf << '\n';
  }
  return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  int line = 0;
  bool all = false;
  bool strict = false;
  bool json = false;
  int precision = kDefaultPrecision;
};

int run_verify(const VerifyArgs& a, const Output& o) {
  if (a.line == 0 && !a.all) {
    throw UsageError("verify needs --line N or --all");
  }
  std::vector<tablet::VerificationReport> reports;
  if (a.all) {
    reports = tablet::verify_all(a.precision);
  } else {
    const auto entries = tablet::entries_for_line(a.line);
    if (entries.empty()) {
      throw UsageError("line " + std::to_string(a.line) + " has no circular-figure constant");
    }
    for (const auto& e : entries) reports.push_back(tablet::verify_entry(e, a.precision));
  }
  const bool has_line6 = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.line == 6; });
  std::optional<tablet::ScribeErrorAnalysis> analysis;
  if (has_line6) analysis = tablet::scribe_error_l6(a.precision);

  int unexpected = 0;
  for (const auto& r : reports) {
    if (!r.matches_scribe && r.expected_match) ++unexpected;
  }

  if (a.json) {
    Json array = Json::array();
    for (const auto& r : reports) {
      Json j = io::to_json(r);
      if (r.line == 6) j["error_analysis"] = io::to_json(*analysis);
      array.push_back(std::move(j));
    }
    o.json(array);
  } else {
    TextTable table({"entry", "scribe", "recomputed", "rational", "match", "exact value", "error %"});
    for (const auto& r : reports) {
      std::string match = o.mark(r.matches_scribe);
      if (!r.matches_scribe && !r.expected_match) match += " (expected)";
      table.add({r.entry_id, r.scribe_value.to_string(), r.recomputed_sexagesimal.to_string(),
                 r.recomputed_rational.to_string(), match, r.exact_value.to_decimal(12),
                 r.scribe_error_percent.to_decimal(6)});
    }
    table.print(o.out);
    const auto matched = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.matches_scribe; });
    o.out << '\n' << matched << " of " << reports.size() << " entries reproduced exactly";
    if (unexpected > 0) o.out << ", " << unexpected << " unexpected mismatch(es)";
    o.out << '\n';
    if (analysis) {
      o.out << "\nline 6: scribe " << Sexagesimal::from_rational(analysis->scribe_value, 8).to_string() << " = "
            << analysis->scribe_value.to_string() << " = " << decimal(analysis->scribe_value, 12) << '\n'
            << "  exact convex 6-arc area      " << analysis->exact_total_area.to_decimal(15) << '\n'
            << "  exact inscribed hexagon area " << analysis->exact_hexagon_area.to_decimal(15) << '\n'
            << "  error, total-area denominator   " << analysis->printed_formula_percent.to_fixed(2) << " %\n"
            << "  error, hexagon-area denominator " << analysis->hexagon_denominator_percent.to_fixed(2) << " %\n"
            << "  claimed error 1.4 %: "
            << o.mark(analysis->claim_reproduced, "reproduced", "not reproduced") << '\n';
    }
  }
  return a.strict && unexpected > 0 ? kStrictFailure : kOk;
}

// approx -------------------------------------------------------------------

struct HeronArgs {
  std::string radicand;
  std::string seed;
  int steps = 3;
  int places = tablet::kDisplayPlaces;
  bool json = false;
};

int run_heron(const HeronArgs& a, const Output& o) {
  const auto trace = heron_sequence(parse_number(a.radicand), parse_number(a.seed), a.steps);
  if (a.json) {
    o.json(io::to_json(trace, a.places));
    return kOk;
  }
  TextTable table({"k", "rational", "sexagesimal", "decimal"});
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    const auto& x = trace.iterates[k];
    table.add({std::to_string(k), x.to_string(), show(x, a.places), decimal(x, 15)});
  }
  table.print(o.out);
  return kOk;
}

struct SurdArgs {
  std::string a;
  std::string b;
  std::string sign;
  int places = tablet::kDisplayPlaces;
  int precision = kDefaultPrecision;
  bool json = false;
};

int run_surd(const SurdArgs& s, const Output& o) {
  const bool plus = s.sign == "+" || s.sign == "plus";
  if (!plus && s.sign != "-" && s.sign != "minus") {
    throw UsageError("sign must be +, -, plus or minus");
  }
  const Rational a = parse_number(s.a);
  const Rational b = parse_number(s.b);
  const Rational approx = surd_linear_approx(a, b, plus ? SurdSign::kPlus : SurdSign::kMinus);
  const ExactReal exact = sqrt(ExactReal(plus ? a * a + b : a * a - b, s.precision));
  if (s.json) {
    o.json(Json{{"a", io::to_json(a)},
                {"b", io::to_json(b)},
                {"sign", plus ? "+" : "-"},
                {"approximation", io::to_json(Value{approx}, s.places)},
                {"exact", io::to_json(Value{exact})}});
    return kOk;
  }
  o.out << "sqrt(" << a.to_string() << "^2 " << (plus ? "+ " : "- ") << b.to_string()
        << ") ~ " << approx.to_string() << " = " << show(approx, s.places) << '\n'
        << "approximation " << decimal(approx, s.precision) << '\n'
        << "exact         " << exact.to_decimal() << '\n';
  return kOk;
}

struct TakiltumArgs {
  std::string p;
  std::string q;
  std::string root;
  int precision = kDefaultPrecision;
  int places = tablet::kDisplayPlaces;
  bool json = false;
};

int run_takiltum(const TakiltumArgs& t, const Output& o) {
  const Rational p = parse_number(t.p);
  const Rational q = parse_number(t.q);
  const RootPolicy policy = t.root.empty() ? RootPolicy{ExactRoot{t.precision}}
                                           : RootPolicy{SurrogateRoot{parse_number(t.root)}};
  const Value x = solve_quadratic_takiltum(p, q, policy);
  if (t.json) {
    o.json(Json{{"p", io::to_json(p)}, {"q", io::to_json(q)}, {"x", io::to_json(x, t.places)}});
    return kOk;
  }
  o.out << "x^2 + " << p.to_string() << " x = " << q.to_string() << '\n';
  if (const auto* r = std::get_if<Rational>(&x)) {
    o.out << "x = " << r->to_string() << " = " << show(*r, t.places) << '\n';
  } else {
    o.out << "x = " << decimal(x, t.precision) << '\n';
  }
  return kOk;
}

int run_contexts(bool json, const Output& o) {
  if (json) {
    Json j = Json::object();
    for (const auto& c : context_presets()) j[c.name()] = io::to_json(c);
    o.json(j);
    return kOk;
  }
  TextTable table({"context", "surrogates"});
  for (const auto& c : context_presets()) table.add({c.name(), describe(c)});
  table.print(o.out);
  return kOk;
}

// tables -------------------------------------------------------------------

struct TablesArgs {
  std::string which;
  std::string candidates;
  int top = 10;
  bool json = false;
};

std::vector<Rational> rational_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw UsageError(std::string("candidates file needs an array \"") + key + "\"");
  }
  std::vector<Rational> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) throw UsageError("candidates must be strings such as \"7/4\" or \"1;45\"");
    out.push_back(parse_number(item.get<std::string>()));
  }
  return out;
}

int run_table12(bool first, bool json, const Output& o) {
  const auto cells = first ? tablet::reproduce_table1() : tablet::reproduce_table2();
  if (json) {
    Json array = Json::array();
    for (const auto& c : cells) array.push_back(io::to_json(c));
    o.json(Json{{"table", first ? 1 : 2}, {"cells", array}});
    return kOk;
  }
  TextTable table({"seed", "step", "rational", "sexagesimal", "printed", "match"});
  for (const auto& c : cells) {
    table.add({show(c.seed, tablet::kDisplayPlaces), "x" + std::to_string(c.step), c.value.to_string(),
               c.sexagesimal.to_string(), c.printed.to_string(), o.mark(c.matches_printed)});
  }
  table.print(o.out);
  const auto matched = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.matches_printed; });
  o.out << '\n' << matched << " of " << cells.size() << " cells agree with the printed table\n";
  return kOk;
}

int run_table3(const TablesArgs& a, const Output& o) {
  tablet::Table3Candidates grid;
  const bool reconstructed = a.candidates.empty();
  if (reconstructed) {
    grid = tablet::default_table3_candidates();
  } else {
    const Json j = read_json(a.candidates);
    grid = {rational_list(j, "sqrt3"), rational_list(j, "sqrt21")};
  }
  const auto rows = tablet::table3_search(grid.sqrt3, grid.sqrt21);
  const std::size_t shown = a.top <= 0 ? rows.size() : std::min<std::size_t>(rows.size(), static_cast<std::size_t>(a.top));
  const Rational scribe = tablet::line6_scribe_value();
  if (a.json) {
    Json array = Json::array();
    for (std::size_t i = 0; i < shown; ++i) array.push_back(io::to_json(rows[i]));
    o.json(Json{{"table", 3},
                {"scribe", io::to_json(scribe)},
                {"grid", reconstructed ? "default-reconstruction" : a.candidates},
                {"sqrt3_candidates", grid.sqrt3.size()},
                {"sqrt21_candidates", grid.sqrt21.size()},
                {"rows", array}});
    return kOk;
  }
  o.out << "line 6 scribe value " << show(scribe, 8) << " = " << scribe.to_string() << " = " << decimal(scribe, 12)
        << '\n'
        << (reconstructed ? "default candidate grid (reconstruction)" : "candidates from " + a.candidates) << ": "
        << grid.sqrt3.size() << " values for sqrt(3), " << grid.sqrt21.size() << " for sqrt(21)\n\n";
  TextTable table({"rank", "sqrt3", "sqrt21", "value", "decimal", "distance"});
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& r = rows[i];
    table.add({std::to_string(i + 1), r.sqrt3.to_string(), r.sqrt21.to_string(), r.value.to_string(),
               decimal(r.value, 12), decimal(r.distance, 6)});
  }
  table.print(o.out);
  return kOk;
}

// render -------------------------------------------------------------------

struct RenderArgs {
  std::string subject;
  int n = 0;
  std::string figure_size = "1";
  bool guides = false;
  std::string canvas = "480x480";
  std::string stroke;
  std::string fill;
  double stroke_width = 1.5;
  std::string output;
};

std::pair<double, double> parse_canvas(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const double w = std::stod(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    const double h = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (!(w > 0) || !(h > 0)) throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::logic_error&) {
    throw UsageError("--size expects WIDTHxHEIGHT with positive numbers, got '" + text + "'");
  }
}

int run_render(const RenderArgs& a, const Output& o) {
  render::RenderRequest request;
  const auto [w, h] = parse_canvas(a.canvas);
  request.options.width = w;
  request.options.height = h;
  request.options.show_guides = a.guides;
  if (!a.stroke.empty()) request.options.style.stroke = a.stroke;
  if (!a.fill.empty()) request.options.style.fill = a.fill;
  request.options.style.stroke_width = a.stroke_width;

  const auto& figures = render::supported_figures();
  if (a.subject == "sb23397") {
    request.subject = render::Sb23397Subject{};
  } else if (std::find(figures.begin(), figures.end(), a.subject) != figures.end()) {
    request.subject = render::FigureSubject{a.subject};
  } else if (const auto family = family_from_name(a.subject)) {
    request.subject = render::ConstructionSubject{PolyarcSpec::named(*family, parse_number(a.figure_size), a.n)};
  } else {
    throw UsageError("unknown render subject '" + a.subject + "'");
  }
  const std::string svg = render::render(request);
  if (a.output.empty()) {
    o.out << svg;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file || !(file << svg)) {
      throw UsageError("cannot write '" + a.output + "'");
    }
  }
  return kOk;
}

// convert ------------------------------------------------------------------

struct ConvertArgs {
  std::string value;
  int places = tablet::kDisplayPlaces;
  std::string mode = "truncate";
  bool json = false;
};

int run_convert(const ConvertArgs& a, const Output& o) {
  const Rounding rounding = a.mode == "round" ? Rounding::kRound : Rounding::kTruncate;
  const bool from_sexagesimal = a.value.find_first_of(";,") != std::string::npos;
  const Rational q = parse_number(a.value);
  const Sexagesimal s = from_sexagesimal ? Sexagesimal::parse(a.value) : Sexagesimal::from_rational(q, a.places, rounding);
  const bool exact = s.to_rational() == q;
  if (a.json) {
    o.json(Json{{"rational", io::to_json(q)}, {"sexagesimal", io::to_json(s)}, {"exact", exact}});
    return kOk;
  }
  if (from_sexagesimal) {
    o.out << q.to_string() << '\n';
  } else {
    o.out << s.to_string() << (exact ? "" : "...") << '\n';
  }
  return kOk;
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (const auto f : kAllFamilies) names.emplace_back(family_name(f));
  return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& options) {
  CLI::App app{"Polyarc geometry, Babylonian approximations and sexagesimal arithmetic", "polyarc"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  const auto precision_option = [](CLI::App* sub, int& target) {
    sub->add_option("--precision", target, "Working precision in significant decimal digits")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
  };
  const auto places_option = [](CLI::App* sub, int& target) {
    sub->add_option("--places", target, "Sexagesimal places shown for non-terminating values")
        ->check(CLI::Range(0, kMaxSexagesimalPlaces))
        ->capture_default_str();
  };

  std::function<int(const Output&)> action;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Area and dimensions of a figure");
  c->add_option("figure", compute.figure, "Figure family")->required()->check(CLI::IsMember(family_names()));
  c->add_option("--size", compute.size, "Size parameter (rational, decimal or sexagesimal)")->capture_default_str();
  c->add_option("--size-kind", compute.size_kind, "Interpret --size as arc length or radius")
      ->check(CLI::IsMember({"arc-length", "radius"}));
  c->add_option("--n", compute.n, "Arc count for regular-concave / regular-convex");
  c->add_option("--mode", compute.mode, "exact or context")->check(CLI::IsMember({"exact", "context"}));
  c->add_option("--context", compute.context, "standard, alt-sqrt3 or a context JSON file");
  precision_option(c, compute.precision);
  places_option(c, compute.places);
  c->add_flag("--json", compute.json, "JSON output");
  c->add_option("--oracle", compute.oracle, "Also report the polygonal oracle area with K chords per arc")
      ->check(CLI::Range(8, 1 << 20));
  c->callback([&] { action = [&](const Output& o) { return run_compute(compute, o); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Recompute the tablet's circular-figure constants");
  auto* line = v->add_option("--line", verify.line, "Tablet line")->check(CLI::PositiveNumber);
  auto* all = v->add_flag("--all", verify.all, "All lines");
  line->excludes(all);
  v->add_flag("--strict", verify.strict, "Exit with status 3 on unexpected mismatches");
  v->add_flag("--json", verify.json, "JSON report array");
  precision_option(v, verify.precision);
  v->callback([&] { action = [&](const Output& o) { return run_verify(verify, o); }; });

  auto* approx = app.add_subcommand("approx", "Babylonian approximation tools");
  approx->require_subcommand(1, 1);
  HeronArgs heron;
  auto* he = approx->add_subcommand("heron", "Heron iterates x' = (x + N/x)/2");
  he->add_option("N", heron.radicand, "Radicand")->required();
  he->add_option("x0", heron.seed, "Seed")->required();
  he->add_option("steps", heron.steps, "Number of iterations")->check(CLI::Range(0, 30))->capture_default_str();
  places_option(he, heron.places);
  he->add_flag("--json", heron.json, "JSON output");
  he->callback([&] { action = [&](const Output& o) { return run_heron(heron, o); }; });

  SurdArgs surd;
  auto* su = approx->add_subcommand("surd", "sqrt(a^2 +- b) ~ a +- b/(2a)");
  su->add_option("a", surd.a)->required();
  su->add_option("b", surd.b)->required();
  su->add_option("sign", surd.sign, "+ or -")->required();
  precision_option(su, surd.precision);
  places_option(su, surd.places);
  su->add_flag("--json", surd.json, "JSON output");
  su->callback([&] { action = [&](const Output& o) { return run_surd(surd, o); }; });

  bool contexts_json = false;
  auto* co = approx->add_subcommand("contexts", "List the preset approximation contexts");
  co->add_flag("--json", contexts_json, "JSON output");
  co->callback([&] { action = [&](const Output& o) { return run_contexts(contexts_json, o); }; });

  TakiltumArgs takiltum;
  auto* ta = approx->add_subcommand("takiltum", "Positive root of x^2 + p x = q by completing the square");
  ta->add_option("p", takiltum.p)->required();
  ta->add_option("q", takiltum.q)->required();
  ta->add_option("--root", takiltum.root, "Rational surrogate for sqrt(q + (p/2)^2)");
  precision_option(ta, takiltum.precision);
  places_option(ta, takiltum.places);
  ta->add_flag("--json", takiltum.json, "JSON output");
  ta->callback([&] { action = [&](const Output& o) { return run_takiltum(takiltum, o); }; });

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "Reproduce the sqrt(21) tables");
  t->add_option("table", tables.which, "1, 2 or 3")->required()->check(CLI::IsMember({"1", "2", "3"}));
  t->add_option("--candidates", tables.candidates, "JSON file {\"sqrt3\": [...], \"sqrt21\": [...]} (table 3)");
  t->add_option("--top", tables.top, "Rows shown for table 3 (0 = all)")->check(CLI::NonNegativeNumber)->capture_default_str();
  t->add_flag("--json", tables.json, "JSON output");
  t->callback([&] {
    action = [&](const Output& o) {
      if (tables.which == "3") return run_table3(tables, o);
      if (!tables.candidates.empty()) throw UsageError("--candidates only applies to table 3");
      return run_table12(tables.which == "1", tables.json, o);
    };
  });

  RenderArgs render_args;
  auto* r = app.add_subcommand("render", "SVG rendering of a construction, figure or the SB23397 pattern");
  r->add_option("subject", render_args.subject, "Figure family, figure id (1a-1e, 1-12) or sb23397")->required();
  r->add_option("--n", render_args.n, "Arc count for regular-concave / regular-convex");
  r->add_option("--figure-size", render_args.figure_size, "Size parameter of a family construction")
      ->capture_default_str();
  r->add_flag("--guides", render_args.guides, "Draw centres, polygons and auxiliary lines");
  r->add_option("--size", render_args.canvas, "Canvas WIDTHxHEIGHT")->capture_default_str();
  r->add_option("--stroke", render_args.stroke, "Stroke colour");
  r->add_option("--fill", render_args.fill, "Fill colour of the polyarc");
  r->add_option("--stroke-width", render_args.stroke_width, "Stroke width")->check(CLI::PositiveNumber);
  r->add_option("-o,--output", render_args.output, "Write to a file instead of stdout");
  r->callback([&] { action = [&](const Output& o) { return run_render(render_args, o); }; });

  ConvertArgs convert;
  auto* cv = app.add_subcommand("convert", "Sexagesimal <-> rational");
  cv->add_option("value", convert.value, "e.g. 0;13,20 or 2/9")->required();
  places_option(cv, convert.places);
  cv->add_option("--mode", convert.mode, "truncate or round")->check(CLI::IsMember({"truncate", "round"}))->capture_default_str();
  cv->add_flag("--json", convert.json, "JSON output");
  cv->callback([&] { action = [&](const Output& o) { return run_convert(convert, o); }; });

  if (!args.empty() && !args.front().starts_with('-')) {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->check_name(args.front()); });
    if (!known) {
      err << "polyarc: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return kUsage;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "polyarc: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const Output output{out, options.color};
  try {
    return action(output);
  } catch (const UsageError& e) {
    err << "polyarc: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "polyarc: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "polyarc: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace polyarc::cli
