#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "polyarc/errors.hpp"
#include "polyarc/render.hpp"
#include "polyarc/serialize.hpp"

namespace py = pybind11;
using namespace polyarc;

namespace {

// Results cross the boundary as JSON text; the Python package turns the
// {"num", "den"} objects into fractions.Fraction.
std::string dump(const io::Json& j) { return j.dump(); }

std::string compute(const std::string& figure, const std::string& size, int n, const std::string& context,
                    int precision) {
  const auto family = family_from_name(figure);
  if (!family) throw DomainError("unknown figure '" + figure + "'");
  const PolyarcSpec spec = PolyarcSpec::named(*family, Rational::parse(size), n);
  EvalMode mode = ExactMode{precision};
  if (!context.empty()) {
    const auto preset = find_preset(context);
    if (!preset) throw DomainError("unknown context '" + context + "'");
    mode = ContextMode{*preset};
  }
  return dump(io::to_json(compute_metrics(spec, mode)));
}

std::string verify_all(int precision) {
  io::Json array = io::Json::array();
  for (const auto& r : tablet::verify_all(precision)) array.push_back(io::to_json(r));
  return dump(array);
}

std::string table(int which) {
  io::Json array = io::Json::array();
  if (which == 3) {
    const auto grid = tablet::default_table3_candidates();
    for (const auto& row : tablet::table3_search(grid.sqrt3, grid.sqrt21)) array.push_back(io::to_json(row));
  } else if (which == 1 || which == 2) {
    for (const auto& cell : which == 1 ? tablet::reproduce_table1() : tablet::reproduce_table2()) {
      array.push_back(io::to_json(cell));
    }
  } else {
    throw DomainError("table must be 1, 2 or 3");
  }
  return dump(array);
}

std::string render_svg(const std::string& subject, bool guides, double width, double height, int n) {
  render::RenderRequest request;
  request.options.width = width;
  request.options.height = height;
  request.options.show_guides = guides;
  const auto& figures = render::supported_figures();
  if (subject == "sb23397") {
    request.subject = render::Sb23397Subject{};
  } else if (std::find(figures.begin(), figures.end(), subject) != figures.end()) {
    request.subject = render::FigureSubject{subject};
  } else if (const auto family = family_from_name(subject)) {
    request.subject = render::ConstructionSubject{PolyarcSpec::named(*family, 1, n)};
  } else {
    throw DomainError("unknown render subject '" + subject + "'");
  }
  return render::render(request);
}

}  // namespace

PYBIND11_MODULE(_polyarc, m) {
  m.doc() = "Polyarc geometry, Babylonian approximations and sexagesimal arithmetic";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<MissingSurrogate>(m, "MissingSurrogate", PyExc_KeyError);

  m.def("sexagesimal_to_rational", [](const std::string& text) {
    return Sexagesimal::parse(text).to_rational().to_fraction_string();
  });
  m.def(
      "rational_to_sexagesimal",
      [](const std::string& q, int places, bool round) {
        return Sexagesimal::from_rational(Rational::parse(q), places, round ? Rounding::kRound : Rounding::kTruncate)
            .to_string();
      },
      py::arg("q"), py::arg("places") = 5, py::arg("round") = false);
  m.def(
      "heron",
      [](const std::string& radicand, const std::string& seed, int steps) {
        std::vector<std::string> out;
        for (const auto& x : heron_sequence(Rational::parse(radicand), Rational::parse(seed), steps).iterates) {
          out.push_back(x.to_fraction_string());
        }
        return out;
      },
      py::arg("radicand"), py::arg("seed"), py::arg("steps"));
  m.def(
      "surd",
      [](const std::string& a, const std::string& b, bool plus) {
        return surd_linear_approx(Rational::parse(a), Rational::parse(b), plus ? SurdSign::kPlus : SurdSign::kMinus)
            .to_fraction_string();
      },
      py::arg("a"), py::arg("b"), py::arg("plus") = true);
  m.def("compute", &compute, py::arg("figure"), py::arg("size") = "1", py::arg("n") = 0, py::arg("context") = "",
        py::arg("precision") = kDefaultPrecision);
  m.def("verify_all", &verify_all, py::arg("precision") = kDefaultPrecision);
  m.def("table", &table, py::arg("which"));
  m.def("render", &render_svg, py::arg("subject"), py::arg("guides") = false, py::arg("width") = 480.0,
        py::arg("height") = 480.0, py::arg("n") = 0);
  m.def(
      "oracle_area",
      [](const std::string& figure, int n, int chords) {
        const auto family = family_from_name(figure);
        if (!family) throw DomainError("unknown figure '" + figure + "'");
        return oracle_area(PolyarcSpec::named(*family, 1, n), chords);
      },
      py::arg("figure"), py::arg("n") = 0, py::arg("chords_per_arc") = 4096);
}
