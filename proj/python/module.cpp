#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oriental/cocycle.hpp"
#include "oriental/render.hpp"
#include "oriental/simplex.hpp"

namespace py = pybind11;
using namespace oriental;

namespace {

Side side_of(const std::string& s) {
    if (s == "source") return Side::Source;
    if (s == "target") return Side::Target;
    throw Error("side must be \"source\" or \"target\"");
}

std::vector<std::string> strings_of(const std::vector<CubeWord>& ws) {
    std::vector<std::string> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

py::dict pile_dict(const Pile& p) {
    py::dict d;
    for (std::size_t j = 0; j < p.levels().size(); ++j)
        d[("v" + std::to_string(j)).c_str()] = strings_of(p.level(j));
    return d;
}

py::list trace_list(const Trace& t) {
    py::list steps;
    py::dict first;
    first["label"] = "start";
    first["pile"] = pile_dict(t.initial);
    steps.append(first);
    for (const auto& s : t.steps) {
        py::dict d;
        d["label"] = s.label.to_string();
        d["pile"] = pile_dict(s.state);
        steps.append(d);
    }
    return steps;
}

} // namespace

PYBIND11_MODULE(orientals, m) {
    m.doc() = "oriented n-cube cocycle engine";

    py::register_exception<Error>(m, "OrientalError");

    // words
    m.def("dimension", [](const std::string& w) { return dimension(parse_word(w)); },
          py::arg("word"), "number of zeros in a cube word");
    m.def("antipodal", [](const std::string& w) { return to_string(antipodal(parse_word(w))); },
          py::arg("word"));
    m.def("substitute",
          [](const std::string& x, const std::string& y) {
              return to_string(substitute(parse_word(x), parse_word(y)));
          },
          py::arg("x"), py::arg("y"), "place y into the zero slots of x");
    m.def("geometric_faces",
          [](const std::string& w) {
              auto fs = geometric_faces(parse_word(w));
              return strings_of({fs.begin(), fs.end()});
          },
          py::arg("word"));
    m.def("parallel_class",
          [](const std::string& w) { return parallel_class(parse_word(w)).label(); },
          py::arg("word"));

    // face lists and piles
    m.def("psi", [](std::size_t k, std::size_t n) { return strings_of(psi(k, n)); },
          py::arg("k"), py::arg("n"));
    m.def("omega", [](std::size_t k, std::size_t n) { return strings_of(omega(k, n)); },
          py::arg("k"), py::arg("n"));
    m.def("face_pile",
          [](const std::string& side, std::size_t n) {
              return pile_dict(face_pile(side_of(side), n));
          },
          py::arg("side"), py::arg("n"));
    m.def("is_section",
          [](const std::vector<std::string>& words, std::size_t k, std::size_t n) {
              std::set<CubeWord> ws;
              for (const auto& w : words) ws.insert(parse_word(w));
              return is_section(ws, k, n);
          },
          py::arg("words"), py::arg("k"), py::arg("n"));
    m.def("certify_disk",
          [](const std::vector<std::string>& words, std::size_t k) {
              std::set<CubeWord> ws;
              for (const auto& w : words) ws.insert(parse_word(w));
              auto cert = certify_disk(ws, k);
              py::dict d;
              d["ok"] = cert.ok;
              d["failure"] = cert.failure;
              d["boundary"] = strings_of({cert.boundary.begin(), cert.boundary.end()});
              return d;
          },
          py::arg("words"), py::arg("k"));

    // blocks and cocycles
    m.def("sigma_form",
          [](std::size_t k, std::size_t n) { return to_string(linearize(sigma_block(k, n))); },
          py::arg("k"), py::arg("n"));
    m.def("tau_form",
          [](std::size_t k, std::size_t n) { return to_string(linearize(tau_block(k, n))); },
          py::arg("k"), py::arg("n"));
    m.def("cocycle",
          [](std::size_t n) {
              auto c = cocycle(n);
              return py::make_tuple(to_string(c.source_form), to_string(c.target_form));
          },
          py::arg("n"), "the source and target forms of the (n-1)-cocycle condition");
    m.def("is_distinguished",
          [](const std::string& form, std::size_t n) {
              return is_distinguished(parse_linear(form, n));
          },
          py::arg("form"), py::arg("n"));
    m.def("reverse_involute",
          [](const std::string& form) {
              return to_string(reverse_involute(parse_form(form)));
          },
          py::arg("form"));
    m.def("block_json",
          [](std::size_t k, std::size_t n, const std::string& side) {
              return block_to_json(side_of(side) == Side::Source ? sigma_block(k, n)
                                                                 : tau_block(k, n));
          },
          py::arg("k"), py::arg("n"), py::arg("side") = "source");

    // execution
    m.def("run_form",
          [](const std::string& form, const std::string& side, std::size_t n) {
              Pile start = side_of(side) == Side::Source ? face_pile(Side::Source, n)
                                                         : tau_start_pile(n);
              return trace_list(run(parse_form(form), start));
          },
          py::arg("form"), py::arg("side"), py::arg("n"));
    m.def("trace",
          [](std::size_t n, const std::string& side) {
              return trace_list(side_of(side) == Side::Source ? run_source(n) : run_target(n));
          },
          py::arg("n"), py::arg("side") = "source");
    m.def("verify_execution",
          [](std::size_t n) {
              auto r = verify_execution(n);
              return py::make_tuple(r.ok, r.failure);
          },
          py::arg("n"));

    // simplicial conversions
    m.def("slice",
          [](const std::string& form, std::size_t n) {
              return to_string(slice(parse_form(form), n));
          },
          py::arg("form"), py::arg("n"));
    m.def("explode",
          [](const std::string& form, std::size_t n) {
              return to_string(explode(parse_form(form), n));
          },
          py::arg("form"), py::arg("n"));
    m.def("strings",
          [](const std::string& form, std::size_t n) {
              return to_string(strings(parse_form(form), n));
          },
          py::arg("form"), py::arg("n"));
    m.def("routes_agree",
          [](std::size_t m_) {
              auto r = routes_agree(m_);
              py::dict d;
              d["ok"] = r.ok;
              d["failure"] = r.failure;
              d["slice"] = to_string(r.via_slice);
              d["explode"] = to_string(r.via_explode);
              d["strings"] = to_string(r.via_strings);
              return d;
          },
          py::arg("m"));

    // rendering
    m.def("render_block_dot",
          [](std::size_t k, std::size_t n, const std::string& side) {
              const Block& b =
                  side_of(side) == Side::Source ? sigma_block(k, n) : tau_block(k, n);
              return render_block_dot(b, side + " block");
          },
          py::arg("k"), py::arg("n"), py::arg("side") = "source");
}
