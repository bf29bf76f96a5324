#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "aisr/evaluator.hpp"
#include "aisr/json_io.hpp"
#include "aisr/representation.hpp"
#include "aisr/version.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as plain dicts/lists via their JSON form.
py::object to_py(const aisr::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> word_strings(const aisr::FormalSum& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& w : s.summands()) out.push_back(w.str());
    return out;
}

aisr::FormatStyle style_from(const std::string& name) {
    if (name == "spaced") return aisr::FormatStyle::spaced;
    if (name == "compact") return aisr::FormatStyle::compact;
    throw aisr::Error("style must be 'spaced' or 'compact'");
}

aisr::CheckStrategy strategy_from(std::uint64_t samples, std::uint64_t seed) {
    return samples > 0 ? aisr::CheckStrategy::random(seed, samples)
                       : aisr::CheckStrategy::exhaustive();
}

}  // namespace

PYBIND11_MODULE(aisr, m) {
    m.doc() = "Identities of semirings of reflexive boolean matrices and chain transformations";
    m.attr("__version__") = aisr::kVersion;

    const auto base = py::register_exception<aisr::Error>(m, "Error");
    py::register_exception<aisr::ParseError>(m, "ParseError", base);
    py::register_exception<aisr::TooLarge>(m, "TooLarge", base);
    py::register_exception<aisr::Infeasible>(m, "Infeasible", base);

    py::class_<aisr::Identity>(m, "Identity")
        .def_property_readonly("lhs", [](const aisr::Identity& id) { return word_strings(id.lhs()); })
        .def_property_readonly("rhs", [](const aisr::Identity& id) { return word_strings(id.rhs()); })
        .def_property_readonly("alphabet",
                               [](const aisr::Identity& id) {
                                   std::vector<std::string> out;
                                   for (const auto& x : id.alphabet()) out.push_back(x.name());
                                   return out;
                               })
        .def("swapped", &aisr::Identity::swapped)
        .def("max_word_length", &aisr::Identity::max_word_length)
        .def("__eq__",
             [](const aisr::Identity& a, const aisr::Identity& b) { return a == b; })
        .def("__str__", [](const aisr::Identity& id) { return aisr::format_identity(id); })
        .def("__repr__", [](const aisr::Identity& id) {
            return "Identity(\"" + aisr::format_identity(id) + "\")";
        });

    m.def("parse_identity", &aisr::parse_identity, py::arg("text"));
    m.def(
        "format_identity",
        [](const aisr::Identity& id, const std::string& style) {
            return aisr::format_identity(id, style_from(style));
        },
        py::arg("identity"), py::arg("style") = "spaced");
    m.def(
        "is_subword",
        [](const std::string& u, const std::string& v) {
            return aisr::is_subword(aisr::parse_word(u), aisr::parse_word(v));
        },
        py::arg("u"), py::arg("v"));
    m.def(
        "subwords_up_to",
        [](const std::string& w, int k) {
            std::vector<std::string> out;
            for (const auto& s : aisr::subwords_up_to(aisr::parse_word(w), k)) {
                out.push_back(s.str());
            }
            return out;
        },
        py::arg("word"), py::arg("k"));
    m.def("basis_identity", &aisr::basis_identity, py::arg("k"));
    m.def(
        "sample_identity",
        [](std::uint64_t seed, int alphabet_size, int max_summands, int max_len) {
            return aisr::sample_identity({alphabet_size, max_summands, max_len}, seed);
        },
        py::arg("seed"), py::arg("alphabet_size") = 3, py::arg("max_summands") = 3,
        py::arg("max_len") = 4);

    m.def(
        "jk_member",
        [](const aisr::Identity& id, int k) { return to_py(jk_verdict_json(aisr::jk_member(id, k), k)); },
        py::arg("identity"), py::arg("k"));
    m.def(
        "jk_member",
        [](const std::string& text, int k) {
            return to_py(jk_verdict_json(aisr::jk_member(aisr::parse_identity(text), k), k));
        },
        py::arg("identity"), py::arg("k"));
    m.def(
        "jk_threshold",
        [](const aisr::Identity& id) { return to_py(jk_threshold_json(aisr::jk_threshold(id))); },
        py::arg("identity"));
    m.def(
        "jk_threshold",
        [](const std::string& text) {
            return to_py(jk_threshold_json(aisr::jk_threshold(aisr::parse_identity(text))));
        },
        py::arg("identity"));

    py::class_<aisr::MatrixClass>(m, "MatrixClass")
        .def_readonly("reflexive", &aisr::MatrixClass::reflexive)
        .def_readonly("upper_triangular", &aisr::MatrixClass::upper_triangular)
        .def_readonly("stair", &aisr::MatrixClass::stair);

    py::class_<aisr::BoolMatrix>(m, "BoolMatrix")
        .def(py::init([](const std::string& literal) { return aisr::BoolMatrix::parse(literal); }),
             py::arg("literal"))
        .def_static("identity", &aisr::BoolMatrix::identity, py::arg("n"))
        .def_property_readonly("dim", &aisr::BoolMatrix::dim)
        .def("get", &aisr::BoolMatrix::get, py::arg("i"), py::arg("j"))
        .def("__add__", &aisr::mat_add)
        .def("__mul__", &aisr::mat_mul)
        .def(py::self == py::self)
        .def("__str__", &aisr::BoolMatrix::str)
        .def("__repr__",
             [](const aisr::BoolMatrix& a) { return "BoolMatrix(\"" + a.str() + "\")"; });
    m.def("classify", &aisr::classify, py::arg("matrix"));

    py::class_<aisr::ChainMap>(m, "ChainMap")
        .def(py::init([](const std::string& literal) { return aisr::ChainMap::parse(literal); }),
             py::arg("literal"))
        .def(py::init([](const std::vector<int>& values) {
                 return aisr::ChainMap(static_cast<int>(values.size()), values);
             }),
             py::arg("values"))
        .def_static("identity", &aisr::ChainMap::identity, py::arg("n"))
        .def_property_readonly("dim", &aisr::ChainMap::dim)
        .def("apply", &aisr::ChainMap::apply, py::arg("i"))
        .def("values", &aisr::ChainMap::values)
        .def("__mul__", &aisr::chain_compose)
        .def("__add__", &aisr::chain_join)
        .def(py::self == py::self)
        .def("__str__", &aisr::ChainMap::str)
        .def("__repr__", [](const aisr::ChainMap& f) { return "ChainMap(\"" + f.str() + "\")"; });
    m.def("chain_compose", &aisr::chain_compose, py::arg("f"), py::arg("g"));
    m.def("chain_join", &aisr::chain_join, py::arg("f"), py::arg("g"));
    m.def("stair_to_chain",
          py::overload_cast<const aisr::BoolMatrix&>(&aisr::stair_chain_iso), py::arg("matrix"));
    m.def("chain_to_stair", py::overload_cast<const aisr::ChainMap&>(&aisr::stair_chain_iso),
          py::arg("chain"));

    py::class_<aisr::Carrier>(m, "Carrier")
        .def_property_readonly("kind",
                               [](const aisr::Carrier& c) {
                                   return std::string(aisr::carrier_kind_name(c.kind()));
                               })
        .def_property_readonly("dim", &aisr::Carrier::dim)
        .def_property_readonly("size", &aisr::Carrier::size)
        .def_property_readonly("has_tables", &aisr::Carrier::has_tables)
        .def("__len__", &aisr::Carrier::size)
        .def("add", &aisr::Carrier::add, py::arg("a"), py::arg("b"))
        .def("mul", &aisr::Carrier::mul, py::arg("a"), py::arg("b"))
        .def("element", &aisr::Carrier::element_str, py::arg("id"))
        .def(
            "find",
            [](const aisr::Carrier& c, const std::string& literal) {
                return c.find_literal(literal);
            },
            py::arg("literal"));
    m.def(
        "enumerate_carrier",
        [](const std::string& kind, int n, std::uint64_t guard, bool build_tables) {
            return aisr::enumerate_carrier(aisr::carrier_kind_from(kind), n, guard, build_tables);
        },
        py::arg("kind"), py::arg("n"), py::arg("guard") = aisr::kDefaultGuard,
        py::arg("build_tables") = true);

    py::class_<aisr::BoolVector>(m, "BoolVector")
        .def(py::init([](const std::string& literal) { return aisr::BoolVector::parse(literal); }),
             py::arg("literal"))
        .def_property_readonly("dim", &aisr::BoolVector::dim)
        .def("get", &aisr::BoolVector::get, py::arg("i"))
        .def(py::self == py::self)
        .def("__str__", &aisr::BoolVector::str)
        .def("__repr__",
             [](const aisr::BoolVector& q) { return "BoolVector(\"" + q.str() + "\")"; });
    m.def("act", &aisr::act, py::arg("q"), py::arg("a"));
    m.def(
        "verify_representation",
        [](int n, const std::string& mode, std::uint64_t seed, std::uint64_t samples,
           std::uint64_t guard) {
            aisr::RepMode rep_mode;
            if (mode == "exhaustive") rep_mode = aisr::RepMode::exhaustive;
            else if (mode == "random") rep_mode = aisr::RepMode::random;
            else throw aisr::Error("mode must be 'exhaustive' or 'random'");
            return to_py(rep_report_json(aisr::verify_representation(n, rep_mode, seed, samples, guard)));
        },
        py::arg("n"), py::arg("mode") = "exhaustive", py::arg("seed") = 0, py::arg("samples") = 0,
        py::arg("guard") = aisr::kDefaultGuard);

    m.def(
        "check_identity",
        [](const aisr::Identity& id, const aisr::Carrier& c, std::uint64_t samples,
           std::uint64_t seed, std::uint64_t budget) {
            return to_py(verdict_json(aisr::check_identity(id, c, strategy_from(samples, seed), budget), c));
        },
        py::arg("identity"), py::arg("carrier"), py::arg("samples") = 0, py::arg("seed") = 0,
        py::arg("budget") = aisr::kDefaultBudget);
    m.def(
        "check_identity",
        [](const std::string& text, const aisr::Carrier& c, std::uint64_t samples,
           std::uint64_t seed, std::uint64_t budget) {
            return to_py(verdict_json(
                aisr::check_identity(aisr::parse_identity(text), c, strategy_from(samples, seed), budget),
                c));
        },
        py::arg("identity"), py::arg("carrier"), py::arg("samples") = 0, py::arg("seed") = 0,
        py::arg("budget") = aisr::kDefaultBudget);
    m.def(
        "agreement_experiment",
        [](int n, std::uint64_t seed, std::uint64_t count, int alphabet_size, int max_summands,
           int max_len, std::uint64_t budget) {
            const aisr::SamplerConfig cfg{alphabet_size, max_summands, max_len};
            return to_py(agreement_report_json(aisr::agreement_experiment(n, cfg, seed, count, budget)));
        },
        py::arg("n"), py::arg("seed"), py::arg("count"), py::arg("alphabet_size") = 3,
        py::arg("max_summands") = 3, py::arg("max_len") = 4,
        py::arg("budget") = aisr::kDefaultBudget);
}
