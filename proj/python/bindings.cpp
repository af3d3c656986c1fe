#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/cli.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/enumerate.hpp"
#include "semiring_lab/harness.hpp"
#include "semiring_lab/ideal.hpp"
#include "semiring_lab/isomorphism.hpp"
#include "semiring_lab/json_io.hpp"
#include "semiring_lab/matrix.hpp"
#include "semiring_lab/qplus.hpp"

#include <sstream>

namespace py = pybind11;
namespace sl = semiring_lab;

namespace {

py::dict special_dict(const sl::SpecialElements& e) {
    py::dict d;
    auto put = [&](const char* key, const std::optional<sl::Elem>& v) {
        d[key] = v ? py::cast(*v) : py::none();
    };
    put("zero", e.zero);
    put("unity", e.unity);
    put("add_neutral", e.add_neutral);
    put("add_absorbing", e.add_absorbing);
    put("mul_absorbing", e.mul_absorbing);
    put("bi_absorbing", e.bi_absorbing);
    return d;
}

std::vector<std::vector<sl::Elem>> blocks(const sl::Partition& p) { return p.blocks(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite semirings, matrix semirings and the rational example semiring";

    static py::exception<sl::Error> error(m, "SemiringError");
    static py::exception<sl::AxiomViolation> axiom_error(m, "AxiomViolation", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const sl::AxiomViolation& e) {
            py::set_error(axiom_error, e.what());
        } catch (const sl::Error& e) {
            py::set_error(error, (std::string(e.kind()) + ": " + e.what()).c_str());
        }
    });

    py::class_<sl::FiniteSemiring>(m, "FiniteSemiring")
        .def(py::init([](const sl::Table& add, const sl::Table& mul, std::string name) {
                 return sl::validate(add, mul, std::move(name));
             }),
             py::arg("add"), py::arg("mul"), py::arg("name") = "")
        .def_static("from_json", [](const std::string& text) {
            return sl::json::semiring_from_json(sl::json::Json::parse(text));
        })
        .def("to_json", [](const sl::FiniteSemiring& s) { return sl::json::to_json(s).dump(); })
        .def_property_readonly("order", &sl::FiniteSemiring::order)
        .def_property_readonly("name", &sl::FiniteSemiring::name)
        .def("add", &sl::FiniteSemiring::add)
        .def("mul", &sl::FiniteSemiring::mul)
        .def("add_table", &sl::FiniteSemiring::add_table)
        .def("mul_table", &sl::FiniteSemiring::mul_table)
        .def("__eq__", [](const sl::FiniteSemiring& a, const sl::FiniteSemiring& b) { return a == b; })
        .def("__len__", &sl::FiniteSemiring::order)
        .def("__repr__", [](const sl::FiniteSemiring& s) {
            return "<FiniteSemiring " + (s.name().empty() ? std::string("?") : s.name()) +
                   " order=" + std::to_string(s.order()) + ">";
        });

    m.def("boolean", &sl::catalog::boolean);
    m.def("integers_mod", &sl::catalog::integers_mod, py::arg("n"));
    m.def("zero_product_ring", &sl::catalog::zero_product_ring, py::arg("n"));
    m.def("max_chain", &sl::catalog::max_chain, py::arg("n"));
    m.def("finite_field", &sl::catalog::finite_field, py::arg("q"));

    m.def("special_elements", [](const sl::FiniteSemiring& s) { return special_dict(sl::special_elements(s)); });
    m.def("is_commutative", &sl::is_commutative);
    m.def("is_add_idempotent", &sl::is_add_idempotent);
    m.def("is_add_cancellative", &sl::is_add_cancellative);
    m.def("is_ring", &sl::is_ring);
    m.def("is_add_archimedean", &sl::is_add_archimedean);
    m.def("is_downwards_directed", &sl::is_downwards_directed);
    m.def("is_uniquely_m_divisible", &sl::is_uniquely_m_divisible, py::arg("s"), py::arg("m"));
    m.def("is_conical", &sl::is_conical);
    m.def("product_set", &sl::product_set);

    m.def("is_congruence_simple", &sl::is_congruence_simple);
    m.def("congruence_witness", [](const sl::FiniteSemiring& s) -> py::object {
        const auto v = sl::congruence_simplicity(s);
        if (!v.witness) return py::none();
        return py::make_tuple(py::make_tuple(v.witness->first, v.witness->second), blocks(*v.congruence));
    });
    m.def("all_congruences", [](const sl::FiniteSemiring& s) {
        std::vector<std::vector<std::vector<sl::Elem>>> out;
        for (const auto& p : sl::all_congruences(s)) out.push_back(p.blocks());
        return out;
    });
    m.def("is_congruence", [](const sl::FiniteSemiring& s, const std::vector<std::vector<sl::Elem>>& b) {
        return sl::is_congruence(s, sl::Partition::from_blocks(s.order(), b));
    });

    m.def("is_bi_ideal", [](const sl::FiniteSemiring& s, const std::vector<sl::Elem>& members) {
        return sl::is_bi_ideal(s, sl::ElementSet::of(s.order(), members));
    });
    m.def("bi_ideal_generated", [](const sl::FiniteSemiring& s, const std::vector<sl::Elem>& gens) {
        return sl::bi_ideal_generated(s, sl::ElementSet::of(s.order(), gens)).members();
    });
    m.def("is_bi_ideal_simple", &sl::is_bi_ideal_simple);
    m.def("is_bi_ideal_free", &sl::is_bi_ideal_free);

    py::class_<sl::MatrixSemiring>(m, "MatrixSemiring")
        .def_property_readonly("dim", &sl::MatrixSemiring::dim)
        .def_property_readonly("order", &sl::MatrixSemiring::order)
        .def_property_readonly("product", &sl::MatrixSemiring::product)
        .def("encode", [](const sl::MatrixSemiring& t, const std::vector<sl::Elem>& e) { return t.encode(e); })
        .def("decode", &sl::MatrixSemiring::decode)
        .def("bar", &sl::MatrixSemiring::bar)
        .def("q_a", [](const sl::MatrixSemiring& t, sl::Elem a) { return sl::q_a(t, a).members(); })
        .def("p_a", [](const sl::MatrixSemiring& t, sl::Elem a) { return sl::p_a(t, a).members(); })
        .def("r_a", [](const sl::MatrixSemiring& t, sl::Elem a) { return sl::r_a(t, a).members(); });
    m.def("materialize", &sl::materialize, py::arg("s"), py::arg("n"),
          py::arg("bound") = sl::kDefaultMaterializeBound);

    m.def("enumerate_semirings", [](std::size_t order, bool allow_order_five) {
        return sl::enumerate_semirings(order, sl::EnumerationOptions{allow_order_five});
    }, py::arg("order"), py::arg("allow_order_five") = false);
    m.def("are_isomorphic", [](const sl::FiniteSemiring& a, const sl::FiniteSemiring& b) {
        return sl::find_isomorphism(a, b).has_value();
    });

    m.def("run_harness_json", [](const sl::FiniteSemiring& s, std::size_t n, bool n3) {
        sl::HarnessOptions options;
        options.n = n;
        options.bi_ideal_layer_n3 = n3;
        return sl::json::to_json(sl::run_harness(s, options), options).dump();
    }, py::arg("s"), py::arg("n") = 2, py::arg("bi_ideal_layer_n3") = true);

    m.def("qplus_member", [](const std::string& a, long p, const std::string& x) {
        return sl::qplus::QPlusSemiring(sl::qplus::parse_rational(a), p).member(sl::qplus::parse_rational(x));
    }, py::arg("a"), py::arg("p"), py::arg("x"));
    m.def("qplus_vp", [](long p, const std::string& x) {
        return sl::qplus::vp(p, sl::qplus::parse_rational(x));
    }, py::arg("p"), py::arg("x"));
    m.def("qplus_lower_bound_witness", [](const std::string& a, long p, const std::string& x, const std::string& y) {
        const sl::qplus::QPlusSemiring q(sl::qplus::parse_rational(a), p);
        return sl::qplus::to_string(
            sl::qplus::lower_bound_witness(q, sl::qplus::parse_rational(x), sl::qplus::parse_rational(y)));
    }, py::arg("a"), py::arg("p"), py::arg("x"), py::arg("y"));
    m.def("qplus_non_divisibility_witness", [](const std::string& a, long p, long mm) {
        const sl::qplus::QPlusSemiring q(sl::qplus::parse_rational(a), p);
        return sl::qplus::to_string(sl::qplus::non_divisibility_witness(q, mm));
    }, py::arg("a"), py::arg("p"), py::arg("m"));

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = sl::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
