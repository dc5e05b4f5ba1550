#include "vtypes/classification.hpp"
#include "vtypes/enumeration.hpp"
#include "vtypes/error.hpp"
#include "vtypes/infinite_family.hpp"
#include "vtypes/membership.hpp"
#include "vtypes/semigroup.hpp"

#include <map>
#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace vtypes;

namespace {

std::vector<std::string> label_names(const TypeSystem& t, const std::vector<int>& labels) {
    std::vector<std::string> out;
    for (int l : labels) {
        out.push_back(t.name(l));
    }
    return out;
}

std::vector<Address> addresses(const std::vector<std::string>& xs) {
    std::vector<Address> out;
    for (const auto& x : xs) {
        out.push_back(Address::parse(x));
    }
    return out;
}

py::dict classification_dict(const TypeSystem& t, const Classification& c) {
    py::dict d;
    d["kind"] = kind_name(c.kind);
    py::list nuclei;
    for (const auto& n : c.nuclei) {
        nuclei.append(label_names(t, n));
    }
    d["nuclei"] = nuclei;
    d["eventual"] = label_names(t, c.eventual);
    d["t"] = c.t;
    d["stable_depth"] = c.stable_depth ? py::cast(*c.stable_depth) : py::none();
    d["q"] = label_names(t, c.q);
    d["r"] = label_names(t, c.r);
    d["q_dagger"] = label_names(t, c.q_dagger);
    d["branching"] = c.branching;
    std::vector<std::string> pts;
    for (const auto& p : c.tail_points) {
        pts.push_back(p.to_string());
    }
    d["tail_points"] = pts;
    d["tail_error"] = c.tail_error ? py::cast(*c.tail_error) : py::none();
    return d;
}

py::dict semigroup_dict(const TypeSystem& t, const SemigroupInfo& s) {
    py::dict d;
    d["nucleus"] = label_names(t, s.nucleus);
    std::vector<long long> factors;
    for (const auto& f : s.invariant_factors) {
        factors.push_back(static_cast<long long>(f));
    }
    d["invariant_factors"] = factors;
    d["free_rank"] = s.free_rank;
    d["h1_rank"] = s.h1_rank;
    d["det"] = py::int_(py::str(s.det_i_minus_a.str()));
    d["h0"] = s.h0_string();
    d["abelianization"] = s.abelianization_string();
    d["fix_simple"] = s.fix_simple;
    d["fix_virtually_simple"] = s.fix_virtually_simple;
    return d;
}

}  // namespace

PYBIND11_MODULE(_vtypes, m) {
    m.doc() = "Finite type systems on Cantor space and their stabilizers in Thompson's group V";

    py::register_exception<Error>(m, "VTypesError", PyExc_ValueError);

    py::class_<Address>(m, "Address")
        .def(py::init([](const std::string& s) { return Address::parse(s); }))
        .def("__str__", &Address::to_string)
        .def("__repr__", [](const Address& a) { return "Address('" + a.to_string() + "')"; })
        .def("__len__", &Address::length)
        .def("__eq__", [](const Address& a, const Address& b) { return a == b; })
        .def("__hash__", [](const Address& a) { return py::hash(py::str(a.to_string())); });

    py::class_<PrefixMap>(m, "Element")
        .def(py::init<>())
        .def_static("parse", [](const std::string& text) { return parse_element(text); })
        .def_static("transposition",
                    [](const std::string& a, const std::string& b) {
                        return transposition(Address::parse(a), Address::parse(b));
                    })
        .def("normalize", [](const PrefixMap& g) { return normalize(g); })
        .def("inverse", [](const PrefixMap& g) { return inverse(g); })
        .def("then", [](const PrefixMap& g, const PrefixMap& h) { return compose(g, h); },
             "Apply this element first, then the argument.")
        .def("__call__",
             [](const PrefixMap& g, const std::string& a) -> std::optional<std::string> {
                 auto r = partial_apply(g, Address::parse(a));
                 return r ? std::optional<std::string>(r->to_string()) : std::nullopt;
             })
        .def("pairs",
             [](const PrefixMap& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& p : g.pairs()) {
                     out.emplace_back(p.domain.to_string(), p.range.to_string());
                 }
                 return out;
             })
        .def("__eq__", [](const PrefixMap& a, const PrefixMap& b) { return normalize(a) == normalize(b); })
        .def("__str__", [](const PrefixMap& g) { return format_element(g); });

    py::class_<TypeSystem>(m, "TypeSystem")
        .def_static("parse", [](const std::string& text) { return TypeSystem::validate(parse_diagram(text)); })
        .def_property_readonly("size", &TypeSystem::size)
        .def_property_readonly("labels",
                               [](const TypeSystem& t) { return t.diagram().names; })
        .def("type_of", [](const TypeSystem& t, const std::string& a) { return t.name(t.type_of(Address::parse(a))); })
        .def("canonical_form", [](const TypeSystem& t) { return canonical_form(t.diagram()); })
        .def("__str__", [](const TypeSystem& t) { return format_diagram(t.diagram()); });

    m.def("reduce", [](const std::string& text) { return reduce(parse_diagram(text)).system; });
    m.def("is_simple", [](const TypeSystem& t) { return is_simple(t).simple; });
    m.def("classify", [](const TypeSystem& t) { return classification_dict(t, classify(t)); });
    m.def("semigroup", [](const TypeSystem& t) {
        py::list out;
        for (const auto& s : semigroup_info(t, classify(t))) {
            out.append(semigroup_dict(t, s));
        }
        return out;
    });
    m.def("in_fix", [](const TypeSystem& t, const PrefixMap& g) { return in_fix(t, g); });
    m.def("in_stab", [](const TypeSystem& t, const PrefixMap& g) { return in_stab(t, g).member; });
    m.def("class_permutation", [](const TypeSystem& t, const PrefixMap& g) {
        py::dict out;
        const auto img = induced_class_permutation(t, g);
        for (std::size_t l = 0; l < img.size(); ++l) {
            if (img[l] >= 0) {
                out[py::str(t.name(static_cast<int>(l)))] = t.name(img[l]);
            }
        }
        return out;
    });
    m.def("stype_equal", [](const TypeSystem& t, const std::vector<std::string>& u, const std::vector<std::string>& v) {
        const auto c = classify(t);
        return stype_equal(stype_of(t, c, addresses(u)), stype_of(t, c, addresses(v)));
    });
    m.def(
        "witness",
        [](const TypeSystem& t, const std::string& a, const std::string& a2, const std::string& b,
           const std::string& b2, int budget) {
            return witness_conjugator(t, classify(t), Address::parse(a), Address::parse(a2), Address::parse(b),
                                      Address::parse(b2), budget);
        },
        py::arg("system"), py::arg("alpha"), py::arg("alpha2"), py::arg("beta"), py::arg("beta2"),
        py::arg("budget") = kDefaultBudget);
    m.def(
        "census_counts",
        [](int max_labels, bool simple_only) {
            const auto census = build_census(max_labels, simple_only);
            std::map<std::string, std::size_t> counts;
            for (const auto& row : census.rows) {
                ++counts[kind_name(row.kind)];
            }
            return counts;
        },
        py::arg("max_labels"), py::arg("simple_only") = false);
    m.def(
        "family_witness",
        [](const std::vector<std::uint64_t>& seq, std::uint64_t i, std::uint64_t j, std::uint64_t k,
           std::optional<std::uint64_t> tail_step) {
            const auto w = identification_witness(IncreasingSeq::make(seq, tail_step), i, j, k);
            return py::make_tuple(w.m, w.r, w.path().to_string());
        },
        py::arg("seq"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("tail_step") = py::none());
}
