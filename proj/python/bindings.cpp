#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamekernel/classgroups.hpp"
#include "tamekernel/induction.hpp"
#include "tamekernel/k2.hpp"
#include "tamekernel/lvalues.hpp"
#include "tamekernel/scanner.hpp"
#include "tamekernel/serialize.hpp"

namespace py = pybind11;
using namespace tamekernel;

namespace {

py::object to_int(const BigInt& v) { return py::int_(py::str(v.get_str())); }

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(q.num()), to_int(q.den()));
}

// report objects share the CLI's JSON schema
py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Discriminant discriminant(std::int64_t D, const std::vector<std::int64_t>& factors) {
    return factors.empty() ? make_discriminant(D) : make_discriminant(D, factors);
}

py::dict tag_dict(const FamilyTag& t) {
    py::dict d;
    d["kind"] = std::string(family_kind_name(t.kind));
    d["n"] = t.n;
    d["labeling"] = t.labeling;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tamekernel, m) {
    m.doc() = "L-values at s = -1, class group ranks and tame kernels of real quadratic fields";

    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            py::set_error(domain_error, e.what());
        }
    });

    m.def("kronecker", &kronecker, py::arg("m"), py::arg("n"));
    m.def("is_fundamental", &is_fundamental, py::arg("disc"));

    m.def("d_factors", [](std::int64_t D) { return make_discriminant(D).d_factors; }, py::arg("D"),
          "Canonical d-factorization, empty when none exists.");

    m.def("l_value", [](std::int64_t D) { return to_fraction(l_at_minus1(fundamental_discriminant(D)).value); },
          py::arg("D"), "L(chi_D, -1) as a Fraction.");

    m.def(
        "l_imprimitive",
        [](std::int64_t d, std::int64_t D, const std::string& route) {
            Discriminant disc = make_discriminant(D);
            if (route == "direct") return to_fraction(l_imprimitive_direct(d, disc).value);
            if (route == "euler") return to_fraction(l_imprimitive_euler(d, disc).value);
            throw DomainError("route must be 'direct' or 'euler'");
        },
        py::arg("d"), py::arg("D"), py::arg("route") = "direct");

    m.def(
        "verify_identity",
        [](std::int64_t D, const std::vector<std::int64_t>& factors) {
            IdentityReport r = verify_identity(discriminant(D, factors));
            py::dict out;
            out["lhs"] = to_fraction(r.lhs);
            py::list terms;
            for (const Rational& t : r.rhs_terms) terms.append(to_fraction(t));
            out["rhs_terms"] = terms;
            out["rhs"] = to_fraction(r.rhs());
            out["equal"] = r.equal;
            return out;
        },
        py::arg("D"), py::arg("factors") = std::vector<std::int64_t>{});

    m.def("classify", [](std::int64_t D) { return tag_dict(classify(fundamental_discriminant(D))); }, py::arg("D"));

    m.def("redei_matrix", [](std::int64_t disc) { return from_json(to_json(redei_matrix(disc))); }, py::arg("disc"));
    m.def("narrow_ranks", [](std::int64_t disc) { return from_json(to_json(narrow_ranks(disc))); }, py::arg("disc"));
    m.def("form_class_group", &form_class_group, py::arg("disc"),
          "Invariant factors of the form class group of a negative discriminant, ascending.");
    m.def("r2_k2", [](std::int64_t D) { return r2_k2(fundamental_discriminant(D)); }, py::arg("D"));

    m.def("k2_order", [](std::int64_t D) { return to_int(k2_order(fundamental_discriminant(D))); }, py::arg("D"));
    m.def(
        "k2_structure",
        [](std::int64_t D) {
            K2Report r = resolve_structure(fundamental_discriminant(D));
            py::dict out;
            out["D"] = r.D;
            out["l_value"] = to_fraction(r.l_value);
            out["zeta_minus1"] = to_fraction(r.zeta_minus1);
            out["w2"] = r.w2;
            out["k2_order"] = to_int(r.k2_order);
            out["v2_order"] = r.v2_order;
            out["r2"] = r.r2;
            out["r4_bounds"] = py::make_tuple(r.r4_bounds.first, r.r4_bounds.second);
            if (r.structure) {
                py::list s;
                for (const BigInt& c : *r.structure) s.append(to_int(c));
                out["structure"] = s;
            } else {
                out["structure"] = py::none();
            }
            out["delta"] = r.delta ? py::object(py::int_(*r.delta)) : py::object(py::none());
            out["family"] = tag_dict(r.family);
            return out;
        },
        py::arg("D"));

    m.def(
        "scan",
        [](const std::string& family, std::int64_t max_D) {
            FamilySelector selector = parse_family(family);
            std::vector<TableRow> rows;
            {
                py::gil_scoped_release release;
                rows = build_table(selector, max_D);
            }
            py::list out;
            for (const TableRow& row : rows) {
                py::dict d;
                d["D"] = row.D;
                d["D_over_4"] = row.D_over_4;
                d["primes"] = row.primes;
                d["neg_L"] = to_fraction(row.neg_L);
                d["delta"] = row.delta ? py::object(py::int_(*row.delta)) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("max_D"));
}
