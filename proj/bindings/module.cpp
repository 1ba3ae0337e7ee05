#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spfsym/boolean.hpp"
#include "spfsym/classify.hpp"
#include "spfsym/cli.hpp"
#include "spfsym/orbit_extension.hpp"
#include "spfsym/profile.hpp"
#include "spfsym/regularity.hpp"
#include "spfsym/spf.hpp"

namespace py = pybind11;
using namespace spfsym;

namespace {

VotingPair make_pair(int h, int n) { return checked_pair(h, n); }

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["kind"] = to_string(v.kind);
  d["decision"] = v.decision;
  d["method"] = v.method;
  d["witness"] = v.witness ? py::object(py::cast(*v.witness)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_spfsym, m) {
  m.doc() = "orbits, regularity and symmetry groups of social preference functions";

  py::register_exception<BoundExceeded>(m, "BoundExceeded");
  py::register_exception<VerificationError>(m, "VerificationFailure");

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_static("from_cycles", &parse_cycles, py::arg("text"), py::arg("degree"))
      .def_static("from_order", &parse_order, py::arg("text"), py::arg("n"))
      .def_static("unrank", &Perm::unrank, py::arg("rank"), py::arg("degree"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", &Perm::images)
      .def("rank", &Perm::rank)
      .def("is_identity", &Perm::is_identity)
      .def("__call__", &Perm::operator())
      .def("__mul__", [](const Perm& a, const Perm& b) { return compose(a, b); })
      .def("inverse", [](const Perm& a) { return inverse(a); })
      .def("conjugated_by", [](const Perm& a, const Perm& s) { return conjugate(a, s); })
      .def("order", [](const Perm& a) { return order(a); })
      .def("cycle_type",
           [](const Perm& a) { return cycle_type(a).parts; })
      .def("cycles", &format_cycles)
      .def("as_order", &format_order)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__", [](const Perm& a) { return a.rank(); })
      .def("__repr__", [](const Perm& a) {
        return "Perm(" + format_cycles(a) + ", degree=" + std::to_string(a.degree()) + ")";
      });

  py::class_<GElem>(m, "GElem")
      .def(py::init<Perm, Perm>(), py::arg("phi"), py::arg("psi"))
      .def_readonly("phi", &GElem::phi)
      .def_readonly("psi", &GElem::psi)
      .def("__repr__", [](const GElem& g) { return format_gelem(g); });

  py::class_<PGroup>(m, "PGroup")
      .def_static(
          "closure",
          [](int h, int n, const std::vector<GElem>& gens, std::uint64_t max_order) {
            return PGroup::closure(make_pair(h, n), gens, max_order);
          },
          py::arg("h"), py::arg("n"), py::arg("generators"),
          py::arg("max_order") = kDefaultMaxGroupOrder)
      .def_static(
          "parse",
          [](int h, int n, const std::string& literal) {
            return parse_group(literal, make_pair(h, n));
          },
          py::arg("h"), py::arg("n"), py::arg("literal"))
      .def_property_readonly("order", &PGroup::order)
      .def_property_readonly("pair",
                             [](const PGroup& u) {
                               return py::make_tuple(u.pair().h, u.pair().n);
                             })
      .def("elements", &PGroup::elements)
      .def("generators", &PGroup::generators)
      .def("contains",
           [](const PGroup& u, const GElem& g) { return u.contains(g); })
      .def("contains_group",
           [](const PGroup& u, const PGroup& v) { return u.contains(v); })
      .def("literal", &format_group)
      .def("__eq__", [](const PGroup& a, const PGroup& b) { return a == b; })
      .def("__len__", &PGroup::order)
      .def("__repr__", [](const PGroup& u) {
        return "PGroup(<" + format_group(u) + ">, order=" + std::to_string(u.order()) + ")";
      });

  m.def("join", [](const PGroup& a, const PGroup& b) { return join(a, b); });
  m.def("conjugate_group", &conjugate_group);
  m.def("full_group", [](int h, int n) { return full_group(make_pair(h, n)); });
  m.def("trivial_group", [](int h, int n) { return trivial_group(make_pair(h, n)); });
  m.def("alternating_left", [](int h, int n) { return alternating_left(make_pair(h, n)); });
  m.def("klein_left", [](int n) { return klein_left(make_pair(4, n)); });
  m.def("diagonal_group", [](int h, int n) { return diagonal_group(make_pair(h, n)); });
  m.def("all_subgroups", [](int h, int n) { return all_subgroups(make_pair(h, n)); });
  m.def("minimal_overgroups", [](const PGroup& u) { return minimal_overgroups(u); });

  py::class_<Profile>(m, "Profile")
      .def_static(
          "parse",
          [](const std::string& text, int h, int n) {
            return parse_profile(text, make_pair(h, n));
          },
          py::arg("text"), py::arg("h"), py::arg("n"))
      .def_static(
          "unindex",
          [](std::uint64_t idx, int h, int n) {
            return profile_unindex(idx, make_pair(h, n));
          },
          py::arg("index"), py::arg("h"), py::arg("n"))
      .def("index", &profile_index)
      .def("apply", [](const Profile& p, const GElem& g) { return apply(p, g); })
      .def("is_constant", &is_constant)
      .def("__str__", &format_profile)
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__repr__", [](const Profile& p) { return "Profile(" + format_profile(p) + ")"; });

  m.def("orbit_count", [](const PGroup& u) { return orbit_count(u); });
  m.def("orbits", [](const PGroup& u) {
    const OrbitPartition& part = all_orbits(u);
    std::vector<std::vector<std::uint64_t>> out(part.orbit_count);
    for (std::uint64_t i = 0; i < part.orbit_of.size(); ++i)
      out[part.orbit_of[i]].push_back(i);
    return out;
  });
  m.def("representatives", [](const PGroup& u) { return representatives(u); });
  m.def("stabilizer", &stabilizer);

  m.def("is_regular", [](const PGroup& u, bool verify) { return is_regular(u, verify); },
        py::arg("group"), py::arg("verify") = false);
  m.def("is_regular_by_definition",
        [](const PGroup& u) { return is_regular_by_definition(u); });
  m.def("is_regular_by_criterion", &is_regular_by_criterion);
  m.def("is_regular_maximal", [](const PGroup& u) { return is_regular_maximal(u); });

  py::class_<Spf>(m, "Spf")
      .def_static(
          "from_json", [](const std::string& text) { return spf_from_json(text); },
          py::arg("text"))
      .def_static(
          "from_table",
          [](int h, int n, const std::vector<std::uint16_t>& table) {
            return Spf(make_pair(h, n), table);
          },
          py::arg("h"), py::arg("n"), py::arg("table"))
      .def_property_readonly("pair",
                             [](const Spf& f) {
                               return py::make_tuple(f.pair().h, f.pair().n);
                             })
      .def("table", &Spf::table)
      .def("evaluate", &Spf::evaluate)
      .def("to_json", &spf_to_json)
      .def("__eq__", [](const Spf& a, const Spf& b) { return a == b; });

  m.def("from_assignment",
        [](const PGroup& u, const std::vector<std::uint16_t>& values, bool verify) {
          return from_assignment(OrbitAssignment{u, values}, verify);
        },
        py::arg("group"), py::arg("values"), py::arg("verify") = false);
  m.def("is_symmetric_under", &is_symmetric_under);
  m.def("symmetry_group", &symmetry_group);
  m.def("anonymity_group", &anonymity_group);
  m.def("neutrality_group", &neutrality_group);
  m.def("conjugate_spf", &conjugate_spf);
  m.def("dictatorship", [](int h, int n, int i) { return dictatorship(make_pair(h, n), i); });
  m.def("constant_spf",
        [](int h, int n, const Perm& v) { return constant_spf(make_pair(h, n), v); });
  m.def("majority_spf", [](int h) { return majority_spf(make_pair(h, 2)); });
  m.def("symmetric_spf_count",
        [](const PGroup& u) { return symmetric_spf_count(u).get_str(); },
        "returns n!^R(U) for regular U (as a decimal string), else \"0\"");

  m.def("orbit_leq", [](const PGroup& u, const PGroup& v) { return orbit_leq(u, v); });
  m.def("orbit_equivalent",
        [](const PGroup& u, const PGroup& v) { return orbit_equivalent(u, v); });
  m.def("orbit_preserver", [](const PGroup& u) { return orbit_preserver(u); });
  m.def("orbit_extension", [](const PGroup& u) { return orbit_extension(u); });
  m.def("is_orbit_extension_fixed",
        [](const PGroup& u) { return is_orbit_extension_fixed(u); });

  m.def("is_neutrality_group",
        [](const PGroup& u, std::uint64_t seed) {
          return verdict_dict(is_neutrality_group(u, ClassifyOptions{seed}));
        },
        py::arg("group"), py::arg("seed") = 0);
  m.def("is_anonymity_group",
        [](const PGroup& u, std::uint64_t seed) {
          return verdict_dict(is_anonymity_group(u, ClassifyOptions{seed}));
        },
        py::arg("group"), py::arg("seed") = 0);
  m.def("is_symmetry_group",
        [](const PGroup& u, std::uint64_t seed) {
          return verdict_dict(is_symmetry_group(u, ClassifyOptions{seed}));
        },
        py::arg("group"), py::arg("seed") = 0);
  m.def("trivial_group_witness",
        [](int h, int n) { return trivial_group_witness(make_pair(h, n)); });

  py::class_<BooleanFunction>(m, "BooleanFunction")
      .def(py::init([](int arity, int k, std::vector<std::uint16_t> table) {
             return checked_boolean(arity, k, std::move(table));
           }),
           py::arg("arity"), py::arg("k"), py::arg("table"))
      .def_readonly("arity", &BooleanFunction::arity)
      .def_readonly("k", &BooleanFunction::value_count)
      .def_readonly("table", &BooleanFunction::table)
      .def("to_json", &boolean_to_json)
      .def("__eq__",
           [](const BooleanFunction& a, const BooleanFunction& b) { return a == b; });

  m.def("invariance_group", &invariance_group);
  m.def("spf_from_boolean",
        [](const BooleanFunction& f, int n) { return spf_from_boolean(f, n); });
  m.def("boolean_from_spf", &boolean_from_spf);
  m.def("is_two_representable", [](const std::vector<Perm>& v, int h) {
    const RepresentabilityVerdict r = is_two_representable(v, h);
    py::dict d;
    d["decision"] = r.decision;
    d["method"] = r.method;
    d["witness"] = r.witness ? py::object(py::cast(*r.witness)) : py::object(py::none());
    return d;
  });
  m.def("check_O_necessary",
        [](const std::vector<Perm>& v, int h) { return check_O_necessary(v, h); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
