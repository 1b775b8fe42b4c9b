#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "strata/census.hpp"
#include "strata/classify.hpp"
#include "strata/exactmat.hpp"
#include "strata/json_io.hpp"
#include "strata/poset.hpp"
#include "strata/realize.hpp"
#include "strata/regioncheck.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

PyObject* error_type = nullptr;

py::object fraction(const mpq_class& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.get_str());
}

py::object scalar_to_py(const Scalar& s) { return s.is_exact() ? fraction(s.rational()) : py::float_(s.real()); }

py::int_ big_int(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpq_class rational_from_py(const py::handle& obj) { return Scalar::parse_exact(py::str(obj).cast<std::string>()).rational(); }

SymmetricMatrix make_exact(const std::vector<std::vector<py::object>>& rows) {
  std::vector<std::vector<mpq_class>> q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& v : rows[i]) q[i].push_back(rational_from_py(v));
  }
  return SymmetricMatrix::from_rows(q);
}

std::vector<int> one_based(const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i : idx) out.push_back(i + 1);
  return out;
}

SignedMatroid make_signed(int n, const std::vector<std::vector<int>>& parts, const std::string& signs) {
  io::json j{{"n", n}, {"parts", parts}};
  if (!signs.empty()) j["signs"] = signs;
  return io::signed_matroid_from_json(j);
}

std::string sign_text(const SignedMatroid& sm) {
  std::string out;
  for (int i : sm.matroid().nonloops()) out += sm.sigma()[i] > 0 ? '+' : '-';
  return out;
}

std::vector<std::vector<int>> parts_one_based(const SignedMatroid& sm) {
  std::vector<std::vector<int>> out;
  for (const auto& part : sm.matroid().parts()) out.push_back(one_based(part));
  return out;
}

py::dict config_dict(const MomentumConfig& c) {
  py::dict d;
  d["n"] = c.n;
  d["r"] = c.r;
  d["seed"] = c.seed;
  d["lambdas"] = c.lambdas;
  d["points"] = c.points;
  d["gram"] = gram(c).to_dense();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stratifications of massless kinematic regions";

  static py::exception<Error> exc(m, "StrataError", PyExc_ValueError);
  error_type = exc.ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(e.what()), std::string(to_string(e.code())), one_based(e.witness()));
      PyErr_SetObject(error_type, args.ptr());
    }
  });

  py::class_<SymmetricMatrix>(m, "Matrix")
      .def_static("exact", &make_exact, py::arg("rows"), "Rows of ints, Fractions or 'p/q' strings.")
      .def_static("float", [](const Eigen::MatrixXd& rows) { return SymmetricMatrix::from_dense(rows); },
                  py::arg("rows"))
      .def_property_readonly("n", &SymmetricMatrix::size)
      .def_property_readonly("exact_mode", &SymmetricMatrix::is_exact)
      .def("__getitem__", [](const SymmetricMatrix& s, std::pair<int, int> ij) { return scalar_to_py(s(ij.first, ij.second)); })
      .def("to_numpy", &SymmetricMatrix::to_dense)
      .def("__eq__", [](const SymmetricMatrix& a, const SymmetricMatrix& b) { return a == b; })
      .def("__repr__", [](const SymmetricMatrix& s) { return "Matrix(" + io::to_json(s).dump() + ")"; });

  m.def("principal_minor", [](const SymmetricMatrix& s, std::vector<int> subset) {
    for (int& i : subset) --i;
    return scalar_to_py(principal_minor(s, subset));
  }, py::arg("matrix"), py::arg("subset"), "det of the principal submatrix on 1-based indices.");
  m.def("minor_sign_test", &minor_sign_test, py::arg("matrix"));
  m.def("eigen_signature", [](const SymmetricMatrix& s) {
    const Signature sig = eigen_signature(s);
    return py::make_tuple(sig.n_pos, sig.n_neg);
  }, py::arg("matrix"));
  m.def("is_mandelstam", [](const SymmetricMatrix& s) {
    const MandelstamVerdict v = is_mandelstam(s);
    py::dict d;
    d["mandelstam"] = v.mandelstam;
    d["rank"] = v.rank;
    d["witness"] = v.violation ? py::cast(one_based(v.violation->subset)) : py::none();
    return d;
  }, py::arg("matrix"));

  py::class_<SignedMatroid>(m, "SignedMatroid")
      .def(py::init(&make_signed), py::arg("n"), py::arg("parts"), py::arg("signs") = "",
           "Parts use 1-based elements; signs has one '+'/'-' per non-loop in increasing order.")
      .def_property_readonly("n", &SignedMatroid::ground_size)
      .def_property_readonly("parts", &parts_one_based)
      .def_property_readonly("signs", &sign_text)
      .def_property_readonly("loops", [](const SignedMatroid& sm) { return one_based(sm.matroid().loops()); })
      .def("__le__", [](const SignedMatroid& a, const SignedMatroid& b) { return signed_leq(a, b); })
      .def("__eq__", [](const SignedMatroid& a, const SignedMatroid& b) { return a == b; })
      .def("__hash__", [](const SignedMatroid& sm) { return py::hash(py::str(io::to_json(sm).dump())); })
      .def("__repr__", [](const SignedMatroid& sm) { return "SignedMatroid(" + io::to_json(sm).dump() + ")"; });

  py::class_<StratumLabel>(m, "StratumLabel")
      .def_readonly("signed_matroid", &StratumLabel::signed_matroid)
      .def_readonly("rank", &StratumLabel::rank)
      .def_property_readonly("kind", [](const StratumLabel& l) { return std::string(to_string(l.kind)); })
      .def_property_readonly("dimension", &StratumLabel::dimension)
      .def("__eq__", [](const StratumLabel& a, const StratumLabel& b) { return a == b; })
      .def("__repr__", [](const StratumLabel& l) { return "StratumLabel(" + io::to_json(l).dump() + ")"; });

  m.def("classify", [](const SymmetricMatrix& s) {
    const Classification c = classify_massless(s);
    return py::make_tuple(c.label, c.margin);
  }, py::arg("matrix"), "Returns (label, margin).");
  m.def("check_rank_one_blocks", [](const SymmetricMatrix& s, const SignedMatroid& sm) {
    return check_rank_one_blocks(s, sm.matroid());
  });

  m.def("census", [](int n, const std::string& region, std::optional<int> r, std::optional<int> d, bool brute) {
    const CensusQuery q{n, region_from_string(region), r, d};
    py::list out;
    for (const auto& row : brute ? brute_force_table(q) : build_table(q)) {
      out.append(py::make_tuple(row.d, row.r, big_int(row.count_fixed), big_int(row.count_all)));
    }
    return out;
  }, py::arg("n"), py::arg("region") = "massless", py::arg("r") = py::none(), py::arg("d") = py::none(),
        py::arg("brute_force") = false, "Rows (d, r, fixed, all).");
  m.def("count_massless", [](int n, int r, int d, bool all) { return big_int(count_massless(n, r, d, all)); },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("all_sigma") = true);
  m.def("count_mmc", [](int n, int r, int d) { return big_int(count_mmc(n, r, d)); });
  m.def("mmc_top_count", [](int n) { return big_int(mmc_top_count(n)); });
  m.def("components_r3", [](int parts) { return big_int(components_r3(parts)); });
  m.def("nonempty", [](const SignedMatroid& sm, int r, bool mmc) {
    return mmc ? mmc_nonempty(sm, r) : nonempty_massless(sm.matroid(), r);
  }, py::arg("signed_matroid"), py::arg("r"), py::arg("mmc") = false);

  m.def("sample", [](const SignedMatroid& sm, int r, bool mmc, std::uint64_t seed) {
    return config_dict(mmc ? sample_mmc(sm, r, seed) : sample_stratum(sm, r, seed));
  }, py::arg("signed_matroid"), py::arg("r"), py::arg("mmc") = false, py::arg("seed") = kDefaultSeed);
  m.def("gram", [](int r, const std::vector<double>& lambdas, const std::vector<std::vector<double>>& points) {
    MomentumConfig c;
    c.n = static_cast<int>(lambdas.size());
    c.r = r;
    c.lambdas = lambdas;
    c.points = points;
    return gram(c);
  }, py::arg("r"), py::arg("lambdas"), py::arg("points"));
  m.def("estimate_dimension", [](const SignedMatroid& sm, int r, bool mmc, std::uint64_t seed) {
    const DimensionEstimate e = estimate_dimension(sm, r, mmc, seed);
    return py::make_tuple(e.rank, e.expected);
  }, py::arg("signed_matroid"), py::arg("r"), py::arg("mmc") = false, py::arg("seed") = kDefaultSeed,
        "Returns (estimated, formula).");
  m.def("cyclic_order", [](const SymmetricMatrix& s) { return cyclic_order(s); }, py::arg("matrix"));

  m.def("mmc4_classify", [](py::object x, py::object y) {
    const Mmc4Point p = mmc4_classify(rational_from_py(x), rational_from_py(y));
    py::dict d;
    d["status"] = p.status == Mmc4Point::Status::Inside ? "inside"
                  : p.status == Mmc4Point::Status::Outside ? "outside" : "origin";
    d["minor"] = fraction(p.minor);
    d["label"] = p.label ? py::cast(*p.label) : py::none();
    return d;
  });
  m.def("mmc5_matrix", [](const std::vector<py::object>& coords) {
    Mmc5Point p;
    for (int k = 0; k < 5; ++k) p[k] = rational_from_py(coords.at(k));
    return mmc5_matrix(p);
  }, py::arg("coords"));
  m.def("igusa_quartic", [](const std::vector<py::object>& coords) {
    Mmc5Point p;
    for (int k = 0; k < 5; ++k) p[k] = rational_from_py(coords.at(k));
    return fraction(igusa_quartic(p));
  }, py::arg("coords"));
  m.def("arrangement_census", []() {
    const ArrangementCensus c = arrangement_census();
    py::list rows;
    for (const auto& r : c.consistent) {
      std::string sigma, signs;
      for (int s : r.sigma) sigma += s > 0 ? '+' : '-';
      for (int s : r.entry_signs) signs += s > 0 ? '+' : '-';
      rows.append(py::make_tuple(sigma, signs));
    }
    return py::make_tuple(c.region_count, rows);
  }, "Returns (region_count, [(sigma, entry signs)]).");

  m.def("export_poset", [](int n, int r, const std::string& region, std::optional<SignedMatroid> below) {
    const Poset p = export_poset(PosetQuery{n, r, region_from_string(region), below});
    return py::make_tuple(p.vertices, p.covers);
  }, py::arg("n"), py::arg("r"), py::arg("region") = "massless", py::arg("below") = py::none());
}
