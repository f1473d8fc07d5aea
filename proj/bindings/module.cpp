// Python bindings for the convextest core. Exact rationals cross the
// boundary as strings ("p/q" or decimal); indices and seeds as plain ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "convextest/convexity.hpp"
#include "convextest/generators.hpp"
#include "convextest/io.hpp"
#include "convextest/oracles.hpp"
#include "convextest/params.hpp"
#include "convextest/predicates.hpp"
#include "convextest/tester.hpp"

namespace py = pybind11;
using namespace convextest;

namespace {

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) {
    // Route through the string form so arbitrary-precision ints survive.
    return parse_rational(py::str(h).cast<std::string>());
  }
  if (py::isinstance<py::float_>(h)) return Rational(h.cast<double>());
  throw py::type_error("expected str, int, or float for an exact coordinate");
}

PointSet make_point_set(const std::vector<std::vector<py::object>>& rows) {
  if (rows.empty()) throw ConstraintError("n >= 1", "no points given");
  const int d = static_cast<int>(rows.front().size());
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const auto& row : rows) {
    Point p;
    p.x.reserve(row.size());
    for (const auto& c : row) p.x.push_back(to_rational(c));
    pts.push_back(std::move(p));
  }
  return PointSet(d, std::move(pts));
}

std::vector<std::vector<std::string>> coords_of(const PointSet& ps) {
  std::vector<std::vector<std::string>> out(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    out[i].reserve(ps.dim());
    for (int j = 0; j < ps.dim(); ++j)
      out[i].push_back(rational_to_string(ps.coord(i, j)));
  }
  return out;
}

std::vector<std::vector<double>> coords_float_of(const PointSet& ps) {
  std::vector<std::vector<double>> out(ps.size());
  for (Index i = 0; i < ps.size(); ++i) {
    out[i].reserve(ps.dim());
    for (int j = 0; j < ps.dim(); ++j) out[i].push_back(ps.coord_double(i, j));
  }
  return out;
}

py::dict witness_to_dict(const NegativeWitness& w) {
  py::dict out;
  out["ids"] = w.ids;
  out["interior_id"] = w.interior_id;
  py::dict coeffs;
  for (const auto& [id, c] : w.coefficients)
    coeffs[py::int_(id)] = rational_to_string(c);
  out["coefficients"] = coeffs;
  return out;
}

py::dict verdict_to_dict(const Verdict& v) {
  py::dict out;
  out["accept"] = v.accept;
  out["witness"] = v.witness ? py::object(witness_to_dict(*v.witness))
                             : py::object(py::none());
  out["positive_certificate"] = v.positive_certificate;
  py::list trials;
  for (const TrialRecord& t : v.trials) {
    py::dict rec;
    rec["index"] = t.index;
    rec["seed"] = t.seed.value;
    rec["sample"] = t.sample.indices;
    rec["sample_convex"] = t.sample_convex;
    trials.append(rec);
  }
  out["trials"] = trials;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Randomized property testing of convex position in R^d";

  py::register_exception<ConstraintError>(m, "ConstraintError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<PointSet>(m, "PointSet")
      .def(py::init(&make_point_set), py::arg("rows"),
           "rows: list of coordinate rows; each coordinate is a str "
           "('p/q' or decimal), int, or float (converted exactly)")
      .def_property_readonly("dim", &PointSet::dim)
      .def("__len__", &PointSet::size)
      .def("coords", &coords_of, "exact coordinates as strings")
      .def("coords_float", &coords_float_of,
           "coordinates rounded to nearest double")
      .def(
          "subset",
          [](const PointSet& ps, const std::vector<Index>& ids) {
            return ps.subset(ids);
          },
          py::arg("ids"))
      .def("__repr__", [](const PointSet& ps) {
        return "PointSet(d=" + std::to_string(ps.dim()) +
               ", n=" + std::to_string(ps.size()) + ")";
      });

  m.def("read_point_set", &read_point_set_file, py::arg("path"));
  m.def(
      "write_point_set",
      [](const std::string& path, const PointSet& ps, const std::string& c) {
        write_point_set_file(path, ps, c);
      },
      py::arg("path"), py::arg("points"), py::arg("comment") = "");

  m.def(
      "orientation",
      [](const PointSet& ps, const std::vector<Index>& ids) {
        return orientation(ps, ids);
      },
      py::arg("points"), py::arg("ids"),
      "sign of the (d+1)-point simplex orientation determinant");

  m.def(
      "derive_far_params",
      [](std::uint64_t n, int d, const py::handle& eps, int reps) {
        const FarParams p = derive_far_params(n, d, to_rational(eps), reps);
        py::dict out;
        out["n"] = p.n;
        out["d"] = p.d;
        out["epsilon"] = rational_to_string(p.epsilon);
        out["k"] = p.k;
        out["ell"] = p.ell;
        out["s"] = p.s;
        out["s0"] = static_cast<double>(p.s0);
        out["repetitions"] = p.repetitions;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("epsilon"),
      py::arg("repetitions") = 22);

  m.def(
      "derive_close_params",
      [](std::uint64_t n, int d, const py::handle& eps, const py::handle& dl) {
        const CloseParams p = derive_close_params(n, d, to_rational(eps),
                                                  to_rational(dl));
        py::dict out;
        out["n"] = p.n;
        out["d"] = p.d;
        out["epsilon"] = rational_to_string(p.epsilon);
        out["delta"] = rational_to_string(p.delta);
        out["s"] = p.s;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("epsilon"),
      py::arg("delta") = py::str("1/10"));

  m.def(
      "convex_position_test",
      [](const PointSet& ps) {
        const ConvexityResult r = convex_position_test(ps);
        py::dict out;
        out["in_convex_position"] = r.in_convex_position;
        out["witness"] = r.witness ? py::object(witness_to_dict(*r.witness))
                                   : py::object(py::none());
        return out;
      },
      py::arg("points"), "exact decision with a (d+2)-point witness on failure");

  m.def(
      "convex_minus",
      [](const PointSet& ps, const py::handle& eps, std::uint64_t seed,
         int reps) {
        return verdict_to_dict(convex_minus(ps, to_rational(eps), Seed{seed},
                                            reps));
      },
      py::arg("points"), py::arg("epsilon"), py::arg("seed") = 0,
      py::arg("repetitions") = 22,
      "far-rejection tester: rejects epsilon-far sets w.p. >= 2/3");

  m.def(
      "convex_plus",
      [](const PointSet& ps, const py::handle& eps, std::uint64_t seed,
         const py::handle& delta) {
        return verdict_to_dict(convex_plus(ps, to_rational(eps), Seed{seed},
                                           to_rational(delta)));
      },
      py::arg("points"), py::arg("epsilon"), py::arg("seed") = 0,
      py::arg("delta") = py::str("1/10"),
      "close-acceptance: certified convex subset w.p. >= 2/3 when close");

  m.def(
      "gen_convex",
      [](std::uint64_t n, int d, std::uint64_t seed) {
        return gen_convex(n, d, Seed{seed}).points;
      },
      py::arg("n"), py::arg("d") = 2, py::arg("seed") = 0);
  m.def(
      "gen_sawtooth",
      [](std::uint64_t n, std::uint64_t seed) {
        return gen_sawtooth(n, Seed{seed}).points;
      },
      py::arg("n"), py::arg("seed") = 0);
  m.def(
      "gen_close",
      [](std::uint64_t n, int d, const py::handle& eps, std::uint64_t seed) {
        const GeneratedInstance g = gen_close(n, d, to_rational(eps),
                                              Seed{seed});
        py::dict out;
        out["points"] = g.points;
        out["convex_part"] = g.convex_part;
        out["displaced"] = g.displaced;
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("epsilon"), py::arg("seed") = 0);
  m.def("gen_triangle_centroid",
        [] { return gen_triangle_centroid().points; });

  m.def(
      "min_removal_to_convex",
      [](const PointSet& ps, Index budget) {
        const FarnessCertificate c = min_removal_to_convex(ps, budget);
        return py::make_tuple(c.min_removal, c.removed_ids);
      },
      py::arg("points"), py::arg("budget") = 24,
      "exhaustive (min_removal, removed_ids); n <= budget required");

  m.def(
      "max_convex_subset_2d",
      [](const PointSet& ps) {
        const MaxConvexSubset b = max_convex_subset_2d(ps);
        return py::make_tuple(b.size, b.ids);
      },
      py::arg("points"));

  m.def("brute_force_convex_position", &brute_force_convex_position,
        py::arg("points"),
        "definition-chasing reference decision (exponential)");

  m.def("minimal_far_sample_size", &minimal_far_sample_size, py::arg("n"),
        py::arg("k"), py::arg("ell"));

  m.def(
      "split_seed",
      [](std::uint64_t master, std::uint64_t trial) {
        return split_seed(Seed{master}, trial).value;
      },
      py::arg("master"), py::arg("trial"));

  m.def(
      "lemma3_report",
      [](std::uint64_t n, std::uint64_t k, std::uint64_t ell, std::uint64_t s,
         std::uint64_t trials, std::uint64_t seed) {
        if (s == 0) s = minimal_far_sample_size(n, k, ell);
        const LemmaScenario sc = make_lemma_scenario(n, k, ell, s);
        const BoundFactors f = lemma3_factors(sc);
        const MonteCarloEstimate est = lemma3_monte_carlo(sc, trials,
                                                          Seed{seed});
        py::dict out;
        out["n"] = n;
        out["k"] = k;
        out["ell"] = ell;
        out["s"] = s;
        out["factor1"] = rational_to_string(f.factor1);
        out["factor2"] = rational_to_string(f.factor2);
        out["bound"] = rational_to_double(f.factor1 * f.factor2);
        out["trials"] = est.trials;
        out["hits"] = est.hits;
        out["empirical"] = est.fraction;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("ell"), py::arg("s") = 0,
      py::arg("trials") = 10000, py::arg("seed") = 0,
      "exact lower-bound factors plus a Monte Carlo estimate");
}
