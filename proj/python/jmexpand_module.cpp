#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "jmexpand/dyck.hpp"
#include "jmexpand/errors.hpp"
#include "jmexpand/group_algebra.hpp"
#include "jmexpand/hecke.hpp"
#include "jmexpand/jack.hpp"
#include "jmexpand/partial_permutation.hpp"
#include "jmexpand/partition.hpp"
#include "jmexpand/recurrence.hpp"
#include "jmexpand/series.hpp"

namespace py = pybind11;

namespace {

using jmexpand::Int;
using jmexpand::Partition;
using jmexpand::Rat;

jmexpand::CoefficientEngine& engine() {
  static jmexpand::CoefficientEngine instance;
  return instance;
}

Partition to_partition(const std::vector<int>& parts) {
  return Partition::from_unsorted(parts);
}

py::tuple to_py(const Partition& p) {
  py::tuple out(p.length());
  for (int i = 0; i < p.length(); ++i) out[i] = p.part(i);
  return out;
}

py::object to_py(const Int& v) {
  return py::module_::import("builtins").attr("int")(
      py::str(jmexpand::to_decimal(v)));
}

py::object to_py(const Rat& v) {
  return py::module_::import("fractions").attr("Fraction")(
      py::str(jmexpand::to_decimal(v)));
}

Rat rational_from(const py::object& value) {
  return jmexpand::parse_rational(py::cast<std::string>(py::str(value)));
}

py::list series_to_py(const jmexpand::TruncatedSeries& series) {
  py::list out;
  for (int i = 0; i <= series.order(); ++i) out.append(to_py(series[i]));
  return out;
}

py::dict rational_table_to_py(
    const std::map<Partition, Rat, jmexpand::PartitionOutputOrder>& table) {
  py::dict out;
  for (const auto& [p, value] : table) out[to_py(p)] = to_py(value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_jmexpand, m) {
  m.doc() =
      "exact class expansions of symmetric functions in Jucys-Murphy "
      "elements";

  py::register_exception<jmexpand::ResourceGuardError>(m, "ResourceGuardError",
                                                       PyExc_RuntimeError);
  py::register_exception<jmexpand::NotCentralError>(m, "NotCentralError",
                                                    PyExc_RuntimeError);
  py::register_exception<jmexpand::NotBiInvariantError>(
      m, "NotBiInvariantError", PyExc_RuntimeError);
  py::register_exception<jmexpand::DegenerateGramError>(
      m, "DegenerateGramError", PyExc_ArithmeticError);
  py::register_exception<jmexpand::SingularThetaError>(m, "SingularThetaError",
                                                       PyExc_ArithmeticError);
  py::register_exception<jmexpand::NoSuchPartError>(m, "NoSuchPartError",
                                                    PyExc_ValueError);
  py::register_exception<jmexpand::InvalidInputError>(m, "InvalidInputError",
                                                      PyExc_ValueError);
  py::register_exception<jmexpand::IndexOutOfRangeError>(
      m, "IndexOutOfRangeError", PyExc_IndexError);

  m.def(
      "enumerate_partitions",
      [](int n) {
        py::list out;
        for (const Partition& p : jmexpand::partitions_of(n)) {
          out.append(to_py(p));
        }
        return out;
      },
      py::arg("n"), "partitions of n in decreasing lexicographic order");

  // coefficient engine
  m.def(
      "a_coeff",
      [](int k, const std::vector<int>& rho) {
        return to_py(engine().a(k, to_partition(rho)));
      },
      py::arg("k"), py::arg("rho"));
  m.def(
      "a_power_coeff",
      [](int k, const std::vector<int>& rho) {
        return to_py(engine().a_power(k, to_partition(rho)));
      },
      py::arg("k"), py::arg("rho"));
  m.def(
      "c_coeff",
      [](int k, const std::vector<int>& lam) {
        return to_py(engine().c(k, to_partition(lam)));
      },
      py::arg("k"), py::arg("lam"));
  m.def(
      "b_coeff",
      [](int k, const std::vector<int>& mu) {
        return to_py(engine().b(k, to_partition(mu)));
      },
      py::arg("k"), py::arg("mu"));
  m.def(
      "b_power_coeff",
      [](int k, const std::vector<int>& mu) {
        return to_py(engine().b_power(k, to_partition(mu)));
      },
      py::arg("k"), py::arg("mu"));
  m.def(
      "d_coeff",
      [](int k, const std::vector<int>& rho) {
        return to_py(engine().d(k, to_partition(rho)));
      },
      py::arg("k"), py::arg("rho"));
  m.def(
      "a_from_c",
      [](int k, const std::vector<int>& rho) {
        return to_py(engine().a_from_c(k, to_partition(rho)));
      },
      py::arg("k"), py::arg("rho"));
  m.def(
      "c_from_a",
      [](int k, const std::vector<int>& lam) {
        return to_py(engine().c_from_a(k, to_partition(lam)));
      },
      py::arg("k"), py::arg("lam"));
  m.def(
      "lassalle_identity_check",
      [](int k, const std::vector<int>& rho) {
        return engine().lassalle_identity_check(k, to_partition(rho));
      },
      py::arg("k"), py::arg("rho"));
  m.def(
      "polynomial_in_t",
      [](int k, const std::vector<int>& rho) {
        py::list out;
        for (const Rat& c : engine().polynomial_in_t(k, to_partition(rho))) {
          out.append(to_py(c));
        }
        return out;
      },
      py::arg("k"), py::arg("rho"),
      "monomial coefficients of t -> a_coeff(k, rho + 1^t)");

  // exhaustive oracles
  m.def(
      "oracle_class_expansion",
      [](const std::string& function, int k, int n) {
        jmexpand::ClassExpansion expansion =
            jmexpand::class_expansion(jmexpand::evaluate_in_jm(
                jmexpand::parse_family(function), k, n));
        py::dict out;
        for (const auto& [lambda, coeff] : expansion.coefficients()) {
          out[to_py(lambda)] = to_py(coeff);
        }
        return out;
      },
      py::arg("function"), py::arg("k"), py::arg("n"));
  m.def(
      "hecke_expansion",
      [](const std::string& function, int k, int n) {
        jmexpand::CosetExpansion expansion = jmexpand::b_expansion_oracle(
            jmexpand::parse_family(function), k, n);
        py::dict out;
        for (const auto& [mu, coeff] : expansion.coefficients()) {
          out[to_py(mu)] = to_py(coeff);
        }
        return out;
      },
      py::arg("function"), py::arg("k"), py::arg("n"));
  m.def(
      "partial_expansion",
      [](const std::string& function, int k, int n) {
        jmexpand::PartialAlgebraElement expansion =
            jmexpand::evaluate_in_partial_jm(jmexpand::parse_family(function),
                                             k, n);
        py::dict out;
        for (int size = 0; size <= n; ++size) {
          for (const Partition& lambda : jmexpand::partitions_of(size)) {
            Int coeff = jmexpand::coefficient_of_cycle_type(expansion, lambda);
            if (coeff != 0) out[to_py(lambda)] = to_py(coeff);
          }
        }
        return out;
      },
      py::arg("function"), py::arg("k"), py::arg("n"),
      "nonzero cycle-type coefficients of the truncated expansion");
  m.def("jucys_ek_check",
        [](int k, int n) { return jmexpand::jucys_ek_check(k, n); },
        py::arg("k"), py::arg("n"));
  m.def("hecke_ek_check",
        [](int k, int n) { return jmexpand::hecke_ek_check(k, n); },
        py::arg("k"), py::arg("n"));
  m.def(
      "coset_type",
      [](const std::vector<int>& images) {
        return to_py(jmexpand::coset_type(jmexpand::Permutation(images)));
      },
      py::arg("images"),
      "coset type of a permutation of {0..2n-1} in the interleaved encoding");

  // Dyck areas and extreme coefficients
  m.def("catalan", [](int n) { return to_py(jmexpand::catalan(n)); },
        py::arg("n"));
  m.def("dyck_area",
        [](int k) { return to_py(jmexpand::dyck_area_closed(k)); },
        py::arg("k"));
  m.def("dyck_area_bruteforce",
        [](int k) { return to_py(jmexpand::dyck_area_bruteforce(k)); },
        py::arg("k"));
  m.def(
      "composition_area",
      [](const std::vector<int>& entries) {
        return to_py(
            jmexpand::composition_area(jmexpand::WeakComposition(entries)));
      },
      py::arg("entries"));
  m.def("lemma_area_check",
        [](int m_) { return jmexpand::lemma_area_check(m_); }, py::arg("m"));
  m.def(
      "leading_b",
      [](const std::vector<int>& rho) {
        return to_py(jmexpand::leading_b(to_partition(rho)));
      },
      py::arg("rho"));
  m.def(
      "subleading_b",
      [](const std::vector<int>& mu) {
        return to_py(jmexpand::subleading_b(to_partition(mu)));
      },
      py::arg("mu"));

  // generating series
  m.def(
      "cycle_series",
      [](int n, int order) {
        return series_to_py(jmexpand::cycle_series(n, order));
      },
      py::arg("n"), py::arg("order"));
  m.def(
      "hook_series",
      [](int n, int order) {
        return series_to_py(jmexpand::hook_series(n, order));
      },
      py::arg("n"), py::arg("order"));
  m.def(
      "solved_F_series",
      [](const std::string& which, int n, int order) {
        return series_to_py(jmexpand::solved_F_series(
            jmexpand::parse_solved_shape(which), n, order));
      },
      py::arg("which"), py::arg("n"), py::arg("order"));

  // deformed setting
  m.def(
      "alpha_contents",
      [](const std::vector<int>& lam, const py::object& alpha) {
        py::list out;
        for (const Rat& c :
             jmexpand::alpha_contents(to_partition(lam),
                                      rational_from(alpha))) {
          out.append(to_py(c));
        }
        return out;
      },
      py::arg("lam"), py::arg("alpha"));
  m.def(
      "jack_in_power_basis",
      [](const std::vector<int>& lam, const py::object& alpha) {
        return rational_table_to_py(jmexpand::jack_in_power_basis(
            to_partition(lam), rational_from(alpha)));
      },
      py::arg("lam"), py::arg("alpha"));
  m.def(
      "a_alpha",
      [](int k, int n, const py::object& alpha) {
        return rational_table_to_py(
            jmexpand::a_alpha(k, n, rational_from(alpha)));
      },
      py::arg("k"), py::arg("n"), py::arg("alpha"));
  m.def(
      "conjecture_check",
      [](int kmax, int nmax, const std::vector<py::object>& alphas) {
        std::vector<Rat> samples;
        samples.reserve(alphas.size());
        for (const py::object& alpha : alphas) {
          samples.push_back(rational_from(alpha));
        }
        py::list out;
        for (const jmexpand::ConjectureInstance& inst :
             jmexpand::conjecture_check(kmax, nmax, samples)) {
          py::dict row;
          row["alpha"] = to_py(inst.alpha);
          row["n"] = inst.n;
          row["k"] = inst.k;
          row["rho"] = to_py(inst.rho);
          row["m"] = inst.m;
          row["lhs"] = to_py(inst.lhs);
          row["rhs"] = to_py(inst.rhs);
          row["pass"] = inst.pass;
          out.append(row);
        }
        return out;
      },
      py::arg("kmax"), py::arg("nmax"), py::arg("alphas"));
}
