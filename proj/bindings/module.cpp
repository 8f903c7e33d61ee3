#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sechmoments/closed_forms.hpp"
#include "sechmoments/convolution_clt.hpp"
#include "sechmoments/exact_sequences.hpp"
#include "sechmoments/rng_stream.hpp"
#include "sechmoments/sech_distribution.hpp"
#include "sechmoments/series_engine.hpp"
#include "sechmoments/verification.hpp"

namespace py = pybind11;
using namespace sechmoments;

namespace {

// exact integers and rationals cross over as native int / fractions.Fraction
py::object to_py_int(const mpz_class& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py_fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

py::dict to_dict(const SeriesValue& s) {
  py::dict d;
  d["value"] = s.value.to_double();
  d["value_str"] = s.value.to_decimal_string();
  d["error_bound"] = s.error_bound.to_double();
  d["terms_used"] = s.terms_used;
  return d;
}

py::dict to_dict(const PiPolyValue& p) {
  py::dict d;
  d["coeff"] = to_py_fraction(p.coeff);
  d["pi_power"] = p.pi_power;
  d["value"] = p.evaluate().to_double();
  return d;
}

py::dict to_dict(const VerificationReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["n"] = r.n;
  d["lhs"] = r.lhs.to_double();
  d["lhs_str"] = r.lhs.to_decimal_string();
  d["lhs_bound"] = r.lhs_bound.to_double();
  d["rhs"] = r.rhs.to_double();
  d["rhs_str"] = r.rhs.to_decimal_string();
  d["rhs_bound"] = r.rhs_bound.to_double();
  d["gap"] = r.gap.to_double();
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified checks of hyperbolic secant moment identities";

  // exact sequences
  m.def(
      "euler_numbers",
      [](std::size_t n_max) {
        auto table = exact::euler_numbers(n_max);
        py::list out;
        for (const auto& v : table.values) out.append(to_py_int(v));
        return out;
      },
      py::arg("n_max"));
  m.def(
      "euler_star_numbers",
      [](std::size_t n_max) {
        auto table = exact::euler_star_numbers(n_max);
        py::list out;
        for (const auto& v : table.values) out.append(to_py_fraction(v));
        return out;
      },
      py::arg("n_max"));
  m.def(
      "zigzag_numbers",
      [](std::size_t n_max) {
        auto table = exact::zigzag_numbers(n_max);
        py::list out;
        for (const auto& v : table.values) out.append(to_py_int(v));
        return out;
      },
      py::arg("n_max"));
  m.def("count_alternating_permutations", &exact::count_alternating_permutations,
        py::arg("n"));
  m.def("list_alternating_permutations", &exact::list_alternating_permutations,
        py::arg("n"));

  // certified series
  m.def(
      "dirichlet_beta",
      [](unsigned s, double target_bound, unsigned precision_bits) {
        return to_dict(series::dirichlet_beta(s, target_bound, precision_bits));
      },
      py::arg("s"), py::arg("target_bound") = 1e-30, py::arg("precision_bits") = 128);
  m.def(
      "zeta_from_lambda",
      [](unsigned s, double target_bound, unsigned precision_bits) {
        return to_dict(series::zeta_from_lambda(s, target_bound, precision_bits));
      },
      py::arg("s"), py::arg("target_bound") = 1e-30, py::arg("precision_bits") = 128);
  m.def(
      "hurwitz_zeta",
      [](double s, double a, double target_bound, unsigned precision_bits) {
        return to_dict(series::hurwitz_zeta(s, a, target_bound, precision_bits));
      },
      py::arg("s"), py::arg("a"), py::arg("target_bound") = 1e-30,
      py::arg("precision_bits") = 128);

  // closed forms (rational multiples of powers of pi)
  m.def("beta_closed", [](unsigned n) { return to_dict(closed::beta_closed(n)); },
        py::arg("n"));
  m.def("zeta_even_closed",
        [](unsigned n) { return to_dict(closed::zeta_even_closed(n)); }, py::arg("n"));
  m.def("zeta_even_via_estar",
        [](unsigned n) { return to_dict(closed::zeta_even_via_estar(n)); }, py::arg("n"));
  m.def(
      "verify_eq9",
      [](unsigned n, double tolerance, unsigned precision_bits) {
        return to_dict(closed::verify_eq9(n, tolerance, precision_bits));
      },
      py::arg("n"), py::arg("tolerance") = 1e-12, py::arg("precision_bits") = 128);

  // distribution
  m.def("pdf", &hsec::pdf, py::arg("x"));
  m.def("cdf", &hsec::cdf, py::arg("x"));
  m.def("quantile", &hsec::quantile, py::arg("u"));
  m.def(
      "mgf", [](double t) { return hsec::mgf(t).to_double(); }, py::arg("t"));
  m.def(
      "sample",
      [](std::size_t count, std::uint64_t seed, std::uint64_t stream_id) {
        RngStream stream(seed, stream_id);
        return hsec::sample(stream, count);
      },
      py::arg("count"), py::arg("seed") = 0, py::arg("stream_id") = 0);
  m.def("moment_closed", [](unsigned order) { return to_dict(hsec::moment_closed(order)); },
        py::arg("order"));
  m.def(
      "moment_quadrature",
      [](unsigned order, double target_bound, unsigned precision_bits) {
        return to_dict(hsec::moment_quadrature(order, target_bound, precision_bits));
      },
      py::arg("order"), py::arg("target_bound") = 1e-12, py::arg("precision_bits") = 128);
  m.def(
      "estimate_moment",
      [](unsigned order, std::size_t count, std::uint64_t seed, std::uint64_t stream_id) {
        RngStream stream(seed, stream_id);
        auto est = hsec::estimate_moment(stream, order, count);
        py::dict d;
        d["order"] = est.order;
        d["estimate"] = est.estimate;
        d["standard_error"] = est.standard_error;
        d["sample_count"] = est.sample_count;
        return d;
      },
      py::arg("order"), py::arg("count"), py::arg("seed") = 0, py::arg("stream_id") = 0);

  // convolutions and the normal limit
  m.def("sum_density_2", [](double a) { return clt::sum_density_2(a); }, py::arg("a"));
  m.def("sum_moment_closed",
        [](unsigned n) { return to_dict(clt::sum_moment_closed(n)); }, py::arg("n"));
  m.def(
      "sum_moment_series",
      [](unsigned n, double target_bound, unsigned precision_bits) {
        return to_dict(clt::sum_moment_series(n, target_bound, precision_bits));
      },
      py::arg("n"), py::arg("target_bound") = 1e-25, py::arg("precision_bits") = 128);
  m.def(
      "nfold_density",
      [](unsigned n, double x, double target_bound) {
        return to_dict(clt::nfold_density(n, x, target_bound));
      },
      py::arg("n"), py::arg("x"), py::arg("target_bound") = 1e-10);
  m.def(
      "nfold_moment",
      [](unsigned n, unsigned order, double target_bound) {
        return to_dict(clt::nfold_moment(n, order, target_bound));
      },
      py::arg("n"), py::arg("order"), py::arg("target_bound") = 1e-9);
  m.def(
      "normalized_density",
      [](unsigned n, double y, double target_bound) {
        return to_dict(clt::normalized_density(n, y, target_bound));
      },
      py::arg("n"), py::arg("y"), py::arg("target_bound") = 1e-9);
  m.def("normalized_density_sup_gap",
        [](unsigned n) { return clt::normalized_density_sup_gap(n); }, py::arg("n"));
  m.def("normal_pdf", &clt::normal_pdf, py::arg("y"));
  m.def("normal_cdf", &clt::normal_cdf, py::arg("y"));
  m.def(
      "ks_check",
      [](unsigned n, std::size_t m_batches, std::uint64_t seed) {
        RngStream stream(seed);
        auto rep = clt::ks_check(n, m_batches, stream);
        py::dict d;
        d["fold_count"] = rep.fold_count;
        d["sample_count"] = rep.sample_count;
        d["ks_statistic"] = rep.ks_statistic;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0);

  // suite runner
  m.def("suite_names", &cli::suite_names);
  m.def(
      "run_suite",
      [](const std::string& suite, unsigned n_lo, unsigned n_hi, unsigned precision_bits,
         py::object target_bound, std::uint64_t seed, py::object sample_count) {
        cli::RunConfig cfg;
        cfg.n_lo = n_lo;
        cfg.n_hi = n_hi;
        cfg.precision_bits = precision_bits;
        cfg.seed = seed;
        if (!target_bound.is_none()) {
          cfg.target_bound = target_bound.cast<double>();
          cfg.target_bound_explicit = true;
        }
        if (!sample_count.is_none()) {
          cfg.sample_count = sample_count.cast<std::size_t>();
          cfg.sample_count_explicit = true;
        }
        py::list out;
        for (const auto& r : cli::run_suite(suite, cfg)) out.append(to_dict(r));
        return out;
      },
      py::arg("suite"), py::arg("n_lo") = 0, py::arg("n_hi") = 10,
      py::arg("precision_bits") = 128, py::arg("target_bound") = py::none(),
      py::arg("seed") = 0, py::arg("sample_count") = py::none());
}
