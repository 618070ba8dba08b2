// Copyright 2026 The hosr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "hosr/ensembles.hpp"
#include "hosr/errors.hpp"
#include "hosr/estimator.hpp"
#include "hosr/models.hpp"
#include "hosr/pipeline.hpp"
#include "hosr/theory.hpp"

namespace py = pybind11;
using namespace hosr;

namespace {

EnsembleKind parse_kind(const std::string& kind) {
  if (kind == "goe-dense") return EnsembleKind::kGoeDense;
  if (kind == "goe-tridiagonal") return EnsembleKind::kGoeTridiagonal;
  if (kind == "poisson") return EnsembleKind::kPoissonLevels;
  throw ConfigError("unknown ensemble kind '" + kind +
                    "' (goe-dense, goe-tridiagonal, poisson)");
}

ScanGrid make_grid(double lo, double hi, double step) {
  ScanGrid g{lo, hi, step};
  g.validate();
  return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Higher-order spacing ratio statistics (C++ core).";
  m.attr("__version__") = version();

  py::register_exception<Error>(m, "HosrError", PyExc_ValueError);

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("levels", &Spectrum::levels)
      .def_property_readonly("label", &Spectrum::label)
      .def("__len__", &Spectrum::size)
      .def("__repr__", [](const Spectrum& s) {
        return "<Spectrum n=" + std::to_string(s.size()) + " '" + s.label() +
               "'>";
      });
  m.def("make_spectrum", &make_spectrum, py::arg("levels"),
        py::arg("label") = std::string{});
  m.def("collapse_degeneracies", &collapse_degeneracies, py::arg("spectrum"),
        py::arg("rel_tol") = 1e-9);
  m.def("superpose", [](const std::vector<Spectrum>& parts) {
    return superpose(parts);
  });

  py::class_<RatioSeries>(m, "RatioSeries")
      .def_readonly("order", &RatioSeries::order)
      .def_readonly("values", &RatioSeries::values)
      .def_readonly("dropped_count", &RatioSeries::dropped_count)
      .def_readonly("source_length", &RatioSeries::source_length);
  m.def("spacing_ratios", &spacing_ratios, py::arg("spectrum"), py::arg("k"));

  m.def("normalization_constant", &normalization_constant, py::arg("beta"));
  m.def("wigner_ratio_pdf", &wigner_ratio_pdf, py::arg("r"), py::arg("beta"));
  m.def("poisson_hosr_pdf", &poisson_hosr_pdf, py::arg("r"), py::arg("k"));
  m.def("gamma_spacing_pdf", &gamma_spacing_pdf, py::arg("z"), py::arg("k"));

  py::class_<TheoryDist>(m, "TheoryDist")
      .def_static("wigner_ratio", &TheoryDist::wigner_ratio, py::arg("beta"))
      .def_static("poisson_hosr", &TheoryDist::poisson_hosr, py::arg("k"))
      .def("pdf", &TheoryDist::pdf)
      .def("cdf", &TheoryDist::cdf)
      .def("quantile", &TheoryDist::quantile)
      .def("describe", &TheoryDist::describe)
      .def("__repr__", &TheoryDist::describe);

  m.def(
      "ks_test",
      [](const std::vector<double>& sample, const TheoryDist& d) {
        const auto r = ks_test(sample, d);
        return py::make_tuple(r.d, r.p);
      },
      py::arg("sample"), py::arg("dist"),
      "One-sample KS test; returns (d, nominal p).");
  m.def(
      "d_statistic",
      [](const std::vector<double>& values, double beta) {
        RatioSeries r;
        r.values = values;
        return d_statistic(r, beta);
      },
      py::arg("ratios"), py::arg("beta"));
  m.def(
      "scan_beta",
      [](const std::vector<double>& values, double lo, double hi,
         double step) {
        RatioSeries r;
        r.values = values;
        const auto s = scan_beta(r, make_grid(lo, hi, step));
        py::dict out;
        out["beta_hat"] = s.beta_hat;
        out["d_min"] = s.d_min;
        out["d_curve"] = s.d_curve;
        return out;
      },
      py::arg("ratios"), py::arg("lo") = 0.5, py::arg("hi") = 8.0,
      py::arg("step") = 0.1);

  m.def(
      "infer_sectors",
      [](const Spectrum& s, int k_max, double lo, double hi, double step,
         double significance, double beta_tolerance) {
        InferenceOptions opt;
        opt.k_max = k_max;
        opt.grid = make_grid(lo, hi, step);
        opt.significance = significance;
        opt.beta_tolerance = beta_tolerance;
        const auto inf = infer_sectors(s, opt);
        py::list reports;
        for (const auto& r : inf.reports) {
          py::dict d;
          d["k"] = r.k;
          d["n_ratios"] = r.n_ratios;
          d["dropped"] = r.dropped;
          d["beta_hat"] = r.beta_hat;
          d["d_min"] = r.d_min;
          d["d_min_mean"] = r.d_min_mean;
          d["ks_d"] = r.ks.d;
          d["ks_p"] = r.ks.p;
          d["dist_used"] = r.dist_used;
          d["poisson_ks_d"] = r.poisson_ks.d;
          d["poisson_ks_p"] = r.poisson_ks.p;
          reports.append(d);
        }
        py::dict out;
        out["n_levels"] = inf.n_levels;
        out["verdict"] = inf.verdict.to_string();
        out["sectors"] = inf.verdict.sectors;
        out["integrable_screen_passed"] = inf.integrable_screen_passed;
        out["reports"] = reports;
        return out;
      },
      py::arg("spectrum"), py::arg("k_max") = 8, py::arg("grid_lo") = 0.5,
      py::arg("grid_hi") = 8.0, py::arg("grid_step") = 0.1,
      py::arg("significance") = 0.05, py::arg("beta_tolerance") = 0.3);

  m.def(
      "missing_levels_experiment",
      [](const Spectrum& s, const std::vector<double>& fractions, int trials,
         int k, std::uint64_t seed) {
        const auto rows =
            missing_levels_experiment(s, fractions, trials, k, RngStream(seed));
        py::list out;
        for (const auto& row : rows) {
          py::dict d;
          d["fraction"] = row.fraction;
          d["mean_beta_hat"] = row.mean_beta_hat;
          d["stddev_beta_hat"] = row.stddev_beta_hat;
          d["beta_hats"] = row.beta_hats;
          out.append(d);
        }
        return out;
      },
      py::arg("spectrum"), py::arg("fractions"), py::arg("trials"),
      py::arg("k"), py::arg("seed") = 0);

  m.def(
      "sample_goe_dense",
      [](int dim, std::uint64_t seed) {
        return sample_goe_dense(dim, RngStream(seed));
      },
      py::arg("dim"), py::arg("seed") = 0);
  m.def(
      "sample_goe_tridiagonal",
      [](int dim, std::uint64_t seed) {
        return sample_goe_tridiagonal(dim, RngStream(seed));
      },
      py::arg("dim"), py::arg("seed") = 0);
  m.def(
      "sample_poisson_levels",
      [](int n, std::uint64_t seed) {
        return sample_poisson_levels(n, RngStream(seed));
      },
      py::arg("n"), py::arg("seed") = 0);
  m.def(
      "sample_composite",
      [](const std::string& kind, int dim, int blocks, std::uint64_t seed) {
        return sample_composite({parse_kind(kind), dim, blocks, seed});
      },
      py::arg("kind") = "goe-tridiagonal", py::arg("dim") = 5000,
      py::arg("blocks") = 1, py::arg("seed") = 0);

  m.def(
      "spin_chain_spectrum",
      [](int sites, double eta, std::optional<int> n_up, double jxy,
         double jz, double jxy2, double jz2) {
        SpinChainParams p;
        p.sites = sites;
        p.eta = eta;
        p.n_up = n_up.value_or(default_n_up(sites));
        p.jxy = jxy;
        p.jz = jz;
        p.jxy2 = jxy2;
        p.jz2 = jz2;
        return spin_chain_spectrum(p);
      },
      py::arg("sites") = 13, py::arg("eta") = 0.5,
      py::arg("n_up") = py::none(), py::arg("jxy") = 1.0,
      py::arg("jz") = 0.5, py::arg("jxy2") = 1.0, py::arg("jz2") = 0.5);

  m.def("bessel_zero", &bessel_zero, py::arg("n"), py::arg("k"));
  m.def(
      "circular_billiard_levels",
      [](int max_order, int zeros_per_order, bool keep_both) {
        return circular_billiard_levels(
            {max_order, zeros_per_order,
             keep_both ? DegeneracyPolicy::kKeepBoth
                       : DegeneracyPolicy::kKeepOnce});
      },
      py::arg("max_order") = 200, py::arg("zeros_per_order") = 64,
      py::arg("keep_both") = false);

  m.def(
      "parse_level_file",
      [](const std::filesystem::path& path) {
        return parse_level_file(path).levels;
      },
      py::arg("path"));
}
