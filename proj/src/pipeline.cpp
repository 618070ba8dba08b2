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

#include "hosr/pipeline.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hosr/ensembles.hpp"
#include "hosr/errors.hpp"

namespace hosr {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + ec.message(),
                  dir.string());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing", path.string());
  }
  out << text;
  if (!out) {
    throw IoError("write failed", path.string());
  }
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  if (c.command == Command::kGenerate) {
    j["generate_kind"] = to_string(c.generate_kind);
  }
  j["input"] = c.input.string();
  j["outdir"] = c.outdir.string();
  j["k_max"] = c.k_max;
  j["grid"] = {{"lo", c.grid.lo}, {"hi", c.grid.hi}, {"step", c.grid.step}};
  j["significance"] = c.significance;
  j["beta_tolerance"] = c.beta_tolerance;
  j["bins"] = c.bins;
  if (c.cut) {
    j["cut"] = *c.cut;
  } else {
    j["cut"] = "auto (5 for k<=2, 4 for k>=3)";
  }
  j["seed"] = c.seed;
  j["blocks"] = c.blocks;
  j["dim"] = c.dim;
  j["tridiagonal"] = c.tridiagonal;
  j["n"] = c.n;
  const auto sc = c.spin_chain();
  j["spin_chain"] = {{"sites", sc.sites}, {"n_up", sc.n_up},
                     {"eta", sc.eta},     {"jxy", sc.jxy},
                     {"jz", sc.jz},       {"jxy2", sc.jxy2},
                     {"jz2", sc.jz2}};
  j["billiard"] = {
      {"max_order", c.billiard.max_order},
      {"zeros_per_order", c.billiard.zeros_per_order},
      {"policy", c.billiard.policy == DegeneracyPolicy::kKeepBoth
                     ? "keep-both"
                     : "keep-once"}};
  j["fractions"] = c.fractions;
  j["trials"] = c.trials;
  j["order"] = c.order;
  return j;
}

Spectrum load_input(const RunConfig& cfg) {
  auto file = parse_level_file(cfg.input);
  return make_spectrum(std::move(file.levels), cfg.input.string());
}

}  // namespace

const char* version() { return HOSR_VERSION; }

LevelFile parse_level_text(const std::string& text, const fs::path& origin) {
  LevelFile out;
  out.path = origin;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    const auto first = line.find_first_not_of(" \t\v\f");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::size_t pos = first;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\v\f", pos);
      if (pos == std::string::npos) {
        break;
      }
      auto end = line.find_first_of(" \t\v\f", pos);
      if (end == std::string::npos) {
        end = line.size();
      }
      const char* b = line.data() + pos;
      const char* e = line.data() + end;
      // from_chars rejects a leading '+', which plain-text tables use.
      if (*b == '+' && e - b > 1) {
        ++b;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || ptr != e) {
        throw ParseError(origin.string() + ": line " + std::to_string(line_no) +
                             ", column " + std::to_string(pos + 1) +
                             ": cannot parse '" + line.substr(pos, end - pos) +
                             "' as a real number",
                         line_no, pos + 1);
      }
      out.levels.push_back(v);
      pos = end;
    }
  }
  if (out.levels.size() < 3) {
    throw SizeError(origin.string() + ": need at least 3 levels, found " +
                    std::to_string(out.levels.size()));
  }
  return out;
}

LevelFile parse_level_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read level file " + path.string(), path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_level_text(buf.str(), path);
}

void write_level_file(const fs::path& path, const Spectrum& s) {
  std::string text;
  text.reserve(s.size() * 25);
  for (double e : s.levels()) {
    text += fmt17(e);
    text += '\n';
  }
  write_text(path, text);
}

std::string to_string(Command c) {
  switch (c) {
    case Command::kGenerate:
      return "generate";
    case Command::kAnalyze:
      return "analyze";
    case Command::kMissingLevels:
      return "missing-levels";
  }
  return "unknown";
}

std::string to_string(GenerateKind k) {
  switch (k) {
    case GenerateKind::kGoe:
      return "goe";
    case GenerateKind::kPoisson:
      return "poisson";
    case GenerateKind::kSpinChain:
      return "spin-chain";
    case GenerateKind::kCircleBilliard:
      return "circle-billiard";
  }
  return "unknown";
}

void RunConfig::validate() const {
  const auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (k_max < 1) fail("--k-max must be >= 1");
  grid.validate();
  if (!(significance > 0.0 && significance < 1.0))
    fail("--significance must be in (0, 1)");
  if (!(beta_tolerance >= 0.0)) fail("--beta-tolerance must be >= 0");
  if (bins < 2) fail("--bins must be >= 2");
  if (cut && !(*cut > 0.0 && std::isfinite(*cut))) fail("--cut must be > 0");
  if (blocks < 1) fail("--blocks must be >= 1");
  if (dim < 3) fail("--dim must be >= 3");
  if (n < 3) fail("--n must be >= 3");
  if (sites < 2 || sites > 30) fail("--sites must be in [2, 30]");
  if (!(eta >= 0.0 && std::isfinite(eta))) fail("--eta must be >= 0");
  if (n_up && (*n_up < 0 || *n_up > sites)) fail("--n-up must be in [0, sites]");
  if (billiard.max_order < 0) fail("--max-order must be >= 0");
  if (billiard.zeros_per_order < 1) fail("--zeros-per-order must be >= 1");
  if (fractions.empty()) fail("--fractions must list at least one value");
  for (double f : fractions) {
    if (!(f >= 0.0 && f < 1.0)) {
      fail("--fractions entries must be in [0, 1), got " + fmt17(f));
    }
  }
  if (trials < 1) fail("--trials must be >= 1");
  if (order < 1) fail("--order must be >= 1");
  if ((command == Command::kAnalyze || command == Command::kMissingLevels) &&
      input.empty()) {
    fail("--input is required for " + to_string(command));
  }
}

double RunConfig::cut_for(int k) const {
  if (cut) {
    return *cut;
  }
  return k <= 2 ? 5.0 : 4.0;
}

SpinChainParams RunConfig::spin_chain() const {
  SpinChainParams p;
  p.sites = sites;
  p.eta = eta;
  p.n_up = n_up.value_or(default_n_up(sites));
  p.jxy = jxy;
  p.jz = jz;
  p.jxy2 = jxy2;
  p.jz2 = jz2;
  return p;
}

InferenceOptions RunConfig::inference() const {
  InferenceOptions o;
  o.k_max = k_max;
  o.grid = grid;
  o.significance = significance;
  o.beta_tolerance = beta_tolerance;
  return o;
}

std::string RunConfig::to_json() const { return config_json(*this).dump(2); }

Spectrum generate_spectrum(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.generate_kind) {
    case GenerateKind::kGoe: {
      EnsembleSpec spec;
      spec.kind = cfg.tridiagonal ? EnsembleKind::kGoeTridiagonal
                                  : EnsembleKind::kGoeDense;
      spec.dim = cfg.dim;
      spec.blocks = cfg.blocks;
      spec.seed = cfg.seed;
      return sample_composite(spec);
    }
    case GenerateKind::kPoisson: {
      EnsembleSpec spec;
      spec.kind = EnsembleKind::kPoissonLevels;
      spec.dim = cfg.n;
      spec.blocks = cfg.blocks;
      spec.seed = cfg.seed;
      return sample_composite(spec);
    }
    case GenerateKind::kSpinChain:
      return spin_chain_spectrum(cfg.spin_chain());
    case GenerateKind::kCircleBilliard:
      return circular_billiard_levels(cfg.billiard);
  }
  throw ConfigError("unknown generator");
}

GenerateResult cmd_generate(const RunConfig& cfg) {
  const auto s = generate_spectrum(cfg);
  ensure_dir(cfg.outdir);
  GenerateResult out;
  out.levels_path = cfg.outdir / "levels.txt";
  out.metadata_path = cfg.outdir / "levels.json";
  out.n_levels = s.size();
  write_level_file(out.levels_path, s);

  Json meta;
  meta["tool"] = "hosr";
  meta["version"] = version();
  meta["kind"] = to_string(cfg.generate_kind);
  meta["label"] = s.label();
  meta["n_levels"] = s.size();
  meta["levels_file"] = out.levels_path.filename().string();
  meta["config"] = config_json(cfg);
  write_text(out.metadata_path, meta.dump(2) + "\n");
  return out;
}

std::string render_report(const SectorInference& inf, const RunConfig& cfg) {
  Json j;
  j["tool"] = "hosr";
  j["version"] = version();
  j["n_levels"] = inf.n_levels;
  j["verdict"] = inf.verdict.to_string();
  j["sectors"] = inf.verdict.sectors;
  j["integrable_screen_passed"] = inf.integrable_screen_passed;
  j["thresholds"] = {{"significance", inf.options.significance},
                     {"beta_tolerance", inf.options.beta_tolerance},
                     {"ks_p_values", "nominal (asymptotic Kolmogorov)"}};
  Json per_k = Json::array();
  for (const auto& r : inf.reports) {
    per_k.push_back({{"k", r.k},
                     {"n_ratios", r.n_ratios},
                     {"dropped", r.dropped},
                     {"beta_hat", r.beta_hat},
                     {"D_min", r.d_min},
                     {"D_min_mean", r.d_min_mean},
                     {"beta_hat_at_grid_edge", r.at_grid_edge},
                     {"ks_dist", r.dist_used},
                     {"ks_d", r.ks.d},
                     {"ks_p", r.ks.p},
                     {"poisson_dist", r.poisson_dist},
                     {"poisson_ks_d", r.poisson_ks.d},
                     {"poisson_ks_p", r.poisson_ks.p}});
  }
  j["per_k"] = std::move(per_k);
  j["config"] = config_json(cfg);
  return j.dump(2) + "\n";
}

SectorInference analyze_spectrum(const Spectrum& s, const RunConfig& cfg) {
  cfg.validate();
  auto inf = infer_sectors(s, cfg.inference());
  ensure_dir(cfg.outdir);
  write_text(cfg.outdir / "report.json", render_report(inf, cfg));

  for (const auto& r : inf.reports) {
    const auto ratios = spacing_ratios(s, r.k);
    const auto hist = histogram(ratios, cfg.bins, cfg.cut_for(r.k));
    const auto wigner = TheoryDist::wigner_ratio(r.beta_hat);
    std::string csv =
        "bin_center,empirical_density,wigner_pdf_at_beta_hat,"
        "poisson_hosr_pdf\n";
    for (const auto& bin : hist.bins) {
      csv += fmt17(bin.center) + "," + fmt17(bin.density) + "," +
             fmt17(wigner.pdf(bin.center)) + "," +
             fmt17(poisson_hosr_pdf(bin.center, r.k)) + "\n";
    }
    write_text(cfg.outdir / ("hist_k" + std::to_string(r.k) + ".csv"), csv);

    std::string curve = "beta,D\n";
    for (const auto& [beta, d] : r.d_curve) {
      curve += fmt17(beta) + "," + fmt17(d) + "\n";
    }
    write_text(cfg.outdir / ("dcurve_k" + std::to_string(r.k) + ".csv"),
               curve);
  }
  return inf;
}

SectorInference cmd_analyze(const RunConfig& cfg) {
  cfg.validate();
  return analyze_spectrum(load_input(cfg), cfg);
}

std::vector<MissingLevelsRow> cmd_missing_levels(const RunConfig& cfg) {
  cfg.validate();
  const auto s = load_input(cfg);
  auto rows = missing_levels_experiment(s, cfg.fractions, cfg.trials,
                                        cfg.order, RngStream(cfg.seed),
                                        cfg.grid);
  ensure_dir(cfg.outdir);
  std::string csv = "fraction,mean_beta_hat,stddev_beta_hat\n";
  for (const auto& row : rows) {
    csv += fmt17(row.fraction) + "," + fmt17(row.mean_beta_hat) + "," +
           fmt17(row.stddev_beta_hat) + "\n";
  }
  write_text(cfg.outdir / "missing_levels.csv", csv);

  Json j;
  j["tool"] = "hosr";
  j["version"] = version();
  j["n_levels"] = s.size();
  Json table = Json::array();
  for (const auto& row : rows) {
    table.push_back({{"fraction", row.fraction},
                     {"mean_beta_hat", row.mean_beta_hat},
                     {"stddev_beta_hat", row.stddev_beta_hat},
                     {"beta_hats", row.beta_hats}});
  }
  j["rows"] = std::move(table);
  j["config"] = config_json(cfg);
  write_text(cfg.outdir / "missing_levels.json", j.dump(2) + "\n");
  return rows;
}

}  // namespace hosr
