// topocut: solvers and certificate verifiers for discrete cuts, fair
// splits, Kneser colorings, colorability defects, and complementary edges,
// all in exact rational arithmetic with reproducible seeded instances.
//
// Exit codes: 0 success, 1 I/O or schema error, 2 precondition rejection,
// 3 theorem-guaranteed search failed (bug signal), 4 certificate rejected
// by verification.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "topocut/error.hpp"
#include "topocut/generators.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/json_io.hpp"
#include "topocut/kneser.hpp"
#include "topocut/perturb.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rainbow.hpp"
#include "topocut/rng.hpp"
#include "topocut/tucker.hpp"

namespace {

using topocut::Errc;
using topocut::Error;
using Json = topocut::io::Json;
namespace io = topocut::io;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBug = 3;
constexpr int kExitRejected = 4;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::IoError:
    case Errc::SchemaError:
      return kExitIo;
    case Errc::SearchExhausted:
    case Errc::RecursionFailed:
      return kExitBug;
    default:
      return kExitPrecondition;
  }
}

// Envelope: {"schema_version": 1, "kind": ..., "seed": ..., "payload": ...}
Json make_envelope(const std::string& kind, const Json& payload, std::optional<int64_t> seed) {
  Json env;
  env["schema_version"] = 1;
  env["kind"] = kind;
  if (seed) env["seed"] = *seed;
  env["payload"] = payload;
  return env;
}

// Accepts either a bare payload or an envelope of the expected kind.
Json unwrap_payload(const Json& doc, const std::string& kind) {
  if (!doc.contains("payload")) return doc;
  if (doc.contains("schema_version") && doc["schema_version"].get<int>() != 1)
    topocut::fail(Errc::SchemaError, "unsupported schema_version");
  if (doc.contains("kind") && doc["kind"].get<std::string>() != kind)
    topocut::fail(Errc::SchemaError, "instance kind is '" +
                                         doc["kind"].get<std::string>() + "', expected '" +
                                         kind + "'");
  return doc["payload"];
}

struct ReportClock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// The run report goes to stderr: it carries wall time, which must not leak
// into the deterministic output files.
void emit_report(const std::string& command, const std::string& instance_hash,
                 const std::string& outcome, const ReportClock& clock, Json parameters) {
  Json report;
  report["command"] = command;
  report["instance_hash"] = instance_hash;
  report["outcome"] = outcome;
  report["wall_time_ms"] = clock.elapsed_ms();
  report["parameters"] = std::move(parameters);
  std::cerr << report.dump() << "\n";
}

void write_plot_data(const std::string& path, const topocut::ColoredPointSet& ps) {
  std::string text;
  for (size_t c = 0; c < ps.classes.size(); ++c)
    for (const auto& p : ps.classes[c]) {
      text += std::to_string(c);
      for (int k = 0; k < p.dim(); ++k) {
        text += ' ';
        text += topocut::rational_to_string(p[k]);
      }
      text += '\n';
    }
  io::write_text(path, text);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (const char ch : text + ",") {
    if (ch == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      token += ch;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and verifiers for discrete cutting and coloring theorems"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "worker threads (results are identical; default 1)");

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  std::string gen_kind;
  int gen_d = 2, gen_n = 4, gen_ground = 5, gen_edges = 6, gen_resolution = 2;
  int64_t gen_seed = 0, gen_range = 32767;
  std::string gen_classes, gen_counts, gen_output = "-", gen_plot, gen_triangulation;
  gen->add_option("--kind", gen_kind, "points | necklace | hypergraph | triangulation | labeling")
      ->required();
  gen->add_option("--d", gen_d, "dimension / number of types");
  gen->add_option("--n", gen_n, "points per class (points) or triangulation dimension");
  gen->add_option("--classes", gen_classes, "comma-separated class sizes (points)");
  gen->add_option("--counts", gen_counts, "comma-separated stone counts (necklace)");
  gen->add_option("--ground", gen_ground, "ground set size (hypergraph)");
  gen->add_option("--edges", gen_edges, "hyperedge draws (hypergraph)");
  gen->add_option("--resolution", gen_resolution, "triangulation resolution");
  gen->add_option("--triangulation", gen_triangulation, "triangulation file (labeling)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--range", gen_range, "coordinate range (points)");
  gen->add_option("--output", gen_output, "output path or -");
  gen->add_option("--dump-plot-data", gen_plot, "write raw coordinates for external tools");

  // ---- hamsandwich --------------------------------------------------------
  auto* ham = app.add_subcommand("hamsandwich", "find a floor-bisecting cut");
  std::string ham_input, ham_output = "-", ham_plot;
  bool ham_perturb = false, ham_oracle = false;
  int64_t ham_seed = 0;
  ham->add_option("--input", ham_input, "points instance (JSON)")->required();
  ham->add_flag("--perturb", ham_perturb, "perturb a degenerate instance first");
  ham->add_option("--seed", ham_seed, "perturbation seed");
  ham->add_flag("--oracle", ham_oracle, "emit every spanned cut (exhaustive oracle)");
  ham->add_option("--output", ham_output, "certificate path or -");
  ham->add_option("--dump-plot-data", ham_plot, "write raw coordinates for external tools");

  // ---- rainbow ------------------------------------------------------------
  auto* rainbow = app.add_subcommand("rainbow", "partition into rainbow tuples");
  std::string rainbow_input, rainbow_output = "-", rainbow_plot;
  rainbow->add_option("--input", rainbow_input, "points instance (JSON)")->required();
  rainbow->add_option("--output", rainbow_output, "partition path or -");
  rainbow->add_option("--dump-plot-data", rainbow_plot, "write raw coordinates");

  // ---- necklace -----------------------------------------------------------
  auto* necklace = app.add_subcommand("necklace", "two-thief necklace splitting");
  std::string nk_stones, nk_input, nk_output = "-";
  bool nk_oracle = false, nk_min_cuts = false;
  necklace->add_option("--stones", nk_stones, "comma-separated stone types, e.g. 1,1,2,2");
  necklace->add_option("--input", nk_input, "necklace instance (JSON)");
  necklace->add_flag("--oracle", nk_oracle, "use the exhaustive oracle instead of the solver");
  necklace->add_flag("--min-cuts", nk_min_cuts, "print the minimum cut count");
  necklace->add_option("--output", nk_output, "split path or -");

  // ---- kneser -------------------------------------------------------------
  auto* kneser = app.add_subcommand("kneser", "Kneser graph coloring machinery");
  int kn_n = 5, kn_k = 2;
  bool kn_chromatic = false, kn_color = false;
  std::string kn_verify, kn_output = "-";
  kneser->add_option("--n", kn_n, "ground size")->required();
  kneser->add_option("--k", kn_k, "subset size")->required();
  kneser->add_flag("--chromatic", kn_chromatic, "compute the exact chromatic number");
  kneser->add_flag("--color", kn_color, "emit the explicit proper coloring");
  kneser->add_option("--verify", kn_verify, "verify a coloring file");
  kneser->add_option("--output", kn_output, "output path or -");

  // ---- dolnikov -----------------------------------------------------------
  auto* dolnikov = app.add_subcommand("dolnikov", "hypergraph colorability machinery");
  std::string dl_input, dl_output = "-";
  bool dl_check = false;
  int dl_defect_m = 0;
  bool dl_exhaustive = false;
  int dl_exhaustive_ground = 5;
  dolnikov->add_option("--input", dl_input, "hypergraph instance (JSON)");
  dolnikov->add_flag("--check", dl_check, "compare chi(KG(F)) with cd_2(F)");
  dolnikov->add_option("--defect", dl_defect_m, "compute cd_m for this m");
  dolnikov->add_flag("--exhaustive", dl_exhaustive,
                     "verify the inequality over all hypergraphs of a ground size");
  dolnikov->add_option("--ground", dl_exhaustive_ground, "ground size for --exhaustive");
  dolnikov->add_option("--output", dl_output, "output path or -");

  // ---- tucker -------------------------------------------------------------
  auto* tucker = app.add_subcommand("tucker", "complementary-edge machinery");
  int tk_n = 2, tk_resolution = 2;
  bool tk_exhaustive = false;
  std::string tk_labels, tk_output = "-";
  tucker->add_option("--n", tk_n, "ball dimension (1 or 2)")->required();
  tucker->add_option("--resolution", tk_resolution, "triangulation resolution");
  tucker->add_flag("--exhaustive", tk_exhaustive, "sweep every antipodal labeling");
  tucker->add_option("--labels", tk_labels, "labeling file to evaluate");
  tucker->add_option("--output", tk_output, "output path or -");

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "re-check a certificate against its instance");
  std::string vf_kind, vf_instance, vf_certificate;
  verify->add_option("--kind", vf_kind, "hamsandwich | rainbow | necklace | kneser | tucker")
      ->required();
  verify->add_option("--instance", vf_instance, "instance file")->required();
  verify->add_option("--certificate", vf_certificate, "certificate file")->required();

  CLI11_PARSE(app, argc, argv);
  (void)threads;  // solvers are sequential; the flag fixes the interface

  const ReportClock clock;
  try {
    if (gen->parsed()) {
      Json payload;
      std::string hash;
      if (gen_kind == "points") {
        std::vector<int> sizes = gen_classes.empty()
                                     ? std::vector<int>(static_cast<size_t>(gen_d), gen_n)
                                     : parse_int_list(gen_classes);
        const auto ps = topocut::gen_points(gen_d, sizes, static_cast<uint64_t>(gen_seed),
                                            gen_range);
        payload = io::point_set_to_json(ps);
        if (!gen_plot.empty()) write_plot_data(gen_plot, ps);
      } else if (gen_kind == "necklace") {
        const auto counts = parse_int_list(gen_counts);
        if (counts.empty())
          topocut::fail(Errc::ParameterRange, "necklace generation needs --counts");
        payload = io::necklace_to_json(topocut::gen_necklace(counts, static_cast<uint64_t>(gen_seed)));
      } else if (gen_kind == "hypergraph") {
        payload = io::hypergraph_to_json(
            topocut::gen_hypergraph(gen_ground, gen_edges, static_cast<uint64_t>(gen_seed)));
      } else if (gen_kind == "triangulation") {
        payload = io::triangulation_to_json(
            topocut::build_disk_triangulation(gen_n, gen_resolution));
      } else if (gen_kind == "labeling") {
        if (gen_triangulation.empty())
          topocut::fail(Errc::ParameterRange, "labeling generation needs --triangulation");
        const auto t = io::triangulation_from_json(
            unwrap_payload(io::parse_json(io::read_text(gen_triangulation)), "triangulation"));
        // Seeded pick from the canonical enumeration.
        const uint64_t total = topocut::count_labelings(t);
        topocut::SplitMix64 rng(static_cast<uint64_t>(gen_seed));
        const uint64_t target = rng.next_below(total);
        uint64_t index = 0;
        topocut::TuckerLabeling chosen;
        topocut::enumerate_labelings(t, [&](const topocut::TuckerLabeling& lab) {
          if (index++ == target) {
            chosen = lab;
            return false;
          }
          return true;
        });
        payload = io::labeling_to_json(chosen);
      } else {
        topocut::fail(Errc::ParameterRange, "unknown kind '" + gen_kind + "'");
      }
      hash = io::content_hash(payload);
      io::write_text(gen_output, io::canonical_dump(make_envelope(gen_kind, payload, gen_seed)));
      emit_report("gen", hash, "certificate", clock, Json{{"kind", gen_kind}, {"seed", gen_seed}});
      return kExitOk;
    }

    if (ham->parsed()) {
      auto payload = unwrap_payload(io::parse_json(io::read_text(ham_input)), "points");
      auto ps = io::point_set_from_json(payload);
      if (ham_perturb) {
        const auto result = topocut::perturb(ps, static_cast<uint64_t>(ham_seed));
        ps = result.points;
        payload = io::point_set_to_json(ps);
      }
      const std::string hash = io::content_hash(payload);
      if (!ham_plot.empty()) write_plot_data(ham_plot, ps);
      Json out;
      out["schema_version"] = 1;
      out["instance_hash"] = hash;
      if (ham_oracle) {
        const auto cuts = topocut::enumerate_all_cuts(ps);
        Json arr = Json::array();
        for (const auto& cert : cuts) arr.push_back(io::certificate_to_json(cert));
        out["cuts"] = std::move(arr);
        io::write_text(ham_output, io::canonical_dump(out));
        emit_report("hamsandwich", hash, "certificate", clock,
                    Json{{"oracle", true}, {"count", cuts.size()}});
        return kExitOk;
      }
      const auto cert = topocut::find_cut(ps);
      if (!topocut::verify_cut(ps, cert))
        topocut::fail(Errc::SearchExhausted, "certificate failed self-verification");
      out.update(io::certificate_to_json(cert));
      if (ham_perturb) out["perturbed_instance"] = payload;
      io::write_text(ham_output, io::canonical_dump(out));
      emit_report("hamsandwich", hash, "certificate", clock, Json{{"perturb", ham_perturb}});
      return kExitOk;
    }

    if (rainbow->parsed()) {
      const auto payload = unwrap_payload(io::parse_json(io::read_text(rainbow_input)), "points");
      const auto ps = io::point_set_from_json(payload);
      const std::string hash = io::content_hash(payload);
      if (!rainbow_plot.empty()) write_plot_data(rainbow_plot, ps);
      const auto rp = topocut::rainbow_partition(ps);
      Json out;
      out["schema_version"] = 1;
      out["instance_hash"] = hash;
      out.update(io::rainbow_to_json(rp));
      io::write_text(rainbow_output, io::canonical_dump(out));
      emit_report("rainbow", hash, "certificate", clock,
                  Json{{"tuples", rp.tuples.size()}});
      return kExitOk;
    }

    if (necklace->parsed()) {
      topocut::Necklace nk;
      Json payload;
      if (!nk_stones.empty()) {
        nk.stones = parse_int_list(nk_stones);
        nk.d = nk.stones.empty() ? 0 : *std::max_element(nk.stones.begin(), nk.stones.end());
        nk.validate();
        payload = io::necklace_to_json(nk);
      } else if (!nk_input.empty()) {
        payload = unwrap_payload(io::parse_json(io::read_text(nk_input)), "necklace");
        nk = io::necklace_from_json(payload);
      } else {
        topocut::fail(Errc::ParameterRange, "necklace needs --stones or --input");
      }
      const std::string hash = io::content_hash(payload);
      Json out;
      out["schema_version"] = 1;
      out["instance_hash"] = hash;
      if (nk_min_cuts) {
        const int cuts = topocut::min_cuts(nk);
        out["min_cuts"] = cuts;
        io::write_text(nk_output, io::canonical_dump(out));
        emit_report("necklace", hash, "certificate", clock, Json{{"min_cuts", cuts}});
        return kExitOk;
      }
      topocut::NecklaceSplit split;
      if (nk_oracle) {
        const auto found = topocut::split_brute_force(nk, nk.d);
        if (!found)
          topocut::fail(Errc::SearchExhausted, "oracle found no fair split within d cuts");
        split = *found;
      } else {
        split = topocut::split_via_moment_curve(nk);
      }
      if (!topocut::verify_split(nk, split))
        topocut::fail(Errc::SearchExhausted, "split failed self-verification");
      out.update(io::split_to_json(split));
      io::write_text(nk_output, io::canonical_dump(out));
      emit_report("necklace", hash, "certificate", clock,
                  Json{{"oracle", nk_oracle}, {"cuts", split.cuts.size()}});
      return kExitOk;
    }

    if (kneser->parsed()) {
      const auto graph = topocut::build_kneser(kn_n, kn_k);
      Json params{{"n", kn_n}, {"k", kn_k}};
      Json out;
      out["schema_version"] = 1;
      out["n"] = kn_n;
      out["k"] = kn_k;
      const std::string hash = io::content_hash(Json{{"n", kn_n}, {"k", kn_k}});
      if (!kn_verify.empty()) {
        const auto coloring = io::coloring_from_json(io::parse_json(io::read_text(kn_verify)));
        const bool proper = topocut::is_proper(graph, coloring);
        out["proper"] = proper;
        io::write_text(kn_output, io::canonical_dump(out));
        emit_report("kneser", hash, proper ? "certificate" : "rejected", clock, params);
        return proper ? kExitOk : kExitRejected;
      }
      if (kn_chromatic) {
        out["chromatic_number"] = topocut::chromatic_number(graph);
        out["formula"] = kn_n - 2 * kn_k + 2;
      }
      if (kn_color || !kn_chromatic) {
        const auto coloring = topocut::explicit_coloring(graph);
        if (!topocut::is_proper(graph, coloring))
          topocut::fail(Errc::SearchExhausted, "explicit coloring failed the properness check");
        out["coloring"] = io::coloring_to_json(coloring);
      }
      io::write_text(kn_output, io::canonical_dump(out));
      emit_report("kneser", hash, "certificate", clock, params);
      return kExitOk;
    }

    if (dolnikov->parsed()) {
      Json out;
      out["schema_version"] = 1;
      if (dl_exhaustive) {
        const int64_t classes = topocut::verify_dolnikov_exhaustive(dl_exhaustive_ground);
        out["ground"] = dl_exhaustive_ground;
        out["classes_checked"] = classes;
        out["holds"] = true;
        io::write_text(dl_output, io::canonical_dump(out));
        emit_report("dolnikov", io::content_hash(Json{{"ground", dl_exhaustive_ground}}),
                    "certificate", clock, Json{{"exhaustive", true}});
        return kExitOk;
      }
      if (dl_input.empty())
        topocut::fail(Errc::ParameterRange, "dolnikov needs --input (or --exhaustive)");
      const auto payload = unwrap_payload(io::parse_json(io::read_text(dl_input)), "hypergraph");
      const auto h = io::hypergraph_from_json(payload);
      const std::string hash = io::content_hash(payload);
      out["instance_hash"] = hash;
      if (dl_defect_m > 0) {
        const auto cert = topocut::colorability_defect(h, dl_defect_m);
        out["m"] = cert.m;
        out["defect"] = cert.defect;
        out["witness_removed"] = cert.witness_removed;
        out["witness_coloring"] = cert.witness_coloring;
        io::write_text(dl_output, io::canonical_dump(out));
        emit_report("dolnikov", hash, "certificate", clock, Json{{"defect_m", dl_defect_m}});
        return kExitOk;
      }
      // --check is the default mode.
      const auto report = topocut::check_dolnikov(h);
      out["chi"] = report.chi;
      out["cd2"] = report.cd2;
      out["holds"] = report.holds;
      io::write_text(dl_output, io::canonical_dump(out));
      emit_report("dolnikov", hash, report.holds ? "certificate" : "counterexample", clock,
                  Json{{"check", true}});
      if (!report.holds) return kExitBug;
      (void)dl_check;
      return kExitOk;
    }

    if (tucker->parsed()) {
      const auto t = topocut::build_disk_triangulation(tk_n, tk_resolution);
      if (!topocut::validate_complex(t))
        topocut::fail(Errc::SearchExhausted, "built triangulation failed validation");
      const Json tri_json = io::triangulation_to_json(t);
      const std::string hash = io::content_hash(tri_json);
      Json out;
      out["schema_version"] = 1;
      out["instance_hash"] = hash;
      out["n"] = tk_n;
      out["resolution"] = tk_resolution;
      if (tk_exhaustive) {
        uint64_t swept = 0;
        bool all_found = true;
        topocut::enumerate_labelings(t, [&](const topocut::TuckerLabeling& lab) {
          ++swept;
          if (!topocut::find_complementary_edge(t, lab)) {
            all_found = false;
            return false;
          }
          return true;
        });
        out["labelings_swept"] = swept;
        out["all_have_complementary_edge"] = all_found;
        io::write_text(tk_output, io::canonical_dump(out));
        emit_report("tucker", hash, all_found ? "certificate" : "counterexample", clock,
                    Json{{"exhaustive", true}});
        return all_found ? kExitOk : kExitBug;
      }
      if (tk_labels.empty())
        topocut::fail(Errc::ParameterRange, "tucker needs --labels or --exhaustive");
      const auto lab = io::labeling_from_json(
          unwrap_payload(io::parse_json(io::read_text(tk_labels)), "labeling"));
      const auto edge = topocut::find_complementary_edge(t, lab);
      if (!edge)
        topocut::fail(Errc::SearchExhausted,
                      "no complementary edge; this contradicts the lemma");
      out["complementary_edge"] = Json::array({edge->first, edge->second});
      io::write_text(tk_output, io::canonical_dump(out));
      emit_report("tucker", hash, "certificate", clock, Json{{"exhaustive", false}});
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto instance_doc = io::parse_json(io::read_text(vf_instance));
      const auto cert_doc = io::parse_json(io::read_text(vf_certificate));
      bool accepted = false;
      std::string hash;
      if (vf_kind == "hamsandwich") {
        const auto payload = unwrap_payload(instance_doc, "points");
        const auto ps = io::point_set_from_json(payload);
        hash = io::content_hash(payload);
        accepted = topocut::verify_cut(ps, io::certificate_from_json(cert_doc));
      } else if (vf_kind == "rainbow") {
        const auto payload = unwrap_payload(instance_doc, "points");
        const auto ps = io::point_set_from_json(payload);
        hash = io::content_hash(payload);
        accepted = topocut::verify_rainbow(ps, io::rainbow_from_json(cert_doc));
      } else if (vf_kind == "necklace") {
        const auto payload = unwrap_payload(instance_doc, "necklace");
        const auto nk = io::necklace_from_json(payload);
        hash = io::content_hash(payload);
        accepted = topocut::verify_split(nk, io::split_from_json(cert_doc));
      } else if (vf_kind == "kneser") {
        const auto n = instance_doc.at("n").get<int>();
        const auto k = instance_doc.at("k").get<int>();
        hash = io::content_hash(Json{{"n", n}, {"k", k}});
        const auto graph = topocut::build_kneser(n, k);
        accepted = topocut::is_proper(graph, io::coloring_from_json(cert_doc));
      } else if (vf_kind == "tucker") {
        const auto t = io::triangulation_from_json(unwrap_payload(instance_doc, "triangulation"));
        hash = io::content_hash(io::triangulation_to_json(t));
        const auto lab = io::labeling_from_json(cert_doc.contains("labeling")
                                                    ? cert_doc["labeling"]
                                                    : cert_doc);
        const auto edge = topocut::find_complementary_edge(t, lab);
        accepted = edge.has_value();
        if (accepted && cert_doc.contains("complementary_edge")) {
          const auto& e = cert_doc["complementary_edge"];
          const int u = e[0].get<int>(), v = e[1].get<int>();
          // The claimed edge must be a labeled-opposite edge of the complex.
          accepted = false;
          for (const auto& s : t.simplices)
            if (s.size() == 2 && s[0] == u && s[1] == v) accepted = true;
          if (accepted) accepted = lab.labels.at(u) == -lab.labels.at(v);
        }
      } else {
        topocut::fail(Errc::ParameterRange, "unknown verify kind '" + vf_kind + "'");
      }
      // Certificates carrying an instance hash must match the instance.
      if (accepted && cert_doc.contains("instance_hash") &&
          cert_doc["instance_hash"].get<std::string>() != hash)
        accepted = false;
      emit_report("verify", hash, accepted ? "certificate" : "rejected", clock,
                  Json{{"kind", vf_kind}});
      return accepted ? kExitOk : kExitRejected;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
