// hypsub: command-line front end. Every subcommand writes JSON to --out (or
// stdout). Exit codes: 0 pass, 1 certification failure, 2 input error.

#include "hypsub/corpus.hpp"
#include "hypsub/homology.hpp"
#include "hypsub/report.hpp"
#include "hypsub/subdivision.hpp"
#include "hypsub/tree_approx.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hypsub;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kCertFailure = 1;
constexpr int kInputError = 2;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::RadiusScheduleExceeded:
    case ErrorCode::ChainMapResidual:
    case ErrorCode::HomotopyIdentityFailed:
    case ErrorCode::ApproximationConstraint:
      return kCertFailure;
    default:
      return kInputError;
  }
}

void emit_error(std::string_view code, const std::string& message, const std::string& path) {
  ojson e;
  e["code"] = code;
  e["message"] = message;
  e["path"] = path;
  ojson j;
  j["error"] = std::move(e);
  std::cout << j.dump(2) << '\n';
}

void write_output(const ojson& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out, "--out");
  f << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string& path, const std::string& flag) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot read " + path, flag);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what(), flag);
  }
}

nlohmann::json parse_json_arg(const std::string& text, const std::string& flag) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON argument: ") + e.what(), flag);
  }
}

struct GroupArgs {
  std::string file;
  int radius = -1;
};

void add_group_args(CLI::App* sub, GroupArgs& g) {
  sub->add_option("--group", g.file, "group presentation JSON")->required();
  sub->add_option("--radius", g.radius, "override the ball radius");
}

GroupContext load_group(const GroupArgs& g) {
  GroupPresentation p = load_presentation(g.file);
  if (g.radius >= 0) p.ball_radius = g.radius;
  return GroupContext::build(p);
}

std::vector<Element> parse_tuple(const GroupContext& ctx, const std::string& text, const std::string& flag) {
  const Simplex s = simplex_from_json(ctx, parse_json_arg(text, flag), flag);
  return {s.begin(), s.end()};
}

ojson words(const GroupContext& ctx, const std::vector<Element>& xs) {
  ojson a = ojson::array();
  for (Element x : xs) a.push_back(ctx.format(x));
  return a;
}

// Random y at distance exactly d from x, stepping outward one generator at a time.
std::optional<Element> random_at_distance(const GroupContext& ctx, DeterministicRng& rng, Element x, int d) {
  Element cur = x;
  const std::size_t letters = ctx.alphabet().letter_count();
  for (int step = 0; step < d; ++step) {
    std::vector<Element> out;
    for (std::size_t l = 0; l < letters; ++l) {
      auto n = ctx.neighbor(cur, static_cast<Letter>(l));
      if (!n) continue;
      try {
        if (ctx.distance(x, *n) == step + 1) out.push_back(*n);
      } catch (const Error&) {
      }
    }
    if (out.empty()) return std::nullopt;
    cur = out[rng.below(out.size())];
  }
  return cur;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-norm barycentric subdivision in word-hyperbolic groups"};
  app.require_subcommand(1);
  std::string out;

  GroupArgs g_group;
  int sample_radius = -1;
  auto* c_group = app.add_subcommand("group", "build the ball and report its shape");
  add_group_args(c_group, g_group);
  c_group->add_option("--estimate-delta", sample_radius, "sample radius for the slim-triangle estimate");
  c_group->add_option("--out", out);

  GroupArgs g_geo;
  std::string from, to;
  auto* c_geo = app.add_subcommand("geodesic", "canonical geodesic between two elements");
  add_group_args(c_geo, g_geo);
  c_geo->add_option("--from", from)->required();
  c_geo->add_option("--to", to)->required();
  c_geo->add_option("--out", out);

  GroupArgs g_hull;
  std::string tuple_text;
  auto* c_hull = app.add_subcommand("hull", "geodesic hull of a tuple");
  add_group_args(c_hull, g_hull);
  c_hull->add_option("--tuple", tuple_text, "JSON array of words")->required();
  c_hull->add_option("--out", out);

  GroupArgs g_tree;
  auto* c_tree = app.add_subcommand("tree", "approximating tree, net and rough isometries");
  add_group_args(c_tree, g_tree);
  c_tree->add_option("--tuple", tuple_text, "JSON array of words")->required();
  c_tree->add_option("--out", out);

  GroupArgs g_sub;
  std::string simplex_text;
  int dim = -1, max_dim = 3;
  auto* c_sub = app.add_subcommand("subdivide", "f_i of one simplex as a chain");
  add_group_args(c_sub, g_sub);
  c_sub->add_option("--simplex", simplex_text, "JSON array of words")->required();
  c_sub->add_option("--dim", dim, "expected dimension");
  c_sub->add_option("--max-dim", max_dim);
  c_sub->add_option("--out", out);

  GroupArgs g_cert;
  std::string corpus_file, report_file;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  int max_len = 3, max_diam = 6;
  auto* c_cert = app.add_subcommand("certify", "certify a corpus of simplices");
  add_group_args(c_cert, g_cert);
  c_cert->add_option("--corpus", corpus_file, "corpus JSON; generated from --seed when absent");
  c_cert->add_option("--seed", seed);
  c_cert->add_option("--count", count, "simplices per dimension when generating");
  c_cert->add_option("--dim", dim, "only this dimension when generating");
  c_cert->add_option("--max-dim", max_dim);
  c_cert->add_option("--max-length", max_len, "vertex word length when generating");
  c_cert->add_option("--max-diameter", max_diam);
  c_cert->add_option("--report", report_file, "write the full certification report here");
  c_cert->add_option("--out", out, "write the generated corpus here");

  std::string space_file, r_text = "1";
  bool augmented = false;
  std::string mode = "simplicial";
  auto* c_hom = app.add_subcommand("homology", "integral homology of a finite Rips complex");
  c_hom->add_option("--metric-space", space_file, "JSON with 'distances' or 'tree'")->required();
  c_hom->add_option("--r", r_text, "Rips radius (p/q)");
  c_hom->add_option("--max-dim", max_dim);
  c_hom->add_flag("--augmented", augmented);
  c_hom->add_option("--mode", mode)->check(CLI::IsMember({"simplicial", "ordered"}));
  c_hom->add_option("--out", out);

  GroupArgs g_bench;
  std::string diameters = "1..20";
  std::size_t samples = 20;
  auto* c_bench = app.add_subcommand("bench-norm", "l1 cost of f_i against simplex diameter");
  add_group_args(c_bench, g_bench);
  c_bench->add_option("--dim", dim)->required();
  c_bench->add_option("--diameters", diameters, "range lo..hi");
  c_bench->add_option("--samples", samples, "simplices per diameter");
  c_bench->add_option("--seed", seed);
  c_bench->add_option("--max-dim", max_dim);
  c_bench->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("InvalidInput", e.what(), "");
    return kInputError;
  }

  try {
    if (c_group->parsed()) {
      GroupContext ctx = load_group(g_group);
      ojson j;
      j["group_hash"] = group_hash(ctx.presentation());
      j["backend"] = to_string(ctx.backend());
      j["ball_radius"] = ctx.ball_radius();
      j["ball_size"] = ctx.ball_size();
      j["sphere_sizes"] = ctx.sphere_sizes();
      j["delta"] = ctx.delta() ? ojson(to_string(*ctx.delta())) : ojson(nullptr);
      if (sample_radius >= 0) {
        j["delta_estimate"] = to_string(estimate_delta(ctx, sample_radius));
        j["delta_sample_radius"] = sample_radius;
      }
      write_output(j, out);
      return kPass;
    }
    if (c_geo->parsed()) {
      GroupContext ctx = load_group(g_geo);
      Element x, y;
      try {
        x = ctx.parse(from);
      } catch (const Error& e) {
        throw Error(e.code(), e.message(), "--from");
      }
      try {
        y = ctx.parse(to);
      } catch (const Error& e) {
        throw Error(e.code(), e.message(), "--to");
      }
      ojson j;
      j["from"] = ctx.format(x);
      j["to"] = ctx.format(y);
      j["distance"] = ctx.distance(x, y);
      j["path"] = words(ctx, ctx.geodesic(x, y));
      write_output(j, out);
      return kPass;
    }
    if (c_hull->parsed()) {
      GroupContext ctx = load_group(g_hull);
      const auto tuple = parse_tuple(ctx, tuple_text, "--tuple");
      ojson j;
      j["tuple"] = words(ctx, tuple);
      j["hull"] = words(ctx, ctx.geodesic_hull(tuple));
      write_output(j, out);
      return kPass;
    }
    if (c_tree->parsed()) {
      GroupContext ctx = load_group(g_tree);
      const auto tuple = parse_tuple(ctx, tuple_text, "--tuple");
      write_output(to_json(ctx, build_correspondence(ctx, tuple, ctx.delta())), out);
      return kPass;
    }
    if (c_sub->parsed()) {
      GroupContext ctx = load_group(g_sub);
      const Simplex s = simplex_from_json(ctx, parse_json_arg(simplex_text, "--simplex"), "--simplex");
      if (dim >= 0 && s.dim() != dim) {
        throw Error(ErrorCode::WrongDimension,
                    "simplex has dimension " + std::to_string(s.dim()) + ", --dim says " + std::to_string(dim),
                    "--dim");
      }
      SubdivisionMap map(ctx, std::max(max_dim, s.dim()));
      write_output(chain_to_json(ctx, map.subdivide(s)), out);
      return kPass;
    }
    if (c_cert->parsed()) {
      GroupContext ctx = load_group(g_cert);
      SubdivisionMap map(ctx, max_dim);
      std::vector<Simplex> corpus;
      ojson description;
      std::optional<std::uint64_t> used_seed;
      if (!corpus_file.empty()) {
        const auto raw = read_json_file(corpus_file, "--corpus");
        corpus = corpus_from_json(ctx, raw);
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(raw.dump())));
        description["source"] = "file";
        description["hash"] = hash;
        description["size"] = corpus.size();
      } else {
        CorpusOptions opts;
        opts.seed = seed;
        opts.per_dim = count;
        opts.max_vertex_length = max_len;
        opts.max_diameter = max_diam;
        opts.dims.clear();
        if (dim >= 0) opts.dims.push_back(dim);
        else
          for (int n = 1; n <= max_dim; ++n) opts.dims.push_back(n);
        corpus = generate_corpus(map, opts);
        description = corpus_to_json(ctx, {}, &opts)["generator"];
        description["source"] = "generated";
        description["size"] = corpus.size();
        used_seed = seed;
        if (!out.empty()) write_output(corpus_to_json(ctx, corpus, &opts), out);
      }
      const CertifyRun run = run_certification(map, corpus, description, used_seed);
      const ojson report = to_json(ctx, run);
      if (!report_file.empty()) {
        write_output(report, report_file);
        ojson summary = report["summary"];
        std::cout << summary.dump() << '\n';
      } else {
        std::cout << report.dump(2) << '\n';
      }
      if (!run.all_pass()) {
        ojson witnesses = ojson::array();
        for (const Certificate& c : run.certificates) {
          if (c.pass()) continue;
          witnesses.push_back(to_json(ctx, c));
          if (witnesses.size() >= 10) break;
        }
        ojson e;
        e["code"] = "CertificationFailed";
        e["message"] = std::to_string(run.certificates.size() - run.passed()) + " certificates failed";
        e["path"] = "";
        e["witnesses"] = std::move(witnesses);
        ojson j;
        j["error"] = std::move(e);
        std::cout << j.dump(2) << '\n';
        return kCertFailure;
      }
      return kPass;
    }
    if (c_hom->parsed()) {
      const auto raw = read_json_file(space_file, "--metric-space");
      const Rational r = parse_rational(r_text);
      NetMetric metric;
      if (raw.contains("distances")) {
        const auto& d = raw["distances"];
        const std::size_t n = d.size();
        std::vector<Rational> m;
        for (std::size_t i = 0; i < n; ++i) {
          if (!d[i].is_array() || d[i].size() != n)
            throw Error(ErrorCode::InvalidInput, "distance matrix must be square", "/distances/" + std::to_string(i));
          for (const auto& x : d[i])
            m.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<std::int64_t>()));
        }
        metric = NetMetric(n, std::move(m));
      } else if (raw.contains("tree")) {
        MetricTree t = MetricTree::from_json(raw["tree"]);
        const auto net = select_net(t);
        metric = NetMetric(t, net);
      } else {
        throw Error(ErrorCode::InvalidInput, "metric space needs 'distances' or 'tree'", "");
      }
      const FiniteComplexBasis basis(metric, r, max_dim + 1,
                                     mode == "ordered" ? BasisMode::Ordered : BasisMode::Simplicial);
      const auto groups = homology(basis, max_dim, augmented);
      ojson j;
      j["points"] = metric.size();
      j["r"] = to_string(r);
      j["augmented"] = augmented;
      j["mode"] = mode;
      j["label"] = "empirical, finite net";
      ojson rows = ojson::array();
      for (std::size_t n = 0; n < groups.size(); ++n) {
        ojson row;
        row["dim"] = n;
        row["cells"] = basis.cells(static_cast<int>(n)).size();
        row["betti"] = groups[n].betti;
        ojson tors = ojson::array();
        for (const auto& t : groups[n].torsion) tors.push_back(t.str());
        row["torsion"] = std::move(tors);
        rows.push_back(std::move(row));
      }
      j["homology"] = std::move(rows);
      write_output(j, out);
      return kPass;
    }
    if (c_bench->parsed()) {
      GroupContext ctx = load_group(g_bench);
      int lo = 1, hi = 20;
      {
        const auto dots = diameters.find("..");
        try {
          if (dots == std::string::npos) lo = hi = std::stoi(diameters);
          else {
            lo = std::stoi(diameters.substr(0, dots));
            hi = std::stoi(diameters.substr(dots + 2));
          }
        } catch (const std::exception&) {
          throw Error(ErrorCode::InvalidInput, "diameters must look like lo..hi", "--diameters");
        }
        if (lo < 0 || hi < lo) throw Error(ErrorCode::InvalidInput, "empty diameter range", "--diameters");
      }
      if (dim < 1) throw Error(ErrorCode::WrongDimension, "bench needs --dim >= 1", "--dim");
      SubdivisionMap map(ctx, std::max(max_dim, dim));
      DeterministicRng rng(seed);
      ojson rows = ojson::array();
      bool all_le_one = true;
      for (int D = lo; D <= hi; ++D) {
        std::size_t got = 0;
        Coeff sum = 0, max_l1 = 0;
        Ratio max_ratio = 0;
        for (std::size_t attempt = 0; got < samples && attempt < 100 * samples; ++attempt) {
          // Based simplices: f is equivariant, so this loses nothing.
          Simplex s{ctx.identity()};
          auto far = random_at_distance(ctx, rng, ctx.identity(), D);
          if (!far) continue;
          s.vertices.push_back(*far);
          for (int k = 2; k <= dim; ++k) {
            auto v = random_at_distance(ctx, rng, ctx.identity(), static_cast<int>(rng.below(static_cast<std::uint64_t>(D) + 1)));
            s.vertices.push_back(v ? *v : ctx.identity());
          }
          Chain value;
          try {
            if (diameter(ctx, s) != D) continue;
            value = map.subdivide(s);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::OutOfBall) continue;
            throw;
          }
          const Coeff l1 = l1_norm(value);
          sum += l1;
          max_l1 = std::max(max_l1, l1);
          max_ratio = std::max(max_ratio, Ratio(l1, Coeff(1 + D)));
          ++got;
        }
        ojson row;
        row["dim"] = dim;
        row["diameter"] = D;
        row["samples"] = got;
        row["mean_l1"] = got ? ojson(to_string(Ratio(sum, Coeff(got)))) : ojson(nullptr);
        row["max_l1"] = coeff_to_json(max_l1);
        row["max_ratio"] = to_string(max_ratio);
        row["ratio_le_1"] = max_ratio <= 1;
        all_le_one = all_le_one && max_ratio <= 1;
        rows.push_back(std::move(row));
      }
      ojson j;
      j["group_hash"] = group_hash(ctx.presentation());
      j["seed"] = seed;
      j["rows"] = std::move(rows);
      j["all_ratios_le_1"] = all_le_one;
      write_output(j, out);
      return kPass;
    }
  } catch (const Error& e) {
    emit_error(to_string(e.code()), e.message(), e.path());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit_error("InvalidInput", e.what(), "");
    return kInputError;
  }
  return kInputError;
}
