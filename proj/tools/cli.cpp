#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "omegastar/codec.hpp"
#include "oracle.hpp"

namespace omegastar::tools {

namespace {

using Json = nlohmann::ordered_json;

// Raised for a failed check inside `verify`.
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream file(arg);
    std::ostringstream os;
    os << file.rdbuf();
    if (!file) throw codec::ParseError("cannot read " + arg);
    return os.str();
  }
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && std::string_view("{[\"").find(arg[first]) != std::string_view::npos) return arg;
  if (arg.find('/') != std::string::npos || arg.ends_with(".json"))
    throw codec::ParseError("no such file: " + arg);
  return Json(arg).dump();  // a shorthand name
}

Int parse_natural(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw codec::ParseError(std::string(what) + ": expected a natural number, got \"" + s + "\"");
  }
}

Int steps_lcm(const Permutation& p, Int acc) {
  for (const auto& pc : p.pieces()) acc = lcm(lcm(acc, pc.domain.step), pc.image.step);
  return acc;
}

constexpr Int kMaxDefaultPrefix = 20'000'000;

Int choose_prefix(std::optional<Int> given, Int minimum, Int period, Int thresholds) {
  Int n = 0;
  if (given) {
    n = *given;
  } else {
    const __int128 wide = static_cast<__int128>(10) * period + thresholds;
    if (wide > kMaxDefaultPrefix)
      throw std::invalid_argument("verify: default prefix exceeds " + std::to_string(kMaxDefaultPrefix) +
                                  "; pass --prefix N");
    n = static_cast<Int>(wide);
  }
  if (n < minimum)
    throw std::invalid_argument("verify: prefix " + std::to_string(n) + " is below the minimum " +
                                std::to_string(minimum) + " (thresholds plus one full window)");
  return n;
}

// ---- verify: realization bundles

Json verify_realization(const Realization& r, const std::vector<ClopenPartition>& levels,
                        const std::vector<HitDigraph>& digraphs, std::optional<Int> given) {
  require_valid(r.h, "verify: h");
  require_valid(r.f, "verify: f");
  Int minimum = 0, period = 1, thresholds = r.f.threshold() + static_cast<Int>(r.walk.prelude.size());
  for (std::size_t m = 0; m < levels.size(); ++m) {
    const HitDigraph exact = hit_digraph(r.h, levels[m]);
    if (exact != digraphs[m])
      throw VerifyFailure("level " + std::to_string(m) + ": exact hit digraph " + to_string(exact) +
                          " differs from " + to_string(digraphs[m]));
    const Int t = transition_threshold(r.h, levels[m]);
    const Int w = transition_window(r.h, levels[m]);
    minimum = std::max(minimum, t + w);
    period = lcm(period, w);
    thresholds += t;
  }
  period = steps_lcm(r.f, period);
  const Int n = choose_prefix(given, minimum, period, thresholds);

  const auto replayed = simulate_greedy(r.walk, levels, static_cast<std::size_t>(n + 1));
  for (Int k = 0; k <= n; ++k) {
    const auto v = r.f.apply(k);
    if (v != replayed[static_cast<std::size_t>(k)])
      throw VerifyFailure("f disagrees with greedy replay at " + std::to_string(k) + ": expected " +
                          std::to_string(replayed[static_cast<std::size_t>(k)]));
  }
  for (Int k = 0; k < n; ++k) {
    if (r.h.apply(replayed[static_cast<std::size_t>(k)]) != replayed[static_cast<std::size_t>(k + 1)])
      throw VerifyFailure("h(f(" + std::to_string(k) + ")) != f(" + std::to_string(k + 1) + ")");
  }

  Json report;
  report["ok"] = true;
  report["prefix"] = n;
  Json level_reports = Json::array();
  for (std::size_t m = 0; m < levels.size(); ++m) {
    const auto c = census(r.h, levels[m], n);
    if (const auto bad = census_mismatch(c, digraphs[m]); !bad.empty())
      throw VerifyFailure("level " + std::to_string(m) + ": " + bad);
    Json lr;
    lr["threshold"] = c.threshold;
    lr["window"] = c.window;
    lr["windows"] = c.windows;
    lr["stray"] = 0;
    Json edges = Json::array();
    for (const auto& [a, b] : digraphs[m].edges()) {
      Json e;
      e["edge"] = Json::array({a, b});
      e["witnesses"] = c.counts[a][b];
      edges.push_back(std::move(e));
    }
    lr["edges"] = std::move(edges);
    level_reports.push_back(std::move(lr));
  }
  report["levels"] = std::move(level_reports);
  return report;
}

// ---- verify: interval flips

Json verify_flip(const IntervalFlip& fl, const EpSet& d, std::optional<Int> given) {
  if (!d.is_infinite()) throw std::invalid_argument("verify: D must be infinite");
  require_valid(fl.h, "verify: h");
  require_valid(fl.f, "verify: f");
  const Int period = steps_lcm(fl.f, steps_lcm(fl.h, d.period()));
  const Int minimum = std::max(fl.h.threshold(), fl.f.threshold()) + d.threshold() + period;
  const Int n = choose_prefix(given, minimum, period, fl.h.threshold() + fl.f.threshold() + d.threshold());

  // Block boundaries 0 = d_0 < d_1 < …, where d_k - 1 ∈ D for k ≥ 1.
  std::vector<Int> ds{0};
  for (Int m = 1; ds.back() <= n + 1; ++m)
    if (d.contains(m - 1)) ds.push_back(m);
  std::size_t k = 0;
  for (Int x = 0; x < n; ++x) {
    while (ds[k + 1] <= x) ++k;
    const Int expect_h = ds[k] + ds[k + 1] - 1 - x;
    if (fl.h.apply(x) != expect_h)
      throw VerifyFailure("h(" + std::to_string(x) + ") is not the block reversal " + std::to_string(expect_h));
    std::optional<Int> expect_f;
    if (!d.contains(x)) {
      expect_f = x + 1;
    } else {
      const auto i = static_cast<std::size_t>(std::find(ds.begin(), ds.end(), x + 1) - ds.begin());
      if (i >= 2) expect_f = ds[i - 2];
    }
    if (fl.f.apply(x) != expect_f) throw VerifyFailure("f(" + std::to_string(x) + ") disagrees with the flip formula");
    if (x >= 1 && fl.f.apply(*fl.h.apply(x)) != fl.h.apply(x - 1))
      throw VerifyFailure("f(h(" + std::to_string(x) + ")) != h(" + std::to_string(x - 1) + ")");
  }
  Json report;
  report["ok"] = true;
  report["prefix"] = n;
  report["blocks"] = ds.size() - 1;
  return report;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Hitting digraphs and realizations for mod-finite permutations of the naturals", "omegastar"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output", output, "Also write the payload to FILE");

  std::function<std::string()> action;
  auto text = [&](const std::string& arg) { return load(arg, in); };

  // hit
  std::string perm_arg, part_arg, graph_arg, bundle_arg, chain_arg, flip_arg, other_arg;
  bool dot = false;
  auto* hit = app.add_subcommand("hit", "Hit digraph of a permutation on a partition");
  hit->add_option("perm", perm_arg)->required();
  hit->add_option("partition", part_arg)->required();
  hit->add_flag("--dot", dot, "Emit Graphviz DOT");
  hit->callback([&] {
    action = [&] {
      const auto h = codec::decode_permutation(text(perm_arg));
      const auto v = codec::decode_partition(text(part_arg));
      const auto g = hit_digraph(h, v);
      if (dot) {
        auto s = codec::to_dot(g, &v);
        s.pop_back();
        return s;
      }
      return codec::encode(g);
    };
  });

  auto* realize = app.add_subcommand("realize", "Realize a transitive digraph on a partition");
  realize->add_option("partition", part_arg)->required();
  realize->add_option("digraph", graph_arg)->required();
  realize->callback([&] {
    action = [&] {
      return codec::encode(
          realize_digraph(codec::decode_partition(text(part_arg)), codec::decode_digraph(text(graph_arg))));
    };
  });

  auto* realize_chain_cmd = app.add_subcommand("realize-chain", "Realize a refining chain of digraphs");
  realize_chain_cmd->add_option("chain", chain_arg)->required();
  realize_chain_cmd->callback(
      [&] { action = [&] { return codec::encode(realize_chain(codec::decode_chain(text(chain_arg)))); }; });

  std::optional<Int> prefix;
  std::string prefix_arg;
  auto* verify = app.add_subcommand("verify", "Cross-check a bundle by pointwise replay");
  verify->add_option("bundle", bundle_arg)->required();
  verify->add_option("partition", part_arg);
  verify->add_option("digraph", graph_arg);
  verify->add_option("--chain", chain_arg, "Chain file the bundle realizes");
  verify->add_option("--flip", flip_arg, "Set D of an interval-flip bundle");
  verify->add_option("--prefix", prefix_arg, "Replay length N");
  verify->callback([&] {
    action = [&] {
      if (!prefix_arg.empty()) prefix = parse_natural(prefix_arg, "--prefix");
      Json report;
      if (!flip_arg.empty()) {
        report = verify_flip(codec::decode_interval_flip(text(bundle_arg)), codec::decode_ep_set(text(flip_arg)),
                             prefix);
      } else {
        const auto r = codec::decode_realization(text(bundle_arg));
        std::vector<ClopenPartition> levels;
        std::vector<HitDigraph> digraphs;
        if (!chain_arg.empty()) {
          const auto chain = codec::decode_chain(text(chain_arg));
          validate_chain(chain);
          for (const auto& l : chain) {
            levels.push_back(l.partition);
            digraphs.push_back(l.digraph);
          }
        } else {
          if (part_arg.empty() || graph_arg.empty())
            throw CLI::ValidationError("verify", "needs PARTITION and DIGRAPH, or --chain, or --flip");
          levels.push_back(codec::decode_partition(text(part_arg)));
          digraphs.push_back(codec::decode_digraph(text(graph_arg)));
          if (digraphs[0].size() != levels[0].size())
            throw std::invalid_argument("verify: digraph size does not match partition");
        }
        report = verify_realization(r, levels, digraphs, prefix);
      }
      return report.dump();
    };
  });

  auto* flip = app.add_subcommand("flip", "Interval flip h and f of an infinite set D");
  flip->add_option("D", flip_arg)->required();
  flip->callback([&] { action = [&] { return codec::encode(interval_flip(codec::decode_ep_set(text(flip_arg)))); }; });

  auto* check = app.add_subcommand("check-transitive", "Is the digraph transitive");
  check->add_option("digraph", graph_arg)->required();
  check->callback([&] {
    action = [&] {
      Json j;
      j["transitive"] = is_transitive(codec::decode_digraph(text(graph_arg)));
      return j.dump();
    };
  });

  auto* refine = app.add_subcommand("refine", "Common refinement of two partitions");
  refine->add_option("V", part_arg)->required();
  refine->add_option("W", other_arg)->required();
  refine->callback([&] {
    action = [&] {
      return codec::encode(
          common_refinement(codec::decode_partition(text(part_arg)), codec::decode_partition(text(other_arg))));
    };
  });

  auto* project = app.add_subcommand("project", "Project a digraph on W to a coarser partition V");
  project->add_option("digraph", graph_arg)->required();
  project->add_option("W", other_arg)->required();
  project->add_option("V", part_arg)->required();
  project->callback([&] {
    action = [&] {
      return codec::encode(project_digraph(codec::decode_digraph(text(graph_arg)),
                                           codec::decode_partition(text(other_arg)),
                                           codec::decode_partition(text(part_arg))));
    };
  });

  auto* perm = app.add_subcommand("perm", "Permutation algebra");
  perm->require_subcommand(1);
  std::string p_arg, q_arg, n_arg, a_arg;
  auto* pcompose = perm->add_subcommand("compose", "P ∘ Q");
  pcompose->add_option("P", p_arg)->required();
  pcompose->add_option("Q", q_arg)->required();
  pcompose->callback([&] {
    action = [&] {
      const auto p = codec::decode_permutation(text(p_arg));
      const auto q = codec::decode_permutation(text(q_arg));
      require_valid(p, "compose: P");
      require_valid(q, "compose: Q");
      return codec::encode(compose(p, q));
    };
  });
  auto* pinvert = perm->add_subcommand("invert", "P⁻¹");
  pinvert->add_option("P", p_arg)->required();
  pinvert->callback([&] {
    action = [&] {
      const auto p = codec::decode_permutation(text(p_arg));
      require_valid(p, "invert");
      return codec::encode(invert(p));
    };
  });
  auto* papply = perm->add_subcommand("apply", "P(n)");
  papply->add_option("P", p_arg)->required();
  papply->add_option("n", n_arg)->required();
  papply->callback([&] {
    action = [&] {
      const auto p = codec::decode_permutation(text(p_arg));
      const Int n = parse_natural(n_arg, "apply");
      Json j;
      j["n"] = n;
      if (const auto v = p.apply(n))
        j["value"] = *v;
      else
        j["value"] = nullptr;
      return j.dump();
    };
  });
  auto* pimage = perm->add_subcommand("image", "P[A]");
  pimage->add_option("P", p_arg)->required();
  pimage->add_option("A", a_arg)->required();
  pimage->callback([&] {
    action = [&] {
      const auto p = codec::decode_permutation(text(p_arg));
      require_valid(p, "image");
      return codec::encode(image_of_set(p, codec::decode_ep_set(text(a_arg))));
    };
  });

  Int max_period = 8, max_threshold = 8;
  auto* ct = app.add_subcommand("ct-search", "Search for a clopen A with h[A] ⊆* A");
  ct->add_option("perm", perm_arg)->required();
  ct->add_option("--max-period", max_period)->check(CLI::NonNegativeNumber);
  ct->add_option("--max-threshold", max_threshold)->check(CLI::NonNegativeNumber);
  ct->callback([&] {
    action = [&] {
      const auto found =
          invariant_clopen_search(codec::decode_permutation(text(perm_arg)), max_period, max_threshold);
      Json j;
      j["certificate"] = found ? Json::parse(codec::encode(*found)) : Json(nullptr);
      return j.dump();
    };
  });

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    result.payload = action();
    if (!output.empty()) {
      std::ofstream out(output);
      out << result.payload << '\n';
      if (!out) throw std::runtime_error("cannot write " + output);
    }
  } catch (const CLI::CallForHelp&) {
    result.payload = app.help();
  } catch (const CLI::CallForAllHelp&) {
    result.payload = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    result = {2, "", std::string("error: ") + e.what()};
  } catch (const codec::ParseError& e) {
    result = {2, "", std::string("parse error: ") + e.what()};
  } catch (const VerifyFailure& e) {
    result = {1, "", std::string("verify failed: ") + e.what()};
  } catch (const std::exception& e) {
    result = {1, "", std::string("error: ") + e.what()};
  }
  return result;
}

}  // namespace omegastar::tools
