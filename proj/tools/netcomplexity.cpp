#include "netcomplexity/complexity.hpp"
#include "netcomplexity/generators.hpp"
#include "netcomplexity/io.hpp"
#include "netcomplexity/network.hpp"
#include "netcomplexity/neutral_model.hpp"
#include "netcomplexity/rng.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace nc = netcomplexity;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(text, &used, 0);  // decimal or 0x hex
    if (used != text.size()) throw std::invalid_argument(text);
    return seed;
  } catch (const std::exception&) {
    throw UsageError("bad seed '" + text + "' (decimal or 0x hex)");
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw nc::ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

// Re-homes the links under adjusted policies. Direction can only be forced
// onto a network without links; enabling self-loop slots is always safe.
nc::Network with_policies(const nc::Network& net, bool force_directed,
                          bool force_loops) {
  const bool directed = net.directed() || (force_directed && net.link_count() == 0);
  const bool loops = net.allow_self_loops() || force_loops;
  if (directed == net.directed() && loops == net.allow_self_loops()) return net;
  nc::Network out(net.node_count(), directed, loops);
  for (const nc::Link& l : net.links()) out.add_link(l.source, l.target, l.weight);
  return out;
}

nc::ParsedNetwork load_network(const std::string& path, bool directed, bool loops) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream in(text);
  nc::ParsedNetwork parsed = (first != std::string::npos && text[first] == '*')
                                 ? nc::parse_pajek(in)
                                 : nc::parse_edgelist(in, directed);
  parsed.net = with_policies(parsed.net, directed, loops);
  return parsed;
}

bool any_nonunit_weight(const nc::Network& net) {
  for (const nc::Link& l : net.links())
    if (l.weight != 1.0) return true;
  return false;
}

nc::ReportFormat report_format(const std::string& name) {
  return name == "tsv" ? nc::ReportFormat::tsv : nc::ReportFormat::json;
}

void emit_network(const nc::Network& net, const std::string& format) {
  if (format == "pajek")
    nc::write_pajek(std::cout, net);
  else
    nc::write_edgelist(std::cout, net);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information-content complexity of networks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::string seed_text = "0";
  std::string ma_base = "2";
  std::string out_format = "edgelist";
  std::string model;
  bool directed = false, self_loops = false, weighted = false;
  bool labelled = false, ceil_variant = false;
  std::size_t samples = 100;
  int n = 0, order = 0, seed_nodes = 0;
  std::uint64_t l = 0, m = 1;
  double sigma = 1.0;
  std::optional<std::uint64_t> sample_count;
  std::string weights = "";

  auto* cmd_complexity = app.add_subcommand("complexity", "measure one network");
  cmd_complexity->add_option("input", input, "network file, or - for stdin");
  cmd_complexity->add_flag("--weighted", weighted, "force the weighted measure");
  cmd_complexity->add_flag("--labelled", labelled, "labelled-network variant");
  cmd_complexity->add_flag("--ceil", ceil_variant, "bit-exact (ceiled) payload");
  cmd_complexity->add_option("--ma-base", ma_base, "MA log base")
      ->check(CLI::IsMember({"2", "e"}));
  cmd_complexity->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd_complexity->add_flag("--directed", directed, "edge lists parse as directed");
  cmd_complexity->add_flag("--self-loops", self_loops, "allow self-loop slots");

  auto* cmd_null = app.add_subcommand("nullmodel", "shuffled-ensemble significance");
  cmd_null->add_option("input", input, "network file, or - for stdin");
  cmd_null->add_option("--samples", samples, "ensemble size (default 100)");
  cmd_null->add_option("--seed", seed_text, "ensemble seed");
  cmd_null->add_flag("--weighted", weighted, "force the weighted measure");
  cmd_null->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd_null->add_flag("--directed", directed, "edge lists parse as directed");
  cmd_null->add_flag("--self-loops", self_loops, "allow self-loop slots");

  auto* cmd_generate = app.add_subcommand("generate", "write a model network");
  cmd_generate->add_option("model", model, "er, pa or normal-null")
      ->required()
      ->check(CLI::IsMember({"er", "pa", "normal-null"}));
  cmd_generate->add_option("--n", n, "node count")->required();
  cmd_generate->add_option("--l", l, "link count (er, normal-null)");
  cmd_generate->add_option("--m", m, "links per node (pa)");
  cmd_generate->add_option("--seed", seed_text, "generator seed");
  cmd_generate->add_option("--seed-nodes", seed_nodes, "pa: link-free seed nodes");
  cmd_generate->add_option("--sigma", sigma, "normal-null weight scale");
  cmd_generate->add_flag("--directed", directed, "er: directed slots");
  cmd_generate->add_option("--weights", weights, "unit or uniform01");
  cmd_generate->add_option("--format", out_format, "edgelist or pajek")
      ->check(CLI::IsMember({"edgelist", "pajek"}));

  auto* cmd_enumerate = app.add_subcommand("enumerate", "(l, C) over all linklists");
  cmd_enumerate->add_option("--order", order, "node count")->required();
  cmd_enumerate->add_option("--sample", sample_count, "linklists per link count");
  cmd_enumerate->add_option("--seed", seed_text, "sampling seed");

  auto* cmd_foodweb = app.add_subcommand("foodweb", "interaction matrix to network");
  cmd_foodweb->add_option("input", input, "matrix file, or - for stdin");
  cmd_foodweb->add_option("--format", out_format, "edgelist or pajek")
      ->check(CLI::IsMember({"edgelist", "pajek"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_complexity->parsed()) {
      const auto parsed = load_network(input, directed, self_loops);
      const nc::Network& net = parsed.net;
      nc::ReportBundle bundle;
      bundle.nodes = net.node_count();
      bundle.links = net.link_count();
      if (labelled) {
        bundle.measure = "labelled";
        bundle.detail = nc::labelled_complexity(net);
        bundle.c_bits = bundle.detail->total_bits;
      } else {
        bundle.detail = nc::complexity(net, ceil_variant);
        if (weighted || any_nonunit_weight(net)) {
          bundle.measure = "weighted";
          bundle.c_bits = nc::weighted_complexity(net, ceil_variant);
        } else {
          bundle.measure = "unweighted";
          bundle.c_bits = bundle.detail->total_bits;
        }
        if (net.link_count() > 0) {
          bundle.ma = nc::medium_articulation(
              net, ma_base == "e" ? nc::LogBase::e : nc::LogBase::two);
          bundle.ma_base = ma_base;
        }
      }
      nc::write_report(std::cout, bundle, report_format(format));
      return 0;
    }

    if (cmd_null->parsed()) {
      if (samples < 2) throw UsageError("--samples must be >= 2");
      const std::uint64_t seed = parse_seed(seed_text);
      const auto parsed = load_network(input, directed, self_loops);
      const nc::Network& net = parsed.net;
      const nc::ScoreMode mode =
          weighted ? nc::ScoreMode::weighted : nc::ScoreMode::automatic;
      const double c_real = nc::score_complexity(net, mode);
      const nc::EnsembleStats stats = nc::ensemble_stats(net, samples, seed, mode);
      nc::ReportBundle bundle;
      bundle.nodes = net.node_count();
      bundle.links = net.link_count();
      bundle.measure =
          (weighted || any_nonunit_weight(net)) ? "weighted" : "unweighted";
      bundle.c_bits = c_real;
      bundle.ensemble = stats;
      bundle.significance = nc::significance_value(c_real, stats);
      nc::write_report(std::cout, bundle, report_format(format));
      return 0;
    }

    if (cmd_generate->parsed()) {
      const std::uint64_t seed = parse_seed(seed_text);
      if (model == "normal-null") {
        emit_network(nc::normal_weight_null(n, l, seed, sigma), out_format);
        return 0;
      }
      nc::GeneratorSpec spec;
      spec.n = n;
      spec.seed = seed;
      spec.directed = directed;
      if (model == "er") {
        spec.model = nc::GeneratorModel::erdos_renyi;
        spec.l_or_m = l;
        spec.weights = weights == "uniform01" ? nc::WeightModel::uniform01
                                              : nc::WeightModel::unit;
      } else {
        spec.model = nc::GeneratorModel::preferential_attachment;
        spec.l_or_m = m;
        spec.seed_nodes = seed_nodes;
        spec.weights =
            weights == "unit" ? nc::WeightModel::unit : nc::WeightModel::uniform01;
      }
      emit_network(nc::generate(spec), out_format);
      return 0;
    }

    if (cmd_enumerate->parsed()) {
      if (order < 1) throw UsageError("--order must be >= 1");
      if (order > 6 && !sample_count)
        throw UsageError("order > 6 requires --sample");
      const std::uint64_t L = nc::slot_count(order, false, false);
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) slots.emplace_back(i, j);
      std::cout.precision(12);
      const auto emit = [&](const nc::Network& g) {
        std::cout << g.link_count() << '\t' << nc::complexity(g).total_bits << '\n';
      };
      if (!sample_count) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << L); ++mask) {
          nc::Network g(order, false, false);
          for (std::uint64_t b = 0; b < L; ++b)
            if (mask >> b & 1) g.add_link(slots[b].first, slots[b].second, 1.0);
          emit(g);
        }
      } else {
        nc::Rng rng(parse_seed(seed_text));
        for (std::uint64_t links = 0; links <= L; ++links) {
          for (std::uint64_t k = 0; k < *sample_count; ++k) {
            auto pool = slots;
            nc::Network g(order, false, false);
            for (std::uint64_t t = 0; t < links; ++t) {
              const std::uint64_t j = t + rng.below(pool.size() - t);
              std::swap(pool[t], pool[j]);
              g.add_link(pool[t].first, pool[t].second, 1.0);
            }
            emit(g);
          }
        }
      }
      return 0;
    }

    if (cmd_foodweb->parsed()) {
      const std::string text = slurp(input);
      std::istringstream in(text);
      const nc::InteractionMatrix matrix = nc::parse_interaction_matrix(in);
      emit_network(nc::matrix_to_foodweb(matrix), out_format);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const nc::ResourceLimitError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
