#include "netcomplexity/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace netcomplexity {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

double parse_weight(const std::string& tok, int line) {
  std::size_t used = 0;
  double w = 0.0;
  try {
    w = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "bad weight '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "bad weight '" + tok + "'");
  if (!(w > 0.0) || !std::isfinite(w))
    throw ParseError(line, "weight must be a positive real, got '" + tok + "'");
  return w;
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct PendingLink {
  int u, v;
  double w;
  int line;
};

Network build_network(int n, bool directed, bool self_loops,
                      const std::vector<PendingLink>& links) {
  Network net(n, directed, self_loops);
  for (const PendingLink& l : links) {
    try {
      net.add_link(l.u, l.v, l.w);
    } catch (const std::invalid_argument& e) {
      throw ParseError(l.line, e.what());
    }
  }
  return net;
}

}  // namespace

int LabelTable::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

LabelTable LabelTable::numeric(int n) {
  LabelTable t;
  t.labels.reserve(n);
  for (int i = 1; i <= n; ++i) t.labels.push_back(std::to_string(i));
  return t;
}

ParsedNetwork parse_pajek(std::istream& in) {
  enum class Section { none, vertices, arcs, edges };
  Section section = Section::none;
  int n = -1;
  LabelTable labels;
  struct PajekLink {
    int u, v;
    double w;
    int line;
    bool undirected;
  };
  std::vector<PajekLink> links;
  bool saw_arcs = false, saw_loop = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string trimmed = raw;
    const auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    trimmed.erase(0, first);
    if (trimmed[0] == '%') continue;

    if (trimmed[0] == '*') {
      const auto toks = split_ws(trimmed);
      const std::string kind = lower(toks[0]);
      if (kind == "*vertices") {
        if (toks.size() < 2) throw ParseError(lineno, "*Vertices needs a count");
        try {
          n = std::stoi(toks[1]);
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad vertex count '" + toks[1] + "'");
        }
        if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
        labels = LabelTable::numeric(n);
        section = Section::vertices;
      } else if (kind == "*arcs") {
        if (n < 0) throw ParseError(lineno, "*Arcs before *Vertices");
        saw_arcs = true;
        section = Section::arcs;
      } else if (kind == "*edges") {
        if (n < 0) throw ParseError(lineno, "*Edges before *Vertices");
        section = Section::edges;
      } else {
        throw ParseError(lineno, "unsupported section '" + toks[0] + "'");
      }
      continue;
    }

    switch (section) {
      case Section::none:
        throw ParseError(lineno, "data before *Vertices header");
      case Section::vertices: {
        std::istringstream iss(trimmed);
        int id = 0;
        if (!(iss >> id) || id < 1 || id > n)
          throw ParseError(lineno, "vertex id out of range");
        std::string rest;
        std::getline(iss, rest);
        const auto quote = rest.find('"');
        if (quote != std::string::npos) {
          const auto endq = rest.find('"', quote + 1);
          if (endq == std::string::npos)
            throw ParseError(lineno, "unterminated vertex label");
          labels.labels[id - 1] = rest.substr(quote + 1, endq - quote - 1);
        } else {
          const auto toks = split_ws(rest);
          if (!toks.empty()) labels.labels[id - 1] = toks[0];
        }
        break;
      }
      case Section::arcs:
      case Section::edges: {
        const auto toks = split_ws(trimmed);
        if (toks.size() < 2 || toks.size() > 3)
          throw ParseError(lineno, "expected 'src dst [weight]'");
        int u = 0, v = 0;
        try {
          u = std::stoi(toks[0]);
          v = std::stoi(toks[1]);
        } catch (const std::exception&) {
          throw ParseError(lineno, "bad node index");
        }
        if (u < 1 || u > n || v < 1 || v > n)
          throw ParseError(lineno, "node index out of range 1.." + std::to_string(n));
        const double w = toks.size() == 3 ? parse_weight(toks[2], lineno) : 1.0;
        if (u == v) saw_loop = true;
        links.push_back({u - 1, v - 1, w, lineno, section == Section::edges});
        break;
      }
    }
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing *Vertices header");

  const bool directed = saw_arcs;
  std::vector<PendingLink> final_links;
  for (const PajekLink& l : links) {
    final_links.push_back({l.u, l.v, l.w, l.line});
    // an *Edges line in a directed file carries both orientations
    if (directed && l.undirected && l.u != l.v)
      final_links.push_back({l.v, l.u, l.w, l.line});
  }
  return {build_network(n, directed, saw_loop, final_links), std::move(labels)};
}

ParsedNetwork parse_edgelist(std::istream& in, bool directed) {
  LabelTable labels;
  std::map<std::string, int> index;
  std::vector<PendingLink> links;
  bool saw_loop = false;

  const auto node_of = [&](const std::string& label) {
    const auto [it, fresh] = index.try_emplace(label, static_cast<int>(labels.labels.size()));
    if (fresh) labels.labels.push_back(label);
    return it->second;
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks.size() > 3)
      throw ParseError(lineno, "expected 'src dst [weight]'");
    const int u = node_of(toks[0]);
    const int v = node_of(toks[1]);
    const double w = toks.size() == 3 ? parse_weight(toks[2], lineno) : 1.0;
    if (u == v) saw_loop = true;
    links.push_back({u, v, w, lineno});
  }
  if (labels.labels.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "no nodes");
  const int n = static_cast<int>(labels.labels.size());
  return {build_network(n, directed, saw_loop, links), std::move(labels)};
}

void write_edgelist(std::ostream& out, const Network& net, const LabelTable* labels) {
  const LabelTable fallback =
      labels ? LabelTable{} : LabelTable::numeric(net.node_count());
  const auto& table = labels ? *labels : fallback;
  for (const Link& l : net.links())
    out << table.labels[l.source] << ' ' << table.labels[l.target] << ' '
        << fmt(l.weight) << '\n';
}

void write_pajek(std::ostream& out, const Network& net, const LabelTable* labels) {
  out << "*Vertices " << net.node_count() << '\n';
  for (int i = 0; i < net.node_count(); ++i) {
    out << (i + 1);
    if (labels) out << " \"" << labels->labels[i] << '"';
    out << '\n';
  }
  out << (net.directed() ? "*Arcs" : "*Edges") << '\n';
  for (const Link& l : net.links())
    out << (l.source + 1) << ' ' << (l.target + 1) << ' ' << fmt(l.weight) << '\n';
}

InteractionMatrix parse_interaction_matrix(std::istream& in) {
  std::vector<std::pair<std::string, int>> tokens;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    for (const auto& t : split_ws(raw)) tokens.emplace_back(t, lineno);
  }
  if (tokens.empty()) throw ParseError(1, "empty matrix file");
  int n = 0;
  try {
    n = std::stoi(tokens[0].first);
  } catch (const std::exception&) {
    throw ParseError(tokens[0].second, "expected matrix order");
  }
  if (n < 1) throw ParseError(tokens[0].second, "matrix order must be >= 1");
  const std::size_t need = static_cast<std::size_t>(n) * n;
  const std::size_t have = tokens.size() - 1;
  if (have != need && have != need + static_cast<std::size_t>(n))
    throw ParseError(tokens.back().second,
                     "expected " + std::to_string(need) + " matrix entries (plus an optional growth-rate row), got " +
                         std::to_string(have));
  const auto value_at = [&](std::size_t k) {
    const auto& [tok, line] = tokens[k + 1];
    try {
      const double v = std::stod(tok);
      if (!std::isfinite(v)) throw std::invalid_argument("not finite");
      return v;
    } catch (const std::exception&) {
      throw ParseError(line, "bad matrix entry '" + tok + "'");
    }
  };
  InteractionMatrix m;
  m.beta.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.beta(i, j) = value_at(static_cast<std::size_t>(i) * n + j);
  m.growth = Eigen::VectorXd::Zero(n);
  if (have == need + static_cast<std::size_t>(n))
    for (int i = 0; i < n; ++i) m.growth(i) = value_at(need + i);
  return m;
}

Network matrix_to_foodweb(const InteractionMatrix& m) {
  const int n = m.n();
  Network net(n, true, false);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double a = m.beta(i, j);
      const double b = m.beta(j, i);
      if (a > 0 && b > 0) {  // mutualist: both terms pass through
        net.add_link(i, j, a);
        net.add_link(j, i, b);
      } else if (a < 0 && b < 0) {  // competitive: swapped, signs flipped
        net.add_link(i, j, -b);
        net.add_link(j, i, -a);
      } else if (a > 0 && b < 0) {  // resource flows to the beneficiary
        net.add_link(j, i, a - b);
      } else if (a < 0 && b > 0) {
        net.add_link(i, j, b - a);
      } else if (a > 0) {  // one-sided cases: zero side contributes nothing
        net.add_link(i, j, a);
      } else if (b > 0) {
        net.add_link(j, i, b);
      } else if (a < 0) {
        net.add_link(j, i, -a);
      } else if (b < 0) {
        net.add_link(i, j, -b);
      }
    }
  }
  return net;
}

void write_report(std::ostream& out, const ReportBundle& bundle, ReportFormat format) {
  if (format == ReportFormat::tsv) {
    out << "nodes\t" << bundle.nodes << '\n';
    out << "links\t" << bundle.links << '\n';
    out << "measure\t" << bundle.measure << '\n';
    out << "c_bits\t" << fmt(bundle.c_bits) << '\n';
    if (bundle.detail) {
      const auto& d = *bundle.detail;
      out << "prefix_bits\t" << d.prefix_bits << '\n';
      out << "log2_omega_linklists\t" << fmt(d.log2_omega_linklists) << '\n';
      out << "log2_renumberings\t" << fmt(d.log2_renumberings) << '\n';
      out << "total_bits\t" << fmt(d.total_bits) << '\n';
      out << "ceil_variant\t" << (d.ceil_variant ? 1 : 0) << '\n';
      out << "labelled_variant\t" << (d.labelled_variant ? 1 : 0) << '\n';
    }
    if (bundle.ma) {
      out << "mutual_information\t" << fmt(bundle.ma->mutual_information) << '\n';
      out << "entropy\t" << fmt(bundle.ma->entropy) << '\n';
      out << "ma\t" << fmt(bundle.ma->ma) << '\n';
      out << "ma_log_base\t" << bundle.ma_base << '\n';
    }
    if (bundle.ensemble) {
      const auto& e = *bundle.ensemble;
      out << "samples\t" << e.samples << '\n';
      out << "mean_ln_c\t" << fmt(e.mean_ln_c) << '\n';
      out << "std_ln_c\t" << fmt(e.std_ln_c) << '\n';
      out << "geometric_mean_c\t" << fmt(e.geometric_mean_c) << '\n';
      out << "replica_ln_c\t";
      for (std::size_t k = 0; k < e.ln_c_values.size(); ++k)
        out << (k ? " " : "") << fmt(e.ln_c_values[k]);
      out << '\n';
    }
    if (bundle.significance) {
      const auto& s = *bundle.significance;
      out << "c_real\t" << fmt(s.c_real) << '\n';
      out << "surplus\t" << fmt(s.surplus) << '\n';
      out << "sigma\t" << (std::isinf(s.sigma) ? "inf" : fmt(s.sigma)) << '\n';
    }
    return;
  }

  nlohmann::ordered_json j;
  j["nodes"] = bundle.nodes;
  j["links"] = bundle.links;
  j["measure"] = bundle.measure;
  j["c_bits"] = bundle.c_bits;
  if (bundle.detail) {
    const auto& d = *bundle.detail;
    j["detail"] = {{"prefix_bits", d.prefix_bits},
                   {"log2_omega_linklists", d.log2_omega_linklists},
                   {"log2_renumberings", d.log2_renumberings},
                   {"total_bits", d.total_bits},
                   {"ceil_variant", d.ceil_variant},
                   {"labelled_variant", d.labelled_variant}};
  }
  if (bundle.ma) {
    j["ma"] = {{"mutual_information", bundle.ma->mutual_information},
               {"entropy", bundle.ma->entropy},
               {"ma", bundle.ma->ma},
               {"log_base", bundle.ma_base}};
  }
  if (bundle.ensemble) {
    const auto& e = *bundle.ensemble;
    j["ensemble"] = {{"samples", e.samples},
                     {"mean_ln_c", e.mean_ln_c},
                     {"std_ln_c", e.std_ln_c},
                     {"geometric_mean_c", e.geometric_mean_c},
                     {"replica_ln_c", e.ln_c_values}};
  }
  if (bundle.significance) {
    const auto& s = *bundle.significance;
    j["significance"] = {{"c_real", s.c_real}, {"surplus", s.surplus}};
    if (std::isinf(s.sigma))
      j["significance"]["sigma"] = "inf";
    else
      j["significance"]["sigma"] = s.sigma;
  }
  out << j.dump(2) << '\n';
}

ReportBundle parse_report_tsv(std::istream& in) {
  ReportBundle bundle;
  ComplexityReport detail;
  MAResult ma;
  EnsembleStats ensemble;
  SignificanceReport sig;
  bool has_detail = false, has_ma = false, has_ensemble = false, has_sig = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected key<TAB>value");
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    const auto num = [&] { return std::stod(value); };
    if (key == "nodes") bundle.nodes = std::stoi(value);
    else if (key == "links") bundle.links = std::stoull(value);
    else if (key == "measure") bundle.measure = value;
    else if (key == "c_bits") bundle.c_bits = num();
    else if (key == "prefix_bits") { detail.prefix_bits = std::stoi(value); has_detail = true; }
    else if (key == "log2_omega_linklists") { detail.log2_omega_linklists = num(); has_detail = true; }
    else if (key == "log2_renumberings") { detail.log2_renumberings = num(); has_detail = true; }
    else if (key == "total_bits") { detail.total_bits = num(); has_detail = true; }
    else if (key == "ceil_variant") { detail.ceil_variant = value == "1"; has_detail = true; }
    else if (key == "labelled_variant") { detail.labelled_variant = value == "1"; has_detail = true; }
    else if (key == "mutual_information") { ma.mutual_information = num(); has_ma = true; }
    else if (key == "entropy") { ma.entropy = num(); has_ma = true; }
    else if (key == "ma") { ma.ma = num(); has_ma = true; }
    else if (key == "ma_log_base") bundle.ma_base = value;
    else if (key == "samples") { ensemble.samples = std::stoull(value); has_ensemble = true; }
    else if (key == "mean_ln_c") { ensemble.mean_ln_c = num(); has_ensemble = true; }
    else if (key == "std_ln_c") { ensemble.std_ln_c = num(); has_ensemble = true; }
    else if (key == "geometric_mean_c") { ensemble.geometric_mean_c = num(); has_ensemble = true; }
    else if (key == "replica_ln_c") {
      std::istringstream iss(value);
      double v = 0.0;
      while (iss >> v) ensemble.ln_c_values.push_back(v);
      has_ensemble = true;
    } else if (key == "c_real") { sig.c_real = num(); has_sig = true; }
    else if (key == "surplus") { sig.surplus = num(); has_sig = true; }
    else if (key == "sigma") { sig.sigma = num(); has_sig = true; }
    else throw ParseError(lineno, "unknown report field '" + key + "'");
  }
  if (has_detail) bundle.detail = detail;
  if (has_ma) bundle.ma = ma;
  if (has_ensemble) bundle.ensemble = ensemble;
  if (has_sig) bundle.significance = sig;
  return bundle;
}

}  // namespace netcomplexity
