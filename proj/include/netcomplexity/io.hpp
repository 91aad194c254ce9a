#pragma once

#include "netcomplexity/complexity.hpp"
#include "netcomplexity/network.hpp"
#include "netcomplexity/neutral_model.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcomplexity {

/// Bijective node index <-> external label map.
struct LabelTable {
  std::vector<std::string> labels;  // by node index

  int index_of(const std::string& label) const;
  static LabelTable numeric(int n);  // "1".."n"
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedNetwork {
  Network net;
  LabelTable labels;
};

/// Pajek subset: *Vertices with optional labelled vertex lines, then *Arcs
/// (directed) and/or *Edges sections; "src dst [weight]" per line, 1-based.
/// A file with only *Edges yields an undirected network; *Edges lines in a
/// directed file add both orientations. Any self-loop line enables the
/// network's self-loop policy. Other section kinds are rejected.
ParsedNetwork parse_pajek(std::istream& in);

/// Whitespace edge list "src dst [weight]" with '#' comments; labels indexed
/// in first-appearance order.
ParsedNetwork parse_edgelist(std::istream& in, bool directed);

void write_edgelist(std::ostream& out, const Network& net,
                    const LabelTable* labels = nullptr);
void write_pajek(std::ostream& out, const Network& net,
                 const LabelTable* labels = nullptr);

/// Signed species interaction matrix awaiting foodweb conversion; growth
/// rates are carried but unused by the conversion.
struct InteractionMatrix {
  Eigen::MatrixXd beta;
  Eigen::VectorXd growth;

  int n() const { return static_cast<int>(beta.rows()); }
};

/// Matrix file: '#' comments, an integer n, n rows of n reals, then an
/// optional row of n growth rates.
InteractionMatrix parse_interaction_matrix(std::istream& in);

/// Directed positive-weight foodweb from the signed interactions, pairwise
/// over i < j (diagonal ignored):
///   both positive  -> i->j weight b_ij and j->i weight b_ji
///   both negative  -> i->j weight |b_ji| and j->i weight |b_ij|
///   opposite signs -> one link toward the positive-side species, weight
///                     |b_ij| + |b_ji|
/// Pairs with both entries zero produce no link.
Network matrix_to_foodweb(const InteractionMatrix& m);

enum class ReportFormat { json, tsv };

/// Everything a run may want to report; optional blocks are omitted from the
/// output when absent. An infinite sigma serializes as the string "inf".
struct ReportBundle {
  int nodes = 0;
  std::uint64_t links = 0;
  std::string measure;  // "unweighted" | "weighted" | "labelled"
  double c_bits = 0.0;
  std::optional<ComplexityReport> detail;
  std::optional<MAResult> ma;
  std::string ma_base;  // "2" or "e" when ma is present
  std::optional<EnsembleStats> ensemble;
  std::optional<SignificanceReport> significance;
};

void write_report(std::ostream& out, const ReportBundle& bundle, ReportFormat format);

/// Reads back a TSV report produced by write_report.
ReportBundle parse_report_tsv(std::istream& in);

}  // namespace netcomplexity
