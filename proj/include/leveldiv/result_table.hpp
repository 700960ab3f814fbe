#pragma once

#include <string>
#include <vector>

#include "leveldiv/rational.hpp"
#include "leveldiv/values.hpp"

namespace leveldiv {

// One allocation per row, one player per column, plus a total column.
struct ResultRow {
  ValueId value;
  Allocation payoffs;
  double total = 0.0;
  // Exact forms ("103/2"); empty unless the caller computed them.
  std::vector<std::string> exact;
  std::string exact_total;
};

// Payoff formatting for tables: at most six fraction digits, trailing zeros
// trimmed, negative zero normalized away.
std::string format_payoff(double x);

class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> player_labels);

  void add_row(ValueId value, const Allocation& payoffs);
  void add_exact_row(ValueId value, const Allocation& payoffs,
                     const std::vector<Rational>& exact);

  const std::vector<std::string>& player_labels() const { return labels_; }
  const std::vector<ResultRow>& rows() const { return rows_; }

  // Aligned plain-text table. Cells show exact forms when a row has them.
  std::string render_text() const;

  // {"players": [...], "values": [{"value", "payoffs", "total", "exact"?}]}
  // serialized with two-space indentation.
  std::string render_json() const;

 private:
  std::vector<std::string> labels_;
  std::vector<ResultRow> rows_;
};

}  // namespace leveldiv
