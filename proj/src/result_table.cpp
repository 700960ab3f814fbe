#include "leveldiv/result_table.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"

namespace leveldiv {

std::string format_payoff(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

ResultTable::ResultTable(std::vector<std::string> player_labels)
    : labels_(std::move(player_labels)) {}

void ResultTable::add_row(ValueId value, const Allocation& payoffs) {
  ResultRow row{value, payoffs, std::accumulate(payoffs.begin(), payoffs.end(), 0.0), {}, {}};
  rows_.push_back(std::move(row));
}

void ResultTable::add_exact_row(ValueId value, const Allocation& payoffs,
                                const std::vector<Rational>& exact) {
  ResultRow row{value, payoffs, std::accumulate(payoffs.begin(), payoffs.end(), 0.0), {}, {}};
  Rational total;
  for (const Rational& q : exact) {
    row.exact.push_back(q.to_string());
    total = total + q;
  }
  row.exact_total = total.to_string();
  rows_.push_back(std::move(row));
}

std::string ResultTable::render_text() const {
  const std::size_t columns = labels_.size() + 2;  // value, players..., total
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  header.emplace_back("value");
  header.insert(header.end(), labels_.begin(), labels_.end());
  header.emplace_back("total");
  cells.push_back(std::move(header));
  for (const ResultRow& row : rows_) {
    std::vector<std::string> line;
    line.emplace_back(value_tag(row.value));
    if (row.exact.empty()) {
      for (double x : row.payoffs) line.push_back(format_payoff(x));
      line.push_back(format_payoff(row.total));
    } else {
      line.insert(line.end(), row.exact.begin(), row.exact.end());
      line.push_back(row.exact_total);
    }
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(columns, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < columns; ++c) widths[c] = std::max(widths[c], line[c].size());

  std::string out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < columns; ++c) {
      const std::string& cell = line[c];
      if (c == 0) {
        out += cell;
        out.append(widths[c] - cell.size(), ' ');
      } else {
        out.append(2 + widths[c] - cell.size(), ' ');
        out += cell;
      }
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::render_json() const {
  nlohmann::json doc;
  doc["players"] = labels_;
  doc["values"] = nlohmann::json::array();
  for (const ResultRow& row : rows_) {
    nlohmann::json entry;
    entry["value"] = value_tag(row.value);
    entry["payoffs"] = row.payoffs;
    entry["total"] = row.total;
    if (!row.exact.empty()) {
      entry["exact"] = row.exact;
      entry["exact_total"] = row.exact_total;
    }
    doc["values"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace leveldiv
