#include "fareyprim/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fareyprim/word_format.hpp"

namespace fareyprim {

TableRow make_row(Enumerator& enumerator, Rational x, Scheme roots) {
  TableRow row;
  row.fraction = x;
  row.scheme = scheme_for(x, roots);
  if (!x.is_infinite()) row.cf = to_cf(x);
  row.level = farey_level(x);
  row.parity = parity(x);
  row.word = enumerator.word(x, row.scheme);
  row.kind = enumerator.factorization(x, row.scheme).kind;
  row.palindrome = is_palindrome(row.word);
  if (!x.is_infinite() && !x.is_zero()) {
    row.parents = parent_product(x);
    row.left_word = enumerator.word(row.parents->left, row.scheme);
    row.right_word = enumerator.word(row.parents->right, row.scheme);
  }
  return row;
}

std::vector<TableRow> enumeration_table(std::int64_t max_level, SignFilter sign) {
  Enumerator enumerator;
  std::vector<TableRow> rows;
  for (Rational x : rationals_by_level(max_level, sign)) rows.push_back(make_row(enumerator, x));
  return rows;
}

std::string parents_text(const TableRow& row) {
  if (!row.parents) return "-";
  return to_string(row.parents->left) + " + " + to_string(row.parents->right);
}

std::string product_text(const TableRow& row) {
  if (!row.parents) return format_caret(row.word);
  return format_caret(row.left_word) + " * " + format_caret(row.right_word);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> fields(const TableRow& r) {
  return {to_string(r.fraction),
          parents_text(r),
          to_string(r.parity),
          format_compact(r.word),
          product_text(r),
          format_caret(r.word),
          std::to_string(r.level),
          std::to_string(r.word.size()),
          r.fraction.is_infinite() ? std::string("[]") : to_string(r.cf),
          r.palindrome ? "true" : "false",
          to_string(r.kind)};
}

const std::vector<std::string> kColumns = {"fraction", "parents", "parity",     "word",
                                           "product",  "simplified", "level", "length",
                                           "cf",       "palindrome", "case"};

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv: {
      for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
      out << '\n';
      for (const auto& r : rows) {
        const auto f = fields(r);
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_field(f[i]);
        out << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["fraction"] = to_string(r.fraction);
        j["cf"] = r.fraction.is_infinite() ? std::string("[]") : to_string(r.cf);
        j["level"] = r.level;
        j["parity"] = to_string(r.parity);
        if (r.parents) {
          j["parents"] = {to_string(r.parents->left), to_string(r.parents->right)};
        } else {
          j["parents"] = nlohmann::ordered_json::array();
        }
        j["word"] = format_compact(r.word);
        j["product"] = product_text(r);
        j["simplified"] = format_caret(r.word);
        j["palindrome"] = r.palindrome;
        j["case"] = to_string(r.kind);
        j["length"] = r.word.size();
        arr.push_back(std::move(j));
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case TableFormat::Table: {
      // Drop the compact word column; it repeats `simplified`.
      const std::vector<std::size_t> shown = {0, 1, 2, 4, 5, 6, 7, 10};
      std::vector<std::vector<std::string>> cells;
      cells.reserve(rows.size() + 1);
      std::vector<std::string> header;
      for (auto c : shown) header.push_back(kColumns[c]);
      cells.push_back(header);
      for (const auto& r : rows) {
        const auto f = fields(r);
        std::vector<std::string> line;
        for (auto c : shown) line.push_back(f[c]);
        cells.push_back(std::move(line));
      }
      std::vector<std::size_t> width(shown.size(), 0);
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
      }
      for (const auto& line : cells) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) text += "  ";
          text += line[i];
          if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
        }
        out << text << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace fareyprim
