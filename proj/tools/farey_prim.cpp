// farey-prim: primitive elements of F(a, b) indexed by rationals.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/farey_svg.hpp"
#include "fareyprim/fsequence.hpp"
#include "fareyprim/rational.hpp"
#include "fareyprim/report.hpp"
#include "fareyprim/verify.hpp"
#include "fareyprim/word_format.hpp"

namespace fp = fareyprim;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidValue = 3, kIo = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, fp::SignFilter> kSigns = {
    {"pos", fp::SignFilter::Positive}, {"neg", fp::SignFilter::Negative}, {"both", fp::SignFilter::Both}};
const std::map<std::string, fp::TableFormat> kFormats = {
    {"table", fp::TableFormat::Table}, {"json", fp::TableFormat::Json}, {"csv", fp::TableFormat::Csv}};

std::string pair_text(const fp::GenPair& p) {
  return "(" + fp::format_caret(p.first) + ", " + fp::format_caret(p.second) + ")";
}

std::string sums_text(const fp::Word& w) {
  const auto s = fp::exponent_sums(w);
  return "a " + std::to_string(s.a) + ", b " + std::to_string(s.b);
}

int cmd_word(const std::string& text, bool strict, const std::string& format) {
  const fp::Rational x =
      fp::parse_rational(text, strict ? fp::Strictness::Strict : fp::Strictness::Normalize);
  fp::Enumerator e;
  const fp::TableRow row = fp::make_row(e, x);
  const auto cert = e.certificate(x);

  nlohmann::ordered_json j;
  j["fraction"] = fp::to_string(x);
  j["cf"] = x.is_infinite() ? std::string("[]") : fp::to_string(row.cf);
  j["level"] = row.level;
  j["parity"] = fp::to_string(row.parity);
  j["parents"] = fp::parents_text(row);
  j["case"] = fp::to_string(row.kind);
  j["product"] = fp::product_text(row);
  j["word"] = fp::format_caret(row.word);
  j["letters"] = fp::format_compact(row.word);
  j["length"] = row.word.size();
  j["exponent_sums"] = sums_text(row.word);
  j["palindrome"] = cert.palindrome;
  j["palindromic_rotations"] = cert.palindromic_rotations;
  if (cert.factors) {
    j["palindromic_factors"] = fp::to_string(cert.factors->left) + " * " + fp::to_string(cert.factors->right);
  }

  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return kOk;
}

int cmd_fword(const std::string& text, const std::string& start_text) {
  const fp::CFSeq seq = fp::parse_cf(text);
  fp::GenPair start = fp::GenPair::standard();
  if (!start_text.empty()) {
    start = fp::apply_sequence(start, fp::parse_cf(start_text)).back();
  }
  const auto pairs = fp::apply_sequence(start, seq);
  std::cout << "start: " << pair_text(start) << '\n';
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    std::cout << "step " << t << " (" << seq[t] << "): " << pair_text(pairs[t]) << '\n';
  }
  const fp::GenPair& last = pairs.back();
  std::cout << "final: " << pair_text(last) << '\n';
  std::cout << "word: " << fp::format_compact(last.second) << '\n';
  std::cout << "length: " << last.second.size() << '\n';
  std::cout << "recovers (a, b): " << (last == fp::GenPair::standard() ? "yes" : "no") << '\n';

  const fp::CFSeq back = fp::reverse_negate(seq);
  const bool round_trip = fp::apply_sequence(last, back).back() == start;
  std::cout << "reverse " << fp::to_string(back) << " returns to start: " << (round_trip ? "yes" : "no")
            << '\n';
  return round_trip ? kOk : kVerifyFailed;
}

int cmd_svg(const std::string& text, bool strict, const std::string& out_path, std::int64_t depth) {
  const fp::Rational x =
      fp::parse_rational(text, strict ? fp::Strictness::Strict : fp::Strictness::Normalize);
  if (x.is_infinite()) throw UsageError("farey-svg needs a finite fraction");
  const std::string svg = fp::render_farey_svg(x, depth);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << svg;
  out.close();
  if (!out) throw IoError("failed writing " + out_path);
  return kOk;
}

// CLI11 reads "-4,-2,-3" as a cluster of short flags. Arguments that start
// with "-<digit>" are never options here, so mark them positional.
std::vector<std::string> protect_negative_numbers(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {  // CLI11 takes the vector in reverse order
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]))) a.insert(0, " ");
    args.push_back(std::move(a));
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive elements of F(a, b) enumerated by rationals", "farey-prim"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "Reject fractions not in lowest terms");

  std::int64_t max_level = 0;
  std::string sign = "pos";
  std::string format = "table";
  auto* enumerate = app.add_subcommand("enumerate", "Table of E words by Farey level");
  enumerate->add_option("--max-level", max_level, "Largest Farey level")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--sign", sign, "pos, neg or both")->check(CLI::IsMember({"pos", "neg", "both"}));
  enumerate->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

  std::string fraction;
  std::string word_format = "table";
  auto* word = app.add_subcommand("word", "Report for one rational");
  word->add_option("fraction", fraction, "p/q")->required();
  word->add_option("--format", word_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  word->add_flag("--strict", strict, "Reject fractions not in lowest terms");

  std::string sequence;
  std::string start_from;
  auto* fword = app.add_subcommand("fword", "Winding/unwinding pairs along an F-sequence");
  fword->add_option("sequence", sequence, "Comma separated entries, e.g. 3,2,4")->required();
  fword->add_option("--start-from", start_from, "Start from the pair reached by this sequence");

  std::int64_t verify_level = 0;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run every invariant suite");
  verify->add_option("--max-level", verify_level, "Largest Farey level")->required()->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string out_path;
  std::int64_t depth = 5;
  auto* svg = app.add_subcommand("farey-svg", "SVG of the Farey tessellation and the geodesic to p/q");
  svg->add_option("fraction", fraction, "p/q")->required();
  svg->add_option("-o", out_path, "Output file")->required();
  svg->add_option("--depth", depth, "Deepest Farey level drawn")->check(CLI::PositiveNumber);
  svg->add_flag("--strict", strict, "Reject fractions not in lowest terms");

  try {
    auto args = protect_negative_numbers(argc, argv);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  // Undo the marking done by protect_negative_numbers.
  auto trim = [](std::string& s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  };
  trim(fraction);
  trim(sequence);
  trim(start_from);

  try {
    if (*enumerate) {
      const auto rows = fp::enumeration_table(max_level, kSigns.at(sign));
      std::cout << fp::render_table(rows, kFormats.at(format));
      return kOk;
    }
    if (*word) return cmd_word(fraction, strict, word_format);
    if (*fword) return cmd_fword(sequence, start_from);
    if (*verify) {
      const auto report = fp::run_verification(verify_level, threads);
      std::cout << report.to_json() << '\n';
      return report.passed() ? kOk : kVerifyFailed;
    }
    if (*svg) return cmd_svg(fraction, strict, out_path, depth);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const fp::InvalidRational& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidValue;
  } catch (const fp::ArithmeticOverflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidValue;
  } catch (const std::invalid_argument& e) {
    // ParseError, InvalidSequence
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
