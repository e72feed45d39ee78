// mqa: command-line front end.
//
//   mqa classify [--json] [--external] [--oracle] [--certificate] [--diagram] LINK...
//   mqa reduce | det | diagram LINK...
//   mqa equal LINK LINK
//   mqa enumerate -p 3 --max-numerator 5 [--epsilon E] [--json | --csv] [--summary-only]
//   mqa certificate LINK...        (or: mqa certificate --verify FILE)
//
// With no LINK arguments, links are read from stdin, one per line; blank lines
// and lines starting with '#' are skipped. Exit status: 0 ok, 2 if any input
// failed to parse (the batch keeps going), 3 on an internal consistency failure,
// 1 for other errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mqa/certificate.hpp"
#include "mqa/classify.hpp"
#include "mqa/diagram.hpp"
#include "mqa/montesinos.hpp"
#include "mqa/notation.hpp"
#include "mqa/report.hpp"

namespace {

constexpr int kParseFailure = 2;
constexpr int kConsistencyFailure = 3;

struct Input {
  std::string text;
  std::size_t line = 0;  // 0 for command-line arguments
};

std::vector<Input> gather(const std::vector<std::string>& args) {
  std::vector<Input> out;
  if (!args.empty()) {
    for (const auto& a : args) out.push_back({a, 0});
    return out;
  }
  std::string line;
  std::size_t n = 0;
  while (std::getline(std::cin, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back({line.substr(first, last - first + 1), n});
  }
  return out;
}

void report_parse_error(const Input& in, const mqa::Error& err) {
  std::cerr << "error: ";
  if (in.line) std::cerr << "line " << in.line << ": ";
  std::cerr << "'" << in.text << "': " << err.what() << "\n";
}

// Runs `body` on each input. Parse failures are reported and skipped (exit 2),
// other per-link errors likewise (exit 1); consistency failures abort (exit 3).
template <typename Body>
int for_each_input(const std::vector<std::string>& args, Body body) {
  int status = 0;
  for (const auto& in : gather(args)) {
    std::optional<mqa::MontesinosLink> link;
    try {
      link.emplace(mqa::parse_montesinos(in.text));
    } catch (const mqa::Error& err) {
      // Includes well-formed text that is not a link (zero tassel, 1/n-only sums).
      report_parse_error(in, err);
      status = kParseFailure;
      continue;
    }
    try {
      body(in.text, *link);
    } catch (const mqa::ConsistencyError& err) {
      std::cerr << "consistency failure: " << err.what() << "\n";
      return kConsistencyFailure;
    } catch (const mqa::Error& err) {
      report_parse_error(in, err);
      status = std::max(status, 1);
    }
  }
  return status;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-alternating classification of Montesinos links"};
  app.require_subcommand(1);

  bool json = false;
  bool external = false;
  bool oracle = false;
  std::size_t max_crossings = mqa::kDefaultOracleLimit;
  std::vector<std::string> links;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("links", links, "Link expressions, e.g. \"M(-1;3/2,4/3,7/4)\" or \"P(0;3,3,-2)\"");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify links as QA, NQA or UNDETERMINED");
  bool with_certificate = false;
  bool with_diagram = false;
  add_common(classify_cmd);
  classify_cmd->add_flag("--json", json, "One JSON object per line");
  classify_cmd->add_flag("--external", external, "Also apply cited results from outside the core theory");
  classify_cmd->add_flag("--oracle", oracle, "Cross-check the determinant on the standard diagram");
  classify_cmd->add_option("--max-crossings", max_crossings, "Largest diagram the oracle will evaluate");
  classify_cmd->add_flag("--certificate", with_certificate, "Attach a QA certificate");
  classify_cmd->add_flag("--diagram", with_diagram, "Attach the PD code");

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced form");
  add_common(reduce_cmd);

  auto* det_cmd = app.add_subcommand("det", "Print the determinant");
  add_common(det_cmd);
  det_cmd->add_flag("--oracle", oracle, "Cross-check on the standard diagram");
  det_cmd->add_option("--max-crossings", max_crossings, "Largest diagram the oracle will evaluate");

  auto* equal_cmd = app.add_subcommand("equal", "Decide whether two expressions give the same link class");
  std::string lhs, rhs;
  equal_cmd->add_option("first", lhs)->required();
  equal_cmd->add_option("second", rhs)->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "Print the PD code of the standard diagram");
  add_common(diagram_cmd);

  auto* cert_cmd = app.add_subcommand("certificate", "Build, or verify, a QA certificate");
  std::string verify_file;
  add_common(cert_cmd);
  cert_cmd->add_option("--verify", verify_file, "Verify a serialized certificate ('-' for stdin)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Classify every reduced link in a parameter box");
  std::size_t p = 3;
  long long max_numerator = 5;
  std::optional<long long> epsilon_filter;
  bool csv = false;
  bool summary_only = false;
  enum_cmd->add_option("-p,--tangles", p, "Number of rational tangles (>= 3)");
  enum_cmd->add_option("--max-numerator", max_numerator, "Largest tangle numerator (>= 2)");
  enum_cmd->add_option("--epsilon", epsilon_filter, "Only links with this epsilon");
  auto* json_flag = enum_cmd->add_flag("--json", json, "Reports and summary as JSON lines");
  enum_cmd->add_flag("--csv", csv, "Summary as CSV")->excludes(json_flag);
  enum_cmd->add_flag("--summary-only", summary_only, "Suppress per-link reports");
  enum_cmd->add_flag("--external", external, "Also apply cited results");
  enum_cmd->add_flag("--oracle", oracle, "Cross-check determinants on diagrams");
  enum_cmd->add_option("--max-crossings", max_crossings, "Largest diagram the oracle will evaluate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      const mqa::ReportOptions options{external, oracle, max_crossings, with_certificate, with_diagram};
      return for_each_input(links, [&](const std::string& text, const mqa::MontesinosLink& link) {
        const mqa::Report r = mqa::make_report(text, link, options);
        std::cout << (json ? mqa::report_to_json(r) : mqa::report_to_text(r)) << "\n";
      });
    }
    if (*reduce_cmd) {
      return for_each_input(links, [](const std::string&, const mqa::MontesinosLink& link) {
        std::cout << mqa::format_link(mqa::reduce(link)) << "\n";
      });
    }
    if (*det_cmd) {
      return for_each_input(links, [&](const std::string& text, const mqa::MontesinosLink& link) {
        const mqa::Integer det = mqa::determinant(link);
        if (oracle) {
          const mqa::Integer check = mqa::det_oracle(mqa::standard_diagram(link), max_crossings);
          if (check != det) throw mqa::ConsistencyError("oracle determinant " + check.str() + " for " + text);
        }
        std::cout << det << "\n";
      });
    }
    if (*equal_cmd) {
      std::optional<mqa::MontesinosLink> a, b;
      int status = for_each_input({lhs}, [&](const std::string&, const mqa::MontesinosLink& l) { a = l; });
      status = std::max(status, for_each_input({rhs}, [&](const std::string&, const mqa::MontesinosLink& l) { b = l; }));
      if (status) return status;
      std::cout << (mqa::equivalent(*a, *b) ? "true" : "false") << "\n";
      return 0;
    }
    if (*diagram_cmd) {
      return for_each_input(links, [](const std::string&, const mqa::MontesinosLink& link) {
        std::cout << mqa::to_pd_string(mqa::standard_diagram(link)) << "\n";
      });
    }
    if (*cert_cmd) {
      if (!verify_file.empty()) {
        std::string text;
        if (verify_file == "-") {
          text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
          std::ifstream in(verify_file);
          if (!in) {
            std::cerr << "error: cannot read " << verify_file << "\n";
            return 1;
          }
          text.assign(std::istreambuf_iterator<char>(in), {});
        }
        std::optional<mqa::Certificate> cert;
        try {
          cert.emplace(mqa::parse_certificate(text));
        } catch (const mqa::Error& err) {
          std::cerr << "error: " << err.what() << "\n";
          return kParseFailure;
        }
        const mqa::VerifyResult v = mqa::verify_certificate(*cert);
        std::cout << (v.ok ? "VERIFIED" : "REJECTED: " + v.failure) << "\n";
        return v.ok ? 0 : 1;
      }
      return for_each_input(links, [](const std::string& text, const mqa::MontesinosLink& link) {
        const mqa::Certificate cert = mqa::build_certificate(link);
        const mqa::VerifyResult v = mqa::verify_certificate(cert);
        if (!v.ok) throw mqa::ConsistencyError("built certificate fails verification for " + text + ": " + v.failure);
        std::cout << mqa::serialize_certificate(cert) << "VERIFIED\n";
      });
    }
    if (*enum_cmd) {
      mqa::EnumerationOptions eo = mqa::default_enumeration(p, max_numerator);
      if (epsilon_filter) eo.epsilon_min = eo.epsilon_max = *epsilon_filter;
      const mqa::ReportOptions ro{external, oracle, max_crossings, false, false};
      mqa::EnumerationSummary s;
      mqa::enumerate_reduced(eo, [&](const mqa::MontesinosLink& link) {
        const mqa::Report r = mqa::make_report(mqa::format_link(link), link, ro);
        ++s.total;
        ++s.by_rule[r.verdict.rule];
        if (r.verdict.status == mqa::Status::Undetermined) s.undetermined.push_back(link);
        if (!summary_only && !csv) std::cout << (json ? mqa::report_to_json(r) : mqa::report_to_text(r)) << "\n";
      });
      if (csv) {
        std::cout << "rule,status,count\n";
        for (const auto& [rule, count] : s.by_rule) {
          std::cout << mqa::to_string(rule) << "," << mqa::to_string(mqa::status_of(rule)) << "," << count << "\n";
        }
        std::cout << "total,," << s.total << "\n\nundetermined\n";
        for (const auto& l : s.undetermined) std::cout << csv_quote(mqa::format_link(l)) << "\n";
      } else if (json) {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [rule, count] : s.by_rule) counts[mqa::to_string(rule)] = count;
        nlohmann::json und = nlohmann::json::array();
        for (const auto& l : s.undetermined) und.push_back(mqa::format_link(l));
        std::cout << nlohmann::json{{"summary", {{"total", s.total}, {"by_rule", counts}, {"undetermined", und}}}}.dump()
                  << "\n";
      } else {
        std::cout << "total " << s.total << "\n";
        for (const auto& [rule, count] : s.by_rule) std::cout << "  " << mqa::to_string(rule) << " " << count << "\n";
        std::cout << "undetermined " << s.undetermined.size() << "\n";
        for (const auto& l : s.undetermined) std::cout << "  " << mqa::format_link(l) << "\n";
      }
      return 0;
    }
  } catch (const mqa::ConsistencyError& err) {
    std::cerr << "consistency failure: " << err.what() << "\n";
    return kConsistencyFailure;
  } catch (const mqa::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
