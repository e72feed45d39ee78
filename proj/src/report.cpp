#include "mqa/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mqa/certificate.hpp"
#include "mqa/diagram.hpp"
#include "mqa/notation.hpp"

namespace mqa {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return json(v.convert_to<long long>());
  }
  return json(v.str());
}

Integer integer_from(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

json witness_json(const Witness& w) {
  if (const auto* pair = std::get_if<IndexPair>(&w)) return json{{"type", "pair"}, {"i", pair->i}, {"j", pair->j}};
  if (const auto* f = std::get_if<FoliationWitness>(&w)) {
    return json{{"type", "foliation"},
                {"m", integer_json(f->m)},
                {"a", integer_json(f->a)},
                {"sigma", f->sigma},
                {"mirrored", f->mirrored}};
  }
  if (const auto* c = std::get_if<ExternalCitation>(&w)) return json{{"type", "external"}, {"citation", c->citation}};
  return json(nullptr);
}

Witness witness_from(const json& j) {
  if (j.is_null()) return {};
  const std::string type = j.at("type").get<std::string>();
  if (type == "pair") return IndexPair{j.at("i").get<std::size_t>(), j.at("j").get<std::size_t>()};
  if (type == "foliation") {
    return FoliationWitness{integer_from(j.at("m")), integer_from(j.at("a")),
                            j.at("sigma").get<std::vector<std::size_t>>(), j.at("mirrored").get<bool>()};
  }
  if (type == "external") return ExternalCitation{j.at("citation").get<std::string>()};
  throw Error("unknown witness type '" + type + "'");
}

Rule rule_from(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(Rule::UNDETERMINED); ++k) {
    const auto r = static_cast<Rule>(k);
    if (name == to_string(r)) return r;
  }
  throw Error("unknown rule '" + name + "'");
}

}  // namespace

Report make_report(const std::string& input, const ReportOptions& options) {
  return make_report(input, parse_montesinos(input), options);
}

Report make_report(const std::string& input, const MontesinosLink& link, const ReportOptions& options) {
  Report r;
  r.input = input;
  const MontesinosLink reduced = reduce(link);
  r.reduced = format_link(reduced);
  r.epsilon = epsilon(link);
  r.p = link.p();
  r.determinant = determinant(link);
  r.verdict = classify(link, ClassifyOptions{options.use_external});
  if (options.oracle) {
    // Diagrams over the crossing bound are skipped, not refused.
    const PlanarDiagram d = standard_diagram(link);
    if (d.crossing_count() <= options.max_crossings) r.oracle_determinant = det_oracle(d, options.max_crossings);
    if (r.oracle_determinant && *r.oracle_determinant != r.determinant) {
      throw ConsistencyError("diagram determinant " + r.oracle_determinant->str() + " disagrees with " +
                             r.determinant.str() + " for " + input);
    }
  }
  if (options.with_certificate && r.verdict.status == Status::QA) {
    r.certificate = serialize_certificate(build_certificate(link));
  }
  if (options.with_diagram) r.diagram = to_pd_string(standard_diagram(link));
  return r;
}

std::string report_to_json(const Report& r) {
  json j{{"input", r.input},
         {"reduced", r.reduced},
         {"epsilon", integer_json(r.epsilon)},
         {"p", r.p},
         {"determinant", integer_json(r.determinant)},
         {"status", to_string(r.verdict.status)},
         {"rule", to_string(r.verdict.rule)},
         {"witness", witness_json(r.verdict.witness)},
         {"notes", r.verdict.notes}};
  if (r.oracle_determinant) j["oracle_determinant"] = integer_json(*r.oracle_determinant);
  if (r.certificate) j["certificate"] = *r.certificate;
  if (r.diagram) j["diagram"] = *r.diagram;
  return j.dump();
}

Report report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.input = j.at("input").get<std::string>();
    r.reduced = j.at("reduced").get<std::string>();
    r.epsilon = integer_from(j.at("epsilon"));
    r.p = j.at("p").get<std::size_t>();
    r.determinant = integer_from(j.at("determinant"));
    r.verdict.rule = rule_from(j.at("rule").get<std::string>());
    r.verdict.status = status_of(r.verdict.rule);
    if (j.at("status").get<std::string>() != to_string(r.verdict.status)) throw Error("status does not match rule");
    r.verdict.witness = witness_from(j.at("witness"));
    r.verdict.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("oracle_determinant")) r.oracle_determinant = integer_from(j.at("oracle_determinant"));
    if (j.contains("certificate")) r.certificate = j.at("certificate").get<std::string>();
    if (j.contains("diagram")) r.diagram = j.at("diagram").get<std::string>();
    return r;
  } catch (const json::exception& err) {
    throw Error(std::string("bad report JSON: ") + err.what());
  }
}

std::string witness_to_text(const Witness& w) {
  std::ostringstream out;
  if (const auto* pair = std::get_if<IndexPair>(&w)) {
    out << "(i,j)=(" << pair->i << "," << pair->j << ")";
  } else if (const auto* f = std::get_if<FoliationWitness>(&w)) {
    out << "m=" << f->m << " a=" << f->a << " sigma=(";
    for (std::size_t k = 0; k < f->sigma.size(); ++k) out << (k ? "," : "") << f->sigma[k];
    out << ")" << (f->mirrored ? " on mirror" : "");
  } else if (const auto* c = std::get_if<ExternalCitation>(&w)) {
    out << c->citation;
  }
  return out.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.input << ": " << to_string(r.verdict.status) << " [" << to_string(r.verdict.rule) << "]";
  const std::string w = witness_to_text(r.verdict.witness);
  if (!w.empty() && !std::holds_alternative<ExternalCitation>(r.verdict.witness)) out << " witness " << w;
  out << " epsilon=" << r.epsilon << " p=" << r.p << " det=" << r.determinant << " reduced=" << r.reduced;
  if (r.oracle_determinant) out << " oracle_det=" << *r.oracle_determinant;
  for (const auto& note : r.verdict.notes) out << "\n  note: " << note;
  if (r.diagram) out << "\n  pd: " << *r.diagram;
  if (r.certificate) {
    std::istringstream lines(*r.certificate);
    std::string line;
    while (std::getline(lines, line)) out << "\n  | " << line;
  }
  return out.str();
}

std::vector<Fraction> reduced_tangles(const Integer& max_numerator) {
  std::vector<Fraction> out;
  for (Integer a = 2; a <= max_numerator; ++a) {
    for (Integer b = 1; b < a; ++b) {
      if (boost::multiprecision::gcd(a, b) == 1) out.push_back(Fraction::make(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EnumerationOptions default_enumeration(std::size_t p, const Integer& max_numerator) {
  EnumerationOptions o;
  o.p = p;
  o.max_numerator = max_numerator;
  o.epsilon_min = -static_cast<long long>(p) - 1;
  o.epsilon_max = 1;
  return o;
}

void enumerate_reduced(const EnumerationOptions& options, const std::function<void(const MontesinosLink&)>& visit) {
  if (options.p < 3) throw Error("enumeration needs p >= 3");
  if (options.max_numerator < 2) throw Error("enumeration needs max_numerator >= 2");
  const std::vector<Fraction> tangles = reduced_tangles(options.max_numerator);
  const double candidates = std::pow(static_cast<double>(tangles.size()), static_cast<double>(options.p));
  if (candidates > options.max_candidates) {
    throw Error("enumeration too large: " + std::to_string(tangles.size()) + "^" + std::to_string(options.p) +
                " candidate tuples exceeds the cap");
  }
  std::vector<Fraction> inverse(tangles.size());
  for (std::size_t k = 0; k < tangles.size(); ++k) inverse[k] = tangles[k].reciprocal();

  const std::size_t p = options.p;
  std::vector<std::size_t> idx(p, 0);
  std::vector<Fraction> cycle(p);
  std::vector<Fraction> params(p);
  for (;;) {
    for (std::size_t k = 0; k < p; ++k) cycle[k] = inverse[idx[k]];
    const DihedralImage im = least_dihedral_image(cycle);
    if (im.rotation == 0 && !im.reversed) {
      for (std::size_t k = 0; k < p; ++k) params[k] = tangles[idx[k]];
      for (Integer e = options.epsilon_min; e <= options.epsilon_max; ++e) visit(normalize_input(e, params));
    }
    std::size_t k = p;
    while (k > 0) {
      --k;
      if (++idx[k] < tangles.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

EnumerationSummary summarize(const EnumerationOptions& options, ClassifyOptions classify_options,
                             const std::function<void(const MontesinosLink&, const Verdict&)>& each) {
  EnumerationSummary s;
  enumerate_reduced(options, [&](const MontesinosLink& link) {
    ++s.total;
    try {
      const Verdict v = classify(link, classify_options);
      ++s.by_rule[v.rule];
      if (v.status == Status::Undetermined) s.undetermined.push_back(link);
      if (each) each(link, v);
    } catch (const ConsistencyError&) {
      ++s.collisions;
    }
  });
  return s;
}

}  // namespace mqa
