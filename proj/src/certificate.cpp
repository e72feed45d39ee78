#include "mqa/certificate.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "mqa/classify.hpp"
#include "mqa/notation.hpp"

namespace mqa {

const char* to_string(CertificateKind k) {
  return k == CertificateKind::AlternatingLeaf ? "AlternatingLeaf" : "InductiveChain";
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Reduce: return "reduce";
    case StepKind::FlypePositive: return "flype+";
    case StepKind::FlypeNegative: return "flype-";
    case StepKind::Reflect: return "reflect";
    case StepKind::Rotate: return "rotate";
  }
  return "?";
}

namespace {

MontesinosLink apply_step(const MontesinosLink& link, StepKind kind, std::size_t index) {
  switch (kind) {
    case StepKind::Reduce: return reduce(link);
    case StepKind::FlypePositive: return flype(link, index, FlypeSign::Positive);
    case StepKind::FlypeNegative: return flype(link, index, FlypeSign::Negative);
    case StepKind::Reflect: return reflect(link);
    case StepKind::Rotate: return rotate(link, index);
  }
  throw Error("unknown step kind");
}

void push_step(Certificate& cert, StepKind kind, std::size_t index = 0) {
  MontesinosLink next = apply_step(cert.final_form(), kind, index);
  cert.preamble.push_back(PreambleStep{kind, index, std::move(next)});
}

bool sign_uniform(const MontesinosLink& link) {
  const auto& ts = link.tangles();
  const bool positive = link.e() >= 0 && std::all_of(ts.begin(), ts.end(), [](const Fraction& t) { return t.sign() > 0; });
  const bool negative = link.e() <= 0 && std::all_of(ts.begin(), ts.end(), [](const Fraction& t) { return t.sign() < 0; });
  return positive || negative;
}

Integer connected_sum_det(const std::vector<Fraction>& tangles) {
  Integer d = 1;
  for (const auto& t : tangles) d *= abs(t.num());
  return d;
}

// Chain from the base form M(0; r_1, ..., r_n, -s): -s is last.
void build_chain(Certificate& cert) {
  const MontesinosLink& target = cert.final_form();
  const auto& ts = target.tangles();
  const std::size_t n = ts.size() - 1;
  const Fraction neg_s = ts.back();

  std::size_t min_idx = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (ts[k] < ts[min_idx]) min_idx = k;
  }
  cert.base = TangleSum{0, {ts[min_idx], neg_s}};

  std::vector<std::size_t> included{min_idx};
  for (std::size_t k = 0; k < n; ++k) {
    if (k == min_idx) continue;
    std::vector<Fraction> current;
    for (std::size_t idx : included) current.push_back(ts[idx]);
    current.push_back(neg_s);
    const auto pos = static_cast<std::size_t>(
        std::count_if(included.begin(), included.end(), [&](std::size_t idx) { return idx < k; }));

    ChainStep step;
    step.link_with_crossing = TangleSum{0, current};
    step.link_with_crossing.tangles.insert(step.link_with_crossing.tangles.begin() + static_cast<std::ptrdiff_t>(pos),
                                           Fraction(1));
    step.position = pos + 1;
    step.det_L = determinant(step.link_with_crossing);
    step.det_L0 = connected_sum_det(current);
    step.det_Linf = determinant(Integer(0), current);
    step.extension = ts[k];
    if (step.det_L != step.det_L0 + step.det_Linf || step.det_L0.is_zero() || step.det_Linf.is_zero()) {
      throw Error("internal error: determinant additivity failed while building certificate");
    }
    cert.chain.push_back(std::move(step));
    included.insert(std::upper_bound(included.begin(), included.end(), k), k);
  }
}

}  // namespace

Certificate build_certificate(const MontesinosLink& link) {
  const Verdict verdict = classify(link);
  if (verdict.status != Status::QA) throw Error("not applicable: link is not proven quasi-alternating");

  Certificate cert(link);
  switch (verdict.rule) {
    case Rule::QA_RationalNonzeroDet:
      try {
        cert.rational = to_rational(link);
      } catch (const Error&) {
        // Divergent continued fraction: the determinant alone certifies it.
      }
      break;
    case Rule::QA_EpsilonHigh:
      push_step(cert, StepKind::Reduce);
      break;
    case Rule::QA_EpsilonLow:
      push_step(cert, StepKind::Reduce);
      for (std::size_t i = 1; i <= link.p(); ++i) push_step(cert, StepKind::FlypePositive, i);
      break;
    case Rule::QA_FlypeWitnessHigh:
    case Rule::QA_FlypeWitnessLow: {
      const IndexPair w = std::get<IndexPair>(verdict.witness);
      push_step(cert, StepKind::Reduce);
      std::size_t flyped = w.i;
      if (verdict.rule == Rule::QA_FlypeWitnessLow) {
        // The mirror followed by p negative flypes is M(-1; |t̂^f|), where the
        // high case applies with the roles of i and j exchanged.
        push_step(cert, StepKind::Reflect);
        for (std::size_t i = 1; i <= link.p(); ++i) push_step(cert, StepKind::FlypeNegative, i);
        flyped = w.j;
      }
      push_step(cert, StepKind::FlypePositive, flyped);
      if (flyped != link.p()) push_step(cert, StepKind::Rotate, flyped);
      cert.kind = CertificateKind::InductiveChain;
      build_chain(cert);
      break;
    }
    default:
      throw Error("not applicable: rule " + std::string(to_string(verdict.rule)));
  }
  if (auto check = verify_certificate(cert); !check) {
    throw Error("internal error: built certificate fails verification: " + check.failure);
  }
  return cert;
}

VerifyResult verify_certificate(const Certificate& cert) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  try {
    MontesinosLink current = cert.target;
    for (std::size_t k = 0; k < cert.preamble.size(); ++k) {
      const PreambleStep& step = cert.preamble[k];
      if (apply_step(current, step.kind, step.index) != step.result) {
        return fail("preamble step " + std::to_string(k + 1) + " (" + to_string(step.kind) + ") is not legal");
      }
      current = step.result;
    }

    if (cert.kind == CertificateKind::AlternatingLeaf) {
      if (!cert.chain.empty() || cert.base) return fail("leaf certificate carries a chain");
      if (determinant(current).is_zero()) return fail("determinant is zero");
      if (current.p() <= 2) {
        if (cert.rational) {
          const RationalReduction r = to_rational(current);
          if (r.fraction != cert.rational->fraction || r.closure != cert.rational->closure) {
            return fail("rational reduction does not match");
          }
          if (abs(r.fraction.num()) != determinant(current)) return fail("rational reduction determinant mismatch");
        }
        return {};
      }
      if (diagram_class(cert.target) != DiagramClass::Alternating) return fail("not alternating");
      if (!sign_uniform(current)) return fail("final diagram is not sign-uniform (not alternating)");
      return {};
    }

    // InductiveChain
    const auto& ts = current.tangles();
    if (current.e() != 0 || ts.size() < 2) return fail("base form is not M(0; r_1, ..., r_n, -s)");
    const Fraction neg_s = ts.back();
    const Fraction s = -neg_s;
    if (s <= Fraction(1)) return fail("base form is not M(0; r_1, ..., r_n, -s) with s > 1");
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      if (ts[k] <= Fraction(0)) return fail("base form has a non-positive r");
    }
    if (!cert.base || cert.base->e != 0 || cert.base->tangles.size() != 2 || cert.base->tangles[1] != neg_s) {
      return fail("missing or malformed base link");
    }
    std::vector<Fraction> current_r{cert.base->tangles[0]};
    if (!(s > current_r[0])) return fail("base hypothesis s > r violated");
    if (determinant(*cert.base).is_zero()) return fail("base link has zero determinant");

    for (std::size_t k = 0; k < cert.chain.size(); ++k) {
      const ChainStep& step = cert.chain[k];
      const std::string where = "chain step " + std::to_string(k + 1) + ": ";
      std::vector<Fraction> without = current_r;
      without.push_back(neg_s);
      if (step.position < 1 || step.position > current_r.size() + 1) return fail(where + "bad position");
      TangleSum expected{0, without};
      expected.tangles.insert(expected.tangles.begin() + static_cast<std::ptrdiff_t>(step.position - 1), Fraction(1));
      if (step.link_with_crossing != expected) return fail(where + "crossing link does not match the chain");
      const Fraction least = *std::min_element(current_r.begin(), current_r.end());
      if (!(s > least)) return fail(where + "hypothesis s > min r violated");
      const Integer det_L = determinant(step.link_with_crossing);
      const Integer det_L0 = connected_sum_det(without);
      const Integer det_Linf = determinant(Integer(0), without);
      if (step.det_L != step.det_L0 + step.det_Linf) return fail(where + "additivity violated");
      if (det_L != step.det_L || det_L0 != step.det_L0 || det_Linf != step.det_Linf) {
        return fail(where + "recorded determinants are wrong");
      }
      if (det_L0.is_zero() || det_Linf.is_zero()) return fail(where + "zero determinant resolution");
      if (step.extension <= Fraction(0) || abs(step.extension.num()) < 2) {
        return fail(where + "extension is not a positive non-integral-reciprocal tangle");
      }
      current_r.insert(current_r.begin() + static_cast<std::ptrdiff_t>(step.position - 1), step.extension);
    }
    std::vector<Fraction> final_tangles = current_r;
    final_tangles.push_back(neg_s);
    if (final_tangles != ts) return fail("chain does not end at the base form");
    return {};
  } catch (const Error& err) {
    return fail(std::string("error: ") + err.what());
  }
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "certificate\t" << format_link(cert.target) << '\t' << to_string(cert.kind) << '\n';
  for (const auto& step : cert.preamble) {
    out << "preamble\t" << to_string(step.kind) << '\t' << step.index << '\t' << format_link(step.result) << '\n';
  }
  if (cert.rational) {
    out << "rational\t" << cert.rational->fraction << '\t' << to_string(cert.rational->closure) << '\n';
  }
  if (cert.base) out << "base\t" << format_link(*cert.base) << '\n';
  for (const auto& step : cert.chain) {
    out << "step\t" << step.position << '\t' << format_link(step.link_with_crossing) << '\t' << step.det_L << '\t'
        << step.det_L0 << '\t' << step.det_Linf << '\t' << format_param(step.extension) << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

TangleSum parse_sum(const std::string& text) {
  const LinkExpression expr = parse_link(text);
  if (expr.kind != LinkKind::MontesinosForm) throw Error("certificate links must be in M(...) form");
  return TangleSum{expr.e, expr.params};
}

// Plain a or a/b; M-notation would read "13" as a tangle word.
Fraction parse_fraction(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error("bad fraction '" + text + "'");
  return normalize_fraction(Integer(m[1].str()), m[2].matched ? Integer(m[2].str()) : Integer(1));
}

StepKind parse_step_kind(const std::string& s) {
  for (StepKind k : {StepKind::Reduce, StepKind::FlypePositive, StepKind::FlypeNegative, StepKind::Reflect,
                     StepKind::Rotate}) {
    if (s == to_string(k)) return k;
  }
  throw Error("unknown preamble step '" + s + "'");
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Certificate> cert;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_tabs(line);
    auto need = [&](std::size_t count) {
      if (f.size() != count) throw Error("certificate line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(count) + " fields");
    };
    if (f[0] == "certificate") {
      need(3);
      cert.emplace(normalize_input(parse_sum(f[1])));
      if (f[2] == "InductiveChain") {
        cert->kind = CertificateKind::InductiveChain;
      } else if (f[2] != "AlternatingLeaf") {
        throw Error("unknown certificate kind '" + f[2] + "'");
      }
      continue;
    }
    if (!cert) throw Error("certificate must start with a 'certificate' line");
    if (f[0] == "preamble") {
      need(4);
      cert->preamble.push_back(
          PreambleStep{parse_step_kind(f[1]), std::stoul(f[2]), normalize_input(parse_sum(f[3]))});
    } else if (f[0] == "rational") {
      need(3);
      cert->rational = RationalReduction{parse_fraction(f[1]),
                                         f[2] == "Vertical" ? Closure::Vertical : Closure::Horizontal};
    } else if (f[0] == "base") {
      need(2);
      cert->base = parse_sum(f[1]);
    } else if (f[0] == "step") {
      need(7);
      ChainStep step;
      step.position = std::stoul(f[1]);
      step.link_with_crossing = parse_sum(f[2]);
      step.det_L = Integer(f[3]);
      step.det_L0 = Integer(f[4]);
      step.det_Linf = Integer(f[5]);
      step.extension = parse_fraction(f[6]);
      cert->chain.push_back(std::move(step));
    } else if (f[0] == "VERIFIED") {
      // Reader-side annotation; ignored.
    } else {
      throw Error("certificate line " + std::to_string(line_no) + ": unknown record '" + f[0] + "'");
    }
  }
  if (!cert) throw Error("empty certificate");
  return std::move(*cert);
}

}  // namespace mqa
