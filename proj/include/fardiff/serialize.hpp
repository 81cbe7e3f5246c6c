#pragma once

// Text, JSON and CSV renderings. All floating-point output goes through
// format_number (12 significant digits) so repeated runs are byte-identical.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fardiff/bigint.hpp"
#include "fardiff/decomposer.hpp"
#include "fardiff/gap_analysis.hpp"
#include "fardiff/spectral.hpp"
#include "fardiff/summand_stats.hpp"

namespace fardiff {

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// "+S17 -S14 +S9 -S6 -S2"; empty decomposition renders as "".
inline std::string symbolic_form(const SignedDecomposition& dec) {
  std::string out;
  for (const auto& t : dec.terms) {
    if (!out.empty()) out += ' ';
    out += t.sign > 0 ? '+' : '-';
    out += 'S';
    out += std::to_string(t.index);
  }
  return out;
}

// "2584-610+55-13-2"; the leading '+' is dropped.
inline std::string numeric_form(const SignedDecomposition& dec) {
  std::string out;
  for (const auto& t : dec.terms) {
    if (t.sign < 0) out += '-';
    else if (!out.empty()) out += '+';
    out += dec.family.term(t.index).get_str();
  }
  return out;
}

inline nlohmann::json family_json(const SequenceFamily& fam) {
  nlohmann::json j;
  switch (fam.kind()) {
    case FamilyKind::skipponacci:
      j["kind"] = "skipponacci";
      j["k"] = fam.k();
      break;
    case FamilyKind::standard_sd:
      j["kind"] = "sd";
      break;
    case FamilyKind::explicit_list:
      j["kind"] = "explicit";
      j["name"] = fam.name();
      break;
  }
  j["s"] = fam.s();
  j["d"] = fam.d();
  return j;
}

inline nlohmann::json decomposition_json(const SignedDecomposition& dec) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : dec.terms)
    terms.push_back({{"index", t.index}, {"sign", t.sign}, {"value", dec.family.term(t.index).get_str()}});
  return {{"family", family_json(dec.family)}, {"terms", terms}, {"value", evaluate(dec).get_str()}};
}

inline nlohmann::json constants_json(const GrowthConstants& gc) {
  auto num = [](double v) { return nlohmann::json::parse(format_number(v)); };
  return {{"k", gc.k},           {"a", gc.a},
          {"b", gc.b},           {"lambda1", num(gc.lambda1)},
          {"a1", num(gc.a1)},    {"e1", num(gc.e1)},
          {"e1_prime", num(gc.e1_prime)}, {"A", num(gc.A)}, {"C", num(gc.C)}};
}

inline std::string stats_csv(const std::vector<MomentSummary>& rows) {
  std::string out = "n,a,b,mean,variance,skewness,excess_kurtosis,corr_KL\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + format_number(r.a) + ',' + format_number(r.b) + ',' +
           format_number(r.mean) + ',' + format_number(r.variance) + ',' +
           format_number(r.skewness) + ',' + format_number(r.excess_kurtosis) + ',' +
           format_number(r.corr_kl) + '\n';
  }
  return out;
}

struct GapCsvRow {
  int n;
  GapDistribution empirical;
  GapDistribution counting;
  GapDistribution theoretical;
};

inline std::string gaps_csv(int k, const std::vector<GapCsvRow>& rows) {
  std::string out = "k,n,j,p_empirical,p_counting,p_theoretical\n";
  for (const auto& row : rows) {
    int j_max = 0;
    for (const auto& d : {row.empirical, row.counting})
      if (!d.probs.empty()) j_max = std::max(j_max, d.probs.rbegin()->first);
    auto value = [](const GapDistribution& d, int j) {
      auto it = d.probs.find(j);
      return it == d.probs.end() ? 0.0 : it->second;
    };
    for (int j = 0; j <= j_max; ++j) {
      out += std::to_string(k) + ',' + std::to_string(row.n) + ',' + std::to_string(j) + ',' +
             format_number(value(row.empirical, j)) + ',' + format_number(value(row.counting, j)) +
             ',' + format_number(value(row.theoretical, j)) + '\n';
    }
  }
  return out;
}

}  // namespace fardiff
