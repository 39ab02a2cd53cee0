#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "k3acm/acm.hpp"

namespace k3acm {

/// All non-zero effective classes with 1 <= D.H <= max_degree, sorted by
/// (degree, coords).
inline std::vector<DivisorClass> enumerate_effective(const EffectiveCone& cone, Int max_degree) {
  if (max_degree < 1) throw InputError("enumerate_effective needs max_degree >= 1");
  return cone.effective_classes(1, max_degree);
}

struct VerificationRecord {
  DivisorClass coords;
  Int square = 0;
  Int degree = 0;
  bool effective = false;
  bool initialized = false;
  TheoremCase numeric_case;
  bool acm = false;
  bool agree = false;
};

struct VerificationReport {
  static constexpr std::array<CaseTag, 5> kTags = {CaseTag::CaseA, CaseTag::CaseB, CaseTag::CaseC, CaseTag::CaseD,
                                                   CaseTag::None};

  std::string lattice;
  Int max_degree = 0;
  std::vector<VerificationRecord> records;

  bool all_agree() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.agree; });
  }

  std::vector<DivisorClass> disagreements() const {
    std::vector<DivisorClass> out;
    for (const auto& r : records)
      if (!r.agree) out.push_back(r.coords);
    return out;
  }

  std::size_t count(CaseTag tag) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const auto& r) { return r.numeric_case.tag == tag; }));
  }

  /// Classes the oracle finds ACM and initialized.
  std::size_t acm_initialized() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.acm && r.initialized; }));
  }

  /// 0 when every record agrees, 1 otherwise.
  int exit_code() const { return all_agree() ? 0 : 1; }
};

inline const char* tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::CaseA: return "CaseA";
    case CaseTag::CaseB: return "CaseB";
    case CaseTag::CaseC: return "CaseC";
    case CaseTag::CaseD: return "CaseD";
    case CaseTag::None: return "None";
  }
  return "?";
}

/// Checks, for every enumerated class, that the oracle's "ACM and
/// initialized" verdict coincides with a numeric case match. The classifier
/// is a parameter so that deliberately broken variants can be audited.
///
/// Work is split across `jobs` threads, each with its own cone; records are
/// stored by index so the report does not depend on the partition.
template <typename Classifier>
VerificationReport verify_theorem(const PolarizedK3Lattice& lattice, Int max_degree, unsigned jobs,
                                  Classifier&& classify) {
  VerificationReport report;
  report.lattice = lattice.name();
  report.max_degree = max_degree;
  std::vector<DivisorClass> classes;
  {
    EffectiveCone cone(lattice);
    classes = enumerate_effective(cone, max_degree);
  }
  report.records.resize(classes.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(classes.size(), 1))));

  auto work = [&](unsigned worker) {
    EffectiveCone cone(lattice);
    const auto& lat = cone.lattice();
    for (std::size_t i = worker; i < classes.size(); i += jobs) {
      const DivisorClass& d = classes[i];
      VerificationRecord r;
      r.coords = d;
      r.square = lat.square(d);
      r.degree = lat.degree(d);
      r.effective = cone.is_effective(d);
      r.initialized = is_initialized(cone, d);
      r.numeric_case = classify(cone, d);
      r.acm = is_acm_oracle(cone, d);
      r.agree = (r.acm && r.initialized) == r.numeric_case.is_match();
      report.records[i] = std::move(r);
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return report;
}

inline VerificationReport verify_theorem(const PolarizedK3Lattice& lattice, Int max_degree, unsigned jobs = 1) {
  return verify_theorem(lattice, max_degree, jobs,
                        [](const EffectiveCone& c, const DivisorClass& d) { return classify_numeric(c, d); });
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["lattice"] = report.lattice;
  doc["max_degree"] = report.max_degree;
  auto records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json row;
    row["coords"] = std::vector<Int>(r.coords.coords().begin(), r.coords.coords().end());
    row["sq"] = r.square;
    row["deg"] = r.degree;
    row["effective"] = r.effective;
    row["initialized"] = r.initialized;
    row["case"] = r.numeric_case.to_string();
    row["acm"] = r.acm;
    row["agree"] = r.agree;
    records.push_back(std::move(row));
  }
  doc["records"] = std::move(records);
  nlohmann::ordered_json summary;
  for (CaseTag t : VerificationReport::kTags) summary[tag_name(t)] = report.count(t);
  summary["total"] = report.records.size();
  summary["acm_initialized"] = report.acm_initialized();
  doc["summary"] = std::move(summary);
  doc["verdict"] = report.all_agree() ? "all-agree" : "disagree";
  auto dis = nlohmann::ordered_json::array();
  for (const auto& d : report.disagreements()) dis.push_back(d.to_string());
  doc["disagreements"] = std::move(dis);
  return doc;
}

/// Columns: coords, sq, deg, eff, init, case, acm, agree.
inline std::string report_to_tsv(const VerificationReport& report) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "coords\tsq\tdeg\teff\tinit\tcase\tacm\tagree\n";
  for (const auto& r : report.records) {
    out += r.coords.to_string() + '\t' + std::to_string(r.square) + '\t' + std::to_string(r.degree) + '\t' +
           yn(r.effective) + '\t' + yn(r.initialized) + '\t' + r.numeric_case.to_string() + '\t' + yn(r.acm) + '\t' +
           yn(r.agree) + '\n';
  }
  return out;
}

}  // namespace k3acm
