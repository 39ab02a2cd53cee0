#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k3acm/lattice_file.hpp"
#include "k3acm/verification.hpp"

namespace k3acm::cli {

// Exit codes: 0 success / all-agree / admissible, 1 disagreement or
// inadmissible lattice, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;
inline constexpr int kExitUsage = 2;

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line-bundle cohomology and ACM classification on polarized quartic K3 lattices", "k3acm"};
  app.require_subcommand(1);

  std::string lattice_path;
  std::string class_text;
  Int twist = 0;
  Int max_degree = 0;
  unsigned jobs = 1;
  std::string format = "json";

  auto* classify = app.add_subcommand("classify", "Numeric case, flags and oracle ACM verdict for one class");
  classify->add_option("--lattice", lattice_path, "Lattice JSON file")->required();
  classify->add_option("--class", class_text, "Comma-separated coordinates")->required();

  auto* cohom = app.add_subcommand("cohomology", "(h0, h1, h2) and chi of a class or its twist");
  cohom->add_option("--lattice", lattice_path, "Lattice JSON file")->required();
  cohom->add_option("--class", class_text, "Comma-separated coordinates")->required();
  cohom->add_option("--twist", twist, "Add twist * H before computing");

  auto* enumerate = app.add_subcommand("enumerate", "List non-zero effective classes up to a degree");
  enumerate->add_option("--lattice", lattice_path, "Lattice JSON file")->required();
  enumerate->add_option("--max-degree", max_degree, "Largest D.H")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check the numeric classification against the oracle");
  verify->add_option("--lattice", lattice_path, "Lattice JSON file")->required();
  verify->add_option("--max-degree", max_degree, "Largest D.H")->required()->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* validate = app.add_subcommand("validate", "Admissibility report for a lattice file");
  validate->add_option("--lattice", lattice_path, "Lattice JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto lattice = read_lattice_file(lattice_path);
      const auto report = validate_admissible(lattice);
      out << "lattice: " << lattice.name() << "\n" << report.to_string();
      return report.ok() ? kExitOk : kExitDisagree;
    }

    const EffectiveCone cone(load_lattice_file(lattice_path));
    const auto& lat = cone.lattice();

    if (classify->parsed()) {
      const auto d = parse_divisor_class(class_text);
      lat.require_rank(d);
      out << "coords: " << d.to_string() << "\n"
          << "square: " << lat.square(d) << "\n"
          << "degree: " << lat.degree(d) << "\n"
          << "effective: " << yes_no(cone.is_effective(d)) << "\n"
          << "initialized: " << yes_no(is_initialized(cone, d)) << "\n"
          << "case: " << classify_numeric(cone, d).to_string() << "\n"
          << "acm: " << yes_no(is_acm_oracle(cone, d)) << "\n";
      return kExitOk;
    }

    if (cohom->parsed()) {
      auto d = parse_divisor_class(class_text);
      lat.require_rank(d);
      d += twist * lat.polarization();
      const auto s = cohomology(cone, d);
      out << "class: " << d.to_string() << "\n"
          << "h0=" << s.h0 << " h1=" << s.h1 << " h2=" << s.h2 << " chi=" << lat.euler_char(d) << "\n";
      return kExitOk;
    }

    if (enumerate->parsed()) {
      for (const auto& d : enumerate_effective(cone, max_degree))
        out << d.to_string() << "\tdeg=" << lat.degree(d) << "\tsq=" << lat.square(d) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto report = verify_theorem(lat, max_degree, jobs);
      if (format == "tsv")
        out << report_to_tsv(report);
      else
        out << report_to_json(report).dump(2) << "\n";
      if (!report.all_agree()) err << "disagreements: " << report.disagreements().size() << "\n";
      return report.exit_code();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace k3acm::cli
