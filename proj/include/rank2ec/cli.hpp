#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rank2ec/quadric.hpp"
#include "rank2ec/serialization.hpp"
#include "rank2ec/svg.hpp"

namespace rank2ec {

namespace cli_detail {

struct Output {
  std::string path;    // empty: stdout
  std::string format;  // json | text | csv

  void write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << payload;
  }
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Flattens the top-level scalars of one or more report objects into CSV
/// (arrays and objects shrink to their element counts).
inline std::string reports_to_csv(const std::vector<Json>& reports) {
  if (reports.empty()) return "";
  std::vector<std::string> keys;
  for (auto it = reports.front().begin(); it != reports.front().end(); ++it)
    keys.push_back(it.key());
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_escape(keys[i]);
  os << "\n";
  for (const Json& r : reports) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) os << ",";
      if (!r.contains(keys[i])) continue;
      const Json& v = r[keys[i]];
      if (v.is_structured()) {
        os << v.size();
      } else if (v.is_string()) {
        os << csv_escape(v.get<std::string>());
      } else {
        os << v.dump();
      }
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render(const std::vector<Json>& reports, const std::string& format,
                          const std::string& wrap_key) {
  if (format == "csv") return reports_to_csv(reports);
  if (format == "text") {
    std::ostringstream os;
    for (const Json& r : reports) {
      for (auto it = r.begin(); it != r.end(); ++it)
        os << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      os << "\n";
    }
    return os.str();
  }
  if (reports.size() == 1) return reports.front().dump(2) + "\n";
  Json j;
  j[wrap_key] = reports;
  return j.dump(2) + "\n";
}

}  // namespace cli_detail

/// Entry point behind the command-line driver.  Exit codes: 0 all checks
/// pass, 1 a check failed (report still written), 2 usage or input error.
inline int run_cli(std::vector<std::string> args) {
  using cli_detail::Output;
  CLI::App app{"exact computations with exceptional collections of line bundles on rank-2 "
               "Borel varieties"};
  app.require_subcommand(1);

  std::string type_str = "g2";
  std::string collection_path;
  std::string order_override;
  std::string which = "all";
  std::string lemma = "all";
  std::string radius_sq_str = "3600";
  std::string svg_path;
  int jobs = 1;
  double extent = 16.0;
  Output out;
  bool deterministic = false;

  app.add_option("--output", out.path, "write the report to a file instead of stdout");
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->default_val("json");
  app.add_flag("--deterministic", deterministic, "zero out elapsed timings in reports");

  auto* roots = app.add_subcommand("roots", "dump the root system data");
  roots->add_option("--type", type_str, "root system: a2, a1xa1, b2, g2")->required();

  auto* steinberg = app.add_subcommand(
      "steinberg", "dump the Steinberg basis, the replayed modified bases and oracle verdicts");
  steinberg->add_option("--type", type_str, "root system: a2, a1xa1, b2, g2")->required();

  auto* verify = app.add_subcommand("verify", "check a collection file for exceptionality");
  verify->add_option("--type", type_str, "root system: a2, a1xa1, b2, g2")->required();
  verify->add_option("--collection", collection_path, "collection JSON file")->required();
  verify->add_option("--order", order_override, "override the file's order kind")
      ->check(CLI::IsMember({"total", "weak-bruhat"}));

  auto* facts = app.add_subcommand("facts", "reproduce the exhaustive search facts");
  facts->add_option("--which", which, "nodmz, forty, close, maxpts or all")
      ->check(CLI::IsMember({"all", "nodmz", "forty", "close", "maxpts"}));
  facts->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* falsify_cmd = app.add_subcommand("falsify", "bounded-exhaustive lemma falsification");
  falsify_cmd->add_option("--lemma", lemma, "lemma id or all")->required();
  falsify_cmd->add_option("--radius-sq", radius_sq_str,
                          "squared-norm bound for the lattice scan (rational)");
  falsify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* crab_cmd = app.add_subcommand("crab", "emit the crab picture and geometry counts");
  crab_cmd->add_option("--svg", svg_path, "output SVG path")->required();
  crab_cmd->add_option("--extent", extent, "Euclidean half-width of the picture");

  auto* quadric_cmd =
      app.add_subcommand("quadric", "check the line-bundle obstruction on the 3-dim quadric");
  (void)quadric_cmd;

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (roots->parsed()) {
      const auto& rs = build(parse_kind(type_str));
      out.write(cli_detail::render({to_json(rs)}, out.format, "reports"));
      return 0;
    }

    if (steinberg->parsed()) {
      const auto& rs = build(parse_kind(type_str));
      const BasisState base = steinberg_basis(rs);
      const auto replayed = replay_paper_bases(rs);
      Json j;
      j["kind"] = to_string(rs.kind);
      j["steinberg"] = to_json(base);
      Json reps = Json::array();
      Json verdicts = Json::array();
      bool all_ok = basis_determinant_oracle(rs, base.weights);
      j["oracle_steinberg"] = all_ok;
      for (const auto& st : replayed) {
        reps.push_back(to_json(st));
        const bool ok = basis_determinant_oracle(rs, st.weights);
        verdicts.push_back(ok);
        all_ok = all_ok && ok;
      }
      j["replayed"] = reps;
      j["oracle_replayed"] = verdicts;
      out.write(cli_detail::render({j}, out.format, "reports"));
      return all_ok ? 0 : 1;
    }

    if (verify->parsed()) {
      const auto& rs = build(parse_kind(type_str));
      Collection c = load_collection_file(collection_path);
      if (order_override == "total") c.order = OrderKind::total;
      if (order_override == "weak-bruhat") c.order = OrderKind::weak_bruhat;
      Json j;
      j["kind"] = to_string(rs.kind);
      j["collection"] = collection_path;
      bool ok = false;
      if (c.order == OrderKind::total) {
        j["order"] = "total";
        ok = is_exceptional(rs, c);
        j["exceptional"] = ok;
      } else {
        j["order"] = "weak_bruhat";
        const auto failures = po_exceptional_failures(rs, c);
        ok = failures.empty();
        j["exceptional"] = ok;
        Json fj = Json::array();
        const auto& group = weyl_group(rs);
        std::vector<Weight> by_element(group.size());
        for (std::size_t i = 0; i < c.weights.size(); ++i)
          by_element[element_index(rs, element_from_word(rs, c.weyl_words[i]).matrix)] =
              c.weights[i];
        for (const auto& [wi, wj] : failures)
          fj.push_back(Json{{"from", group[wi].word},
                            {"to", group[wj].word},
                            {"from_weight", to_json(by_element[wi])},
                            {"to_weight", to_json(by_element[wj])}});
        j["failures"] = fj;
      }
      out.write(cli_detail::render({j}, out.format, "reports"));
      return ok ? 0 : 1;
    }

    if (facts->parsed()) {
      std::vector<Json> reports;
      bool ok = true;
      if (which == "all" || which == "nodmz") {
        const SearchReport r = fact_nodmz(jobs);
        ok = ok && r.candidate_count == 445 && r.maximal_collection_count == 160017 &&
             r.max_length == 10;
        reports.push_back(to_json(r, deterministic));
      }
      if (which == "all" || which == "forty") {
        for (const SearchReport& r : fact_forty()) {
          ok = ok && r.max_length <= 8;
          reports.push_back(to_json(r, deterministic));
        }
      }
      if (which == "all" || which == "close") {
        const SearchReport r = fact_close(jobs);
        ok = ok && r.violations.empty();
        reports.push_back(to_json(r, deterministic));
      }
      if (which == "all" || which == "maxpts") {
        for (const SearchReport& r : maxpts_search()) {
          ok = ok && r.max_length <= 5;
          reports.push_back(to_json(r, deterministic));
        }
      }
      out.write(cli_detail::render(reports, out.format, "reports"));
      return ok ? 0 : 1;
    }

    if (falsify_cmd->parsed()) {
      const Rational radius_sq = parse_rational(radius_sq_str);
      if (radius_sq <= 0) throw ParseError("--radius-sq must be positive");
      std::vector<std::string> ids;
      if (lemma == "all") {
        ids = falsifier_lemmas();
      } else {
        ids.push_back(lemma);
      }
      std::vector<Json> reports;
      bool ok = true;
      for (const auto& id : ids) {
        const FalsifierResult res = falsify(id, radius_sq, jobs);
        ok = ok && !res.counterexample;
        reports.push_back(to_json(res, deterministic));
      }
      out.write(cli_detail::render(reports, out.format, "results"));
      return ok ? 0 : 1;
    }

    if (crab_cmd->parsed()) {
      std::ofstream svg(svg_path, std::ios::binary);
      if (!svg) throw ParseError("cannot write '" + svg_path + "'");
      emit_crab_svg(svg, extent);
      Json j;
      j["svg"] = svg_path;
      j["twenty_weights"] = twenty_weights().size();
      j["mirror_twenty_weights"] = mirror_twenty_weights().size();
      j["non_far_crab_weights"] = non_far_crab_weights().size();
      out.write(cli_detail::render({j}, out.format, "reports"));
      return 0;
    }

    if (quadric_cmd->parsed()) {
      const bool obstructed = verify_quadric_obstruction();
      Json j;
      j["obstruction"] = obstructed;
      out.write(cli_detail::render({j}, out.format, "reports"));
      return obstructed ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CollectionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rank2ec
