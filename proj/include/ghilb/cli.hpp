#pragma once

// Command-line driver. Exit codes: 0 success, 1 usage error, 2 invalid group
// action (non-coprime, or outside the structured range for commands that need
// it), 3 internal validation failure.

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghilb/export.hpp"

namespace ghilb {

namespace cli_detail {

inline std::string action_string(const GroupAction& g) {
  Int a = g.input_a();
  return "1/" + std::to_string(g.r) + "(1," + std::to_string(a) + "," + std::to_string(g.r - a) +
         ")";
}

inline std::string span_string(const GroupAction& g, const GSet& s) {
  std::vector<Exponents> span = s.span();
  for (Exponents& m : span) m = g.map_back(m);
  std::sort(span.begin(), span.end(), std::greater<>{});  // x-dominant generators first
  std::string out;
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (i) out += ", ";
    out += monomial_string(span[i]);
  }
  return out;
}

inline std::string triple_string(const NVec& v) {
  return "(" + std::to_string(v.w1) + "," + std::to_string(v.w2) + "," + std::to_string(v.w3) +
         ")";
}

inline std::string ray_string(const GroupAction& g, const NVec& v) {
  return triple_string(map_back_ray(g, v));
}

inline std::string text_summary(const Fan& fan, const FanReport& report) {
  const GroupAction& g = fan.action;
  std::string out;
  out += "action " + action_string(g) + "  b=" + std::to_string(g.input_b()) +
         (g.swapped ? "  (canonicalized by swapping y and z)\n" : "\n");
  out += "cones " + std::to_string(fan.cones.size()) + "  rays " +
         std::to_string(fan.rays.size()) + "  triangles " + std::to_string(fan.triangles.size()) +
         "  m=" + std::to_string(fan.m) + "\n";

  std::vector<NVec> rays;
  for (const NVec& v : fan.rays) rays.push_back(map_back_ray(g, v));
  std::sort(rays.begin(), rays.end());
  out += "rays:";
  for (const NVec& v : rays) out += " " + triple_string(v);
  out += "\n";

  out += "rho:";
  for (const NVec& v : fan.rho) out += " " + ray_string(g, v);
  out += "\n";

  out += "euclid p:";
  for (Int p : fan.trace.p) out += " " + std::to_string(p);
  out += "\neuclid q:";
  for (Int q : fan.trace.q) out += " " + std::to_string(q);
  out += "\n";

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const FanCone& fc = fan.cones[i];
    out += "cone " + std::to_string(i) + " [" + region_kind_name(fc.region.kind) + " " +
           std::to_string(fc.region.index) + "] " +
           (fc.cone.kind == ConeKind::quadric ? "quadric" : "smooth") + " rays";
    for (std::size_t t : fc.rays) out += " " + ray_string(g, fan.rays[t]);
    out += "  span: " + span_string(g, fan.gsets[fc.set]) + "\n";
  }

  out += "validation: walls " + std::string(report.wallsOk ? "ok" : "FAIL") + ", coverage " +
         (report.coverageOk ? "ok" : "FAIL") + " (" + std::to_string(report.samples) +
         " samples, seed " + std::to_string(report.seed) + "), count " +
         (report.countOk ? "ok" : "FAIL") + "\n";
  return out;
}

inline int emit(const std::string& payload, const std::string& outPath, std::ostream& out,
                std::ostream& err) {
  if (outPath.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream file(outPath, std::ios::binary);
  if (!file) {
    err << "cannot open output file: " << outPath << "\n";
    return 1;
  }
  file << payload;
  return 0;
}

}  // namespace cli_detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toric fans of cyclic quotient Hilbert schemes"};
  app.name("ghilb");
  app.require_subcommand(1);

  Int r = 0, a = 0, rmax = 0, samples = 1000;
  std::string format = "text", chartName = "barycentric", outPath;
  bool oracleFlag = false, checkFlag = false;

  CLI::App* fanCmd = app.add_subcommand("fan", "build, validate, and export the fan");
  fanCmd->add_option("r", r, "order of the cyclic group")->required();
  fanCmd->add_option("a", a, "weight of the second coordinate")->required();
  fanCmd->add_option("--format", format, "text, json, or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  fanCmd->add_option("--chart", chartName, "svg chart: barycentric or affine")
      ->check(CLI::IsMember({"barycentric", "affine"}));
  fanCmd->add_option("--out", outPath, "write to a file instead of stdout");

  CLI::App* gsetsCmd = app.add_subcommand("gsets", "list the distinguished generating sets");
  gsetsCmd->add_option("r", r)->required();
  gsetsCmd->add_option("a", a)->required();
  gsetsCmd->add_flag("--oracle", oracleFlag, "use the brute-force enumerator");

  CLI::App* countCmd = app.add_subcommand("count", "print the predicted number of sets");
  countCmd->add_option("r", r)->required();
  countCmd->add_option("a", a)->required();
  countCmd->add_flag("--check", checkFlag, "also enumerate and compare");

  CLI::App* euclidCmd =
      app.add_subcommand("euclid", "print the continued-fraction data and the primitive sets");
  euclidCmd->add_option("r", r)->required();
  euclidCmd->add_option("a", a)->required();

  CLI::App* verifyCmd = app.add_subcommand("verify", "sweep all valid actions up to r-max");
  verifyCmd->add_option("r-max", rmax)->required();
  verifyCmd->add_option("--samples", samples, "coverage samples per action");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(fanCmd)) {
      GroupAction g = GroupAction::make(r, a);
      g.require_structured();
      Fan fan = build_fan(g);
      FanReport report = validate_fan(fan);
      if (!report.ok()) {
        err << "internal validation failure for action " << cli_detail::action_string(g) << "\n";
        return 3;
      }
      std::string payload;
      if (format == "json") {
        payload = export_json(fan, report);
      } else if (format == "svg") {
        Chart chart = chartName == "affine" ? Chart::AffineYZ : Chart::Barycentric;
        payload = export_svg(fan, RenderConfig{chart, 840, 760, true, true});
      } else {
        payload = cli_detail::text_summary(fan, report);
      }
      return cli_detail::emit(payload, outPath, out, err);
    }

    if (app.got_subcommand(gsetsCmd)) {
      GroupAction g = GroupAction::make(r, a);
      std::vector<GSet> sets;
      if (oracleFlag) {
        sets = enumerate_all(g);
      } else {
        g.require_structured();
        sets = build_fan(g).gsets;
      }
      out << "count " << sets.size() << "\n";
      for (std::size_t i = 0; i < sets.size(); ++i)
        out << i << "  span: " << cli_detail::span_string(g, sets[i]) << "\n";
      return 0;
    }

    if (app.got_subcommand(countCmd)) {
      GroupAction g = GroupAction::make(r, a);
      g.require_structured();
      Int predicted = predicted_count(g);
      if (!checkFlag) {
        out << predicted << "\n";
        return 0;
      }
      Int enumerated = Int(enumerate_all(g).size());
      bool ok = predicted == enumerated;
      out << "predicted " << predicted << ", enumerated " << enumerated
          << (ok ? ", OK" : ", MISMATCH") << "\n";
      return ok ? 0 : 3;
    }

    if (app.got_subcommand(euclidCmd)) {
      GroupAction g = GroupAction::make(r, a);
      g.require_structured();
      out << "action " << cli_detail::action_string(g) << "\n";
      out << "b = " << g.input_b() << "\n";
      EuclidTrace t = euclid_trace(std::max(g.b, g.r - g.b), std::min(g.b, g.r - g.b));
      out << "p:";
      for (Int p : t.p) out << " " << p;
      out << "\nq:";
      for (Int q : t.q) out << " " << q;
      out << "\n";
      Int128 lin = 0, quad = 0;
      for (std::size_t l = 0; l < t.q.size(); ++l) {
        lin += Int128(t.q[l]) * t.p[l + 1];
        quad += Int128(t.q[l]) * t.p[l + 1] * t.p[l + 1];
      }
      Int p1 = t.p[0], p2 = t.p[1];
      out << "sum(q_l * p_(l+1))   = " << narrow(lin) << "  vs p1 + p2 - 1 = " << (p1 + p2 - 1)
          << (lin == Int128(p1) + p2 - 1 ? "  OK" : "  MISMATCH") << "\n";
      out << "sum(q_l * p_(l+1)^2) = " << narrow(quad) << "  vs p1 * p2     = " << (p1 * p2)
          << (quad == Int128(p1) * p2 ? "  OK" : "  MISMATCH") << "\n";
      std::vector<GSet> seq = primitive_sequence(g);
      out << "sets:\n";
      for (std::size_t n = 0; n < seq.size(); ++n)
        out << "  " << (n + 1) << "  span: " << cli_detail::span_string(g, seq[n])
            << (seq[n].primitive() ? "" : "  (end of the primitive range)") << "\n";
      return 0;
    }

    if (app.got_subcommand(verifyCmd)) {
      Int actions = 0, failures = 0;
      for (Int rr = 2; rr <= rmax; ++rr)
        for (Int aa = 2; aa < rr - aa; ++aa) {
          if (std::gcd(rr, aa) != 1) continue;
          ++actions;
          try {
            GroupAction g = GroupAction::make(rr, aa);
            Fan fan = build_fan(g);
            std::vector<GSet> oracle = enumerate_all(g);
            FanReport report = validate_fan(fan, &oracle, std::size_t(samples));
            if (report.ok()) {
              out << "r=" << rr << " a=" << aa << " count=" << fan.cones.size() << " ok\n";
            } else {
              ++failures;
              out << "r=" << rr << " a=" << aa << " FAIL(walls=" << report.wallsOk
                  << " coverage=" << report.coverageOk << " oracle=" << report.oracleOk
                  << " count=" << report.countOk << ")\n";
            }
          } catch (const Error& e) {
            ++failures;
            out << "r=" << rr << " a=" << aa << " FAIL(" << e.what() << ")\n";
          }
        }
      out << "verified " << actions << " actions, "
          << (failures == 0 ? "all OK" : std::to_string(failures) + " failures") << "\n";
      return failures == 0 ? 0 : 3;
    }
  } catch (const InvalidAction& e) {
    err << "invalid action: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal validation failure: " << e.what() << "\n";
    return 3;
  }

  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace ghilb
