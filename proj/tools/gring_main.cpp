// gring: command-line front end over the shared library's C interface.
//
// Exit codes: 0 when every checked assertion holds, 2 when an obstruction,
// witness or failed assertion was found (an informational outcome, not an
// error), 1 on operational errors (bad specs, out-of-range queries, ...).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gring/gring.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

struct GroupHandle {
  gring_group* ptr = nullptr;
  ~GroupHandle() { gring_group_destroy(ptr); }
};

struct DerivationHandle {
  gring_derivation* ptr = nullptr;
  ~DerivationHandle() { gring_derivation_destroy(ptr); }
};

struct CharacterHandle {
  gring_character* ptr = nullptr;
  ~CharacterHandle() { gring_character_destroy(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { gring_string_free(ptr); }
};

[[noreturn]] void die(gring_status status) {
  std::cerr << "error (" << gring_status_name(status) << "): " << gring_last_error() << "\n";
  std::exit(kExitError);
}

void check(gring_status status) {
  if (status != GRING_OK) die(status);
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(kExitError);
  }
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << '\n';
}

std::string csv_escape(const Json& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_null())
    s = "";
  else
    s = v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

/// Flatten the table-like part of a report into CSV rows.
std::string report_csv(const Json& report) {
  std::string kind = report.value("kind", "");
  std::ostringstream out;
  auto emit_rows = [&](const Json& rows, const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const Json& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << csv_escape(row.contains(columns[i]) ? row[columns[i]] : Json());
      out << '\n';
    }
  };
  if (kind == "ball") {
    emit_rows(report["elements"], {"g", "length"});
  } else if (kind == "witness") {
    emit_rows(report["rows"], {"n", "chi_power", "direct", "sup_tn", "sup_d_tn", "ratio"});
  } else if (kind == "probe") {
    emit_rows(report["rows"], {"radius", "value", "increment", "ratio"});
  } else if (kind == "norms") {
    emit_rows(report["witnesses"], {"n", "g", "norm_value", "sup_value", "ratio"});
  } else {
    // generic key,value dump of the scalar fields
    out << "key,value\n";
    for (const auto& [key, value] : report.items())
      if (!value.is_structured()) out << key << ',' << csv_escape(value) << '\n';
  }
  return out.str();
}

struct OutputOptions {
  std::string json_path;
  std::string csv_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--json", out.json_path, "write the full JSON report to this file");
  cmd->add_option("--csv", out.csv_path, "write the report's table as CSV to this file");
}

void deliver(const OutputOptions& out, const std::string& json_text) {
  if (!out.json_path.empty()) write_file(out.json_path, json_text);
  if (!out.csv_path.empty()) write_file(out.csv_path, report_csv(Json::parse(json_text)));
}

int auto_radius(int flag_value, int fallback) { return flag_value >= 0 ? flag_value : fallback; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-ring derivation analysis over finitely generated groups"};
  app.require_subcommand(1);

  std::string group_spec;
  app.add_option("--group", group_spec, "group spec: free:2, abelian:3, heisenberg, cyclic:6, dihedral:4, symmetric:3")
      ->required();

  // shared knobs (registered per subcommand below)
  int radius = 3;
  double tol = 1e-9;
  int count = 16;
  int order_bound = 256;
  int domain_radius = -1;
  int trunc_radius = -1;
  std::string derivation_spec;
  std::string character_spec;
  std::string norm_spec;
  double alpha = 0.0;
  double theta = 0.9;
  int window = -1;
  int closure_radius = -1;

  OutputOptions ball_out, classify_out, witness_out, probe_out, leibniz_out, norms_out;

  CLI::App* ball = app.add_subcommand("ball", "enumerate a word-metric ball (with conjugacy classes)");
  ball->add_option("--radius", radius, "ball radius")->capture_default_str();
  ball->add_option("--closure-radius", closure_radius,
                   "also partition the ball into conjugacy classes with this closure radius");
  add_output_options(ball, ball_out);

  CLI::App* classify = app.add_subcommand("classify", "full classification of a derivation");
  classify->add_option("--derivation", derivation_spec, "derivation spec")->required();
  classify->add_option("--norm", norm_spec, "ambient norm: sup, lp:2, expw:1.5")
      ->capture_default_str()
      ->default_val("sup");
  classify->add_option("--radius", radius, "analysis radius")->capture_default_str();
  classify->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  classify->add_option("--count", count, "witness power count")->capture_default_str();
  classify->add_option("--order-bound", order_bound, "order search bound")->capture_default_str();
  classify->add_option("--domain-radius", domain_radius, "derivation domain radius (default: radius)");
  classify->add_option("--trunc-radius", trunc_radius, "truncation radius for tabulated forms (default: radius)");
  add_output_options(classify, classify_out);

  CLI::App* witness = app.add_subcommand("witness", "search for an unboundedness witness loop");
  witness->add_option("--character", character_spec, "character spec")->required();
  witness->add_option("--radius", radius, "loop search radius")->capture_default_str();
  witness->add_option("--count", count, "number of loop powers to tabulate")->capture_default_str();
  witness->add_option("--tol", tol, "numeric tolerance")->capture_default_str();
  witness->add_option("--order-bound", order_bound, "order search bound")->capture_default_str();
  add_output_options(witness, witness_out);

  CLI::App* probe = app.add_subcommand("probe", "exp-weight growth probe for a derivation");
  probe->add_option("--derivation", derivation_spec, "derivation spec")->required();
  probe->add_option("--alpha", alpha, "exp-weight parameter (or use --norm expw:a)");
  probe->add_option("--norm", norm_spec, "expw:<alpha> form of the probe norm");
  probe->add_option("--radius", radius, "largest probed radius")->capture_default_str();
  probe->add_option("--theta", theta, "stabilization threshold")->capture_default_str();
  probe->add_option("--domain-radius", domain_radius, "derivation domain radius (default: radius)");
  probe->add_option("--trunc-radius", trunc_radius, "truncation radius (default: radius)");
  add_output_options(probe, probe_out);

  CLI::App* leibniz = app.add_subcommand("leibniz", "Leibniz defect scan over a ball");
  leibniz->add_option("--derivation", derivation_spec, "derivation spec")->required();
  leibniz->add_option("--radius", radius, "pair scan radius")->capture_default_str();
  leibniz->add_option("--tol", tol, "pass tolerance on the max defect")->capture_default_str();
  leibniz->add_option("--window", window, "coefficient window (default: per-pair sound windows)");
  leibniz->add_option("--domain-radius", domain_radius, "derivation domain radius (default: 2*radius)");
  leibniz->add_option("--trunc-radius", trunc_radius, "truncation radius (default: 2*radius)");
  add_output_options(leibniz, leibniz_out);

  CLI::App* norms = app.add_subcommand("norms", "norm subordination report");
  norms->add_option("--norm", norm_spec, "norm to test against sup")->required();
  norms->add_option("--radius", radius, "probe radius")->capture_default_str();
  add_output_options(norms, norms_out);

  CLI11_PARSE(app, argc, argv);

  GroupHandle G;
  check(gring_group_create(group_spec.c_str(), &G.ptr));

  if (ball->parsed()) {
    OwnedString json;
    check(gring_ball_json(G.ptr, radius, &json.ptr));
    Json report = Json::parse(json.ptr);
    if (closure_radius >= 0) {
      OwnedString conj;
      check(gring_conjugacy_json(G.ptr, radius, closure_radius, &conj.ptr));
      report["conjugacy"] = Json::parse(conj.ptr);
    }
    std::string text = report.dump(2);
    std::cout << "ball(" << radius << ") of " << group_spec << ": " << report["size"]
              << " elements" << (report["saturated"].get<bool>() ? " (whole group)" : "") << "\n";
    if (closure_radius >= 0)
      std::cout << "conjugacy classes (closure " << closure_radius
                << "): " << report["conjugacy"]["classes"].size() << "\n";
    deliver(ball_out, text);
    return kExitOk;
  }

  if (classify->parsed()) {
    DerivationHandle d;
    int dom = auto_radius(domain_radius, radius);
    int trunc = auto_radius(trunc_radius, radius);
    check(gring_derivation_create(G.ptr, derivation_spec.c_str(), dom, trunc, &d.ptr));
    OwnedString json;
    int obstructed = 0;
    check(gring_classify_json(d.ptr, norm_spec.c_str(), radius, tol, count, order_bound,
                              &json.ptr, &obstructed));
    Json report = Json::parse(json.ptr);
    std::cout << "verdict: " << report["verdict"].get<std::string>() << "\n";
    std::cout << "ambient norm " << report["ambient_norm"].get<std::string>() << ", subordinate: "
              << (report["subordination"].is_null()
                      ? std::string("n/a")
                      : report["subordination"]["subordinate"].dump())
              << "\n";
    if (!report["witness"].is_null())
      std::cout << "witness: " << report["witness"]["verdict"].get<std::string>() << "\n";
    std::cout << "theorem cross-check: "
              << (report["theorem_consistent"].get<bool>() ? "consistent" : "VIOLATED") << "\n";
    if (!report["errors"].empty()) {
      std::cout << "stages with errors:\n";
      for (const Json& e : report["errors"])
        std::cout << "  " << e["stage"].get<std::string>() << ": "
                  << e["message"].get<std::string>() << "\n";
    }
    deliver(classify_out, json.ptr);
    return obstructed ? kExitFinding : kExitOk;
  }

  if (witness->parsed()) {
    CharacterHandle chi;
    check(gring_character_create(G.ptr, character_spec.c_str(), &chi.ptr));
    OwnedString json;
    int found = 0;
    check(gring_witness_json(chi.ptr, radius, count, tol, order_bound, &json.ptr, &found));
    Json report = Json::parse(json.ptr);
    std::cout << "witness verdict: " << report["verdict"].get<std::string>() << "\n";
    if (found) {
      const Json& loop = report["loop"];
      std::cout << "loop at base " << loop["base"].get<std::string>() << " with conjugator "
                << loop["conjugator"].get<std::string>() << " (order "
                << loop["conjugator_order"].get<std::string>() << ")\n";
      const Json& rows = report["rows"];
      std::cout << "growth ratios |chi(phi^n)| / ||t^n||_sup:";
      for (const Json& row : rows) std::cout << ' ' << row["ratio"].dump();
      std::cout << "\n";
    }
    deliver(witness_out, json.ptr);
    return found ? kExitFinding : kExitOk;
  }

  if (probe->parsed()) {
    double a = alpha;
    if (a <= 0.0 && !norm_spec.empty()) {
      // accept --norm expw:1.5 as the alpha source
      auto pos = norm_spec.find(':');
      if (norm_spec.rfind("expw", 0) == 0 && pos != std::string::npos)
        a = std::stod(norm_spec.substr(pos + 1));
    }
    if (a <= 0.0) {
      std::cerr << "error: probe needs --alpha or --norm expw:<alpha>\n";
      return kExitError;
    }
    DerivationHandle d;
    int dom = auto_radius(domain_radius, radius);
    int trunc = auto_radius(trunc_radius, radius);
    check(gring_derivation_create(G.ptr, derivation_spec.c_str(), dom, trunc, &d.ptr));
    OwnedString json;
    int stabilizing = 0;
    check(gring_probe_json(d.ptr, a, radius, theta, &json.ptr, &stabilizing));
    Json report = Json::parse(json.ptr);
    std::cout << "probe verdict (alpha " << a << "): " << report["verdict"].get<std::string>()
              << "\n";
    for (const Json& row : report["rows"])
      std::cout << "  radius " << row["radius"] << ": value " << row["value"] << ", increment "
                << row["increment"] << ", ratio " << row["ratio"].dump() << "\n";
    deliver(probe_out, json.ptr);
    std::string verdict = report["verdict"].get<std::string>();
    return verdict == "not-stabilizing" ? kExitFinding : kExitOk;
  }

  if (leibniz->parsed()) {
    DerivationHandle d;
    int dom = auto_radius(domain_radius, 2 * radius);
    int trunc = auto_radius(trunc_radius, 2 * radius);
    check(gring_derivation_create(G.ptr, derivation_spec.c_str(), dom, trunc, &d.ptr));
    OwnedString json;
    int ok = 0;
    check(gring_leibniz_json(d.ptr, radius, window, tol, &json.ptr, &ok));
    Json report = Json::parse(json.ptr);
    std::cout << (report["twisted"].get<bool>() ? "twisted " : "") << "leibniz scan: max defect "
              << report["max_defect"] << " over " << report["pairs_checked"] << " pairs ("
              << report["pairs_skipped"] << " skipped)"
              << (report["all_sound"].get<bool>() ? "" : " [includes advisory windows]") << "\n";
    deliver(leibniz_out, json.ptr);
    return ok ? kExitOk : kExitFinding;
  }

  if (norms->parsed()) {
    OwnedString json;
    int subordinate = 0;
    check(gring_subordination_json(G.ptr, norm_spec.c_str(), radius, &json.ptr, &subordinate));
    Json report = Json::parse(json.ptr);
    std::cout << "norm " << report["norm"].get<std::string>() << " subordinate to sup: "
              << (subordinate ? "yes (c = " + report["c"].dump() + ")" : "no") << "\n";
    if (!subordinate && !report["witnesses"].empty()) {
      std::cout << "growing ratios sup/norm:";
      for (const Json& row : report["witnesses"]) std::cout << ' ' << row["ratio"].dump();
      std::cout << "\n";
    }
    deliver(norms_out, json.ptr);
    return subordinate ? kExitOk : kExitFinding;
  }

  return kExitError;  // unreachable: a subcommand is required
}
