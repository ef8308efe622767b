// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 verified, 1 refuted, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rphase/rphase.hpp"

namespace {

using rphase::io::json;

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string mode = "affine";
  std::string output = "json";
};

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw rphase::io::InputError("", "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw rphase::io::InputError("", std::string("invalid JSON: ") + e.what());
  }
}

// Phase, oriented-matroid and search documents may wrap the matroid.
rphase::Matroid matroid_of(const json& doc) {
  if (doc.is_object() && doc.contains("matroid"))
    return rphase::io::matroid_from_json(doc["matroid"], "/matroid");
  return rphase::io::matroid_from_json(doc);
}

int emit(const json& report, bool ok, const Options& opts) {
  if (opts.output == "text") {
    std::cout << (ok ? "ok" : "refuted");
    for (const char* key : {"count", "complete", "real_subfan", "error"})
      if (report.contains(key)) std::cout << " " << key << "=" << report[key].dump();
    std::cout << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return ok ? kVerified : kRefuted;
}

int refuted(const std::string& command, const std::string& why, const Options& opts) {
  return emit({{"command", command}, {"ok", false}, {"error", why}}, false, opts);
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int verify_phase(const std::string& path, const Options& opts) {
  auto e = rphase::io::phase_from_json(read_document(path));
  auto even = rphase::verify(e);
  auto neck = rphase::verify_necklace(e);
  json report = rphase::io::to_json(neck, e.fan());
  report["command"] = "verify-phase";
  report["even_cover"] = rphase::io::to_json(even, e.fan());
  report["ok"] = even.ok && neck.ok;
  report["checkers_agree"] = even.ok == neck.ok;
  return emit(report, even.ok && neck.ok, opts);
}

int verify_om(const std::string& path, const Options& opts) {
  auto doc = rphase::io::om_document_from_json(read_document(path));
  rphase::OrientedMatroid om;
  try {
    om = rphase::io::build(doc);
  } catch (const rphase::Error& err) {
    return refuted("verify-om", err.what(), opts);
  }
  auto m = rphase::underlying_matroid(om);
  json report = {{"command", "verify-om"},
                 {"ok", true},
                 {"covectors", om.covectors().size()},
                 {"topes", om.topes().size()},
                 {"rank", m.rank()},
                 {"underlying", rphase::io::to_json(m)}};
  return emit(report, true, opts);
}

int from_oriented(const std::string& path, const Options& opts) {
  auto doc = rphase::io::om_document_from_json(read_document(path));
  auto mode = rphase::io::mode_from_string(opts.mode, "--mode");
  try {
    auto om = rphase::io::build(doc);
    return emit(rphase::io::to_json(rphase::to_phase(om, mode)), true, opts);
  } catch (const rphase::io::InputError&) {
    throw;
  } catch (const rphase::Error& err) {
    return refuted("from-oriented", err.what(), opts);
  }
}

// Commands taking a phase structure first require it to verify.
std::optional<rphase::RealPhaseStructure> verified_phase(const std::string& path) {
  auto e = rphase::io::phase_from_json(read_document(path));
  if (!rphase::verify(e).ok) return std::nullopt;
  return e;
}

int to_circuits(const std::string& path, const Options& opts) {
  auto e = verified_phase(path);
  if (!e) return refuted("to-circuits", "input is not a real phase structure", opts);
  try {
    return emit(rphase::io::to_json(rphase::signed_circuits_from_phase(*e)), true, opts);
  } catch (const rphase::Error& err) {
    return refuted("to-circuits", err.what(), opts);
  }
}

int to_oriented(const std::string& path, const Options& opts) {
  auto e = verified_phase(path);
  if (!e) return refuted("to-oriented", "input is not a real phase structure", opts);
  try {
    return emit(rphase::io::to_json(rphase::phase_to_oriented(*e)), true, opts);
  } catch (const rphase::Error& err) {
    return refuted("to-oriented", err.what(), opts);
  }
}

int minor(const std::string& path, const std::string& del, const std::string& con,
          const Options& opts) {
  auto e = verified_phase(path);
  if (!e) return refuted("minor", "input is not a real phase structure", opts);
  auto d = split_labels(del);
  auto c = split_labels(con);
  for (const auto& l : d) rphase::io::detail::wrap("--delete", [&] { return e->carrier().index_of(l); });
  for (const auto& l : c) rphase::io::detail::wrap("--contract", [&] { return e->carrier().index_of(l); });
  auto out = rphase::io::detail::wrap("--delete", [&] { return rphase::phase_minor(*e, d, c); });
  return emit(rphase::io::to_json(out), true, opts);
}

int search_phase(const std::string& path, bool up_to, std::optional<std::size_t> limit,
                 const Options& opts) {
  auto m = matroid_of(read_document(path));
  rphase::SearchOptions so;
  so.mode = rphase::io::mode_from_string(opts.mode, "--mode");
  so.up_to_reorientation = up_to;
  so.limit = limit;
  auto result = rphase::io::detail::wrap("", [&] { return rphase::search_phase_structures(m, so); });
  json structures = json::array();
  for (const auto& e : result.structures) structures.push_back(rphase::io::to_json(e));
  json report = {{"command", "search-phase"},
                 {"mode", opts.mode},
                 {"up_to_reorientation", up_to},
                 {"count", result.structures.size()},
                 {"complete", result.complete},
                 {"structures", structures}};
  return emit(report, !result.structures.empty(), opts);
}

int count_orientations(const std::string& path, const Options& opts) {
  auto m = matroid_of(read_document(path));
  auto n = rphase::io::detail::wrap("", [&] { return rphase::count_orientations(m); });
  return emit({{"command", "count-orientations"}, {"count", n}}, n > 0, opts);
}

int subfan_check(const std::string& small, const std::string& big, const Options& opts) {
  auto e1 = rphase::io::phase_from_json(read_document(small));
  auto e2 = rphase::io::phase_from_json(read_document(big));
  bool sub = rphase::io::detail::wrap("", [&] { return rphase::is_real_subfan(e1, e2); });
  return emit({{"command", "subfan-check"}, {"real_subfan", sub}}, sub, opts);
}

int necklace_orderings(const std::string& path, const Options& opts) {
  auto e = rphase::io::phase_from_json(read_document(path));
  auto report = rphase::verify_necklace(e);
  json out = rphase::io::to_json(report, e.fan());
  out["command"] = "necklace-orderings";
  return emit(out, report.ok, opts);
}

// Experiment: group the reorientation classes on a matroid fan by the
// necklace orderings they induce.
int necklace_classes(const std::string& path, const Options& opts) {
  auto m = matroid_of(read_document(path));
  rphase::SearchOptions so;
  so.mode = rphase::io::mode_from_string(opts.mode, "--mode");
  so.up_to_reorientation = true;
  auto result = rphase::io::detail::wrap("", [&] { return rphase::search_phase_structures(m, so); });
  std::map<std::vector<std::vector<int>>, std::size_t> profiles;
  for (const auto& e : result.structures) {
    std::vector<std::vector<int>> key;
    for (const auto& o : rphase::verify_necklace(e).orderings) key.push_back(o ? o->cycle() : std::vector<int>{});
    ++profiles[key];
  }
  std::size_t shared = 0;
  json groups = json::array();
  for (const auto& [key, n] : profiles) {
    if (n > 1) ++shared;
    groups.push_back({{"orderings", key}, {"classes", n}});
  }
  json report = {{"command", "necklace-classes"},
                 {"reorientation_classes", result.structures.size()},
                 {"distinct_profiles", profiles.size()},
                 {"profiles_with_several_classes", shared},
                 {"groups", groups}};
  return emit(report, true, opts);
}

int fixtures_command(bool list, const std::string& write_dir, const std::string& name,
                     const Options& opts) {
  auto cat = rphase::fixtures::catalog();
  if (!write_dir.empty()) {
    std::filesystem::create_directories(write_dir);
    for (const auto& e : cat) {
      std::ofstream out(std::filesystem::path(write_dir) / (e.name + ".json"));
      out << e.document().dump(2) << "\n";
    }
  }
  if (!name.empty()) {
    for (const auto& e : cat)
      if (e.name == name) {
        std::cout << e.document().dump(2) << "\n";
        return kVerified;
      }
    throw rphase::io::InputError("", "unknown fixture \"" + name + "\"");
  }
  if (list || write_dir.empty()) {
    json names = json::array();
    for (const auto& e : cat) names.push_back({{"name", e.name}, {"kind", e.kind}});
    if (opts.output == "text") {
      for (const auto& e : cat) std::cout << e.name << "\t" << e.kind << "\n";
    } else {
      std::cout << json{{"fixtures", names}}.dump(2) << "\n";
    }
  }
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real phase structures on matroid fans and oriented matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--mode", opts.mode, "Fan mode for commands that build a fan")
      ->check(CLI::IsMember({"affine", "projective"}));
  app.add_option("--output", opts.output, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string file, file2, del, con, fixture, write_dir;
  bool up_to = false, list = false;
  std::optional<std::size_t> limit;
  int code = kVerified;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input document, - for stdin")->required();
    return sub;
  };
  auto* verify_phase_cmd = with_file("verify-phase", "Check a phase structure");
  auto* verify_om_cmd = with_file("verify-om", "Check an oriented matroid");
  auto* from_om_cmd = with_file("from-oriented", "Phase structure of an oriented matroid");
  auto* to_circuits_cmd = with_file("to-circuits", "Signed circuits of a phase structure");
  auto* to_om_cmd = with_file("to-oriented", "Oriented matroid of a phase structure");
  auto* minor_cmd = with_file("minor", "Minor of a phase structure");
  minor_cmd->add_option("--delete", del, "Comma-separated labels to delete");
  minor_cmd->add_option("--contract", con, "Comma-separated labels to contract");
  auto* search_cmd = with_file("search-phase", "Enumerate phase structures on a matroid fan");
  search_cmd->add_flag("--up-to-reorientation", up_to, "One structure per reorientation class");
  search_cmd->add_option("--limit", limit, "Stop after this many structures");
  auto* count_cmd = with_file("count-orientations", "Count orientations of a matroid");
  auto* subfan_cmd = app.add_subcommand("subfan-check", "Is the first structure a real subfan of the second");
  subfan_cmd->add_option("small", file, "Candidate subfan")->required();
  subfan_cmd->add_option("big", file2, "Ambient structure")->required();
  auto* necklace_cmd = with_file("necklace-orderings", "Necklace ordering at every codimension-one face");
  auto* classes_cmd = with_file("necklace-classes", "Group reorientation classes by necklace orderings");
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Bundled example documents");
  fixtures_cmd->add_flag("--list", list, "List fixture names");
  fixtures_cmd->add_option("--write", write_dir, "Write every fixture to this directory");
  fixtures_cmd->add_option("name", fixture, "Print one fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kVerified : kBadInput;
  }

  try {
    if (*verify_phase_cmd) code = verify_phase(file, opts);
    else if (*verify_om_cmd) code = verify_om(file, opts);
    else if (*from_om_cmd) code = from_oriented(file, opts);
    else if (*to_circuits_cmd) code = to_circuits(file, opts);
    else if (*to_om_cmd) code = to_oriented(file, opts);
    else if (*minor_cmd) code = minor(file, del, con, opts);
    else if (*search_cmd) code = search_phase(file, up_to, limit, opts);
    else if (*count_cmd) code = count_orientations(file, opts);
    else if (*subfan_cmd) code = subfan_check(file, file2, opts);
    else if (*necklace_cmd) code = necklace_orderings(file, opts);
    else if (*classes_cmd) code = necklace_classes(file, opts);
    else if (*fixtures_cmd) code = fixtures_command(list, write_dir, fixture, opts);
  } catch (const rphase::io::InputError& e) {
    std::cout << json{{"ok", false}, {"input_error", e.what()}, {"pointer", e.pointer()}}.dump(2) << "\n";
    return kBadInput;
  } catch (const rphase::Error& e) {
    std::cout << json{{"ok", false}, {"input_error", e.what()}, {"pointer", ""}}.dump(2) << "\n";
    return kBadInput;
  }
  return code;
}
