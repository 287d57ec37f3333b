// toricfan command line front end. Talks to the library only through the C
// API in toricfan.h.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <toricfan/toricfan.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FanDeleter {
  void operator()(tf_fan* f) const { tf_fan_free(f); }
};
struct ComplexDeleter {
  void operator()(tf_complex* c) const { tf_complex_free(c); }
};
using FanPtr = std::unique_ptr<tf_fan, FanDeleter>;
using ComplexPtr = std::unique_ptr<tf_complex, ComplexDeleter>;

void check(tf_status st) {
  if (st != TF_OK) throw InputError(std::string(tf_status_name(st)) + ": " + tf_last_error());
}

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  tf_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string digest(const std::string& bytes) {
  char* out = nullptr;
  check(tf_digest(bytes.data(), bytes.size(), &out));
  return take(out);
}

// A fan argument is a path to a fan document or builtin:delta /
// builtin:delta-prime.
struct LoadedFan {
  FanPtr fan;
  std::string source_bytes;
};

LoadedFan load_fan(const std::string& arg) {
  LoadedFan out;
  tf_fan* f = nullptr;
  constexpr std::string_view prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) {
    check(tf_fan_builtin(arg.substr(prefix.size()).c_str(), &f));
    out.source_bytes = arg;
  } else {
    out.source_bytes = read_file(arg);
    check(tf_fan_parse(out.source_bytes.c_str(), &f));
  }
  out.fan.reset(f);
  return out;
}

// A complex argument is a complex document, a fan document or a builtin fan.
ComplexPtr load_complex(const std::string& arg, std::string& source_bytes) {
  tf_complex* raw = nullptr;
  if (arg.rfind("builtin:", 0) == 0) {
    LoadedFan lf = load_fan(arg);
    source_bytes = lf.source_bytes;
    check(tf_complex_from_fan(lf.fan.get(), &raw));
  } else {
    source_bytes = read_file(arg);
    check(tf_complex_parse(source_bytes.c_str(), &raw));
  }
  return ComplexPtr(raw);
}

std::string serialize(const tf_fan* f) {
  char* s = nullptr;
  check(tf_fan_serialize(f, &s));
  return take(s);
}

unsigned default_workers() {
  if (const char* env = std::getenv("TORICFAN_WORKERS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::string input_bytes;
  Json results = Json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool verdict() const {
    for (const auto& [key, section] : results.items())
      if (section.is_object() && section.contains("ok") && !section["ok"].get<bool>()) return false;
    return true;
  }

  Json document() const {
    Json j;
    j["schema"] = "toricfan.report";
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = {{"arguments", inputs}, {"digest", digest(input_bytes)}};
    j["results"] = results;
    j["verdict"] = verdict();
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j["timing"] = {{"elapsed_ms", ms}};
    return j;
  }
};

std::string labels(const Json& arr) {
  std::string s;
  for (const auto& x : arr) s += x.get<std::string>();
  return s;
}

std::string vec(const Json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + arr[i].get<std::string>();
  return s + ")";
}

void print_section_text(std::ostream& os, const std::string& key, const Json& s) {
  os << "[" << key << "]";
  if (s.is_object() && s.contains("ok")) os << (s["ok"].get<bool>() ? " ok" : " FAILED");
  os << "\n";
  if (key == "completeness") {
    os << "  witness " << vec(s["witness"]) << ", multiplicity " << s["witness_multiplicity"] << "\n";
    os << "  facets " << s["facet_count"] << ", all paired " << s["all_facets_paired"] << ", opposite sides "
       << s["all_pairs_opposite"] << "\n";
    for (const auto& f : s["unpaired_facets"]) os << "  unpaired facet " << labels(f) << "\n";
    for (const auto& f : s["same_side_facets"]) os << "  same-side facet " << labels(f) << "\n";
  } else if (key == "smoothness") {
    for (const auto& c : s["cones"]) {
      os << "  " << (c.contains("name") ? c["name"].get<std::string>() + " " : "") << labels(c["rays"]) << "  det "
         << c["determinant"].get<std::string>() << "\n";
    }
    os << "  smooth: " << (s["smooth"].get<bool>() ? "yes" : "no");
    if (!s["singular_cones"].empty()) {
      os << ", singular:";
      for (const auto& n : s["singular_cones"]) os << " " << n.get<std::string>();
    }
    os << "\n";
  } else if (key == "scan") {
    os << "  bound " << s["bound"] << ", " << s["total"] << " points, workers " << s["workers"] << "\n";
    for (const auto& [name, count] : s["counts"].items()) os << "  " << name << ": " << count << "\n";
    os << "  sum check: " << (s["sum_check"].get<bool>() ? "ok" : "FAILED") << "\n";
    if (s.contains("one_face_points")) os << "  one-face points collected: " << s["one_face_points"].size() << "\n";
  } else if (key == "steps" && s.is_array()) {
    for (const auto& st : s) {
      os << "  " << st["step"] << ". " << st["label"].get<std::string>() << " = " << vec(st["ray"]) << " replaces";
      for (const auto& r : st["replaced"])
        os << " " << (r.contains("name") ? r["name"].get<std::string>() : labels(r["rays"]));
      os << " -> " << st["produced"].size() << " cones\n";
    }
  } else if (key == "f_vector") {
    os << "  (";
    for (std::size_t i = 0; i < s["f_vector"].size(); ++i) os << (i ? ", " : "") << s["f_vector"][i];
    os << ")  euler " << s["euler_characteristic"] << "\n";
  } else if (key == "obstruction") {
    for (const auto& f : s["facts"]) {
      os << "  " << (f["passed"].get<bool>() ? "pass" : "FAIL") << "  " << f["fact"].get<std::string>() << "  ["
         << f["witness"].get<std::string>() << "]\n";
      if (f.contains("discrepancies"))
        for (const auto& d : f["discrepancies"]) os << "        note: " << d.get<std::string>() << "\n";
    }
  } else if (key == "certificate") {
    os << "  " << s["result"].get<std::string>() << "\n";
    if (s.contains("violation"))
      os << "  " << s["violation"]["kind"].get<std::string>() << " " << labels(s["violation"]["facet"]) << ": "
         << s["violation"]["detail"].get<std::string>() << "\n";
  } else if (key == "family" && s.is_array()) {
    os << "  member  rays  cones  smooth  complete  f-vector\n";
    for (const auto& m : s) {
      os << "  " << m["member"] << "       " << m["rays"] << "    " << m["max_cones"] << "     "
         << (m["smooth"].get<bool>() ? "yes" : "no") << "     " << (m["complete"].get<bool>() ? "yes" : "no")
         << "       " << m["f_vector"].dump() << "\n";
    }
  } else if (key == "fan") {
    os << "  dimension " << s["ambient_dim"] << ", " << s["rays"] << " rays, " << s["max_cones"] << " maximal cones";
    if (s.contains("written_to")) os << ", written to " << s["written_to"].get<std::string>();
    os << "\n";
    if (s.contains("document")) os << "  (pass --out FILE or --format json for the fan document)\n";
  } else if ((key == "link" || key == "star") && s.contains("facets")) {
    for (const auto& f : s["facets"]) os << "  " << labels(f) << "\n";
  } else if (!(s.is_object() && s.size() == 1 && s.contains("ok"))) {
    os << "  " << s.dump() << "\n";
  }
}

void emit(const Report& r, const std::string& format) {
  Json doc = r.document();
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << r.command << ": " << (doc["verdict"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& [key, section] : doc["results"].items()) print_section_text(std::cout, key, section);
}

int finish(const Report& r, const std::string& format) {
  emit(r, format);
  return r.verdict() ? kExitOk : kExitFailed;
}

Json fan_summary(const tf_fan* f) {
  return {{"ok", true},
          {"ambient_dim", tf_fan_ambient_dim(f)},
          {"rays", tf_fan_ray_count(f)},
          {"max_cones", tf_fan_cone_count(f)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and subdivision of simplicial fans"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string fan_arg, witness, point, cone, label, out, out_dir, base_arg = "builtin:delta-prime", start_cone;
  std::string star_arg, link_arg, realization_arg;
  long long bound = 40;
  unsigned workers = default_workers();
  bool collect = false, want_f = false, want_obstruction = false, want_pm = false, want_orthant = false,
       ray_coords = false;
  std::size_t count = 1;

  auto* verify = app.add_subcommand("verify", "Completeness, smoothness and cone determinants");
  verify->add_option("fan", fan_arg, "Fan document or builtin:delta / builtin:delta-prime")->required();
  verify->add_option("--witness", witness, "Generic witness point, e.g. 1,1,1,1");
  verify->add_flag("--open-orthant", want_orthant, "Also test each cone against the open positive orthant");

  auto* scan = app.add_subcommand("scan", "Classify the lattice points of [-B, B]^n");
  scan->add_option("fan", fan_arg)->required();
  scan->add_option("--bound", bound, "Box bound B")->check(CLI::PositiveNumber);
  scan->add_option("--workers", workers, "Worker threads (default: TORICFAN_WORKERS or hardware)");
  scan->add_flag("--collect-one-face", collect, "List the points in relative interiors of rays");

  auto* desing = app.add_subcommand("desingularize", "Replay the ten subdivisions of the Barnette fan");
  desing->add_option("--out", out, "Write the smooth fan document here");

  auto* subdivide = app.add_subcommand("subdivide", "Stellar subdivision at a point or a cone's ray sum");
  subdivide->add_option("fan", fan_arg)->required();
  auto* cone_opt = subdivide->add_option("--cone", cone, "Comma separated ray labels of a maximal cone");
  auto* point_opt = subdivide->add_option("--point", point, "Lattice point, e.g. -2,0,-1,1");
  cone_opt->excludes(point_opt);
  subdivide->add_option("--label", label, "Label of the new ray");
  subdivide->add_option("--out", out, "Write the subdivided fan here");

  auto* suspend = app.add_subcommand("suspend", "Suspension of a fan");
  suspend->add_option("fan", fan_arg)->required();
  suspend->add_option("--out", out, "Write the suspended fan here");

  auto* family = app.add_subcommand("family", "Successive subdivisions of smooth cones");
  family->add_option("--base", base_arg, "Base fan (default builtin:delta-prime)");
  family->add_option("--count", count, "Number of members")->required();
  family->add_option("--start-cone", start_cone, "First cone to subdivide (labels)");
  family->add_option("--out-dir", out_dir, "Directory for member fan documents");

  auto* complex = app.add_subcommand("complex", "Operations on the underlying simplicial complex");
  complex->add_option("fan", fan_arg, "Fan or complex document")->required();
  complex->add_option("--star", star_arg, "Star of a face, e.g. e1,d3");
  complex->add_option("--link", link_arg, "Link of a face, e.g. e1,d3");
  complex->add_flag("--f-vector", want_f, "Face counts");
  complex->add_flag("--obstruction", want_obstruction, "Combinatorial checks around the edge e1d3");
  complex->add_flag("--pseudomanifold", want_pm, "Ridge, connectivity and Euler checks");
  complex->add_option("--out", out, "Write the resulting complex document here");

  auto* certify = app.add_subcommand("certify", "Check a claimed convex realization");
  certify->add_option("complex", fan_arg, "Complex or fan document")->required();
  certify->add_option("realization", realization_arg, "Realization document");
  certify->add_flag("--ray-coordinates", ray_coords, "Use the fan's ray vectors as coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    Report report;
    for (int i = 1; i < argc; ++i) report.inputs.emplace_back(argv[i]);

    if (*verify) {
      report.command = "verify";
      LoadedFan lf = load_fan(fan_arg);
      report.input_bytes = lf.source_bytes + "\n" + witness;
      char* js = nullptr;
      int complete = 0;
      check(tf_fan_verify(lf.fan.get(), witness.empty() ? nullptr : witness.c_str(), &js, &complete));
      Json j = take_json(js);
      report.results["completeness"] = j["completeness"];
      report.results["smoothness"] = j["smoothness"];
      if (want_orthant) {
        char* oj = nullptr;
        check(tf_fan_open_orthant(lf.fan.get(), &oj));
        report.results["open_orthant"] = {{"ok", true}, {"cones", take_json(oj)}};
      }
      return finish(report, format);
    }

    if (*scan) {
      report.command = "scan";
      LoadedFan lf = load_fan(fan_arg);
      report.input_bytes = lf.source_bytes;
      char* js = nullptr;
      int ok = 0;
      check(tf_fan_scan(lf.fan.get(), bound, workers, collect ? 1 : 0, &js, &ok));
      report.results["scan"] = take_json(js);
      return finish(report, format);
    }

    if (*desing) {
      report.command = "desingularize";
      tf_fan* raw = nullptr;
      char* steps = nullptr;
      check(tf_desingularize_barnette(&raw, &steps));
      FanPtr f(raw);
      report.results["fan"] = fan_summary(f.get());
      report.results["steps"] = take_json(steps);
      std::string doc = serialize(f.get());
      if (!out.empty()) {
        write_file(out, doc);
        report.results["fan"]["written_to"] = out;
      } else {
        report.results["fan"]["document"] = Json::parse(doc);
      }
      return finish(report, format);
    }

    if (*subdivide) {
      report.command = "subdivide";
      if (cone.empty() && point.empty()) throw InputError("one of --cone or --point is required");
      LoadedFan lf = load_fan(fan_arg);
      report.input_bytes = lf.source_bytes + "\n" + cone + "\n" + point;
      tf_fan* raw = nullptr;
      char* step = nullptr;
      const char* l = label.empty() ? nullptr : label.c_str();
      if (!cone.empty()) check(tf_fan_subdivide_cone(lf.fan.get(), cone.c_str(), l, &raw, &step));
      else check(tf_fan_subdivide_point(lf.fan.get(), point.c_str(), l, &raw, &step));
      FanPtr f(raw);
      report.results["fan"] = fan_summary(f.get());
      report.results["steps"] = Json::array({take_json(step)});
      std::string doc = serialize(f.get());
      if (!out.empty()) {
        write_file(out, doc);
        report.results["fan"]["written_to"] = out;
      } else {
        report.results["fan"]["document"] = Json::parse(doc);
      }
      return finish(report, format);
    }

    if (*suspend) {
      report.command = "suspend";
      LoadedFan lf = load_fan(fan_arg);
      report.input_bytes = lf.source_bytes;
      tf_fan* raw = nullptr;
      check(tf_fan_suspend(lf.fan.get(), &raw));
      FanPtr f(raw);
      report.results["fan"] = fan_summary(f.get());
      char* js = nullptr;
      int complete = 0;
      check(tf_fan_verify(f.get(), nullptr, &js, &complete));
      Json j = take_json(js);
      report.results["completeness"] = j["completeness"];
      report.results["fan"]["smooth"] = j["smoothness"]["smooth"];
      std::string doc = serialize(f.get());
      if (!out.empty()) {
        write_file(out, doc);
        report.results["fan"]["written_to"] = out;
      } else {
        report.results["fan"]["document"] = Json::parse(doc);
      }
      return finish(report, format);
    }

    if (*family) {
      report.command = "family";
      LoadedFan lf = load_fan(base_arg);
      report.input_bytes = lf.source_bytes + "\n" + std::to_string(count) + "\n" + start_cone;
      const char* start = nullptr;
      if (!start_cone.empty()) start = start_cone.c_str();
      else if (base_arg == "builtin:delta-prime") start = "d1,e2,d2,d4";
      std::vector<tf_fan*> raw(count, nullptr);
      char* summary = nullptr;
      check(tf_fan_family(lf.fan.get(), count, start, raw.data(), &summary));
      std::vector<FanPtr> members;
      for (auto* p : raw) members.emplace_back(p);
      Json rows = take_json(summary);
      bool all_ok = true;
      for (const auto& row : rows) all_ok = all_ok && row["smooth"].get<bool>() && row["complete"].get<bool>();
      report.results["family"] = rows;
      report.results["family_check"] = {{"ok", all_ok}};
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t i = 0; i < members.size(); ++i) {
          auto path = std::filesystem::path(out_dir) / ("member-" + std::to_string(i + 1) + ".fan.json");
          write_file(path.string(), serialize(members[i].get()));
        }
      }
      return finish(report, format);
    }

    if (*complex) {
      report.command = "complex";
      std::string bytes;
      ComplexPtr c = load_complex(fan_arg, bytes);
      report.input_bytes = bytes;
      ComplexPtr result;
      auto sub = [&](const char* key, const std::string& face, auto fn) {
        tf_complex* raw = nullptr;
        check(fn(c.get(), face.c_str(), &raw));
        result.reset(raw);
        char* js = nullptr;
        check(tf_complex_serialize(raw, &js));
        Json doc = take_json(js);
        report.results[key] = {{"ok", true}, {"face", face}, {"facets", doc["facets"]}};
      };
      if (!star_arg.empty()) sub("star", star_arg, tf_complex_star);
      if (!link_arg.empty()) sub("link", link_arg, tf_complex_link);
      if (want_f) {
        char* js = nullptr;
        check(tf_complex_f_vector(c.get(), &js));
        report.results["f_vector"] = take_json(js);
      }
      if (want_pm) {
        char* js = nullptr;
        check(tf_complex_pseudomanifold(c.get(), &js, nullptr));
        report.results["pseudomanifold"] = take_json(js);
      }
      if (want_obstruction) {
        char* js = nullptr;
        check(tf_complex_obstruction(c.get(), &js, nullptr));
        report.results["obstruction"] = take_json(js);
      }
      if (!out.empty()) {
        char* js = nullptr;
        check(tf_complex_serialize(result ? result.get() : c.get(), &js));
        write_file(out, take(js));
      }
      if (report.results.empty()) {
        char* js = nullptr;
        check(tf_complex_f_vector(c.get(), &js));
        report.results["f_vector"] = take_json(js);
      }
      return finish(report, format);
    }

    if (*certify) {
      report.command = "certify";
      std::string bytes;
      ComplexPtr c;
      std::string realization;
      if (ray_coords) {
        LoadedFan lf = load_fan(fan_arg);
        bytes = lf.source_bytes;
        tf_complex* raw = nullptr;
        check(tf_complex_from_fan(lf.fan.get(), &raw));
        c.reset(raw);
        char* js = nullptr;
        check(tf_realization_from_fan(lf.fan.get(), &js));
        realization = take(js);
      } else {
        c = load_complex(fan_arg, bytes);
        if (realization_arg.empty()) throw InputError("a realization document or --ray-coordinates is required");
        realization = read_file(realization_arg);
      }
      report.input_bytes = bytes + "\n" + realization;
      char* js = nullptr;
      int ok = 0;
      check(tf_certify(c.get(), realization.c_str(), &js, &ok));
      report.results["certificate"] = take_json(js);
      return finish(report, format);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
