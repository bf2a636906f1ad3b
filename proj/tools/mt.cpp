#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mt/cli/pipeline.hpp"
#include "mt/error.hpp"

namespace {

void write_outputs(const mt::JobOutput& out, const std::string& dir, const std::string& command) {
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / (command + ".json")) << out.report.dump(2) << '\n';
  for (const auto& [name, text] : out.files) std::ofstream(std::filesystem::path(dir) / name) << text;
}

std::string serialize(const mt::JobOutput& out) {
  nlohmann::ordered_json j;
  j["report"] = out.report;
  j["files"] = nlohmann::ordered_json::object();
  for (const auto& [name, text] : out.files) j["files"][name] = text;
  return j.dump();
}

mt::JobOutput deserialize(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  mt::JobOutput out;
  out.report = j.at("report");
  for (const auto& [name, v] : j.at("files").items()) out.files.emplace_back(name, v.get<std::string>());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular tower computations: Nielsen classes, Frattini levels, Schur quotients"};
  app.require_subcommand(1);
  mt::JobSpec job;
  std::string report_dir, cache_dir;
  if (const char* env = std::getenv("MT_CACHE")) cache_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", job.p, "prime")->capture_default_str();
    sub->add_option("--report", report_dir, "directory for report files");
    sub->add_option("--cache", cache_dir, "cache directory (default $MT_CACHE)");
    sub->add_option("--threads", job.threads, "worker threads")->capture_default_str();
    sub->add_option("--budget-elements", job.budget_elements, "tuple/element budget")->capture_default_str();
    sub->add_option("--budget-cosets", job.budget_cosets, "coset enumeration budget")->capture_default_str();
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", job.group, "A4, A5, K4, D<n> or a file of permutation generators")
        ->capture_default_str();
  };

  auto* level = app.add_subcommand("level", "Hurwitz space components at level k (0 or 1)");
  add_group(level);
  add_common(level);
  level->add_option("--classes", job.classes, "class labels, e.g. 3A,3A,3A,3A")->required();
  level->add_option("--k", job.k, "level")->capture_default_str();

  auto* dihedral = app.add_subcommand("dihedral", "dihedral tower D_{p^(k+1)} with four involutions");
  add_common(dihedral);
  dihedral->add_option("--k", job.k, "level")->capture_default_str();

  auto* schur = app.add_subcommand("schur", "Z/p Schur quotients of the first Frattini level");
  add_group(schur);
  add_common(schur);
  schur->add_option("--k", job.k, "level")->capture_default_str();

  auto* gcomplete = app.add_subcommand("gcomplete", "completeness of class sets");
  add_group(gcomplete);
  add_common(gcomplete);
  gcomplete->add_option("--classes", job.classes, "class labels; default all p' classes");
  gcomplete->add_flag("--hm", job.hm, "H-M completeness over inverse pair removals");

  auto* fv = app.add_subcommand("frattini-verify", "build and check the first Frattini level");
  add_group(fv);
  add_common(fv);

  CLI11_PARSE(app, argc, argv);
  job.command = app.get_subcommands().front()->get_name();
  if (job.threads == 0) job.threads = 1;

  try {
    mt::JobOutput out;
    bool hit = false;
    std::optional<mt::Cache> cache;
    const std::string key = mt::job_key_text(job);
    if (!cache_dir.empty()) {
      cache.emplace(cache_dir);
      if (auto payload = cache->get(key)) {
        out = deserialize(*payload);
        hit = true;
      }
    }
    if (!hit) {
      out = mt::run_job(job);
      if (cache) cache->put(key, serialize(out));
    }
    if (!report_dir.empty()) write_outputs(out, report_dir, job.command);
    std::cout << out.report.dump(2) << '\n';
  } catch (const mt::Error& e) {
    std::cerr << "mt: " << e.what() << '\n';
    return mt::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "mt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
