#include "mt/cli/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "mt/error.hpp"
#include "mt/frattini/towers.hpp"
#include "mt/gcomplete/gcomplete.hpp"
#include "mt/hurwitz/hurwitz.hpp"
#include "mt/schur/schur.hpp"

namespace mt {

namespace {

constexpr const char* kVersion = "mt-report-1";

PresentedGroup presented(GroupPtr g, const char* text) { return find_presentation(g, Presentation::parse(text)); }

PresentedGroup from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "unknown group '" + path + "' (not a builtin or readable file)");
  std::vector<std::string> lines;
  std::size_t degree = 0;
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    static const std::regex num("[0-9]+");
    for (std::sregex_iterator it(line.begin(), line.end(), num), end; it != end; ++it)
      degree = std::max<std::size_t>(degree, std::stoul(it->str()));
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorKind::Parse, "no generators in " + path);
  std::vector<Perm> gens;
  for (const auto& l : lines) gens.push_back(Perm::parse_cycles(l, degree));
  auto g = group_from_generators(gens, 100'000);
  PresentedGroup pg{cayley_presentation(*g), g, g->generators()};
  pg.validate();
  return pg;
}

nlohmann::ordered_json label_map(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  auto labels = class_labels(g);
  for (std::size_t c = 0; c < labels.size(); ++c)
    j[labels[c]] = {{"representative", g.label(g.classes()[c].representative)},
                    {"size", g.classes()[c].members.size()}};
  return j;
}

nlohmann::ordered_json components_json(const Nielsen& ni, const BraidAction& a, const std::vector<Orbit>& orbits) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& o : orbits) {
    auto j = component_report(ni, a, o).to_json();
    j["representative"] = ni.format(a.classes[o.front()]);
    out.push_back(j);
  }
  return out;
}

std::string incidence_csv(const BraidAction& a) { return sh_incidence(a, all_cusps(a)).to_csv(); }

// Each upstairs component against the component below it.
nlohmann::ordered_json comparisons(const Nielsen& down, const BraidAction& a_down, const std::vector<Orbit>& od,
                                   const Nielsen& up, const BraidAction& a_up, const std::vector<Orbit>& ou,
                                   const FrattiniLevel& level) {
  auto out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ou.size(); ++i) {
    for (std::size_t j = 0; j < od.size(); ++j) {
      LevelComparison lc;
      try {
        lc = level_compare(down, a_down, od[j], up, a_up, ou[i], level);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::MismatchedLevels) continue;
        throw;
      }
      std::size_t genus_up = component_genus(a_up, ou[i]);
      std::size_t genus_down = component_genus(a_down, od[j]);
      auto bound = genus_lower_bound(lc.t_prime, lc.degree, lc.u, level.p);
      nlohmann::ordered_json c;
      c["component"] = i;
      c["below"] = j;
      c["degree"] = lc.degree;
      c["t_prime"] = lc.t_prime;
      c["u"] = lc.u;
      c["bound"] = std::to_string(bound.num) + "/" + std::to_string(bound.den);
      c["genus"] = genus_up;
      c["elliptic_ramification"] = lc.elliptic_ramification;
      c["orbit_shortening"] = lc.orbit_shortening;
      c["width_excess"] = lc.width_excess;
      try {
        auto v = check_goup(bound, genus_up, goup_flags(lc, genus_down));
        c["verdict"] = v == GoupVerdict::Equal ? "equal" : v == GoupVerdict::Below ? "below" : "violated";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisUnmet) throw;
        c["verdict"] = "hypothesis unmet";
      }
      out.push_back(c);
    }
  }
  return out;
}

nlohmann::ordered_json header(const JobSpec& job) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["command"] = job.command;
  return j;
}

FirstLevel build_first(const PresentedGroup& pg, const JobSpec& job) {
  auto f = first_level(pg, job.p, job.budget_cosets);
  if (!f.level)
    throw Error(ErrorKind::Budget, "first level needs more than " + std::to_string(job.budget_cosets) + " cosets");
  return f;
}

JobOutput run_level(const JobSpec& job) {
  auto pg = load_group(job.group);
  if (job.k > 1) throw Error(ErrorKind::InvalidArgument, "levels beyond 1 are built only by the dihedral command");
  const auto& G = *pg.group;
  auto cls = parse_classes(G, job.classes);
  JobOutput out;
  auto& r = out.report;
  r = header(job);
  r["group"] = job.group;
  r["order"] = G.order();
  r["p"] = job.p;
  r["k"] = job.k;
  r["classes"] = job.classes;
  r["class_labels"] = label_map(G);
  NielsenSpec s0{pg.group, cls, job.p, job.budget_elements};
  Nielsen down(s0);
  auto a_down = braid_action(down, down.enumerate(), job.threads);
  if (a_down.size() == 0) throw Error(ErrorKind::EmptyNielsenClass, "no tuples in the given classes");
  auto od = mbar4_orbits(a_down);
  if (job.k == 0) {
    r["nielsen_size"] = a_down.size();
    r["components"] = components_json(down, a_down, od);
    out.files.emplace_back("sh_incidence.csv", incidence_csv(a_down));
    return out;
  }
  auto f = build_first(pg, job);
  const auto& level = *f.level;
  if (level.base.get() != pg.group.get()) throw Error(ErrorKind::InvariantViolation, "level base is a new group");
  Nielsen up(lifted_spec(level, s0));
  std::vector<Tuple> seeds;
  for (const auto& t : a_down.classes) {
    if (!down.is_hm_class(t)) continue;
    auto l = lift_tuples(level, t, up);
    seeds.insert(seeds.end(), l.begin(), l.end());
  }
  if (seeds.empty()) throw Error(ErrorKind::EmptyNielsenClass, "no H-M tuples to seed the level");
  auto a_up = braid_action(up, seeds, job.threads);
  auto ou = mbar4_orbits(a_up);
  r["level_order"] = level.total_group().order();
  r["seeds"] = "lifted H-M representatives";
  r["nielsen_size"] = a_up.size();
  r["components"] = components_json(up, a_up, ou);
  r["below"] = components_json(down, a_down, od);
  r["comparisons"] = comparisons(down, a_down, od, up, a_up, ou, level);
  out.files.emplace_back("sh_incidence.csv", incidence_csv(a_up));
  return out;
}

JobOutput run_dihedral(const JobSpec& job) {
  if (job.p < 3 || !is_prime(job.p)) throw Error(ErrorKind::InvalidArgument, "dihedral towers need an odd prime");
  auto level = dihedral_level(job.p, job.k, job.budget_elements);
  const auto& G = level.total_group();
  auto involutions = [](const FiniteGroup& g) {
    for (std::size_t c = 0; c < g.classes().size(); ++c)
      if (g.classes()[c].element_order == 2) return c;
    throw Error(ErrorKind::InvariantViolation, "dihedral group without involutions");
  };
  std::size_t n = 1;
  for (unsigned i = 0; i <= job.k; ++i) n *= job.p;
  JobOutput out;
  auto& r = out.report;
  r = header(job);
  r["group"] = "D" + std::to_string(n);
  r["order"] = G.order();
  r["p"] = job.p;
  r["k"] = job.k;
  r["classes"] = "2A,2A,2A,2A";
  r["modular_curve"] = "X1(" + std::to_string(n) + ")";
  std::size_t cb = involutions(*level.base);
  NielsenSpec s0{level.base, {cb, cb, cb, cb}, job.p, job.budget_elements};
  NielsenSpec s1 = job.k == 0 ? s0 : lifted_spec(level, s0);
  Nielsen up(s1);
  auto a_up = braid_action(up, up.enumerate(), job.threads);
  if (a_up.size() == 0) throw Error(ErrorKind::EmptyNielsenClass, "no tuples");
  auto ou = mbar4_orbits(a_up);
  r["nielsen_size"] = a_up.size();
  r["components"] = components_json(up, a_up, ou);
  if (job.k > 0) {
    Nielsen down(s0);
    auto a_down = braid_action(down, down.enumerate(), job.threads);
    r["comparisons"] = comparisons(down, a_down, mbar4_orbits(a_down), up, a_up, ou, level);
  }
  out.files.emplace_back("sh_incidence.csv", incidence_csv(a_up));
  return out;
}

JobOutput run_schur(const JobSpec& job) {
  if (job.k != 0) throw Error(ErrorKind::InvalidArgument, "Schur analysis is available over M_0 only");
  auto pg = load_group(job.group);
  auto f = build_first(pg, job);
  const auto& level = *f.level;
  auto previous = enumerate_schur_quotients(pg, job.p, job.budget_cosets);
  // Fewer generators keep the cohomology system small when they suffice.
  const auto& T = level.total_group();
  std::vector<Elem> first(level.total.generator_images.begin(),
                          level.total.generator_images.begin() +
                              std::min(pg.generator_images.size(), level.total.generator_images.size()));
  auto total = T.closure(first).size() == T.order() ? eliminate_generators(level.total, first.size()) : level.total;
  auto quotients = enumerate_schur_quotients(total, job.p, job.budget_cosets);
  JobOutput out;
  auto& r = out.report;
  r = header(job);
  r["group"] = job.group;
  r["p"] = job.p;
  r["k"] = job.k;
  r["level_order"] = level.total_group().order();
  r["m_dim"] = level.kernel_dim();
  r["previous_quotients"] = previous.size();
  r["quotients"] = schur_report(quotients, level, previous);
  return out;
}

JobOutput run_gcomplete(const JobSpec& job) {
  auto pg = load_group(job.group);
  const auto& G = *pg.group;
  CompletenessVerdict v;
  if (job.classes.empty()) {
    if (job.hm) throw Error(ErrorKind::InvalidArgument, "--hm needs --classes");
    v = is_p_gcomplete(G, job.p);
  } else if (job.hm) {
    v = is_hm_p_gcomplete(G, parse_classes(G, job.classes), job.p);
  } else {
    v = is_gcomplete(G, parse_classes(G, job.classes));
  }
  JobOutput out;
  auto& r = out.report;
  r = header(job);
  r["group"] = job.group;
  r["p"] = job.p;
  r["classes"] = job.classes;
  r["hm"] = job.hm;
  r["class_labels"] = label_map(G);
  r["complete"] = v.complete;
  std::vector<std::string> w;
  for (Elem e : v.witness_generators) w.push_back(G.label(e));
  r["witness"] = w;
  r["witness_order"] = v.witness_elements.size();
  return out;
}

JobOutput run_frattini_verify(const JobSpec& job) {
  auto pg = load_group(job.group);
  auto f = build_first(pg, job);
  const auto& level = *f.level;
  auto lifting = verify_order_lifting(level);
  JobOutput out;
  auto& r = out.report;
  r = header(job);
  r["group"] = job.group;
  r["p"] = job.p;
  r["sylow_order"] = f.sylow.order();
  r["normalizer_order"] = f.normalizer.order();
  r["h2_dimension"] = f.h2_dimension;
  r["m0_dim"] = f.m0.dim();
  r["m0_loewy"] = loewy_layers(f.m0).display();
  r["level_order"] = level.total_group().order();
  r["frattini"] = verify_frattini(level);
  r["order_lifting_checked"] = lifting.checked;
  r["order_lifting_violations"] = lifting.violations;
  if (f.normalizer.order() < pg.group->order())
    r["splits_over_normalizer"] = restriction_splits(level, f.normalizer.generators);
  r["notes"] = level.notes;
  return out;
}

}  // namespace

PresentedGroup load_group(const std::string& source) {
  if (source == "A5")
    return presented(group_from_generators({Perm::parse_cycles("(1 2 3)", 5), Perm::parse_cycles("(3 4 5)", 5)}, 60),
                     "gens: a b\na^2\nb^3\n(ab)^5\n");
  if (source == "A4")
    return presented(group_from_generators({Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(1 2 3)", 4)}, 12),
                     "gens: a b\na^2\nb^3\n(ab)^3\n");
  if (source == "K4")
    return presented(
        group_from_generators({Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(1 3)(2 4)", 4)}, 4),
        "gens: a b\na^2\nb^2\n(ab)^2\n");
  static const std::regex dn("D([0-9]+)");
  if (std::smatch m; std::regex_match(source, m, dn)) {
    auto n = std::stoul(m[1]);
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "D_n needs n >= 3");
    auto text = "gens: a b\na^2\nb^2\n(ab)^" + std::to_string(n) + "\n";
    return presented(dihedral_group(n), text.c_str());
  }
  return from_file(source);
}

std::vector<std::string> class_labels(const FiniteGroup& g) {
  std::vector<std::string> out;
  std::map<unsigned, unsigned> seen;
  for (const auto& c : g.classes()) {
    unsigned i = seen[c.element_order]++;
    std::string letters;
    do {
      letters.insert(letters.begin(), static_cast<char>('A' + i % 26));
      i = i / 26;
    } while (i-- > 0);
    out.push_back(std::to_string(c.element_order) + letters);
  }
  return out;
}

std::vector<std::size_t> parse_classes(const FiniteGroup& g, const std::string& csv) {
  auto labels = class_labels(g);
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    std::string t;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(c));
    auto it = std::find(labels.begin(), labels.end(), t);
    if (it == labels.end()) throw Error(ErrorKind::Parse, "unknown class label '" + item + "'");
    out.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "no classes given");
  return out;
}

std::string job_key_text(const JobSpec& job) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["command"] = job.command;
  j["group"] = job.group;
  // File groups are keyed by content.
  if (std::ifstream in(job.group); in && job.group.find_first_of("/.") != std::string::npos) {
    std::stringstream ss;
    ss << in.rdbuf();
    j["group_content"] = sha256_hex(ss.str());
  }
  j["classes"] = job.classes;
  j["p"] = job.p;
  j["k"] = job.k;
  j["hm"] = job.hm;
  j["budget_elements"] = job.budget_elements;
  j["budget_cosets"] = job.budget_cosets;
  return j.dump();
}

JobOutput run_job(const JobSpec& job) {
  if (!is_prime(job.p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  if (job.command == "level") return run_level(job);
  if (job.command == "dihedral") return run_dihedral(job);
  if (job.command == "schur") return run_schur(job);
  if (job.command == "gcomplete") return run_gcomplete(job);
  if (job.command == "frattini-verify") return run_frattini_verify(job);
  throw Error(ErrorKind::InvalidArgument, "unknown command " + job.command);
}

}  // namespace mt
