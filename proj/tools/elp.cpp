#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elp/harness.hpp"

namespace {

using namespace elp;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_theory_file(const std::string& path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".eth";
}

Theory load_theory(const std::string& path,
                   const std::vector<std::string>& extra_atoms) {
  const std::string text = read_file(path);
  if (is_theory_file(path)) return parse_theory(text, extra_atoms);
  return theory_of(parse_program(text, extra_atoms));
}

struct SemanticsName {
  Semantics value;
  bool weak = false;  // the weak autoepistemic engine sits outside the enum
};

SemanticsName parse_semantics(const std::string& s) {
  if (s == "g91") return {Semantics::G91};
  if (s == "feel") return {Semantics::Feel};
  if (s == "faeel") return {Semantics::Faeel};
  if (s == "eel") return {Semantics::Eel};
  if (s == "eel_g91") return {Semantics::EelG91};
  if (s == "weak") return {Semantics::G91, true};
  throw CLI::ValidationError("--semantics",
                             "expected g91|feel|faeel|eel|eel_g91|weak");
}

int cap_for(const std::string& sem, bool force) {
  if (sem == "g91") return kDefaultEpistemicCap;
  return force ? kDefaultEpistemicCap : 4;
}

std::vector<TotalView> run_views(const Theory& g, const std::string& sem,
                                 const std::string& engine, int cap) {
  const SemanticsName s = parse_semantics(sem);
  if (s.weak) return weak_autoepistemic_world_views(g, cap);
  if (s.value == Semantics::Faeel && engine == "direct")
    return faeel_world_views_direct(g, cap);
  return world_views(g, s.value, cap);
}

std::string view_text(const TotalView& w, const Signature& sig) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += "{";
    const auto names = interp_names(w[i], sig);
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (j) s += ",";
      s += names[j];
    }
    s += "}";
  }
  return s + "]";
}

nlohmann::json views_json(const std::vector<TotalView>& views,
                          const Signature& sig) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& w : views) {
    nlohmann::json jv = nlohmann::json::array();
    for (Interp i : w) jv.push_back(interp_names(i, sig));
    out.push_back(jv);
  }
  return out;
}

TotalView parse_view_arg(const std::string& text, const Signature& sig) {
  // Semicolon-separated belief sets, each a comma-separated atom list.
  TotalView w;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    Interp i = 0;
    std::istringstream ps(part);
    std::string name;
    while (std::getline(ps, name, ',')) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty()) continue;
      const int idx = sig.index_of(name);
      if (idx < 0) throw std::runtime_error("unknown atom in --view: " + name);
      i |= Interp(1) << idx;
    }
    w.push_back(i);
  }
  if (w.empty()) w.push_back(0);
  return canonical(std::move(w));
}

Interp parse_atom_set(const std::string& text, const Signature& sig) {
  Interp u = 0;
  std::istringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) continue;
    const int idx = sig.index_of(name);
    if (idx < 0) throw std::runtime_error("unknown atom in --set: " + name);
    u |= Interp(1) << idx;
  }
  return u;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"world-view solver for epistemic logic programs"};
  app.require_subcommand(1);

  std::string file, semantics = "faeel", engine = "char", view_arg, set_arg;
  std::string policy = "bottom", properties, sem_list = "g91,faeel";
  std::vector<std::string> extra_atoms;
  bool json_out = false, force = false, opt_strat = false, opt_tight = false;
  std::uint64_t seed = 1;
  int count = 50, max_atoms = 3;

  auto add_common = [&](CLI::App* cmd, bool with_sem = true) {
    cmd->add_option("file", file, "program (.elp) or theory (.eth) file")
        ->required();
    if (with_sem)
      cmd->add_option("--semantics", semantics,
                      "g91|feel|faeel|eel|eel_g91|weak");
    cmd->add_option("--atoms", extra_atoms,
                    "extra signature atoms (comma or repeat)")
        ->delimiter(',');
    cmd->add_flag("--force", force, "allow 5 atoms (default cap 4)");
  };

  auto* solve = app.add_subcommand("solve", "enumerate world views");
  add_common(solve);
  solve->add_option("--engine", engine, "faeel engine: direct|char");
  solve->add_flag("--json", json_out, "machine-readable output");

  auto* check = app.add_subcommand("check", "test one view for membership");
  add_common(check);
  check->add_option("--view", view_arg, "view, e.g. \"a,b;b\"")->required();
  check->add_flag("--json", json_out, "machine-readable output");

  auto* split_cmd = app.add_subcommand("split", "split on an atom set");
  add_common(split_cmd);
  split_cmd->add_option("--set", set_arg, "splitting set, e.g. a,b");
  split_cmd->add_option("--policy", policy,
                        "either-rule placement: bottom|top");

  auto* analyze = app.add_subcommand("analyze", "stratification / tightness");
  add_common(analyze, false);
  analyze->add_flag("--stratified", opt_strat, "only the stratification check");
  analyze->add_flag("--tight", opt_tight, "only the tightness check");

  auto* compare = app.add_subcommand("compare", "diff several semantics");
  add_common(compare, false);
  compare->add_option("--semantics", sem_list, "comma-separated list");

  auto* fuzz = app.add_subcommand("fuzz", "run the property battery");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--count", count, "trials per property");
  fuzz->add_option("--max-atoms", max_atoms, "signature size (<= 4)");
  fuzz->add_option("--properties", properties,
                   "comma-separated subset (default: all)");
  fuzz->add_flag("--json", json_out, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const Theory g = load_theory(file, extra_atoms);
      const int cap = cap_for(semantics, force);
      const auto views = run_views(g, semantics, engine, cap);
      // the direct/characterization split only exists for faeel
      const std::string engine_name =
          semantics != "faeel"       ? "direct"
          : engine == "direct"       ? "direct"
                                     : "characterization";
      if (json_out) {
        nlohmann::json j;
        j["semantics"] = semantics;
        j["signature"] = g.sig.names();
        j["world_views"] = views_json(views, g.sig);
        j["engine"] = engine_name;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "semantics: " << semantics << " (engine " << engine_name
                  << ")\n";
        for (const auto& w : views)
          std::cout << view_text(w, g.sig) << "\n";
        std::cout << views.size() << " world view(s)\n";
      }
      return views.empty() ? 1 : 0;
    }

    if (check->parsed()) {
      const Theory g = load_theory(file, extra_atoms);
      const TotalView w = parse_view_arg(view_arg, g.sig);
      const SemanticsName s = parse_semantics(semantics);
      bool member;
      if (s.weak) {
        const auto views =
            weak_autoepistemic_world_views(g, cap_for(semantics, force));
        member = std::find(views.begin(), views.end(), w) != views.end();
      } else {
        member = is_world_view(g, s.value, w);
      }
      if (json_out) {
        nlohmann::json j;
        j["semantics"] = semantics;
        j["view"] = views_json({w}, g.sig)[0];
        j["world_view"] = member;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << view_text(w, g.sig) << " is "
                  << (member ? "" : "not ") << "a " << semantics
                  << " world view\n";
      }
      return member ? 0 : 1;
    }

    if (split_cmd->parsed()) {
      const Program p = parse_program(read_file(file), extra_atoms);
      const Interp u = parse_atom_set(set_arg, p.sig);
      const auto pol = policy == "top" ? PlacementPolicy::TopFirst
                                       : PlacementPolicy::BottomFirst;
      const SemanticsName s = parse_semantics(semantics);
      if (s.weak) throw std::runtime_error("split: pick a non-weak semantics");
      const SplitResult parts = split(p, u, pol);
      std::cout << "bottom:\n" << print_program(parts.bottom);
      std::cout << "top:\n" << print_program(parts.top);
      const auto sols = solutions(p, u, s.value, cap_for(semantics, force), pol);
      for (const auto& [wb, wt] : sols)
        std::cout << "solution: " << view_text(wb, p.sig) << " + "
                  << view_text(wt, p.sig) << " -> "
                  << view_text(compose(wb, wt), p.sig) << "\n";
      std::cout << sols.size() << " solution(s)\n";
      return sols.empty() ? 1 : 0;
    }

    if (analyze->parsed()) {
      const Program p = parse_program(read_file(file), extra_atoms);
      const bool both = !opt_strat && !opt_tight;
      auto show = [&](const char* what,
                      const std::optional<LayerAssignment>& layers) {
        if (!layers) {
          std::cout << what << ": no\n";
          return;
        }
        std::cout << what << ": yes, layers {";
        for (int a = 0; a < p.sig.size(); ++a)
          std::cout << (a ? "," : "") << p.sig.name(a) << ":" << (*layers)[a];
        std::cout << "}\n";
      };
      if (opt_strat || both) show("stratified", stratify(p));
      if (opt_tight || both) show("tight", tight_stratify(p));
      return 0;
    }

    if (compare->parsed()) {
      const Theory g = load_theory(file, extra_atoms);
      std::vector<std::pair<std::string, std::vector<TotalView>>> results;
      std::istringstream ss(sem_list);
      std::string name;
      while (std::getline(ss, name, ','))
        results.emplace_back(
            name, run_views(g, name, "char", cap_for(name, force)));
      for (const auto& [n, views] : results) {
        std::cout << n << ":";
        for (const auto& w : views) std::cout << " " << view_text(w, g.sig);
        std::cout << "\n";
      }
      bool agree = true;
      for (std::size_t i = 1; i < results.size(); ++i)
        agree = agree && results[i].second == results[0].second;
      std::vector<TotalView> all;
      for (const auto& [n, views] : results)
        for (const auto& w : views) all.push_back(w);
      for (const auto& w : sorted_views(std::move(all))) {
        std::string in, out;
        for (const auto& [n, views] : results)
          (std::find(views.begin(), views.end(), w) != views.end() ? in : out)
              .append(" " + n);
        if (!out.empty() && !in.empty())
          std::cout << "disagreement on " << view_text(w, g.sig) << ": in"
                    << in << ", not in" << out << "\n";
      }
      std::cout << (agree ? "all agree\n" : "semantics differ\n");
      return 0;
    }

    if (fuzz->parsed()) {
      if (max_atoms > 4) throw CapExceeded("fuzz: --max-atoms is capped at 4");
      GenConfig cfg;
      cfg.atom_count = max_atoms;
      std::vector<std::string> names;
      if (properties.empty()) names = property_names();
      else {
        std::istringstream ss(properties);
        std::string n;
        while (std::getline(ss, n, ',')) names.push_back(n);
      }
      bool all_pass = true;
      nlohmann::json jreports = nlohmann::json::array();
      for (const auto& n : names) {
        const PropertyReport r = check_property(n, cfg, seed, count);
        all_pass = all_pass && r.passed();
        if (json_out) jreports.push_back(nlohmann::json::parse(report_json(r)));
        else std::cout << report_text(r);
      }
      if (json_out) std::cout << jreports.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
