#include "spfsym/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "spfsym/boolean.hpp"
#include "spfsym/classify.hpp"
#include "spfsym/orbit_extension.hpp"
#include "spfsym/profile.hpp"
#include "spfsym/regularity.hpp"
#include "spfsym/spf.hpp"

namespace spfsym {

namespace {

constexpr std::uint64_t kOrbitListLimit = 4096;

struct CommonOpts {
  std::string pair_text;
  std::string group_text;
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 0;
  std::uint64_t max_group_order = kDefaultMaxGroupOrder;
  std::uint64_t max_profiles = kDefaultMaxProfiles;

  ClassifyOptions classify_options() const {
    return ClassifyOptions{seed, max_group_order, max_profiles, verify};
  }
};

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_pair_group) {
  if (with_pair_group) {
    cmd->add_option("--pair", o.pair_text, "voting pair as h,n")->required();
    cmd->add_option("--group", o.group_text,
                    "generators \"(<phi>|<psi>)\" separated by ';' (empty: trivial group)");
  }
  cmd->add_flag("--json", o.json, "emit a JSON report");
  cmd->add_flag("--verify", o.verify, "enable definition-vs-criterion and construction checks");
  cmd->add_option("--seed", o.seed, "seed for randomized witness search (default 0)");
  cmd->add_option("--max-group-order", o.max_group_order, "group order bound");
  cmd->add_option("--max-profiles", o.max_profiles, "profile space bound");
}

VotingPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--pair expects h,n");
  int h = 0, n = 0;
  try {
    h = std::stoi(text.substr(0, comma));
    n = std::stoi(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--pair expects integers h,n");
  }
  return checked_pair(h, n);
}

std::string describe_group(const PGroup& u) {
  std::string gens = format_group(u);
  if (gens.empty()) gens = "(id|id)";
  return "<" + gens + "> order " + std::to_string(u.order());
}

nlohmann::ordered_json group_json(const PGroup& u) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const GElem& g : u.generators()) gens.push_back(format_gelem(g));
  return gens;
}

nlohmann::ordered_json report_header(const PGroup& u, const std::string& method,
                                     const CommonOpts& o) {
  nlohmann::ordered_json j;
  j["pair"] = {u.pair().h, u.pair().n};
  j["group"] = group_json(u);
  j["order"] = u.order();
  j["method"] = method;
  j["bounds"] = {{"max_group_order", o.max_group_order},
                 {"max_profiles", o.max_profiles}};
  return j;
}

void print_bounds(const CommonOpts& o, std::ostream& out) {
  out << "bounds: group order <= " << o.max_group_order << ", profiles <= "
      << o.max_profiles << "\n";
}

std::string profile_label(const Profile& p) {
  return p.pair().n == 2 ? "[" + bit_string(p) + "]" : format_profile(p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

int cmd_orbits(const CommonOpts& o, std::ostream& out) {
  const VotingPair pair = parse_pair(o.pair_text);
  const PGroup u = parse_group(o.group_text, pair, o.max_group_order);
  const OrbitPartition& part = all_orbits(u, o.max_profiles);
  const std::uint64_t count = part.orbit_of.size();
  const bool list = count <= kOrbitListLimit;

  std::vector<std::vector<std::string>> orbits;
  if (list) {
    orbits.resize(part.orbit_count);
    for (std::uint64_t i = 0; i < count; ++i)
      orbits[part.orbit_of[i]].push_back(profile_label(profile_unindex(i, pair)));
  }

  if (o.json) {
    nlohmann::ordered_json j = report_header(u, "union-find", o);
    j["profile_count"] = count;
    j["orbit_count"] = part.orbit_count;
    if (list) j["orbits"] = orbits;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pair: (" << pair.h << "," << pair.n << ")\n";
  out << "group: " << describe_group(u) << "\n";
  out << "method: union-find\n";
  print_bounds(o, out);
  out << "R = " << part.orbit_count << "\n";
  if (list) {
    for (std::uint32_t j = 0; j < part.orbit_count; ++j) {
      out << "orbit " << (j + 1) << " (size " << orbits[j].size() << "):";
      for (const std::string& s : orbits[j]) out << " " << s;
      out << "\n";
    }
  } else {
    out << "orbit listing suppressed (" << count << " profiles > " << kOrbitListLimit
        << ")\n";
  }
  return 0;
}

int cmd_regular(const CommonOpts& o, std::ostream& out) {
  const VotingPair pair = parse_pair(o.pair_text);
  const PGroup u = parse_group(o.group_text, pair, o.max_group_order);
  const bool regular = is_regular(u, o.verify, o.max_profiles);
  const std::string method = o.verify ? "criterion+definition" : "criterion";
  const bool maximal =
      regular && is_regular_maximal(u, o.max_group_order, o.max_profiles);
  if (o.json) {
    nlohmann::ordered_json j = report_header(u, method, o);
    j["regular"] = regular;
    j["regular_maximal"] = maximal;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pair: (" << pair.h << "," << pair.n << ")\n";
  out << "group: " << describe_group(u) << "\n";
  out << "method: " << method << "\n";
  print_bounds(o, out);
  out << "regular: " << (regular ? "true" : "false") << "\n";
  out << "regular-maximal: " << (maximal ? "true" : "false") << "\n";
  return 0;
}

int cmd_spf_groups(const CommonOpts& o, const std::string& spf_path, std::ostream& out) {
  const Spf f = spf_from_json(read_file(spf_path), o.max_profiles);
  const PGroup g = symmetry_group(f);
  const PGroup g1 = anonymity_group(f);
  const PGroup g2 = neutrality_group(f);
  if (o.json) {
    nlohmann::ordered_json j = report_header(g, "exhaustive", o);
    j["symmetry_group"] = group_json(g);
    j["symmetry_order"] = g.order();
    j["anonymity_group"] = group_json(g1);
    j["anonymity_order"] = g1.order();
    j["neutrality_group"] = group_json(g2);
    j["neutrality_order"] = g2.order();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pair: (" << f.pair().h << "," << f.pair().n << ")\n";
  out << "method: exhaustive\n";
  print_bounds(o, out);
  out << "G(F):  " << describe_group(g) << "\n";
  out << "G1(F): " << describe_group(g1) << "\n";
  out << "G2(F): " << describe_group(g2) << "\n";
  return 0;
}

int print_verdict(const CommonOpts& o, const PGroup& u, const Verdict& v,
                  std::ostream& out) {
  if (o.json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(verdict_to_json(v, u));
    j["bounds"] = {{"max_group_order", o.max_group_order},
                   {"max_profiles", o.max_profiles}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "kind: " << to_string(v.kind) << "\n";
  out << "pair: (" << u.pair().h << "," << u.pair().n << ")\n";
  out << "group: " << describe_group(u) << "\n";
  out << "decision: " << (v.decision ? "true" : "false") << "\n";
  out << "method: " << v.method << "\n";
  print_bounds(o, out);
  out << "witness: " << (v.witness ? "present" : "none") << "\n";
  return 0;
}

Verdict run_classification(const CommonOpts& o, const PGroup& u, GroupKind kind) {
  switch (kind) {
    case GroupKind::anonymity: return is_anonymity_group(u, o.classify_options());
    case GroupKind::neutrality: return is_neutrality_group(u, o.classify_options());
    case GroupKind::symmetry: return is_symmetry_group(u, o.classify_options());
  }
  throw std::logic_error("unreachable");
}

int cmd_classify(const CommonOpts& o, const std::string& kind_text, bool all,
                 std::ostream& out) {
  const VotingPair pair = parse_pair(o.pair_text);
  const GroupKind kind = group_kind_from_string(kind_text);
  if (!all) {
    const PGroup u = parse_group(o.group_text, pair, o.max_group_order);
    return print_verdict(o, u, run_classification(o, u, kind), out);
  }
  const ClassifyAllReport report = classify_all(pair, kind, o.classify_options());
  if (o.json) {
    nlohmann::ordered_json j;
    j["pair"] = {pair.h, pair.n};
    j["kind"] = to_string(kind);
    j["bounds"] = {{"max_group_order", o.max_group_order},
                   {"max_profiles", o.max_profiles}};
    j["fully"] = report.fully;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const ClassifyEntry& e : report.entries) {
      nlohmann::ordered_json row;
      row["group"] = group_json(e.group);
      row["order"] = e.group.order();
      row["decision"] = e.verdict.decision;
      row["method"] = e.verdict.method;
      entries.push_back(std::move(row));
    }
    j["groups"] = std::move(entries);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pair: (" << pair.h << "," << pair.n << ")\n";
  out << "kind: " << to_string(kind) << "\n";
  print_bounds(o, out);
  out << "subgroups: " << report.entries.size() << "\n";
  for (const ClassifyEntry& e : report.entries)
    out << (e.verdict.decision ? "  yes " : "  no  ") << describe_group(e.group)
        << "  [" << e.verdict.method << "]\n";
  out << "fully " << to_string(kind) << ": " << (report.fully ? "true" : "false") << "\n";
  return 0;
}

int cmd_witness(const CommonOpts& o, const std::string& kind_text,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const VotingPair pair = parse_pair(o.pair_text);
  const GroupKind kind = group_kind_from_string(kind_text);
  const PGroup u = parse_group(o.group_text, pair, o.max_group_order);
  const Verdict v = run_classification(o, u, kind);
  if (!v.decision) {
    err << "no witness: the group is not a " << to_string(kind) << " group (method "
        << v.method << ")\n";
    return 2;
  }
  if (!v.witness) {
    err << "no witness: decision is true but the search was exhausted (counting-only)\n";
    return 2;
  }
  const std::string payload = spf_to_json(*v.witness) + "\n";
  if (out_path.empty())
    out << payload;
  else
    write_file(out_path, payload);
  return 0;
}

int cmd_orbit_extension(const CommonOpts& o, std::ostream& out) {
  const VotingPair pair = parse_pair(o.pair_text);
  const PGroup u = parse_group(o.group_text, pair, o.max_group_order);
  const PGroup w = orbit_preserver(u, o.max_group_order, o.max_profiles);
  const PGroup ext = orbit_extension(u, o.max_group_order, o.max_profiles);
  const bool w_regular = is_regular(w, o.verify, o.max_profiles);
  const bool fixed = ext == u;
  if (o.json) {
    nlohmann::ordered_json j = report_header(u, "W-filter", o);
    j["W"] = group_json(w);
    j["W_order"] = w.order();
    j["W_regular"] = w_regular;
    j["O"] = group_json(ext);
    j["O_order"] = ext.order();
    j["fixed"] = fixed;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "pair: (" << pair.h << "," << pair.n << ")\n";
  out << "group: " << describe_group(u) << "\n";
  out << "method: W-filter\n";
  print_bounds(o, out);
  out << "W(U): " << describe_group(w) << ", regular: " << (w_regular ? "true" : "false")
      << "\n";
  out << "O(U): " << describe_group(ext) << "\n";
  out << "O(U) = U: " << (fixed ? "true" : "false") << "\n";
  return 0;
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree) {
  std::vector<Perm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    const std::string part =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (part.find_first_not_of(" \t") != std::string::npos)
      out.push_back(parse_cycles(part, degree));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

int cmd_boolean(const CommonOpts& o, const std::string& function_path, int arity,
                const std::string& perm_group, bool representable, bool o_necessary,
                std::ostream& out) {
  if (!function_path.empty()) {
    const BooleanFunction f = boolean_from_json(read_file(function_path));
    const std::vector<Perm> inv = invariance_group(f);
    if (o.json) {
      nlohmann::ordered_json j;
      j["pair"] = {f.arity, 2};
      j["arity"] = f.arity;
      j["k"] = f.value_count;
      j["method"] = "exhaustive";
      j["bounds"] = {{"max_group_order", o.max_group_order},
                     {"max_profiles", o.max_profiles}};
      nlohmann::ordered_json gens = nlohmann::ordered_json::array();
      for (const Perm& p : inv) gens.push_back(format_cycles(p));
      j["invariance_group"] = std::move(gens);
      j["invariance_order"] = inv.size();
      out << j.dump(2) << "\n";
      return 0;
    }
    out << "arity: " << f.arity << ", k: " << f.value_count << "\n";
    out << "method: exhaustive\n";
    print_bounds(o, out);
    out << "S(F) order " << inv.size() << ":";
    for (const Perm& p : inv) out << " " << format_cycles(p);
    out << "\n";
    return 0;
  }
  if (arity < 2) throw std::invalid_argument("--arity is required");
  // The closure of the listed permutations; representability is decided for
  // the generated subgroup.
  std::vector<GElem> gens;
  for (const Perm& p : parse_perm_list(perm_group, arity))
    gens.push_back(GElem{p, Perm(2)});
  const PGroup u = PGroup::closure(checked_pair(arity, 2), std::move(gens), o.max_group_order);
  const std::vector<Perm> v = project1(u);

  if (o_necessary && !representable) {
    const bool fixed = check_O_necessary(v, arity, o.classify_options());
    if (o.json) {
      nlohmann::ordered_json j = report_header(u, "W-filter", o);
      j["arity"] = arity;
      j["O_fixed"] = fixed;
      out << j.dump(2) << "\n";
      return 0;
    }
    out << "arity: " << arity << "\n";
    out << "group: " << describe_group(u) << "\n";
    out << "method: W-filter\n";
    print_bounds(o, out);
    out << "O(V x {id}) = V x {id}: " << (fixed ? "true" : "false") << "\n";
    return 0;
  }
  const RepresentabilityVerdict verdict = is_two_representable(v, arity, o.classify_options());
  if (o.json) {
    nlohmann::ordered_json j = report_header(u, verdict.method, o);
    j["arity"] = arity;
    j["representable"] = verdict.decision;
    j["witness"] = verdict.witness
                       ? nlohmann::ordered_json::parse(boolean_to_json(*verdict.witness))
                       : nlohmann::ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "arity: " << arity << "\n";
  out << "group: " << describe_group(u) << "\n";
  out << "method: " << verdict.method << "\n";
  print_bounds(o, out);
  out << "2-representable: " << (verdict.decision ? "true" : "false") << "\n";
  if (verdict.witness) out << "witness: " << boolean_to_json(*verdict.witness) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbits, regularity and symmetry groups of social preference functions"};
  app.require_subcommand(1);

  CommonOpts orbits_o;
  auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition of the profile set");
  add_common_flags(orbits_cmd, orbits_o, true);

  CommonOpts regular_o;
  auto* regular_cmd = app.add_subcommand("regular", "regularity of a subgroup");
  add_common_flags(regular_cmd, regular_o, true);

  CommonOpts spfg_o;
  std::string spf_path;
  auto* spfg_cmd = app.add_subcommand("spf-groups", "G, G1, G2 of an SPF file");
  spfg_cmd->add_option("--spf", spf_path, "SPF JSON file")->required();
  add_common_flags(spfg_cmd, spfg_o, false);

  CommonOpts classify_o;
  std::string classify_kind;
  bool classify_all_flag = false;
  auto* classify_cmd = app.add_subcommand("classify", "anonymity/neutrality/symmetry verdict");
  classify_cmd->add_option("--kind", classify_kind, "anonymity | neutrality | symmetry")
      ->required();
  classify_cmd->add_flag("--all", classify_all_flag, "classify every subgroup of the ambient");
  add_common_flags(classify_cmd, classify_o, true);

  CommonOpts witness_o;
  std::string witness_kind;
  std::string witness_out;
  auto* witness_cmd = app.add_subcommand("witness", "emit a witness SPF file");
  witness_cmd->add_option("--kind", witness_kind, "anonymity | neutrality | symmetry")
      ->required();
  witness_cmd->add_option("--out", witness_out, "output path (default: stdout)");
  add_common_flags(witness_cmd, witness_o, true);

  CommonOpts oe_o;
  auto* oe_cmd = app.add_subcommand("orbit-extension", "W(U), O(U) and the O(U)=U test");
  add_common_flags(oe_cmd, oe_o, true);

  CommonOpts bool_o;
  std::string bool_function;
  int bool_arity = 0;
  std::string bool_group;
  bool bool_representable = false;
  bool bool_o_necessary = false;
  auto* bool_cmd =
      app.add_subcommand("boolean", "invariance groups and 2-representability");
  bool_cmd->add_option("--function", bool_function, "Boolean function JSON file");
  bool_cmd->add_option("--arity", bool_arity, "number of inputs h");
  bool_cmd->add_option("--group", bool_group,
                       "permutations of [h] in cycle notation, ';'-separated");
  bool_cmd->add_flag("--representable", bool_representable, "decide 2-representability");
  bool_cmd->add_flag("--o-necessary", bool_o_necessary,
                     "check the necessary condition O(V x {id}) = V x {id}");
  add_common_flags(bool_cmd, bool_o, false);

  std::vector<const char*> argv;
  argv.push_back("spfsym");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (orbits_cmd->parsed()) return cmd_orbits(orbits_o, out);
    if (regular_cmd->parsed()) return cmd_regular(regular_o, out);
    if (spfg_cmd->parsed()) return cmd_spf_groups(spfg_o, spf_path, out);
    if (classify_cmd->parsed())
      return cmd_classify(classify_o, classify_kind, classify_all_flag, out);
    if (witness_cmd->parsed())
      return cmd_witness(witness_o, witness_kind, witness_out, out, err);
    if (oe_cmd->parsed()) return cmd_orbit_extension(oe_o, out);
    if (bool_cmd->parsed())
      return cmd_boolean(bool_o, bool_function, bool_arity, bool_group,
                         bool_representable, bool_o_necessary, out);
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace spfsym
