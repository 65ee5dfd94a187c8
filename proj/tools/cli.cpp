#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "henson/error.hpp"
#include "henson/family.hpp"
#include "henson/forbidden.hpp"
#include "henson/fraisse.hpp"
#include "henson/io.hpp"
#include "henson/lemmas.hpp"
#include "henson/reducts.hpp"

namespace henson::cli {

namespace {

// Raised for bad flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string format = "text";

  bool machine() const { return format == "json"; }
};

ForbiddenSet load(const std::string& path, std::istream& in) {
  if (path == "-") return read_forbidden_set(in);
  std::ifstream file(path);
  if (!file) throw InvalidInput("cannot read " + path);
  return read_forbidden_set(file);
}

void no_dot(const Context& ctx, const char* command) {
  if (ctx.format == "dot") throw UsageError(std::string("dot output is not available for ") + command);
}

FamilyIndex to_index(const std::vector<std::size_t>& values) {
  return FamilyIndex{{values.begin(), values.end()}};
}

std::string join(const std::vector<std::size_t>& values) {
  std::string s;
  for (std::size_t v : values) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

std::string one_based(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

int check_antichain(Context& ctx, const std::string& file) {
  no_dot(ctx, "check-antichain");
  const ForbiddenSet t = load(file, ctx.in);
  const auto bad = antichain_violation(t);
  if (ctx.machine()) {
    json j = {{"antichain", !bad}, {"members", t.members().size()}};
    if (bad) j["violation"] = encode(*bad);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "anti-chain: " << (bad ? "no" : "yes") << '\n';
    if (bad) {
      ctx.out << "member " << bad->smaller << " embeds into member " << bad->larger
              << " via";
      for (Vertex v : bad->embedding) ctx.out << ' ' << v;
      ctx.out << '\n';
    }
  }
  return bad ? kPropertyFails : kOk;
}

int classify(Context& ctx, const std::string& file, std::size_t scale) {
  const ForbiddenSet t = load(file, ctx.in);
  const ReductLattice lattice = classify_reducts(t, scale);
  if (ctx.format == "dot") {
    ctx.out << to_dot(lattice);
  } else if (ctx.machine()) {
    ctx.out << encode(lattice).dump(2) << '\n';
  } else {
    const GraphStatus& s = lattice.graph_status;
    ctx.out << "minus exists:  " << (lattice.minus_exists ? "yes" : "no") << '\n'
            << "sw exists:     " << (lattice.sw_exists ? "yes" : "no") << '\n'
            << "graph status:  " << to_string(s.kind);
    if (s.clique_bound) ctx.out << " (K" << *s.clique_bound << "-free)";
    if (s.certificate) ctx.out << " [" << to_string(s.certificate->kind) << ']';
    ctx.out << " at scale " << s.scale << '\n' << "nodes:        ";
    for (ReductNode n : lattice.nodes) {
      ctx.out << ' ' << to_string(n) << (lattice.maximal == n ? "(maximal)" : "");
    }
    ctx.out << '\n';
    for (const auto& [lo, hi] : lattice.hasse_edges) {
      ctx.out << "  " << std::left << std::setw(13) << to_string(lo) << " < " << to_string(hi)
              << '\n';
    }
  }
  return kOk;
}

int build(Context& ctx, const std::string& file, std::size_t n, std::size_t level,
          std::uint64_t seed, std::size_t budget) {
  const ForbiddenSet t = load(file, ctx.in);
  BuildOptions options;
  options.target_size = n;
  options.level = level;
  options.seed = seed;
  options.vertex_budget = budget;
  const OrderedDigraph d = build_approximation(t, options);
  const ExtensionReport report = verify_extension_property(d, t, level);
  const bool ok = report.missing() == 0 && in_forb(d.digraph(), t);

  ctx.err << "vertices: " << d.size() << ", level " << level << " demands satisfied: "
          << report.satisfied << ", unmet: " << report.missing() << '\n';
  if (ctx.format == "dot") {
    ctx.out << to_dot(d.digraph(), "approximation");
  } else if (ctx.machine()) {
    json j = encode(d.digraph());
    j["extension_report"] = encode(report);
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "vertices: " << d.size() << "\nedges:    " << d.digraph().edge_count() << '\n';
    for (const auto& [u, v] : d.digraph().edges()) ctx.out << "  " << u << " -> " << v << '\n';
  }
  return ok ? kOk : kPropertyFails;
}

int verify_lemma(Context& ctx, const std::string& lemma_name, const std::string& file) {
  no_dot(ctx, "verify-lemma");
  const auto lemma = parse_lemma(lemma_name);
  if (!lemma) throw UsageError("unknown lemma " + lemma_name);
  const ForbiddenSet t = load(file, ctx.in);
  const auto reports = verify_lemma_table(*lemma, t);
  std::vector<char> verified;
  for (const CaseReport& r : reports) verified.push_back(reverify(r, t) ? 1 : 0);
  const bool all = std::all_of(verified.begin(), verified.end(), [](char c) { return c != 0; });

  if (ctx.machine()) {
    json rows = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      json row = encode(reports[i]);
      row["reverified"] = verified[i] != 0;
      rows.push_back(std::move(row));
    }
    ctx.out << json{{"lemma", to_string(*lemma)}, {"reports", std::move(rows)},
                    {"all_reverified", all}}
                   .dump(2)
            << '\n';
  } else {
    std::size_t width = 0;
    for (const CaseReport& r : reports) width = std::max(width, r.context.to_string().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const CaseReport& r = reports[i];
      ctx.out << std::left << std::setw(static_cast<int>(width)) << r.context.to_string() << "  "
              << std::setw(17) << to_string(r.verdict) << ' ' << r.clause;
      if (r.certificate) {
        const auto& c = *r.certificate;
        ctx.out << "  | " << to_string(c.kind) << " witness " << encode(c.witness.digraph()).dump()
                << (verified[i] ? " verified" : " NOT VERIFIED");
      } else if (r.trace) {
        ctx.out << "  | " << to_string(r.trace->kind);
        if (r.trace->reduces_to) ctx.out << " -> [" << r.trace->reduces_to->to_string() << ']';
        if (r.trace->extra_cases) ctx.out << " (+ other composites)";
        if (!verified[i]) ctx.out << " NOT VERIFIED";
      }
      ctx.out << '\n';
    }
  }
  return all ? kOk : kPropertyFails;
}

int family(Context& ctx, const std::vector<std::size_t>& indices, std::size_t blocker_max,
           std::size_t budget, std::size_t audit) {
  no_dot(ctx, "family");
  const Blocker blocker = find_blocker(blocker_max, budget);
  const FamilyIndex a = to_index(indices);
  const ForbiddenSet t = build_family_set(a, blocker.tournament);
  const bool antichain = is_antichain(t);
  const MaximalityReport report = verify_maximality(t, blocker.tournament, audit);
  const bool rechecked = recheck_maximality(report, t);
  const bool ok = antichain && rechecked && report.minus_blocked && report.sw_blocked &&
                  report.linear_orders_embed && report.extension_blocking;

  if (ctx.machine()) {
    ctx.out << json{{"blocker", encode(blocker)},
                    {"indices", indices},
                    {"family", encode(t)},
                    {"antichain", antichain},
                    {"maximality", encode(report)},
                    {"witnesses_recheck", rechecked}}
                   .dump(2)
            << '\n';
  } else {
    const auto yes = [](bool b) { return b ? "yes" : "no"; };
    ctx.out << "blocker:            " << blocker.tournament.size() << " vertices, source "
            << blocker.source + 1 << ", high-cycle vertices " << one_based(blocker.high_cycle)
            << '\n'
            << "indices:            " << join(indices) << '\n'
            << "members:            " << t.members().size() << '\n'
            << "anti-chain:         " << yes(antichain) << '\n'
            << "minus blocked:      " << yes(report.minus_blocked) << '\n'
            << "sw blocked:         " << yes(report.sw_blocked) << '\n'
            << "linear orders:      " << yes(report.linear_orders_embed) << " (up to "
            << report.linear_order_bound << ")\n"
            << "extension blocking: " << yes(report.extension_blocking) << '\n'
            << "witnesses recheck:  " << yes(rechecked) << '\n';
  }
  return ok ? kOk : kPropertyFails;
}

int distinguish(Context& ctx, const std::vector<std::size_t>& first,
                const std::vector<std::size_t>& second, std::size_t blocker_max,
                std::size_t budget) {
  no_dot(ctx, "distinguish");
  const Blocker blocker = find_blocker(blocker_max, budget);
  const FamilyIndex a = to_index(first);
  const FamilyIndex b = to_index(second);
  const DistinctionCertificate cert = distinguish_family(a, b, blocker.tournament);
  const bool ok = verify_distinction(cert, a, b, blocker.tournament);
  if (ctx.machine()) {
    json j = encode(cert);
    j["verified"] = ok;
    j["witness"] = encode(make_In(cert.n).digraph());
    ctx.out << j.dump(2) << '\n';
  } else {
    ctx.out << "I_" << cert.n << " is a member of the " << (cert.in_first ? "first" : "second")
            << " family set and lies in Forb of the other: " << (ok ? "verified" : "FAILED")
            << '\n';
  }
  return ok ? kOk : kPropertyFails;
}

std::string format_hint(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--format=", 0) == 0) return args[i].substr(9);
  }
  return "text";
}

int fail(Context& ctx, const std::string& message) {
  ctx.err << "error: " << message << '\n';
  if (ctx.machine()) ctx.out << json{{"error", message}}.dump() << '\n';
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err, format_hint(args)};

  CLI::App app{"Henson digraphs: forbidden tournaments, approximations, reducts"};
  app.name("henson");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "text", "dot"});

  std::string file;
  std::string lemma;
  std::size_t scale = 4;
  std::size_t n = 20;
  std::size_t level = 2;
  std::uint64_t seed = 0;
  std::size_t vertex_budget = 2048;
  std::vector<std::size_t> indices{10};
  std::vector<std::size_t> indices2;
  std::size_t blocker_max = 8;
  std::size_t blocker_budget = kDefaultBlockerBudget;
  std::size_t audit = 12;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "json, text or dot")->check(formats);
  };

  auto* antichain = app.add_subcommand("check-antichain", "Is the forbidden set an anti-chain?");
  antichain->add_option("file", file, "forbidden set JSON, - for stdin")->required();
  add_format(antichain);

  auto* classify_cmd = app.add_subcommand("classify", "Reduct lattice of Forb(T)");
  classify_cmd->add_option("file", file, "forbidden set JSON, - for stdin")->required();
  classify_cmd->add_option("--scale", scale, "graph size audited for the trichotomy")
      ->check(CLI::Range(std::size_t{1}, kMaxGraphScale));
  add_format(classify_cmd);

  auto* build_cmd = app.add_subcommand("build", "Finite approximation of the Henson digraph");
  build_cmd->add_option("file", file, "forbidden set JSON, - for stdin")->required();
  build_cmd->add_option("--n", n, "minimum number of vertices")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
  build_cmd->add_option("--level", level, "extension property level")
      ->check(CLI::Range(std::size_t{0}, std::size_t{4}));
  build_cmd->add_option("--seed", seed, "random seed");
  build_cmd->add_option("--budget", vertex_budget, "vertex budget")
      ->check(CLI::Range(std::size_t{1}, std::size_t{65536}));
  add_format(build_cmd);

  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Replay a behaviour case analysis");
  lemma_cmd->add_option("lemma", lemma,
                        "L-noconstants, L-oneorbit, L-xlessthany, L-xyinterdense, L-constants")
      ->required();
  lemma_cmd->add_option("file", file, "forbidden set JSON, - for stdin")->required();
  add_format(lemma_cmd);

  auto* family_cmd = app.add_subcommand("family", "Rebuild the I_n family and its checks");
  family_cmd->add_option("--indices", indices, "comma-separated sizes of the I_n members")
      ->delimiter(',');
  family_cmd->add_option("--blocker-max-size", blocker_max, "largest blocker size searched")
      ->check(CLI::Range(std::size_t{4}, std::size_t{10}));
  family_cmd->add_option("--budget", blocker_budget, "blocker candidates examined at most");
  family_cmd->add_option("--audit", audit, "linear orders checked up to this size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  add_format(family_cmd);

  auto* distinguish_cmd =
      app.add_subcommand("distinguish", "Certificate that two family sets differ");
  distinguish_cmd->add_option("--indices1", indices, "first index set")
      ->delimiter(',')
      ->required();
  distinguish_cmd->add_option("--indices2", indices2, "second index set")
      ->delimiter(',')
      ->required();
  distinguish_cmd->add_option("--blocker-max-size", blocker_max, "largest blocker size searched")
      ->check(CLI::Range(std::size_t{4}, std::size_t{10}));
  distinguish_cmd->add_option("--budget", blocker_budget, "blocker candidates examined at most");
  add_format(distinguish_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (ctx.format != "json" && ctx.format != "text" && ctx.format != "dot") ctx.format = "text";
    return fail(ctx, e.what());
  }

  try {
    if (antichain->parsed()) return check_antichain(ctx, file);
    if (classify_cmd->parsed()) return classify(ctx, file, scale);
    if (build_cmd->parsed()) return build(ctx, file, n, level, seed, vertex_budget);
    if (lemma_cmd->parsed()) return verify_lemma(ctx, lemma, file);
    if (family_cmd->parsed()) return family(ctx, indices, blocker_max, blocker_budget, audit);
    if (distinguish_cmd->parsed()) {
      return distinguish(ctx, indices, indices2, blocker_max, blocker_budget);
    }
  } catch (const WitnessConstructionFailure& e) {
    // Never relabelled: this is a defect, report it as such.
    ctx.err << "witness construction failed: " << e.what() << '\n';
    if (ctx.machine()) out << json{{"error", std::string("witness construction failed: ") + e.what()}}.dump() << '\n';
    return kPropertyFails;
  } catch (const UsageError& e) {
    return fail(ctx, e.what());
  } catch (const Error& e) {
    return fail(ctx, e.what());
  }
  return fail(ctx, "no command");
}

}  // namespace henson::cli
