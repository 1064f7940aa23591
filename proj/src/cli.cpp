#include "garside/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "garside/classify.hpp"
#include "garside/conjugacy.hpp"
#include "garside/curves.hpp"
#include "garside/family.hpp"
#include "garside/normal_form.hpp"
#include "garside/serialize.hpp"

namespace garside::cli {

namespace {

struct Invocation {
  std::string command;
  int n = 0;
  std::vector<std::string> words;
  std::string format = "text";
  bool verify = false;
  std::size_t cap = 1'000'000;
  int jobs = 1;
  bool dot = false;
  std::string curve;
  bool no_exit = false;
  bool full_scan = false;
  int k = 2;
  int kmin = 2;
  int kmax = 4;
  int sss_kmax = 2;
};

Json input_json(const Invocation& inv) {
  return {{"command", inv.command}, {"n", inv.n},
          {"words", inv.words},     {"cap", inv.cap},
          {"curve", inv.curve},     {"no_exit", inv.no_exit},
          {"full_scan", inv.full_scan}, {"k", inv.k},
          {"kmin", inv.kmin},       {"kmax", inv.kmax},
          {"sss_kmax", inv.sss_kmax}};
}

Invocation invocation_from_json(const Json& j) {
  Invocation inv;
  inv.command = j.at("command").get<std::string>();
  inv.n = j.at("n").get<int>();
  inv.words = j.at("words").get<std::vector<std::string>>();
  inv.cap = j.at("cap").get<std::size_t>();
  inv.curve = j.at("curve").get<std::string>();
  inv.no_exit = j.at("no_exit").get<bool>();
  inv.full_scan = j.at("full_scan").get<bool>();
  inv.k = j.at("k").get<int>();
  inv.kmin = j.at("kmin").get<int>();
  inv.kmax = j.at("kmax").get<int>();
  inv.sss_kmax = j.at("sss_kmax").get<int>();
  return inv;
}

struct Output {
  Json result;
  std::string text;
};

int strands(const Invocation& inv) {
  if (inv.n < 2) throw UsageError("this command needs a strand count: -n N with N >= 2");
  return inv.n;
}

NormalForm word_arg(const Invocation& inv, std::size_t i) {
  if (inv.words.size() <= i) throw UsageError("missing braid word argument");
  return normal_form(parse_word(strands(inv), inv.words[i]));
}

EnumerateOptions enumeration(const Invocation& inv) {
  EnumerateOptions o;
  o.member_cap = inv.cap;
  o.jobs = inv.jobs;
  return o;
}

std::string word_text(const PermutationBraid& s) { return to_string(BraidWord(s.strands(), s.positive_word())); }

std::string describe(const NormalForm& x) {
  std::ostringstream out;
  out << to_string(x) << "\n";
  out << "inf " << x.inf() << "  sup " << x.sup() << "  canonical length " << x.canonical_length() << "\n";
  if (x.canonical_length() == 0 && x.inf() == 0) out << "identity\n";
  for (std::size_t i = 0; i < x.factors().size(); ++i) {
    out << "  x_" << i + 1 << " = " << to_string(x.factors()[i]) << "  word " << word_text(x.factors()[i]) << "\n";
  }
  return out.str();
}

Output normal_form_output(const NormalForm& x) {
  return {{{"normal_form", to_json(x)}, {"word", to_word(x).letters()}}, describe(x)};
}

std::vector<RoundCurve> selected_curves(const Invocation& inv) {
  const int n = strands(inv);
  if (inv.curve.empty()) return all_round_curves(n);
  const auto letters = expand_word(inv.curve);
  if (letters.size() != 2) throw UsageError("--curve expects \"p,q\"");
  const RoundCurve c{letters[0], letters[1]};
  const auto all = all_round_curves(n);
  if (std::find(all.begin(), all.end(), c) == all.end()) {
    throw std::invalid_argument(to_string(c) + " is not an essential round curve on " + std::to_string(n) +
                                " punctures");
  }
  return {c};
}

Output set_output(const ConjugacySet& set, bool dot) {
  std::ostringstream text;
  if (dot) {
    text << to_dot(set);
  } else {
    text << to_string(set.kind) << ": " << set.members.size() << " members, inf " << set.inf << ", sup " << set.sup
         << ", " << set.edges.size() << " edges\n";
    for (const auto& m : set.members) text << "  " << to_string(m) << "\n";
  }
  return {to_json(set), text.str()};
}

Output compute(const Invocation& inv) {
  const std::string& c = inv.command;
  if (c == "nf") return normal_form_output(word_arg(inv, 0));
  if (c == "inv") return normal_form_output(inverse(word_arg(inv, 0)));
  if (c == "mul") return normal_form_output(mul(word_arg(inv, 0), word_arg(inv, 1)));
  if (c == "conj") return normal_form_output(conjugate(word_arg(inv, 0), word_arg(inv, 1)));
  if (c == "cycle") return normal_form_output(cycling(word_arg(inv, 0)));
  if (c == "decycle") return normal_form_output(decycling(word_arg(inv, 0)));
  if (c == "slide") {
    const NormalForm x = word_arg(inv, 0);
    const PermutationBraid prefix = preferred_prefix(x);
    Output out = normal_form_output(cyclic_sliding(x));
    out.result["preferred_prefix"] = to_json(prefix);
    out.text = "preferred prefix " + to_string(prefix) + "  word " + word_text(prefix) + "\n" + out.text;
    return out;
  }
  if (c == "rigid") {
    const NormalForm x = word_arg(inv, 0);
    const bool rigid = is_rigid(x);
    return {{{"normal_form", to_json(x)}, {"rigid", rigid}}, std::string(rigid ? "rigid" : "not rigid") + "\n"};
  }
  if (c == "sss") return set_output(enumerate(SetKind::SuperSummit, word_arg(inv, 0), enumeration(inv)), inv.dot);
  if (c == "sc") return set_output(enumerate(SetKind::SlidingCircuits, word_arg(inv, 0), enumeration(inv)), inv.dot);
  if (c == "transport") {
    const NormalForm x = word_arg(inv, 0);
    if (inv.words.size() < 2) throw UsageError("transport needs a braid and a simple conjugator");
    const auto s = is_simple(parse_word(strands(inv), inv.words[1]));
    if (!s) throw std::invalid_argument("the conjugator is not a simple braid");
    const PermutationBraid t = transport(x, *s);
    return {{{"x", to_json(x)}, {"s", to_json(*s)}, {"transport", to_json(t)}, {"transport_word", t.positive_word()}},
            "transport " + to_string(t) + "  word " + word_text(t) + "\n"};
  }
  if (c == "curves") {
    const NormalForm x = word_arg(inv, 0);
    Json images = Json::array();
    std::ostringstream text;
    for (const auto& curve : selected_curves(inv)) {
      const auto image = image_of_round(x, curve);
      images.push_back({{"curve", to_json(curve)}, {"image", image ? to_json(*image) : Json(nullptr)}});
      text << to_string(curve) << " -> " << (image ? "round " + to_string(*image) : std::string("non-round")) << "\n";
    }
    return {{{"normal_form", to_json(x)}, {"images", images}}, text.str()};
  }
  if (c == "bgn") {
    const NormalForm x = word_arg(inv, 0);
    Json traces = Json::array();
    std::ostringstream text;
    for (const auto& curve : selected_curves(inv)) {
      const BgnTrace trace = bgn_scan(x, curve, !inv.no_exit);
      traces.push_back(to_json(trace));
      text << "curve " << to_string(curve) << "\n";
      for (const auto& line : trace.render()) text << "  " << line << "\n";
    }
    return {{{"normal_form", to_json(x)}, {"traces", traces}}, text.str()};
  }
  if (c == "classify") {
    const NormalForm x = word_arg(inv, 0);
    ClassifyOptions options;
    options.enumeration = enumeration(inv);
    options.full_scan = inv.full_scan;
    const NTVerdict v = classify_nt(x, options);
    std::ostringstream text;
    text << to_string(v.verdict) << "\n";
    if (v.power) text << "  x^" << v.power->m << " = D^" << v.power->l << "\n";
    if (v.sc_size > 0) text << "  sliding circuits: " << v.sc_size << " elements, " << v.scans.size() << " scanned\n";
    if (v.reducing) {
      text << "  invariant round curves under " << to_string(v.reducing->member) << ":";
      for (const auto& rc : v.reducing->curves) text << " " << to_string(rc);
      text << "\n";
    }
    if (!v.reason.empty()) text << "  " << v.reason << "\n";
    return {{{"normal_form", to_json(x)}, {"verdict", to_json(v)}}, text.str()};
  }
  if (c == "paper") {
    family::VerifyOptions options;
    options.enumeration = enumeration(inv);
    const auto report = family::verify_paper(inv.k, options);
    return {to_json(report), to_text(report)};
  }
  if (c == "bench") {
    if (inv.kmin < 2 || inv.kmax < inv.kmin) throw UsageError("bench needs 2 <= --kmin <= --kmax");
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "k,canonical_length,sss_size,sc_size,wall_time_ms\n";
    for (int k = inv.kmin; k <= inv.kmax; ++k) {
      const auto start = std::chrono::steady_clock::now();
      const NormalForm x = family::psi(k);
      const auto sc = enumerate(SetKind::SlidingCircuits, x, enumeration(inv));
      Json sss_size = nullptr;
      if (k <= inv.sss_kmax) sss_size = enumerate(SetKind::SuperSummit, x, enumeration(inv)).members.size();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      rows.push_back({{"k", k},
                      {"canonical_length", x.canonical_length()},
                      {"sss_size", sss_size},
                      {"sc_size", sc.members.size()},
                      {"wall_time_ms", ms}});
      csv << k << "," << x.canonical_length() << "," << (sss_size.is_null() ? "" : sss_size.dump()) << ","
          << sc.members.size() << "," << static_cast<long long>(ms) << "\n";
    }
    return {{{"rows", rows}}, csv.str()};
  }
  throw UsageError("unknown command " + c);
}

// Timings differ between runs; everything else must reproduce exactly.
Json without_timings(Json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) value = without_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_timings(value);
  }
  return j;
}

void validate_embedded_normal_forms(const Json& j) {
  if (j.is_object()) {
    if (j.contains("factors") && j.contains("key") && j.contains("inf")) {
      (void)normal_form_from_json(j);
      return;
    }
    for (const auto& [key, value] : j.items()) validate_embedded_normal_forms(value);
  } else if (j.is_array()) {
    for (const auto& value : j) validate_embedded_normal_forms(value);
  }
}

std::string verify_round_trip(const std::string& emitted) {
  const Json reparsed = Json::parse(emitted);
  validate_embedded_normal_forms(reparsed);
  const Invocation again = invocation_from_json(reparsed.at("input"));
  const Json recomputed = {{"input", input_json(again)}, {"result", compute(again).result}};
  if (without_timings(recomputed) != without_timings(reparsed)) return "recomputed output differs";
  return {};
}

void add_word_command(CLI::App& app, Invocation& inv, const std::string& name, const std::string& description,
                      int arity, const std::vector<std::string>& names) {
  auto* sub = app.add_subcommand(name, description);
  sub->fallthrough();
  sub->callback([&inv, name] { inv.command = name; });
  sub->add_option("words", inv.words, "braid word(s): " + CLI::detail::join(names, ", "))
      ->expected(arity)
      ->required();
  if (name == "sss" || name == "sc") sub->add_flag("--dot", inv.dot, "emit a Graphviz digraph");
  if (name == "curves" || name == "bgn") sub->add_option("--curve", inv.curve, "only the round curve \"p,q\"");
  if (name == "bgn") sub->add_flag("--no-exit", inv.no_exit, "scan every prefix even after a non-round image");
  if (name == "classify") sub->add_flag("--full-scan", inv.full_scan, "scan every sliding circuit element");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"braidtool: Garside normal forms, conjugacy invariants and round-curve analysis for braid groups"};
  app.name("braidtool");
  app.require_subcommand(1);
  app.add_option("-n,--strands", inv.n, "strand count");
  app.add_option("--format", inv.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--verify", inv.verify, "re-parse the JSON output and check that it reproduces");
  app.add_option("--cap", inv.cap, "maximum members per enumeration")->check(CLI::PositiveNumber);
  app.add_option("--jobs", inv.jobs, "worker threads for enumeration")->check(CLI::PositiveNumber);

  add_word_command(app, inv, "nf", "left normal form", 1, {"x"});
  add_word_command(app, inv, "inv", "inverse", 1, {"x"});
  add_word_command(app, inv, "mul", "product x y", 2, {"x", "y"});
  add_word_command(app, inv, "conj", "conjugate g^-1 x g", 2, {"x", "g"});
  add_word_command(app, inv, "cycle", "cycling", 1, {"x"});
  add_word_command(app, inv, "decycle", "decycling", 1, {"x"});
  add_word_command(app, inv, "slide", "cyclic sliding", 1, {"x"});
  add_word_command(app, inv, "rigid", "rigidity test", 1, {"x"});
  add_word_command(app, inv, "sss", "super summit set", 1, {"x"});
  add_word_command(app, inv, "sc", "set of sliding circuits", 1, {"x"});
  add_word_command(app, inv, "transport", "transport of a simple conjugator along cycling", 2, {"x", "s"});
  add_word_command(app, inv, "curves", "images of the round curves", 1, {"x"});
  add_word_command(app, inv, "bgn", "round-curve images under normal-form prefixes", 1, {"x"});
  add_word_command(app, inv, "classify", "partial Nielsen-Thurston classification", 1, {"x"});

  auto* paper = app.add_subcommand("paper", "run every check on the five-strand braid family psi_k");
  paper->fallthrough();
  paper->callback([&inv] { inv.command = "paper"; });
  paper->add_option("--k", inv.k, "family parameter (k >= 2)")->required();

  auto* bench = app.add_subcommand("bench", "CSV timings of SC/SSS enumeration on psi_k");
  bench->fallthrough();
  bench->callback([&inv] { inv.command = "bench"; });
  bench->add_option("--kmin", inv.kmin, "first k");
  bench->add_option("--kmax", inv.kmax, "last k");
  bench->add_option("--sss-kmax", inv.sss_kmax, "enumerate the SSS only up to this k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const Output result = compute(inv);
    const std::string emitted = Json{{"input", input_json(inv)}, {"result", result.result}}.dump(2);
    if (inv.verify) {
      const std::string problem = verify_round_trip(emitted);
      if (!problem.empty()) {
        err << "verify failed: " << problem << "\n";
        return kDomainError;
      }
    }
    if (inv.format == "json" && !inv.dot) {
      out << emitted << "\n";
    } else {
      out << result.text;
    }
    if (inv.verify) err << "verify: ok\n";
    return kOk;
  } catch (const UsageError& e) {
    err << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << " (partial count " << e.partial_count() << ")\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace garside::cli
