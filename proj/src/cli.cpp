#include "skewcat/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcat/dot.hpp"
#include "skewcat/duality.hpp"
#include "skewcat/json_io.hpp"
#include "skewcat/selftest.hpp"

namespace skewcat::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string output;
  std::uint64_t seed = 42;
  int max_size = 0;  // 0 = keep the configured default
  std::string format = "text";
};

// Writes the produced document to --output when given; otherwise folds it
// into the JSON summary (under --format json) or prints it.
void emit_document(const Options& opt, const json& doc, std::ostream& out, json& summary) {
  if (!opt.output.empty()) {
    write_json_file(opt.output, doc);
    out << "wrote " << opt.output << "\n";
    summary["output"] = opt.output;
  } else if (opt.format == "json") {
    summary["document"] = doc;
  } else {
    out << doc.dump(2) << "\n";
  }
}

void emit_text(const Options& opt, const std::string& text, std::ostream& out) {
  if (!opt.output.empty()) {
    std::ofstream file(opt.output);
    if (!file) throw InvalidInput("cannot open output file: " + opt.output);
    file << text;
    out << "wrote " << opt.output << "\n";
  } else {
    out << text;
  }
}

enum class InputKind { Algebra, Poset, Bundle };

InputKind detect_kind(const json& j) {
  if (j.is_object() && j.contains("size")) return InputKind::Algebra;
  if (j.is_object() && j.contains("poset")) return InputKind::Bundle;
  if (j.is_object() && j.contains("points")) return InputKind::Poset;
  throw InvalidInput(
      "$: cannot tell the input kind; expected an algebra (\"size\"), a bundle (\"poset\") or "
      "a poset (\"points\")");
}

int cmd_check(const Options& opt, std::ostream& out) {
  const SkewLattice s = algebra_from_json(parse_json_file(opt.input));
  json summary{{"command", "check"}, {"size", s.size()}, {"zero", s.zero()}};
  out << "size: " << s.size() << "\n";
  out << "zero: " << s.zero() << "\n";
  if (const auto v = validate(s)) {
    out << "laws: violation\n";
    out << "witness: " << v->describe() << "\n";
    summary["laws"] = "violation";
    summary["witness"] = v->describe();
    if (opt.format == "json") out << summary.dump(2) << "\n";
    return 1;
  }
  out << "laws: ok\n";
  summary["laws"] = "ok";
  const bool lh = is_left_handed(s);
  const bool sd = is_strongly_distributive(s);
  const struct {
    const char* name;
    bool value;
  } predicates[] = {
      {"lattice", is_lattice(s)},
      {"left_handed", lh},
      {"right_handed", is_right_handed(s)},
      {"normal", is_normal(s)},
      {"symmetric", is_symmetric(s)},
      {"strongly_distributive", sd},
      {"second_decomposition", check_second_decomposition(s)},
  };
  for (const auto& p : predicates) {
    out << p.name << ": " << (p.value ? "true" : "false") << "\n";
    summary[p.name] = p.value;
  }
  if (lh && sd) {
    const bool lemma = check_useful_lemma(s);
    out << "natural_order_lemma: " << (lemma ? "true" : "false") << "\n";
    summary["natural_order_lemma"] = lemma;
  }
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_dualize(const Options& opt, std::ostream& out) {
  const SkewLattice s = algebra_from_json(parse_json_file(opt.input));
  if (const auto v = validate(s)) {
    out << "laws: violation\n";
    out << "witness: " << v->describe() << "\n";
    return 1;
  }
  const DualBundle db = dual_bundle(s);
  out << "base points: " << db.bundle.base.points() << "\n";
  out << "stalks: " << json(db.bundle.stalks).dump() << "\n";
  json summary{{"command", "dualize"},
               {"points", db.bundle.base.points()},
               {"stalks", db.bundle.stalks}};
  emit_document(opt, dual_bundle_to_json(db), out, summary);
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_sections(const Options& opt, std::ostream& out) {
  const Bundle b = bundle_from_json(parse_json_file(opt.input));
  const SectionAlgebra sa = star_of_bundle(b);
  out << "base points: " << b.base.points() << "\n";
  out << "sections: " << sa.algebra.size() << "\n";
  json summary{{"command", "sections"},
               {"points", b.base.points()},
               {"sections", sa.algebra.size()}};
  emit_document(opt, algebra_to_json(sa.algebra), out, summary);
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_roundtrip(const Options& opt, std::ostream& out) {
  const json j = parse_json_file(opt.input);
  json witness;
  json summary{{"command", "roundtrip"}};
  switch (detect_kind(j)) {
    case InputKind::Algebra: {
      const SkewLattice s = algebra_from_json(j);
      if (const auto v = validate(s)) {
        out << "laws: violation\n";
        out << "witness: " << v->describe() << "\n";
        return 1;
      }
      const Phi ph = phi(s);
      witness = json{{"kind", "algebra"}, {"map", ph.hom.map}};
      out << "kind: algebra\n";
      out << "elements: " << s.size() << "\n";
      out << "isomorphism: " << json(ph.hom.map).dump() << "\n";
      summary["kind"] = "algebra";
      summary["map"] = ph.hom.map;
      break;
    }
    case InputKind::Bundle: {
      const Bundle b = bundle_from_json(j);
      const Psi ps = psi(b);
      witness = json{{"kind", "bundle"},
                     {"base_map", ps.base_map},
                     {"stalk_maps", ps.stalk_maps}};
      out << "kind: bundle\n";
      out << "base points: " << b.base.points() << "\n";
      out << "base map: " << json(ps.base_map).dump() << "\n";
      out << "stalk maps: " << json(ps.stalk_maps).dump() << "\n";
      summary["kind"] = "bundle";
      summary["base_map"] = ps.base_map;
      summary["stalk_maps"] = ps.stalk_maps;
      break;
    }
    case InputKind::Poset:
      throw InvalidInput("$: roundtrip expects an algebra or a bundle, not a bare poset");
  }
  if (!opt.output.empty()) {
    write_json_file(opt.output, witness);
    out << "wrote " << opt.output << "\n";
    summary["output"] = opt.output;
  }
  out << "roundtrip: ok\n";
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const SkewLattice s = algebra_from_json(parse_json_file(opt.input));
  if (const auto v = validate_dist_lattice(s)) {
    out << "laws: violation\n";
    out << "witness: " << v->describe() << "\n";
    return 1;
  }
  const SpectrumResult sp = spectrum(DistLattice(s));
  out << "points: " << sp.poset.points() << "\n";
  for (std::size_t p = 0; p < sp.filters.size(); ++p)
    out << "filter " << p << " (generator " << sp.generators[p]
        << "): " << json(sp.filters[p]).dump() << "\n";
  json summary{{"command", "spectrum"}, {"points", sp.poset.points()}};
  emit_document(opt, spectrum_to_json(sp), out, summary);
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const SkewLattice s = algebra_from_json(parse_json_file(opt.input));
  if (const auto v = validate(s)) {
    out << "laws: violation\n";
    out << "witness: " << v->describe() << "\n";
    return 1;
  }
  const auto homs = enumerate_proper_homs_to_2(s);
  out << "proper homomorphisms to 2: " << homs.size() << "\n";
  json list = json::array();
  for (const auto& h : homs) {
    out << "  " << json(h.map).dump() << "\n";
    list.push_back(h.map);
  }
  json summary{{"command", "enumerate"}, {"count", homs.size()}, {"homs", list}};
  if (!opt.output.empty()) {
    write_json_file(opt.output, json{{"homs", list}});
    out << "wrote " << opt.output << "\n";
    summary["output"] = opt.output;
  }
  if (opt.format == "json") out << summary.dump(2) << "\n";
  return 0;
}

int cmd_export_dot(const Options& opt, std::ostream& out) {
  const json j = parse_json_file(opt.input);
  std::string dot;
  switch (detect_kind(j)) {
    case InputKind::Algebra: {
      const SkewLattice s = algebra_from_json(j);
      if (const auto v = validate(s)) {
        out << "laws: violation\n";
        out << "witness: " << v->describe() << "\n";
        return 1;
      }
      dot = dot_of_natural_order(s);
      break;
    }
    case InputKind::Bundle:
      dot = dot_of_bundle(bundle_from_json(j));
      break;
    case InputKind::Poset:
      dot = dot_of_poset(poset_from_json(j));
      break;
  }
  emit_text(opt, dot, out);
  return 0;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const auto results = run_selftest(opt.seed);
  bool all = true;
  json lines = json::array();
  for (const auto& r : results) {
    out << format_result_line(r) << "\n";
    all = all && r.passed;
    lines.push_back(json{{"number", r.number},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
  }
  out << (all ? "selftest: pass" : "selftest: FAIL") << "\n";
  if (opt.format == "json") {
    json summary{{"command", "selftest"}, {"seed", opt.seed}, {"passed", all},
                 {"criteria", lines}};
    out << summary.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite duality engine for skew lattices and section bundles"};
  app.require_subcommand(1);

  Options opt;
  struct Sub {
    CLI::App* app;
    int (*fn)(const Options&, std::ostream&);
    bool needs_input;
  };
  std::vector<Sub> subs;

  const auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&),
                       bool needs_input) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_input) sub->add_option("--input", opt.input, "input JSON file")->required();
    sub->add_option("--output", opt.output, "output file");
    sub->add_option("--seed", opt.seed, "seed for the generators");
    sub->add_option("--max-size", opt.max_size, "override the enumeration cap");
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    subs.push_back({sub, fn, needs_input});
  };

  add("check", "validate an algebra and report its properties", cmd_check, true);
  add("dualize", "compute the dual bundle of a left-handed algebra", cmd_dualize, true);
  add("sections", "compute the section algebra of a bundle", cmd_sections, true);
  add("roundtrip", "verify the double dual against the input", cmd_roundtrip, true);
  add("spectrum", "compute the prime-filter spectrum of a lattice", cmd_spectrum, true);
  add("enumerate", "list the proper homomorphisms onto the two-element lattice", cmd_enumerate,
      true);
  add("export-dot", "emit the Hasse diagram as Graphviz DOT", cmd_export_dot, true);
  add("selftest", "run the built-in verification battery", cmd_selftest, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (opt.max_size > 0) global_limits().max_size = opt.max_size;

  try {
    for (const Sub& sub : subs)
      if (sub.app->parsed()) return sub.fn(opt, out);
    err << "error: no command selected\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeOverflow& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace skewcat::cli
