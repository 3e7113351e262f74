#include "hypsec/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hypsec/classify/classify.hpp"
#include "hypsec/flagcount/flagcount.hpp"
#include "hypsec/multipoly/oracle.hpp"
#include "hypsec/sections/hyperplane.hpp"

namespace hypsec::cli {

using nlohmann::json;

namespace {

struct Report {
  json data;
  std::string text;
  int code = kOk;
};

struct Field {
  bool rational = true;
  std::uint64_t p = 0;
  std::string label() const { return rational ? "Q" : std::to_string(p); }
};

Field parse_field(const std::string& s) {
  if (s == "Q") return {};
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("field must be Q or a prime p >= 5, got '" + s + "'");
  Field f{false, std::stoull(s)};
  build_ext_field(f.p, 1);  // validates primality and characteristic
  return f;
}

std::array<Rational, 8> parse_hyperplane_coords(const std::string& text) {
  std::string cleaned;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') cleaned += c;
  std::vector<std::string> parts;
  std::stringstream ss(cleaned);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 8) throw std::invalid_argument("hyperplane needs 8 coordinates");
  std::array<Rational, 8> c;
  for (int i = 0; i < 8; ++i) c[i] = Rational::parse(parts[i]);
  return c;
}

SectionMatrix<Rational> input_section(const RunConfig& cfg) {
  if (cfg.section.has_value() == cfg.hyperplane.has_value())
    throw std::invalid_argument("give exactly one of --section and --hyperplane");
  if (cfg.section) return parse_section(*cfg.section);
  return hyperplane_to_section(HyperplaneP7<Rational>(parse_hyperplane_coords(*cfg.hyperplane)));
}

template <FieldElement F>
json points_json(const std::vector<PointWithMultiplicity<F>>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({{"point", point_string(p.point)}, {"multiplicity", p.multiplicity}});
  return out;
}

json verdict_json(const HyperplaneVerdict& v) {
  json comps = json::array();
  for (const auto& c : v.components) {
    json j = {{"name", c.name}, {"description", c.description}, {"degree", c.degree}};
    if (c.name == "W0") {
      j["centers"] = c.centers;
      j["center_length"] = c.center_length;
    } else {
      j["line"] = c.line;
    }
    comps.push_back(std::move(j));
  }
  return {{"kind", v.kind == VerdictKind::Irreducible ? "irreducible" : "union_of_two_cubics"},
          {"singularity", v.singularity ? json(std::string(singularity_name(*v.singularity))) : json(nullptr)},
          {"degree", v.degree},
          {"sentence", v.sentence()},
          {"components", comps}};
}

template <FieldElement F>
Report classify_report(const SectionMatrix<F>& s, const Field& field) {
  const auto r = classify_section(s);
  const auto v = verdict(r);
  Report out;
  json pattern = json::array();
  for (const auto& rp : r.charpoly_pattern) pattern.push_back({{"multiplicity", rp.multiplicity}, {"degree", rp.degree}});
  json orbits = json::array();
  for (const auto& o : r.galois_orbits)
    orbits.push_back({{"minimal_polynomial", o.minimal_polynomial.to_string("t")}, {"point", o.to_string()}});
  out.data = {{"command", "classify"},
              {"field", field.label()},
              {"section", render_section(s)},
              {"hyperplane", section_to_hyperplane(s).to_string()},
              {"type", std::string(type_letter(r.type))},
              {"description", std::string(type_description(r.type))},
              {"charpoly", r.charpoly.to_string("t")},
              {"charpoly_pattern", pattern},
              {"points", points_json(r.points)},
              {"galois_orbits", orbits},
              {"line", r.line ? json(render_linear_form(*r.line)) : json(nullptr)},
              {"embedded_point", r.embedded_point ? json(point_string(*r.embedded_point)) : json(nullptr)},
              {"verdict", verdict_json(v)}};

  std::ostringstream t;
  t << "type " << type_letter(r.type) << ": " << v.sentence() << "\n";
  t << "zero scheme: " << type_description(r.type) << "\n";
  t << "section: " << render_section(s) << " over " << field.label() << "\n";
  t << "charpoly: " << r.charpoly.to_string("t") << "\n";
  for (const auto& p : r.points) t << "point: " << point_string(p.point) << " multiplicity " << p.multiplicity << "\n";
  for (const auto& o : r.galois_orbits) t << "orbit: " << o.to_string() << "\n";
  if (r.line) t << "line: " << render_linear_form(*r.line) << " = 0\n";
  if (r.embedded_point) t << "embedded point: " << point_string(*r.embedded_point) << "\n";
  for (const auto& c : v.components) t << c.name << ": " << c.description << ", degree " << c.degree << "\n";
  out.text = t.str();
  return out;
}

template <FieldElement F>
json poly_list(const std::vector<HomPoly<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json reduction_json(const IdealOracleReport& r) {
  json pts = json::array();
  for (const auto& p : r.base_points) pts.push_back(point_string(p));
  return {{"p", r.p},
          {"hf", r.hf},
          {"line_factor", r.line_factor ? json(render_linear_form(*r.line_factor)) : json(nullptr)},
          {"point_counts", r.point_counts},
          {"rational_points", pts},
          {"deduced_type", type_label(r.deduced_type)},
          {"inconsistency", r.inconsistency}};
}

Report oracle_report(const SectionMatrix<Rational>& sq, const Field& field, int d_max) {
  Report out;
  std::ostringstream t;
  std::optional<ZeroSchemeType> oracle_type, classifier_type;
  json reductions = json::array();
  if (field.rational) {
    const auto primes = good_reduction_primes(sq, 3);
    const auto r = oracle_classify_rational(sq, primes, d_max);
    classifier_type = classify_section(sq).type;
    oracle_type = r.deduced_type;
    for (const auto& red : r.reductions) reductions.push_back(reduction_json(red));
    out.data = {{"section", render_section(sq)},
                {"groebner_basis", poly_list(r.groebner_basis)},
                {"hf", r.hf},
                {"line_factor", r.line_factor ? json(render_linear_form(*r.line_factor)) : json(nullptr)},
                {"minors", poly_list(r.minors.generators())}};
  } else {
    const OracleFields fields = OracleFields::for_prime(field.p);
    const auto s = reduce_section(sq, fields.base());
    const auto r = oracle_classify(s, fields, d_max);
    classifier_type = classify_section(s).type;
    oracle_type = r.deduced_type;
    reductions.push_back(reduction_json(r));
    out.data = {{"section", render_section(s)},
                {"groebner_basis", poly_list(r.groebner_basis)},
                {"hf", r.hf},
                {"line_factor", r.line_factor ? json(render_linear_form(*r.line_factor)) : json(nullptr)},
                {"minors", poly_list(r.minors.generators())}};
  }
  const bool agree = oracle_type.has_value() && oracle_type == classifier_type;
  out.data["command"] = "oracle";
  out.data["field"] = field.label();
  out.data["reductions"] = reductions;
  out.data["deduced_type"] = type_label(oracle_type);
  out.data["classifier_type"] = type_label(classifier_type);
  out.data["agreement"] = agree;
  out.code = agree ? kOk : kInconsistent;

  t << "oracle type " << type_label(oracle_type) << ", classifier type " << type_label(classifier_type) << ": "
    << (agree ? "agree" : "DISAGREE") << "\n";
  t << "minors: " << out.data["minors"][0].get<std::string>() << ", " << out.data["minors"][1].get<std::string>()
    << ", " << out.data["minors"][2].get<std::string>() << "\n";
  t << "groebner basis:";
  for (const auto& g : out.data["groebner_basis"]) t << " [" << g.get<std::string>() << "]";
  t << "\nhf:";
  for (const auto& h : out.data["hf"]) t << " " << h.get<int>();
  t << "\nline factor: " << (out.data["line_factor"].is_null() ? "none" : out.data["line_factor"].get<std::string>())
    << "\n";
  for (const auto& red : reductions) {
    t << "p = " << red["p"].get<std::uint64_t>() << ": |V(F_p^k)| =";
    for (const auto& n : red["point_counts"]) t << " " << n.get<std::uint64_t>();
    t << ", type " << red["deduced_type"].get<std::string>();
    if (!red["inconsistency"].get<std::string>().empty()) t << " (" << red["inconsistency"].get<std::string>() << ")";
    t << "\n";
  }
  out.text = t.str();
  return out;
}

Report count_report(const SectionMatrix<Rational>& sq, const Field& field, bool parallel) {
  if (field.rational) throw std::invalid_argument("count requires a finite field, not Q");
  const auto s = reduce_section(sq, build_ext_field(field.p, 1));
  const CountReport c = count_hyperplane_section(s, parallel);
  Report out;
  out.data = {{"command", "count"},     {"field", field.label()},
              {"section", render_section(s)},
              {"q", c.q},               {"total_flag", c.total_flag},
              {"section_count", c.section_count},
              {"N", c.N},               {"predicted", c.predicted},
              {"match", c.match}};
  out.code = c.match ? kOk : kInconsistent;
  std::ostringstream t;
  t << "q = " << c.q << ": " << c.section_count << " of " << c.total_flag << " flags on the hyperplane section\n";
  t << "N = " << c.N << ", predicted q^2 + q + 1 + qN = " << c.predicted << ": " << (c.match ? "match" : "MISMATCH")
    << "\n";
  out.text = t.str();
  return out;
}

Report sweep_report(const RunConfig& cfg, const Field& field) {
  if (field.rational) throw std::invalid_argument("sweep requires a finite field, not Q");
  if (cfg.exhaustive == cfg.sample.has_value()) throw std::invalid_argument("give exactly one of --exhaustive and --sample");
  SweepOptions opt;
  opt.q = field.p;
  opt.sample = cfg.sample;
  opt.seed = cfg.seed;
  opt.d_max = cfg.d_max;
  opt.parallel = !cfg.serial;
  const SweepSummary s = sweep_verify(opt);

  Report out;
  json tallies = json::object();
  for (auto t : kAllZeroSchemeTypes) tallies[std::string(type_letter(t))] = s.tallies[type_index(t)];
  json failures = json::array();
  for (const auto& f : s.failures)
    failures.push_back({{"index", f.index}, {"hyperplane", f.hyperplane}, {"section", f.section}, {"reason", f.reason}});
  out.data = {{"command", "sweep"},
              {"field", field.label()},
              {"mode", s.exhaustive ? "exhaustive" : "sample"},
              {"sample", s.sample},
              {"seed", s.seed},
              {"classes", s.classes},
              {"tallies", tallies},
              {"inconsistent", s.inconsistent},
              {"all_types_present", s.all_types_present()},
              {"failures", s.failures.size()},
              {"failure_list", failures}};
  out.code = s.failures.empty() ? kOk : kInconsistent;
  std::ostringstream t;
  t << "q = " << s.q << ", " << (s.exhaustive ? "exhaustive" : "sample of " + std::to_string(s.sample)) << ", "
    << s.classes << " section classes\n";
  for (auto ty : kAllZeroSchemeTypes) t << "type " << type_letter(ty) << ": " << s.tallies[type_index(ty)] << "\n";
  t << "failures: " << s.failures.size() << "\n";
  for (const auto& f : s.failures) t << "  #" << f.index << " " << f.section << ": " << f.reason << "\n";
  out.text = t.str();
  return out;
}

template <FieldElement F>
Report roundtrip_report(const SectionMatrix<F>& s, const Field& field) {
  const auto h = section_to_hyperplane(s);
  const auto back = hyperplane_to_section(h);
  const auto again = section_to_hyperplane(back);
  // back is the trace-free representative divided by its leading coordinate.
  F lead = s.like();
  for (const auto& c : trace_free_coords(s))
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  const bool proportional = SectionMatrix<F>(lead * back.matrix()) == s.trace_free();
  const bool idempotent = again == h && hyperplane_to_section(again) == back;
  Report out;
  out.data = {{"command", "roundtrip"},
              {"field", field.label()},
              {"section", render_section(s)},
              {"hyperplane", h.to_string()},
              {"section_back", render_section(back)},
              {"hyperplane_again", again.to_string()},
              {"proportional", proportional},
              {"idempotent", idempotent}};
  const bool ok = proportional && idempotent;
  out.code = ok ? kOk : kInconsistent;
  std::ostringstream t;
  t << "section " << render_section(s) << " -> hyperplane " << h.to_string() << " -> section "
    << render_section(back) << ": " << (ok ? "ok" : "FAILED") << "\n";
  out.text = t.str();
  return out;
}

Report dispatch(const RunConfig& cfg) {
  if (cfg.output != "text" && cfg.output != "json") throw std::invalid_argument("output must be text or json");
  if (cfg.d_max < 4) throw std::invalid_argument("d_max must be at least 4");
  const Field field = parse_field(cfg.field);
  const bool parallel = !cfg.serial;
  if (cfg.command == "sweep") return sweep_report(cfg, field);

  const SectionMatrix<Rational> sq = input_section(cfg);
  sq.require_nonzero();
  if (cfg.command == "classify") {
    if (field.rational) return classify_report(sq, field);
    return classify_report(reduce_section(sq, build_ext_field(field.p, 1)), field);
  }
  if (cfg.command == "oracle") return oracle_report(sq, field, cfg.d_max);
  if (cfg.command == "count") return count_report(sq, field, parallel);
  if (cfg.command == "roundtrip") {
    if (field.rational) return roundtrip_report(sq, field);
    return roundtrip_report(reduce_section(sq, build_ext_field(field.p, 1)), field);
  }
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    report = dispatch(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  const std::string body = config.output == "json" ? report.data.dump(2) + "\n" : report.text;
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << "\n";
      return kInvalidInput;
    }
    file << body;
  } else {
    out << body;
  }
  return report.code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero schemes of tangent vector fields on P2 and the hyperplane sections they define"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t sample = 0;

  auto add_common = [&](CLI::App* sub, bool input, bool field_default_q) {
    if (input) {
      sub->add_option("--section", cfg.section, "three linear forms, e.g. \"X, 2Y, 3Z\"");
      sub->add_option("--hyperplane", cfg.hyperplane, "eight P7 coordinates, comma separated");
    }
    sub->add_option("--field", cfg.field, field_default_q ? "Q or a prime p >= 5" : "a prime p >= 5")
        ->capture_default_str();
    sub->add_option("--output", cfg.output, "text or json")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  };
  auto* classify = app.add_subcommand("classify", "type of the zero scheme and the hyperplane-section verdict");
  add_common(classify, true, true);
  auto* oracle = app.add_subcommand("oracle", "Groebner basis, Hilbert function and point counts of the minors");
  add_common(oracle, true, true);
  oracle->add_option("--dmax", cfg.d_max, "largest degree of the Hilbert function")->capture_default_str();
  auto* count = app.add_subcommand("count", "count F_q points of the hyperplane section on the flag variety");
  add_common(count, true, false);
  count->add_flag("--serial", cfg.serial, "use the serial reference kernel");
  auto* sweep = app.add_subcommand("sweep", "cross-check classifier, oracle and flag counts over many sections");
  add_common(sweep, false, false);
  auto* sample_opt = sweep->add_option("--sample", sample, "number of distinct random section classes");
  sweep->add_flag("--exhaustive", cfg.exhaustive, "every nonzero section class (q = 5 or 7)");
  sweep->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  sweep->add_option("--dmax", cfg.d_max, "largest degree of the Hilbert function")->capture_default_str();
  sweep->add_flag("--serial", cfg.serial, "run the serial reference loop");
  auto* roundtrip = app.add_subcommand("roundtrip", "section to P7 hyperplane and back");
  add_common(roundtrip, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (*sample_opt) cfg.sample = sample;
  return run(cfg, out, err);
}

}  // namespace hypsec::cli
