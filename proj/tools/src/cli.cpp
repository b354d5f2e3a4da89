#include "pstab_tools/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pstab/bq/bq_decide.hpp"
#include "pstab/bq/slice.hpp"
#include "pstab/error.hpp"
#include "pstab/freegroup/primitivity.hpp"
#include "pstab/freegroup/whitehead_graph.hpp"
#include "pstab/io/json_io.hpp"
#include "pstab/moebius/upper_half_space.hpp"
#include "pstab/ps/orbit_probe.hpp"
#include "pstab/ps/spectrum.hpp"

namespace pstab::cli {

namespace {

using json = nlohmann::ordered_json;
using moebius::Complex;

// "re,im" or a bare real number.
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw Error(ErrorCode::ParseError, "bad number \"" + s + "\" in \"" + text + "\"");
    return v;
  };
  if (comma == std::string::npos) return {to_double(text), 0.0};
  return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

moebius::UhsPoint parse_basepoint(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_complex(item).real());
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "basepoint must be re,im,t");
  return {{parts[0], parts[1]}, parts[2]};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

freegroup::Word parse_word(const std::string& text, int rank) { return freegroup::Word::parse(text, rank); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive-stability and Bowditch condition toolkit", "pstab"};
  app.require_subcommand(1);

  std::string word_text;
  int rank = 0;
  auto* word_cmd = app.add_subcommand("word", "Reduced and cyclically reduced forms of a word");
  auto* primitive_cmd = app.add_subcommand("primitive", "Whitehead primitivity test");
  auto* blocking_cmd = app.add_subcommand("blocking", "Primitive-blocking certificate");
  for (auto* cmd : {word_cmd, primitive_cmd, blocking_cmd}) {
    cmd->add_option("w", word_text, "Word over a..z, capitals for inverses")->required();
    cmd->add_option("--rank", rank, "Free group rank (default: inferred, at least 2)")->check(CLI::NonNegativeNumber);
  }

  int max_len = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Primitive conjugacy classes up to a length");
  enumerate_cmd->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--max-len", max_len)->required()->check(CLI::NonNegativeNumber);

  std::string rep_path;
  auto* rep_info_cmd = app.add_subcommand("rep-info", "Generator traces and classes of a representation");
  rep_info_cmd->add_option("--rep", rep_path)->required();

  auto* ps_scan_cmd = app.add_subcommand("ps-scan", "Primitive length spectrum scan");
  ps_scan_cmd->add_option("--rep", rep_path)->required();
  ps_scan_cmd->add_option("--max-len", max_len)->required()->check(CLI::NonNegativeNumber);

  int periods = 0;
  std::string basepoint_text;
  auto* probe_cmd = app.add_subcommand("probe", "Orbit growth along a periodic leaf");
  probe_cmd->add_option("--rep", rep_path)->required();
  probe_cmd->add_option("--word", word_text)->required();
  probe_cmd->add_option("--periods", periods)->required()->check(CLI::Range(2, 1 << 20));
  probe_cmd->add_option("--basepoint", basepoint_text, "re,im,t (default 0,0,1)");

  std::string x_text, y_text, z_text;
  bq::BqOptions bq_opts;
  auto* bq_cmd = app.add_subcommand("bq-decide", "Bowditch condition search on a Markoff triple");
  bq_cmd->add_option("--x", x_text)->required();
  bq_cmd->add_option("--y", y_text)->required();
  bq_cmd->add_option("--z", z_text)->required();
  bq_cmd->add_option("--budget", bq_opts.budget)->capture_default_str();
  bq_cmd->add_option("--small-trace-bound", bq_opts.small_trace_bound)->capture_default_str();

  std::string config_path, out_path;
  int threads = 0;
  auto* render_cmd = app.add_subcommand("render", "Render a slice of a commutator level set to PPM");
  render_cmd->add_option("--config", config_path)->required();
  render_cmd->add_option("--out", out_path)->required();
  render_cmd->add_option("--threads", threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  try {
    json result;
    if (word_cmd->parsed()) {
      const auto w = parse_word(word_text, rank);
      const auto red = freegroup::cyclic_reduce(w);
      result["word"] = w.to_string();
      result["rank"] = w.rank();
      result["length"] = w.size();
      result["cyclically_reduced"] = w.is_cyclically_reduced();
      result["cyclic"] = red.cyclic.to_string();
      result["cyclic_length"] = red.cyclic.length();
      result["conjugator"] = red.conjugator.to_string();
    } else if (primitive_cmd->parsed()) {
      const auto w = parse_word(word_text, rank);
      result["word"] = w.to_string();
      result["primitive"] = freegroup::is_primitive(w);
    } else if (blocking_cmd->parsed()) {
      const auto cert = freegroup::blocking_certificate(parse_word(word_text, rank));
      result["certified"] = cert.certified;
      result["reason"] = std::string(freegroup::to_string(cert.reason));
    } else if (enumerate_cmd->parsed()) {
      const auto classes = freegroup::enumerate_primitive_classes(rank, max_len);
      json list = json::array();
      for (const auto& c : classes) list.push_back(c.to_string());
      result["rank"] = rank;
      result["max_len"] = max_len;
      result["count"] = classes.size();
      result["classes"] = std::move(list);
    } else if (rep_info_cmd->parsed()) {
      const auto rep = io::load_representation(rep_path);
      json gens = json::array();
      for (const auto& m : rep.images()) {
        gens.push_back({{"trace", complex_json(m.trace())},
                        {"kind", std::string(moebius::to_string(moebius::classify(m)))},
                        {"translation_length", moebius::translation_length(m)}});
      }
      result["rank"] = rep.rank();
      result["generators"] = std::move(gens);
      result["displacement_bound"] = ps::generator_displacement_bound(rep);
      if (rep.rank() == 2) {
        const auto f = moebius::fricke_traces(rep);
        result["fricke"] = {{"x", complex_json(f.x)},
                            {"y", complex_json(f.y)},
                            {"z", complex_json(f.z)},
                            {"kappa", complex_json(f.kappa)}};
      }
    } else if (ps_scan_cmd->parsed()) {
      const auto rep = io::load_representation(rep_path);
      out << io::ps_report_to_json(ps::ps_scan(rep, max_len), rep.rank()) << '\n';
      return 0;
    } else if (probe_cmd->parsed()) {
      const auto rep = io::load_representation(rep_path);
      const auto cls = freegroup::CyclicWord::parse(word_text, rep.rank());
      const auto base = basepoint_text.empty() ? moebius::UhsPoint::origin() : parse_basepoint(basepoint_text);
      const auto probe = ps::orbit_growth_probe(rep, cls, periods, base);
      result["word"] = cls.to_string();
      result["periods"] = periods;
      result["slope"] = probe.slope;
      result["translation_length"] = moebius::translation_length(moebius::evaluate(rep, cls.as_word()));
      result["distances"] = probe.distances;
      result["residuals"] = probe.residuals;
    } else if (bq_cmd->parsed()) {
      const bq::MarkoffTriple t(parse_complex(x_text), parse_complex(y_text), parse_complex(z_text));
      out << io::bq_verdict_to_json(bq::bq_decide(t, bq_opts)) << '\n';
      return 0;
    } else if (render_cmd->parsed()) {
      const auto cfg = io::load_slice_config(config_path);
      const auto image = bq::render_slice(cfg, threads);
      io::write_ppm(out_path, image);
      result["out"] = out_path;
      result["width"] = image.width;
      result["height"] = image.height;
    }
    out << result.dump() << '\n';
    return 0;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace pstab::cli
