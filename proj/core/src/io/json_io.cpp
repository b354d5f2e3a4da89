#include "pstab/io/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pstab/error.hpp"

namespace pstab::io {

using json = nlohmann::ordered_json;
using moebius::Complex;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return obj.at(name);
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a number");
  return v.get<double>();
}

std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

Complex complex_of(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, std::string(what) + " must be [re, im]");
  return {number(v[0], what), number(v[1], what)};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_of(const json& v, const char* what) {
  if (v.is_null()) return std::nullopt;
  return number(v, what);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

moebius::Representation parse_representation(std::string_view json_text) {
  const json doc = parse_document(json_text);
  const auto rank = integer(field(doc, "rank"), "rank");
  const json& gens = field(doc, "generators");
  if (rank < 1) throw Error(ErrorCode::ParseError, "rank must be positive");
  if (!gens.is_array() || static_cast<std::int64_t>(gens.size()) != rank) {
    throw Error(ErrorCode::ParseError, "\"generators\" must list exactly rank matrices");
  }
  std::vector<moebius::MoebiusMap> images;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != 4) throw Error(ErrorCode::ParseError, "each generator needs 4 complex entries");
    const Complex a = complex_of(g[0], "matrix entry");
    const Complex b = complex_of(g[1], "matrix entry");
    const Complex c = complex_of(g[2], "matrix entry");
    const Complex d = complex_of(g[3], "matrix entry");
    const double err = std::abs(a * d - b * c - 1.0);
    if (!(err <= 1e-6)) {
      throw Error(ErrorCode::DeterminantError,
                  "generator " + std::to_string(images.size() + 1) + " has determinant off by " + std::to_string(err));
    }
    images.push_back(moebius::MoebiusMap::normalized(a, b, c, d));
  }
  return moebius::Representation(std::move(images));
}

moebius::Representation load_representation(const std::filesystem::path& path) {
  return parse_representation(read_text_file(path));
}

std::string representation_to_json(const moebius::Representation& rep) {
  json gens = json::array();
  for (const auto& m : rep.images()) {
    gens.push_back(json::array({complex_json(m.a()), complex_json(m.b()), complex_json(m.c()), complex_json(m.d())}));
  }
  json doc;
  doc["rank"] = rep.rank();
  doc["generators"] = std::move(gens);
  return doc.dump();
}

std::string ps_report_to_json(const ps::PsReport& report, int rank) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back(f.to_string());
  json entries = json::array();
  for (const auto& e : report.entries) {
    json rec;
    rec["word"] = e.cls.to_string();
    rec["length"] = e.length;
    rec["trans_len"] = e.trans_len;
    rec["ratio"] = e.ratio;
    rec["kind"] = std::string(moebius::to_string(e.kind));
    entries.push_back(std::move(rec));
  }
  json doc;
  doc["verdict"] = std::string(ps::to_string(report.verdict));
  doc["min_ratio"] = optional_number(report.min_ratio);
  doc["max_ratio"] = optional_number(report.max_ratio);
  doc["failures"] = std::move(failures);
  doc["entries"] = std::move(entries);
  doc["max_len"] = report.max_len;
  doc["rank"] = rank;
  return doc.dump();
}

ps::PsReport ps_report_from_json(std::string_view json_text) {
  const json doc = parse_document(json_text);
  const int rank = static_cast<int>(integer(field(doc, "rank"), "rank"));
  ps::PsReport report;
  try {
    report.verdict = ps::ps_verdict_from_string(field(doc, "verdict").get<std::string>());
    report.min_ratio = optional_of(field(doc, "min_ratio"), "min_ratio");
    report.max_ratio = optional_of(field(doc, "max_ratio"), "max_ratio");
    report.max_len = static_cast<int>(integer(field(doc, "max_len"), "max_len"));
    for (const auto& f : field(doc, "failures")) {
      report.failures.push_back(freegroup::CyclicWord::parse(f.get<std::string>(), rank));
    }
    for (const auto& rec : field(doc, "entries")) {
      report.entries.push_back({freegroup::CyclicWord::parse(field(rec, "word").get<std::string>(), rank),
                                static_cast<std::size_t>(integer(field(rec, "length"), "length")),
                                number(field(rec, "trans_len"), "trans_len"), number(field(rec, "ratio"), "ratio"),
                                moebius::isometry_class_from_string(field(rec, "kind").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
  return report;
}

std::string bq_verdict_to_json(const bq::BqVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    json rec;
    rec["p"] = w.slope.p;
    rec["q"] = w.slope.q;
    rec["trace"] = complex_json(w.trace);
    witnesses.push_back(std::move(rec));
  }
  json doc;
  doc["kind"] = std::string(bq::to_string(v.kind));
  doc["nodes_explored"] = v.nodes_explored;
  doc["depth_max"] = v.depth_max;
  doc["witnesses"] = std::move(witnesses);
  return doc.dump();
}

bq::BqVerdict bq_verdict_from_json(std::string_view json_text) {
  const json doc = parse_document(json_text);
  bq::BqVerdict v;
  try {
    v.kind = bq::bq_kind_from_string(field(doc, "kind").get<std::string>());
    v.nodes_explored = integer(field(doc, "nodes_explored"), "nodes_explored");
    v.depth_max = static_cast<int>(integer(field(doc, "depth_max"), "depth_max"));
    for (const auto& rec : field(doc, "witnesses")) {
      v.witnesses.push_back({{integer(field(rec, "p"), "p"), integer(field(rec, "q"), "q")},
                             complex_of(field(rec, "trace"), "trace")});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed verdict: ") + e.what());
  }
  return v;
}

bq::SliceConfig parse_slice_config(std::string_view json_text) {
  const json doc = parse_document(json_text);
  bq::SliceConfig cfg;
  cfg.kappa = complex_of(field(doc, "kappa"), "kappa");
  cfg.fixed_x = complex_of(field(doc, "fixed_x"), "fixed_x");
  const json& window = field(doc, "window");
  if (!window.is_array() || window.size() != 2) throw Error(ErrorCode::ParseError, "window must be [[re,im],[re,im]]");
  cfg.window_min = complex_of(window[0], "window corner");
  cfg.window_max = complex_of(window[1], "window corner");
  cfg.width = static_cast<int>(integer(field(doc, "width"), "width"));
  cfg.height = static_cast<int>(integer(field(doc, "height"), "height"));
  if (doc.contains("root")) {
    const json& root = doc.at("root");
    if (root == "smaller") {
      cfg.root = bq::RootChoice::SmallerAbs;
    } else if (root == "larger") {
      cfg.root = bq::RootChoice::LargerAbs;
    } else {
      throw Error(ErrorCode::ParseError, "root must be \"smaller\" or \"larger\"");
    }
  }
  if (doc.contains("budget")) cfg.budget = integer(doc.at("budget"), "budget");
  if (doc.contains("small_trace_bound")) {
    cfg.small_trace_bound = static_cast<int>(integer(doc.at("small_trace_bound"), "small_trace_bound"));
  }
  if (cfg.width < 1 || cfg.height < 1 || cfg.budget < 0 || cfg.small_trace_bound < 0) {
    throw Error(ErrorCode::ParseError, "width/height must be >= 1 and budget, small_trace_bound >= 0");
  }
  return cfg;
}

bq::SliceConfig load_slice_config(const std::filesystem::path& path) { return parse_slice_config(read_text_file(path)); }

std::string slice_config_to_json(const bq::SliceConfig& cfg) {
  json doc;
  doc["kappa"] = complex_json(cfg.kappa);
  doc["fixed_x"] = complex_json(cfg.fixed_x);
  doc["window"] = json::array({complex_json(cfg.window_min), complex_json(cfg.window_max)});
  doc["width"] = cfg.width;
  doc["height"] = cfg.height;
  doc["root"] = std::string(bq::to_string(cfg.root));
  doc["budget"] = cfg.budget;
  doc["small_trace_bound"] = cfg.small_trace_bound;
  return doc.dump();
}

void write_ppm(const std::filesystem::path& path, const bq::Image& image) {
  const auto bytes = image.to_ppm();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path.string());
}

}  // namespace pstab::io
