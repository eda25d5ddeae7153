#include "lowrank/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lowrank/errors.hpp"

namespace lowrank {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where);
  auto it = j.find(name);
  if (it == j.end()) throw ParseError("missing field", where.empty() ? name : where + "." + name);
  return *it;
}

std::string path_of(const std::string& where, const char* name) { return where.empty() ? name : where + "." + name; }

template <class T>
T get_as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("wrong type", where + " = " + j.dump());
  }
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", where + " = " + j.dump());
  return j.get<int>();
}

Rational entry_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) throw ParseError("expected an integer or \"p/q\" string", where + " = " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " at " + where, j.get<std::string>());
  }
}

const Json& array_field(const Json& j, const char* name, const std::string& where) {
  const Json& a = field(j, name, where);
  if (!a.is_array()) throw ParseError("expected an array", path_of(where, name));
  return a;
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector vector_from_json(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected a vector", where);
  if (j.size() != n) throw ParseError("expected " + std::to_string(n) + " entries", where);
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(entry_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

}  // namespace

Json ensemble_to_json(const MeasurementEnsemble& e) {
  Json out;
  out["n"] = e.n;
  out["r"] = e.r;
  out["symmetric"] = e.symmetric;
  Json mats = Json::array();
  for (const auto& a : e.matrices) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(to_string(a(i, k)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  out["matrices"] = std::move(mats);
  return out;
}

MeasurementEnsemble ensemble_from_json(const Json& j) {
  MeasurementEnsemble e;
  e.n = get_int(field(j, "n", ""), "n");
  if (e.n < 2) throw ParseError("n must be >= 2", "n = " + std::to_string(e.n));
  e.r = j.contains("r") ? get_int(j["r"], "r") : 1;
  if (e.r < 1) throw ParseError("r must be >= 1", "r = " + std::to_string(e.r));
  e.symmetric = j.contains("symmetric") ? get_as<bool>(j["symmetric"], "symmetric") : false;
  const Json& mats = array_field(j, "matrices", "");
  if (mats.empty()) throw ParseError("need at least one matrix", "matrices");
  const auto n = static_cast<std::size_t>(e.n);
  for (std::size_t t = 0; t < mats.size(); ++t) {
    const std::string where = "matrices[" + std::to_string(t) + "]";
    if (!mats[t].is_array() || mats[t].size() != n) throw ParseError("expected " + std::to_string(n) + " rows", where);
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = vector_from_json(mats[t][i], n, where + "[" + std::to_string(i) + "]");
      for (std::size_t k = 0; k < n; ++k) a(i, k) = row[k];
    }
    e.matrices.push_back(std::move(a));
  }
  return e;
}

Json subspaces_to_json(const SubspaceFile& f) {
  Json out;
  out["n"] = f.n;
  Json subs = Json::array();
  for (const auto& s : f.subspaces) {
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(vector_json(v));
    subs.push_back(std::move(basis));
  }
  out["subspaces"] = std::move(subs);
  return out;
}

SubspaceFile subspaces_from_json(const Json& j) {
  SubspaceFile f;
  const int n = get_int(field(j, "n", ""), "n");
  if (n < 1) throw ParseError("n must be >= 1", "n = " + std::to_string(n));
  f.n = static_cast<std::size_t>(n);
  const Json& subs = array_field(j, "subspaces", "");
  for (std::size_t t = 0; t < subs.size(); ++t) {
    const std::string where = "subspaces[" + std::to_string(t) + "]";
    if (!subs[t].is_array() || subs[t].empty()) throw ParseError("expected a nonempty list of vectors", where);
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < subs[t].size(); ++i) {
      basis.push_back(vector_from_json(subs[t][i], f.n, where + "[" + std::to_string(i) + "]"));
    }
    try {
      f.subspaces.emplace_back(std::move(basis));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), where);
    }
  }
  return f;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["reason"] = c.reason;
  out["n"] = c.n;
  out["r"] = c.r;
  out["symmetric"] = c.symmetric;
  out["m"] = c.m;
  out["kept"] = {c.kept[0], c.kept[1]};
  out["f0"] = c.f0 ? Json(to_string(*c.f0)) : Json(nullptr);
  out["f0_degree"] = c.f0 ? Json(c.f0->degree()) : Json(nullptr);
  out["real_root_count"] = c.real_root_count ? Json(*c.real_root_count) : Json(nullptr);
  Json slices = Json::array();
  for (const auto& s : c.slices) {
    Json e;
    e["variable"] = s.variable;
    e["contains_one"] = s.contains_one ? Json(*s.contains_one) : Json(nullptr);
    slices.push_back(std::move(e));
  }
  out["slices"] = std::move(slices);
  Json st;
  st["linear_pivots"] = c.stats.linear_pivots;
  st["reduced_variables"] = c.stats.reduced_variables;
  st["elimination_pairs"] = c.stats.elimination_pairs;
  st["elimination_basis_size"] = c.stats.elimination_basis_size;
  st["elimination_max_degree"] = c.stats.elimination_max_degree;
  st["elimination_generators"] = c.stats.elimination_generators;
  out["stats"] = std::move(st);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  try {
    c.verdict = parse_verdict(get_as<std::string>(field(j, "verdict", ""), "verdict"));
  } catch (const std::invalid_argument&) {
    throw ParseError("unknown verdict", j["verdict"].dump());
  }
  c.reason = get_as<std::string>(field(j, "reason", ""), "reason");
  c.n = get_int(field(j, "n", ""), "n");
  c.r = get_int(field(j, "r", ""), "r");
  c.symmetric = get_as<bool>(field(j, "symmetric", ""), "symmetric");
  c.m = get_as<std::size_t>(field(j, "m", ""), "m");
  const Json& kept = array_field(j, "kept", "");
  if (kept.size() != 2) throw ParseError("expected two kept variables", "kept");
  c.kept = {get_as<std::string>(kept[0], "kept[0]"), get_as<std::string>(kept[1], "kept[1]")};
  const Json& f0 = field(j, "f0", "");
  if (!f0.is_null()) c.f0 = parse_polynomial(get_as<std::string>(f0, "f0"), make_variables({c.kept[0], c.kept[1]}));
  const Json& roots = field(j, "real_root_count", "");
  if (!roots.is_null()) c.real_root_count = get_as<std::size_t>(roots, "real_root_count");
  const Json& slices = array_field(j, "slices", "");
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const std::string where = "slices[" + std::to_string(i) + "]";
    SliceResult s;
    s.variable = get_as<std::string>(field(slices[i], "variable", where), path_of(where, "variable"));
    const Json& v = field(slices[i], "contains_one", where);
    if (!v.is_null()) s.contains_one = get_as<bool>(v, path_of(where, "contains_one"));
    c.slices.push_back(std::move(s));
  }
  const Json& st = field(j, "stats", "");
  c.stats.linear_pivots = get_as<std::size_t>(field(st, "linear_pivots", "stats"), "stats.linear_pivots");
  c.stats.reduced_variables = get_as<std::size_t>(field(st, "reduced_variables", "stats"), "stats.reduced_variables");
  c.stats.elimination_pairs = get_as<std::size_t>(field(st, "elimination_pairs", "stats"), "stats.elimination_pairs");
  c.stats.elimination_basis_size =
      get_as<std::size_t>(field(st, "elimination_basis_size", "stats"), "stats.elimination_basis_size");
  c.stats.elimination_max_degree =
      get_as<unsigned>(field(st, "elimination_max_degree", "stats"), "stats.elimination_max_degree");
  c.stats.elimination_generators =
      get_as<std::size_t>(field(st, "elimination_generators", "stats"), "stats.elimination_generators");
  return c;
}

Json search_report_to_json(const SearchReport& report) {
  const SearchConfig& cfg = report.config;
  Json out;
  Json config;
  config["n"] = cfg.n;
  config["r"] = cfg.r;
  config["symmetric"] = cfg.symmetric;
  config["m"] = cfg.m;
  config["range"] = {cfg.lo, cfg.hi};
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["max_pairs"] = cfg.limits.max_pairs;
  config["max_degree"] = cfg.limits.max_degree;
  config["timeout_seconds"] =
      cfg.limits.time_limit ? Json(static_cast<double>(cfg.limits.time_limit->count()) / 1000.0) : Json(nullptr);
  out["config"] = std::move(config);
  out["tallies"] = {{"INJECTIVE", report.injective}, {"FAIL", report.fail}, {"INDETERMINATE", report.indeterminate}};
  Json reasons = Json::object();
  for (const auto& [reason, count] : report.reasons) reasons[reason] = count;
  out["reasons"] = std::move(reasons);
  Json hits = Json::array();
  for (const auto& h : report.hits) {
    Json e;
    e["trial"] = h.trial;
    e["ensemble"] = ensemble_to_json(h.ensemble);
    e["certificate"] = certificate_to_json(h.certificate);
    hits.push_back(std::move(e));
  }
  out["found"] = std::move(hits);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    const std::string token = at < text.size() ? text.substr(at, 16) : std::string("<end of input>");
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte), token);
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("LOWRANK_DATA_DIR")) return env;
  return LOWRANK_DATA_DIR;
}

}  // namespace lowrank
