#include "dea/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace dea {

namespace {

using nlohmann::json;

std::string shortest(Real v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Real parse_real(std::string_view field, const std::string& path) {
  Real value = 0;
  const auto res =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw std::runtime_error(path + ": malformed numeric field '" +
                             std::string(field) + "'");
  return value;
}

std::string file_stem(const std::string& path) {
  const size_t slash = path.find_last_of("/\\");
  const size_t start = slash == std::string::npos ? 0 : slash + 1;
  const size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || dot < start)
    return path.substr(start);
  return path.substr(start, dot - start);
}

}  // namespace

void write_dataset_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (Index j = 0; j < ds.m1(); ++j)
    out << (j ? ",x" : "x") << (j + 1);
  for (Index j = 0; j < ds.m2(); ++j) out << ",y" << (j + 1);
  out << '\n';
  for (Index i = 0; i < ds.n(); ++i) {
    for (Index j = 0; j < ds.m1(); ++j) {
      if (j) out << ',';
      out << shortest(ds.inputs()(i, j));
    }
    for (Index j = 0; j < ds.m2(); ++j)
      out << ',' << shortest(ds.outputs()(i, j));
    out << '\n';
  }
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

Dataset read_dataset_csv(const std::string& path, const std::string& name_hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset file " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty dataset file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  Index m1 = 0, m2 = 0;
  {
    std::stringstream header(line);
    std::string col;
    while (std::getline(header, col, ',')) {
      if (col.rfind('x', 0) == 0 && m2 == 0)
        ++m1;
      else if (col.rfind('y', 0) == 0)
        ++m2;
      else
        throw std::runtime_error(path + ": unexpected header column '" + col +
                                 "'");
    }
  }
  if (m1 < 1 || m2 < 1)
    throw std::runtime_error(path + ": header must list x and y columns");

  std::vector<Real> values;
  Index n = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t start = 0;
    Index fields = 0;
    while (start <= line.size()) {
      size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      values.push_back(
          parse_real(std::string_view(line).substr(start, comma - start), path));
      ++fields;
      start = comma + 1;
      if (comma == line.size()) break;
    }
    if (fields != m1 + m2)
      throw std::runtime_error(path + ": row with wrong field count");
    ++n;
  }
  if (n < 1) throw std::runtime_error(path + ": no data rows");

  Matrix inputs(n, m1), outputs(n, m2);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m1; ++j)
      inputs(i, j) = values[static_cast<size_t>(i * (m1 + m2) + j)];
    for (Index j = 0; j < m2; ++j)
      outputs(i, j) = values[static_cast<size_t>(i * (m1 + m2) + m1 + j)];
  }
  return Dataset(name_hint.empty() ? file_stem(path) : name_hint,
                 std::move(inputs), std::move(outputs));
}

std::string manifest_path_for(const std::string& dataset_path) {
  return dataset_path + ".manifest";
}

void write_manifest(const Manifest& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "name: " << m.name << '\n';
  out << "n: " << m.n << '\n';
  out << "m1: " << m.m1 << '\n';
  out << "m2: " << m.m2 << '\n';
  out << "seed: " << m.seed << '\n';
  out << "target_density: " << shortest(m.target_density) << '\n';
  if (m.frame_size) out << "frame_size: " << *m.frame_size << '\n';
  if (m.realized_density)
    out << "realized_density: " << shortest(*m.realized_density) << '\n';
}

std::optional<Manifest> read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Manifest m;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.erase(0, 1);
    try {
      if (key == "name") m.name = value;
      else if (key == "n") m.n = std::stoll(value);
      else if (key == "m1") m.m1 = std::stoll(value);
      else if (key == "m2") m.m2 = std::stoll(value);
      else if (key == "seed") m.seed = std::stoull(value);
      else if (key == "target_density") m.target_density = std::stod(value);
      else if (key == "frame_size") m.frame_size = std::stoll(value);
      else if (key == "realized_density") m.realized_density = std::stod(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return m;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json to_json(const RunRecord& r) {
  json j{{"dataset", r.dataset},
         {"procedure", r.procedure},
         {"pivot_rule", r.pivot_rule},
         {"n", r.n},
         {"m1", r.m1},
         {"m2", r.m2},
         {"m_hat", r.m_hat},
         {"seed", r.seed},
         {"timestamp", r.timestamp},
         {"preprocess_time", r.preprocess_time},
         {"phase1_time", r.phase1_time},
         {"phase2_time", r.phase2_time},
         {"total_time", r.total_time},
         {"frame_size", r.frame_size},
         {"boundary_size", r.boundary_size},
         {"total_lps", r.total_lps}};
  if (r.procedure == "buildhull") {
    j["avg_lp_size"] = r.avg_lp_size;
    j["hyperplane_translations"] = r.hyperplane_translations;
    j["inner_products"] = r.inner_products;
    j["translation_time"] = r.translation_time;
  } else if (r.procedure == "ehd") {
    j["p"] = r.p;
    j["lp_size_step2"] = r.lp_size_step2;
    j["lp_size_step3"] = r.lp_size_step3;
    j["lp_size_step4"] = r.lp_size_step4;
    j["lp_count_step2"] = r.lp_count_step2;
    j["lp_count_step3"] = r.lp_count_step3;
    j["num_lps_step4"] = r.num_lps_step4;
    j["aux_lps"] = r.aux_lps;
    j["productivity"] = r.productivity;
  }
  if (r.phase2_lps > 0) {
    j["phase2_lp_size"] = r.phase2_lp_size;
    j["phase2_lps"] = r.phase2_lps;
  }
  return j;
}

RunRecord from_json(const json& j) {
  RunRecord r;
  r.dataset = j.at("dataset").get<std::string>();
  r.procedure = j.at("procedure").get<std::string>();
  r.pivot_rule = j.at("pivot_rule").get<std::string>();
  r.n = j.at("n").get<Index>();
  r.m1 = j.at("m1").get<Index>();
  r.m2 = j.at("m2").get<Index>();
  r.m_hat = j.at("m_hat").get<Index>();
  r.seed = j.at("seed").get<uint64_t>();
  r.timestamp = j.value("timestamp", "");
  r.preprocess_time = j.value("preprocess_time", 0.0);
  r.phase1_time = j.value("phase1_time", 0.0);
  r.phase2_time = j.value("phase2_time", 0.0);
  r.total_time = j.at("total_time").get<Real>();
  r.frame_size = j.value("frame_size", Index(0));
  r.boundary_size = j.value("boundary_size", Index(0));
  r.total_lps = j.at("total_lps").get<long>();
  r.avg_lp_size = j.value("avg_lp_size", 0.0);
  r.hyperplane_translations = j.value("hyperplane_translations", 0L);
  r.inner_products = j.value("inner_products", 0L);
  r.translation_time = j.value("translation_time", 0.0);
  r.p = j.value("p", Index(0));
  r.lp_size_step2 = j.value("lp_size_step2", Index(0));
  r.lp_size_step3 = j.value("lp_size_step3", Index(0));
  r.lp_size_step4 = j.value("lp_size_step4", Index(0));
  r.lp_count_step2 = j.value("lp_count_step2", 0L);
  r.lp_count_step3 = j.value("lp_count_step3", 0L);
  r.num_lps_step4 = j.value("num_lps_step4", 0L);
  r.aux_lps = j.value("aux_lps", 0L);
  r.productivity = j.value("productivity", 0L);
  r.phase2_lp_size = j.value("phase2_lp_size", Index(0));
  r.phase2_lps = j.value("phase2_lps", 0L);
  return r;
}

}  // namespace

void append_run_record(const RunRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for append");
  out << to_json(record).dump() << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<RunRecord> read_run_records(const std::string& path, int* skipped) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open results file " + path);
  std::vector<RunRecord> records;
  int bad = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(from_json(json::parse(line)));
    } catch (const std::exception& e) {
      std::fprintf(stderr, "warning: %s:%d skipped malformed record (%s)\n",
                   path.c_str(), lineno, e.what());
      ++bad;
    }
  }
  if (skipped) *skipped = bad;
  return records;
}

}  // namespace dea
