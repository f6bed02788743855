#include <charconv>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "wilf/errors.hpp"
#include "wilf/modseq.hpp"

namespace wilf {

namespace {

using nlohmann::json;

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t parse_decimal(const json& j, const char* field) {
  if (!j.is_string()) throw CheckpointIOError(std::string("checkpoint field ") + field + " is not a string");
  const auto& s = j.get_ref<const std::string&>();
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw CheckpointIOError(std::string("checkpoint field ") + field + ": bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

std::string checkpoint_to_json(const Checkpoint& c) {
  json slots = json::array();
  for (auto s : c.slots) slots.push_back(std::to_string(s));
  json zeros = json::array();
  for (auto z : c.zeros_found) zeros.push_back(std::to_string(z));
  json j = {
      {"format_version", Checkpoint::kFormatVersion},
      {"m", std::to_string(c.m)},
      {"n", std::to_string(c.n)},
      {"slots", std::move(slots)},
      {"zeros_found", std::move(zeros)},
      {"wall_time_stamp", c.wall_time_stamp},
  };
  return j.dump() + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CheckpointIOError(std::string("checkpoint is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CheckpointIOError("checkpoint is not a JSON object");
  for (const char* field : {"format_version", "m", "n", "slots", "zeros_found", "wall_time_stamp"}) {
    if (!j.contains(field)) throw CheckpointIOError(std::string("checkpoint missing field ") + field);
  }
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != Checkpoint::kFormatVersion) {
    throw CheckpointIOError("unsupported checkpoint format_version");
  }
  Checkpoint c;
  c.m = parse_decimal(j["m"], "m");
  c.n = parse_decimal(j["n"], "n");
  if (!j["slots"].is_array() || !j["zeros_found"].is_array()) {
    throw CheckpointIOError("checkpoint slots/zeros_found must be arrays");
  }
  for (const auto& s : j["slots"]) {
    const auto v = parse_decimal(s, "slots");
    if (v >= c.m) throw CheckpointIOError("checkpoint slot residue out of range");
    c.slots.push_back(static_cast<std::uint32_t>(v));
  }
  for (const auto& z : j["zeros_found"]) c.zeros_found.push_back(parse_decimal(z, "zeros_found"));
  if (c.slots.size() != c.m) throw CheckpointIOError("checkpoint slot count does not match modulus");
  if (!j["wall_time_stamp"].is_string()) throw CheckpointIOError("checkpoint wall_time_stamp must be a string");
  c.wall_time_stamp = j["wall_time_stamp"].get<std::string>();
  return c;
}

void save_checkpoint(const Checkpoint& c, const std::filesystem::path& path) {
  Checkpoint stamped = c;
  if (stamped.wall_time_stamp.empty()) stamped.wall_time_stamp = utc_now();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointIOError("cannot open " + tmp.string() + " for writing");
    out << checkpoint_to_json(stamped);
    out.flush();
    if (!out) throw CheckpointIOError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointIOError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointIOError("cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

}  // namespace wilf
