#include "expdioph/checkpoint.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "expdioph/equation.hpp"

namespace expdioph {

using nlohmann::json;

std::string checkpoint_line(const CheckpointRecord& rec) {
  json j;
  j["a"] = rec.key.a;
  j["m"] = rec.key.m;
  j["y"] = rec.key.y;
  j["status"] = "done";
  j["found"] = json::array();
  for (const auto& t : rec.found) j["found"].push_back(t);
  j["elapsed_ms"] = rec.elapsed_ms;
  return j.dump();
}

namespace {

CheckpointRecord parse_record(const std::string& line) {
  const json j = json::parse(line);
  if (!j.is_object() || j.at("status").get<std::string>() != "done") {
    throw std::invalid_argument("status is not \"done\"");
  }
  CheckpointRecord rec;
  rec.key = UnitKey{j.at("a").get<std::uint64_t>(), j.at("m").get<std::uint64_t>(),
                    j.at("y").get<std::uint64_t>()};
  rec.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  for (const auto& f : j.at("found")) {
    const auto t = f.get<FamilyTuple>();
    if (!Solution::verify(Instance(t[0], t[1]), ExponentTriple(t[2], t[3], t[4]))) {
      throw std::invalid_argument("recorded solution does not verify");
    }
    rec.found.push_back(t);
  }
  return rec;
}

}  // namespace

CheckpointState checkpoint_load(const std::string& path) {
  CheckpointState st;
  std::ifstream in(path, std::ios::binary);
  if (!in) return st;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < data.size()) {
    ++line_no;
    const std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) {
      st.dropped_partial_line = true;  // interrupted write
      break;
    }
    const std::string line = data.substr(pos, nl - pos);
    pos = nl + 1;
    st.valid_bytes = pos;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    CheckpointRecord rec;
    try {
      rec = parse_record(line);
    } catch (const std::exception& e) {
      throw std::runtime_error("checkpoint " + path + ": corrupt line " + std::to_string(line_no) +
                               " (" + e.what() + ")");
    }
    if (!st.done.emplace(rec.key, rec).second) {
      throw std::runtime_error("checkpoint " + path + ": corrupt line " + std::to_string(line_no) +
                               " (unit appears twice)");
    }
  }
  return st;
}

CheckpointWriter::CheckpointWriter(const std::string& path, std::uintmax_t valid_bytes) : path_(path) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) > valid_bytes) {
    std::filesystem::resize_file(path, valid_bytes, ec);
    if (ec) throw std::runtime_error("checkpoint " + path + ": cannot truncate: " + ec.message());
  }
  out_.open(path, std::ios::app | std::ios::binary);
  if (!out_) throw std::runtime_error("checkpoint " + path + ": cannot open for append");
}

void CheckpointWriter::append(const CheckpointRecord& rec) {
  const std::string line = checkpoint_line(rec) + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) throw std::runtime_error("checkpoint " + path_ + ": write failed");
}

}  // namespace expdioph
