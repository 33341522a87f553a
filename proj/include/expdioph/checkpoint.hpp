#pragma once

// Append-only JSON Lines log of completed work units:
//   {"a":..,"m":..,"y":..,"status":"done","found":[[a,m,x,y,z],...],"elapsed_ms":..}

#include <array>
#include <compare>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace expdioph {

struct UnitKey {
  std::uint64_t a;
  std::uint64_t m;
  std::uint64_t y;

  auto operator<=>(const UnitKey&) const = default;
};

using FamilyTuple = std::array<std::uint64_t, 5>;

struct CheckpointRecord {
  UnitKey key;
  std::vector<FamilyTuple> found;
  std::int64_t elapsed_ms = 0;
};

struct CheckpointState {
  std::map<UnitKey, CheckpointRecord> done;
  std::uintmax_t valid_bytes = 0;  // length up to the last complete line
  bool dropped_partial_line = false;
};

std::string checkpoint_line(const CheckpointRecord& rec);

/// Reads a checkpoint. A missing or empty file yields an empty state. An
/// unterminated final line is ignored; any other malformed line, a record
/// whose solutions do not verify, or a repeated unit throws
/// std::runtime_error naming the 1-based line number.
CheckpointState checkpoint_load(const std::string& path);

/// Serialized appender. Truncates any partial trailing line on open.
class CheckpointWriter {
 public:
  CheckpointWriter(const std::string& path, std::uintmax_t valid_bytes);

  void append(const CheckpointRecord& rec);

 private:
  std::mutex mu_;
  std::ofstream out_;
  std::string path_;
};

}  // namespace expdioph
