#pragma once

// Resumable record of finished scan columns.
//
// File layout (JSON):
//   {"format": "commtuples-columns", "version": 1, "n_lo": 1, "n_hi": 30,
//    "columns": [{"ell": 2, "signs": "-+-+...", "exceptions": [1, 3, ...]}, ...]}
//
// "signs" holds one character per n in [n_lo, n_hi] ('-', '0', '+');
// "exceptions" lists the n with a '-' and must agree with "signs".

#include "commtuples/logconcavity.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace commtuples {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ColumnCheckpoint {
 public:
  /// Loads an existing file (throws CheckpointError if it is corrupt or was
  /// written for a different n range); a missing file starts empty.
  ColumnCheckpoint(std::filesystem::path path, std::size_t n_lo, std::size_t n_hi);

  std::optional<Column> find(unsigned ell) const;

  /// Thread-safe; rewrites the file atomically.
  void record(const Column& column);

  std::size_t size() const;

 private:
  void save_locked() const;

  std::filesystem::path path_;
  std::size_t n_lo_;
  std::size_t n_hi_;
  mutable std::mutex mutex_;
  std::map<unsigned, Column> columns_;
};

}  // namespace commtuples
