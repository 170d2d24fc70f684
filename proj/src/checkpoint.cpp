#include "commtuples/checkpoint.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace commtuples {

namespace {

constexpr const char* kFormat = "commtuples-columns";

}  // namespace

ColumnCheckpoint::ColumnCheckpoint(std::filesystem::path path, std::size_t n_lo, std::size_t n_hi)
    : path_(std::move(path)), n_lo_(n_lo), n_hi_(n_hi) {
  if (!std::filesystem::exists(path_)) return;

  std::ifstream in(path_);
  if (!in) throw CheckpointError("cannot open checkpoint " + path_.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path_.string() + ": " + e.what());
  }

  try {
    if (doc.at("format").get<std::string>() != kFormat || doc.at("version").get<int>() != 1)
      throw CheckpointError("checkpoint " + path_.string() + " has an unknown format");
    if (doc.at("n_lo").get<std::size_t>() != n_lo_ || doc.at("n_hi").get<std::size_t>() != n_hi_)
      throw CheckpointError("checkpoint " + path_.string() + " was written for a different n range");
    const std::size_t width = n_hi_ - n_lo_ + 1;
    for (const auto& entry : doc.at("columns")) {
      Column col;
      col.ell = entry.at("ell").get<unsigned>();
      const auto signs = entry.at("signs").get<std::string>();
      if (signs.size() != width)
        throw CheckpointError("checkpoint column ell=" + std::to_string(col.ell) +
                              " has the wrong length");
      std::vector<std::size_t> negatives;
      for (std::size_t i = 0; i < signs.size(); ++i) {
        col.signs.push_back(sign_from_char(signs[i]));
        if (col.signs.back() == Sign::negative) negatives.push_back(n_lo_ + i);
      }
      if (entry.at("exceptions").get<std::vector<std::size_t>>() != negatives)
        throw CheckpointError("checkpoint column ell=" + std::to_string(col.ell) +
                              " has inconsistent exception list");
      if (!columns_.emplace(col.ell, std::move(col)).second)
        throw CheckpointError("checkpoint lists a column twice");
    }
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path_.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CheckpointError("corrupt checkpoint " + path_.string() + ": " + e.what());
  }
}

std::optional<Column> ColumnCheckpoint::find(unsigned ell) const {
  std::lock_guard lock(mutex_);
  auto it = columns_.find(ell);
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

void ColumnCheckpoint::record(const Column& column) {
  std::lock_guard lock(mutex_);
  columns_[column.ell] = column;
  save_locked();
}

std::size_t ColumnCheckpoint::size() const {
  std::lock_guard lock(mutex_);
  return columns_.size();
}

void ColumnCheckpoint::save_locked() const {
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["version"] = 1;
  doc["n_lo"] = n_lo_;
  doc["n_hi"] = n_hi_;
  auto& cols = doc["columns"] = nlohmann::json::array();
  for (const auto& [ell, col] : columns_) {
    std::string signs;
    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < col.signs.size(); ++i) {
      signs.push_back(sign_char(col.signs[i]));
      if (col.signs[i] == Sign::negative) negatives.push_back(n_lo_ + i);
    }
    cols.push_back({{"ell", ell}, {"signs", signs}, {"exceptions", negatives}});
  }

  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace commtuples
