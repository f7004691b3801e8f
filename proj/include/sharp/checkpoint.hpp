#pragma once

// Append-only, line-delimited JSON checkpoint for chunked runs.
//
//   line 1:  {"checkpoint": "sharp-classify", ...run configuration...}
//   then:    {"chunk": [i1, i2], "status": "done", ...payload...}
//
// A torn final line (no trailing newline, left by a killed writer) is
// discarded on open; any other malformed line is corruption.

#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>

#include "json.hpp"
#include "sharp/enumerate.hpp"

namespace sharp {

class CheckpointError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CheckpointLog {
  public:
    /// Creates the file with `header` or validates the existing header
    /// against it and loads the completed chunks.
    CheckpointLog(const std::filesystem::path& path, const nlohmann::json& header);
    ~CheckpointLog();

    CheckpointLog(const CheckpointLog&) = delete;
    CheckpointLog& operator=(const CheckpointLog&) = delete;

    /// Payloads of completed chunks (the full chunk line).
    const std::map<Chunk, nlohmann::json>& completed() const { return done_; }

    /// Appends and flushes one completed-chunk line; thread-safe.
    void append(const Chunk& chunk, nlohmann::json payload);

    static nlohmann::json chunk_json(const Chunk& c);

  private:
    std::filesystem::path path_;
    std::FILE* file_ = nullptr;
    std::mutex mutex_;
    std::map<Chunk, nlohmann::json> done_;
};

}  // namespace sharp
