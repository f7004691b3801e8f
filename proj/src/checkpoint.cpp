#include "sharp/checkpoint.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

namespace sharp {

using nlohmann::json;

namespace {

Chunk parse_chunk(const json& v, std::size_t lineno) {
    if (!v.is_array() || (v.size() != 0 && v.size() != 2)) {
        throw CheckpointError("checkpoint line " + std::to_string(lineno) + ": bad chunk field");
    }
    if (v.empty()) return Chunk{};
    if (!v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw CheckpointError("checkpoint line " + std::to_string(lineno) + ": chunk indices must be integers");
    }
    Chunk c{v[0].get<int>(), v[1].get<int>()};
    if (c.first < 0 || c.second <= c.first) {
        throw CheckpointError("checkpoint line " + std::to_string(lineno) + ": invalid chunk indices");
    }
    return c;
}

}  // namespace

json CheckpointLog::chunk_json(const Chunk& c) {
    if (c.whole()) return json::array();
    return json::array({c.first, c.second});
}

CheckpointLog::CheckpointLog(const std::filesystem::path& path, const json& header) : path_(path) {
    std::string content;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        content.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (!content.empty() && content.back() != '\n') {
            const auto cut = content.find_last_of('\n');
            content.resize(cut == std::string::npos ? 0 : cut + 1);
            std::filesystem::resize_file(path, content.size());
        }
    }

    if (content.empty()) {
        file_ = std::fopen(path.c_str(), "wb");
        if (!file_) throw CheckpointError("cannot create checkpoint " + path.string());
        const std::string line = header.dump() + "\n";
        std::fwrite(line.data(), 1, line.size(), file_);
        std::fflush(file_);
        return;
    }

    std::istringstream lines(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        json doc = json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            throw CheckpointError("checkpoint line " + std::to_string(lineno) + " is not a JSON object");
        }
        if (lineno == 1) {
            if (doc != header) throw CheckpointError("checkpoint was written for a different run configuration");
            continue;
        }
        if (!doc.contains("chunk") || doc.value("status", "") != "done") {
            throw CheckpointError("checkpoint line " + std::to_string(lineno) + " is not a completed chunk");
        }
        Chunk c = parse_chunk(doc["chunk"], lineno);
        if (!done_.emplace(c, std::move(doc)).second) {
            throw CheckpointError("checkpoint line " + std::to_string(lineno) + " repeats a chunk");
        }
    }

    file_ = std::fopen(path.c_str(), "ab");
    if (!file_) throw CheckpointError("cannot append to checkpoint " + path.string());
}

CheckpointLog::~CheckpointLog() {
    if (file_) std::fclose(file_);
}

void CheckpointLog::append(const Chunk& chunk, json payload) {
    payload["chunk"] = chunk_json(chunk);
    payload["status"] = "done";
    const std::string line = payload.dump() + "\n";
    std::lock_guard lock(mutex_);
    if (std::fwrite(line.data(), 1, line.size(), file_) != line.size() || std::fflush(file_) != 0) {
        throw CheckpointError("failed writing checkpoint " + path_.string());
    }
}

}  // namespace sharp
