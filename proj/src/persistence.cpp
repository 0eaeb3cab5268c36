#include "arena/persistence.hpp"

#include <fstream>
#include <sstream>

#include "arena/errors.hpp"
#include "arena/rng.hpp"

#include "json.hpp"

namespace arena {

namespace {

constexpr std::string_view kRecordExtension = ".json";

bool is_safe_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
           c == '_' || c == '.';
}

}  // namespace

StatsStore::StatsStore(std::filesystem::path directory) : dir_(std::move(directory)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) {
        throw PersistenceError("cannot create stats directory '" + dir_.string() + "': " +
                               ec.message());
    }
}

std::string StatsStore::sanitize_id(const std::string& opponent_id) {
    std::string safe;
    safe.reserve(opponent_id.size());
    bool rewritten = opponent_id.empty();
    for (const char c : opponent_id) {
        if (is_safe_char(c)) {
            safe.push_back(c);
        } else {
            safe.push_back('_');
            rewritten = true;
        }
    }
    if (rewritten) {
        // Distinct ids that sanitize alike must not share a file.
        std::ostringstream suffix;
        suffix << '-' << std::hex << (fnv1a(opponent_id) & 0xffffffffu);
        safe += suffix.str();
    }
    return safe;
}

std::filesystem::path StatsStore::record_path(const std::string& opponent_id) const {
    return dir_ / (sanitize_id(opponent_id) + std::string(kRecordExtension));
}

void StatsStore::save(const StatsRecord& record) {
    if (record.opponent_id.empty()) {
        throw PersistenceError("opponent id must be non-empty");
    }
    if (record.ubi < 0 || record.aui < 0 || record.sessions_observed < 0) {
        throw PersistenceError("stats record fields must be nonnegative");
    }
    std::lock_guard<std::mutex> lock(mutex_);

    nlohmann::ordered_json doc;
    doc["opponent_id"] = record.opponent_id;
    doc["ubi"] = record.ubi;
    doc["aui"] = record.aui;
    doc["sessions_observed"] = record.sessions_observed;

    const auto target = record_path(record.opponent_id);
    const auto temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw PersistenceError("cannot open '" + temp + "' for writing");
        }
        out << doc.dump(2) << '\n';
        out.flush();
        if (!out) {
            throw PersistenceError("write to '" + temp + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw PersistenceError("cannot replace '" + target.string() + "'");
    }
}

std::optional<StatsRecord> StatsStore::load(const std::string& opponent_id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto path = record_path(opponent_id);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;  // never saved
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw CorruptRecordError("undecodable stats record '" + path.string() + "'");
    }
    StatsRecord record;
    try {
        record.opponent_id = doc.at("opponent_id").get<std::string>();
        record.ubi = doc.at("ubi").get<int>();
        record.aui = doc.at("aui").get<int>();
        record.sessions_observed = doc.at("sessions_observed").get<int>();
    } catch (const nlohmann::json::exception&) {
        throw CorruptRecordError("stats record '" + path.string() + "' has missing or bad fields");
    }
    if (record.opponent_id != opponent_id || record.ubi < 0 || record.aui < 0 ||
        record.sessions_observed < 0) {
        throw CorruptRecordError("stats record '" + path.string() + "' fails validation");
    }
    return record;
}

void StatsStore::reset_all() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!std::filesystem::exists(dir_)) {
        return;
    }
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        std::filesystem::remove(entry.path(), ec);
        if (ec) {
            throw PersistenceError("cannot remove '" + entry.path().string() + "'");
        }
    }
}

std::vector<StatsRecord> StatsStore::list_all() const {
    std::vector<std::filesystem::path> files;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (std::filesystem::exists(dir_)) {
            for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
                if (entry.is_regular_file() && entry.path().extension() == kRecordExtension) {
                    files.push_back(entry.path());
                }
            }
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<StatsRecord> records;
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) {
            throw CorruptRecordError("undecodable stats record '" + path.string() + "'");
        }
        StatsRecord record;
        try {
            record.opponent_id = doc.at("opponent_id").get<std::string>();
            record.ubi = doc.at("ubi").get<int>();
            record.aui = doc.at("aui").get<int>();
            record.sessions_observed = doc.at("sessions_observed").get<int>();
        } catch (const nlohmann::json::exception&) {
            throw CorruptRecordError("stats record '" + path.string() +
                                     "' has missing or bad fields");
        }
        records.push_back(std::move(record));
    }
    std::sort(records.begin(), records.end(),
              [](const StatsRecord& a, const StatsRecord& b) { return a.opponent_id < b.opponent_id; });
    return records;
}

}  // namespace arena
