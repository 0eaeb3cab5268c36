#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arena/opponent_model.hpp"

namespace arena {

/// One persisted opponent record.
struct StatsRecord {
    std::string opponent_id;
    int ubi = 0;
    int aui = 0;
    int sessions_observed = 0;

    bool operator==(const StatsRecord&) const = default;
};

/// Durable opponent memory: one JSON document per opponent id inside a
/// directory. Writes go through a temp file and rename, so a reader
/// never sees a torn record. All access through one store instance is
/// serialized.
class StatsStore {
public:
    explicit StatsStore(std::filesystem::path directory);

    /// Durably replace the record for record.opponent_id.
    void save(const StatsRecord& record);

    /// The last saved record, or nullopt if the id was never saved.
    /// A file that exists but cannot be decoded raises CorruptRecordError.
    std::optional<StatsRecord> load(const std::string& opponent_id) const;

    /// Drop every record. Idempotent.
    void reset_all();

    /// All decodable records, sorted by opponent id. Throws on the
    /// first corrupt file.
    std::vector<StatsRecord> list_all() const;

    const std::filesystem::path& directory() const { return dir_; }

    /// Filesystem-safe file stem for an opponent id. Ids that need
    /// rewriting get a hash suffix so distinct ids cannot collide.
    static std::string sanitize_id(const std::string& opponent_id);

private:
    std::filesystem::path record_path(const std::string& opponent_id) const;

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

}  // namespace arena
