#pragma once

// Persistent store for LR coefficients.
//
// File format: one record per line, `LR <lambda>|<mu>|<nu> <value>`, with
// partitions in the comma-separated text encoding. Records are appended with
// a single write(2) on an O_APPEND descriptor. Duplicate records are allowed
// but must agree.

#include <filesystem>
#include <mutex>
#include <string>
#include <string_view>

#include "schubkit/lr_engine.hpp"

namespace schubkit {

struct CacheRecord {
    LrKey key;
    Count value;
};

std::string format_cache_record(const LrKey& key, Count value);
/// Throws InvalidInput on a malformed line.
CacheRecord parse_cache_record(std::string_view line);

class CoefficientCache {
public:
    /// Loads every record into `memo` and starts appending new entries of
    /// `memo` to the file. Conflicting records throw std::logic_error.
    CoefficientCache(std::filesystem::path path, LrMemo& memo);
    ~CoefficientCache();

    CoefficientCache(const CoefficientCache&) = delete;
    CoefficientCache& operator=(const CoefficientCache&) = delete;

    std::size_t loaded() const { return loaded_; }
    std::size_t appended() const;

private:
    void append(const LrKey& key, Count value);

    std::filesystem::path path_;
    LrMemo& memo_;
    int fd_ = -1;
    std::size_t loaded_ = 0;
    std::size_t appended_ = 0;
    mutable std::mutex mutex_;
};

}  // namespace schubkit
