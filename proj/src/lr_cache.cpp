#include "schubkit/lr_cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <system_error>

namespace schubkit {

std::string format_cache_record(const LrKey& key, Count value) {
    return "LR " + format_partition(std::get<0>(key)) + "|" + format_partition(std::get<1>(key)) +
           "|" + format_partition(std::get<2>(key)) + " " + std::to_string(value) + "\n";
}

CacheRecord parse_cache_record(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    const auto bad = [&] { return InvalidInput("malformed cache record '" + std::string(line) + "'"); };
    if (!line.starts_with("LR "))
        throw bad();
    const auto body = line.substr(3);
    const auto space = body.find(' ');
    if (space == std::string_view::npos)
        throw bad();
    const auto parts = body.substr(0, space);
    const auto value_text = body.substr(space + 1);
    const auto bar1 = parts.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : parts.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || parts.find('|', bar2 + 1) != std::string_view::npos)
        throw bad();
    Count value = 0;
    const auto* end = value_text.data() + value_text.size();
    const auto [ptr, ec] = std::from_chars(value_text.data(), end, value);
    if (value_text.empty() || ec != std::errc{} || ptr != end || value < 0)
        throw bad();
    return {LrKey{parse_partition(parts.substr(0, bar1)).trimmed(),
                  parse_partition(parts.substr(bar1 + 1, bar2 - bar1 - 1)).trimmed(),
                  parse_partition(parts.substr(bar2 + 1)).trimmed()},
            value};
}

CoefficientCache::CoefficientCache(std::filesystem::path path, LrMemo& memo)
    : path_(std::move(path)), memo_(memo) {
    if (std::ifstream in(path_); in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            const auto rec = parse_cache_record(line);
            memo_.insert(rec.key, rec.value);
            ++loaded_;
        }
    }
    fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0)
        throw std::system_error(errno, std::generic_category(), "open " + path_.string());
    memo_.set_sink([this](const LrKey& key, Count value) { append(key, value); });
}

CoefficientCache::~CoefficientCache() {
    memo_.set_sink(nullptr);
    if (fd_ >= 0)
        ::close(fd_);
}

std::size_t CoefficientCache::appended() const {
    std::lock_guard lock(mutex_);
    return appended_;
}

void CoefficientCache::append(const LrKey& key, Count value) {
    const auto line = format_cache_record(key, value);
    std::lock_guard lock(mutex_);
    const auto written = ::write(fd_, line.data(), line.size());
    if (written != static_cast<ssize_t>(line.size()))
        throw std::system_error(errno, std::generic_category(), "append " + path_.string());
    ++appended_;
}

}  // namespace schubkit
