#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace netdicke {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat dotted-key configuration: one "key = value" per line, '#' comments.
class Config {
  public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text,
                              const std::string& origin = "<inline>");

    void set(const std::string& key, const std::string& value);
    void merge_overlay(const Config& other);  // other's keys win

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key) const;
    long get_long(const std::string& key, long fallback) const;
    std::optional<double> maybe_double(const std::string& key) const;

    // Sub-config of keys beginning with "prefix.", prefix removed.
    Config stripped_prefix(const std::string& prefix) const;

    const std::map<std::string, std::string>& values() const {
        return values_;
    }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace netdicke
