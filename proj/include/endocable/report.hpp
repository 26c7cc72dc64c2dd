#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace endocable {

/// Line-oriented, append-only check log. Lines are
///   CHECK <name> PASS|FAIL [witness...]
///   CHECK <name> SKIP <reason>
///   RESULT <name> <value>
/// and the whole report is byte-identical across runs for the same inputs.
class Report {
public:
    void check(const std::string& name, bool pass, const std::string& witness = "");
    void skip(const std::string& name, const std::string& reason);
    void result(const std::string& name, const std::string& value);
    void merge(const Report& other);

    bool all_passed() const { return fails_ == 0; }
    int failures() const { return fails_; }
    const std::vector<std::string>& lines() const { return lines_; }
    std::string to_string() const;
    void print(std::ostream& os) const;

private:
    std::vector<std::string> lines_;
    int fails_ = 0;
};

}  // namespace endocable
