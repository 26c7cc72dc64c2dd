#include "endocable/report.hpp"

#include <sstream>

namespace endocable {

void Report::check(const std::string& name, bool pass, const std::string& witness) {
    std::string line = "CHECK " + name + (pass ? " PASS" : " FAIL");
    if (!pass) ++fails_;
    if (!pass && !witness.empty()) line += " " + witness;
    lines_.push_back(std::move(line));
}

void Report::skip(const std::string& name, const std::string& reason) {
    lines_.push_back("CHECK " + name + " SKIP " + reason);
}

void Report::result(const std::string& name, const std::string& value) {
    lines_.push_back("RESULT " + name + " " + value);
}

void Report::merge(const Report& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
    fails_ += other.fails_;
}

std::string Report::to_string() const {
    std::ostringstream os;
    print(os);
    return os.str();
}

void Report::print(std::ostream& os) const {
    for (const auto& line : lines_) os << line << '\n';
}

}  // namespace endocable
