#include "lieph/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "lieph/errors.hpp"

namespace lieph {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::insufficient:
      return "insufficient_precision";
  }
  return "?";
}

void Report::append(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

bool Report::passed() const { return !any_failed() && !any_insufficient(); }

bool Report::any_failed() const {
  for (const auto& c : checks_)
    if (c.status == Status::fail) return true;
  return false;
}

bool Report::any_insufficient() const {
  for (const auto& c : checks_)
    if (c.status == Status::insufficient) return true;
  return false;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

std::string Report::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "PREC";
    os << tag << "  " << c.id << "  [" << c.identity << "]";
    std::vector<std::string> info;
    if (timing) info.push_back(std::to_string(static_cast<long>(c.millis)) + " ms");
    if (c.precision >= 0) info.push_back("N=" + std::to_string(c.precision));
    if (c.needed >= 0) info.push_back("needs N=" + std::to_string(c.needed));
    for (std::size_t i = 0; i < info.size(); ++i) os << (i == 0 ? "  (" : ", ") << info[i];
    if (!info.empty()) os << ")";
    os << "\n";
    if (!c.witness.empty()) os << "      " << c.witness << "\n";
  }
  return os.str();
}

std::string Report::to_json(bool timing) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j;
    j["check_id"] = c.id;
    j["paper_eq"] = c.identity;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.witness);
    j["millis"] = timing ? nlohmann::json(static_cast<long>(c.millis)) : nlohmann::json(nullptr);
    j["precision"] = c.precision;
    if (c.needed >= 0) j["minimal_N"] = c.needed;
    arr.push_back(j);
  }
  return arr.dump(2);
}

void run_check(Report& report, const std::string& id, const std::string& identity, int precision,
               const std::function<std::optional<std::string>()>& body) {
  CheckResult r;
  r.id = id;
  r.identity = identity;
  r.precision = precision;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto w = body();
    if (w) {
      r.status = Status::fail;
      r.witness = *w;
    }
  } catch (const InsufficientPrecision& e) {
    r.status = Status::insufficient;
    r.witness = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report.add(std::move(r));
}

}  // namespace lieph
