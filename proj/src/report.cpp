#include "ellint/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ellint {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 9> kFields = {
    "id", "params", "lhs", "rhs", "abs_err", "rel_err", "pass", "evals", "elapsed_ms"};

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double read_number(const Json& j, const char* field) {
  const Json& v = j.at(field);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw std::invalid_argument(std::string("field '") + field + "' is not a number");
  return v.get<double>();
}

bool serialized(const VerificationResult& r) { return r.status != Status::skipped_domain; }

const char* status_word(const VerificationResult& r) {
  switch (r.status) {
    case Status::passed:
      return "PASS";
    case Status::failed:
      return "FAIL";
    case Status::skipped_domain:
      return "SKIP";
    case Status::error:
      return "ERROR";
  }
  return "?";
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_params(const Params& p) {
  std::string s;
  for (const auto& [name, value] : p) {
    if (!s.empty()) s += ';';
    s += name + "=" + format_double(value);
  }
  return s;
}

std::string to_json(const std::vector<VerificationResult>& results) {
  Json arr = Json::array();
  for (const VerificationResult& r : results) {
    if (!serialized(r)) continue;
    Json params = Json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    Json rec;
    rec["id"] = r.id;
    rec["params"] = params;
    rec["lhs"] = number(r.lhs);
    rec["rhs"] = number(r.rhs);
    rec["abs_err"] = number(r.abs_err);
    rec["rel_err"] = number(r.rel_err);
    rec["pass"] = r.pass;
    rec["evals"] = r.evals;
    rec["elapsed_ms"] = number(r.elapsed_ms);
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationResult>& results) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kFields.size(); ++i) out << (i ? "," : "") << kFields[i];
  out << "\n";
  for (const VerificationResult& r : results) {
    if (!serialized(r)) continue;
    out << r.id << "," << format_params(r.params) << "," << format_double(r.lhs) << ","
        << format_double(r.rhs) << "," << format_double(r.abs_err) << ","
        << format_double(r.rel_err) << "," << (r.pass ? "true" : "false") << "," << r.evals
        << "," << format_double(r.elapsed_ms) << "\n";
  }
  return out.str();
}

std::string to_text(const std::vector<VerificationResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const VerificationResult& r : results) {
    out << status_word(r) << "  " << r.id;
    if (!r.params.empty()) out << " [" << format_params(r.params) << "]";
    if (r.status == Status::skipped_domain || r.status == Status::error) {
      out << "  " << r.message << "\n";
    } else {
      out << "  lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs)
          << " abs_err=" << format_double(r.abs_err) << " rel_err=" << format_double(r.rel_err)
          << "\n";
    }
    if (r.status == Status::skipped_domain) {
      ++skipped;
    } else if (r.pass) {
      ++passed;
    } else {
      ++failed;
    }
  }
  out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

std::vector<VerificationResult> from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("report must be a JSON array");
  std::vector<VerificationResult> out;
  for (const Json& rec : doc) {
    if (!rec.is_object()) throw std::invalid_argument("report record must be an object");
    std::set<std::string> keys;
    for (const auto& item : rec.items()) keys.insert(item.key());
    const std::set<std::string> expected(kFields.begin(), kFields.end());
    if (keys != expected) throw std::invalid_argument("report record has unexpected fields");
    try {
      VerificationResult r;
      r.id = rec.at("id").get<std::string>();
      if (!rec.at("params").is_object()) throw std::invalid_argument("params must be an object");
      for (const auto& item : rec.at("params").items()) {
        r.params.emplace_back(item.key(), item.value().get<double>());
      }
      r.lhs = read_number(rec, "lhs");
      r.rhs = read_number(rec, "rhs");
      r.abs_err = read_number(rec, "abs_err");
      r.rel_err = read_number(rec, "rel_err");
      r.pass = rec.at("pass").get<bool>();
      r.evals = rec.at("evals").get<long>();
      r.elapsed_ms = read_number(rec, "elapsed_ms");
      r.status = r.pass ? Status::passed : Status::failed;
      out.push_back(std::move(r));
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("malformed report record: ") + e.what());
    }
  }
  return out;
}

}  // namespace ellint
