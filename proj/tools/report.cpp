#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace gwpcli {

Record& Record::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  quoted_.push_back(false);
  return *this;
}

Record& Record::add(std::string key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return add(std::move(key), std::string(buf));
}

Record& Record::word(std::string key, const gwp::Alphabet& alphabet, gwp::WordView w) {
  add(std::move(key), gwp::format_word(alphabet, w));
  quoted_.back() = true;
  return *this;
}

const std::string* Record::find(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string quote(const std::string& value, bool force) {
  const bool needs = force || value.empty() ||
                     value.find_first_of(" \t\"=\\") != std::string::npos;
  if (!needs) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void Reporter::emit(const Record& r) {
  const auto& f = r.fields_;
  if (!pretty_) {
    for (std::size_t i = 0; i < f.size(); ++i)
      out_ << (i ? " " : "") << f[i].first << '=' << quote(f[i].second, r.quoted_[i]);
    out_ << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& kv : f) width = std::max(width, kv.first.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::string& v = f[i].second;
    out_ << "  " << f[i].first << std::string(width - f[i].first.size(), ' ') << "  "
         << (r.quoted_[i] && v.empty() ? "(empty word)" : v) << '\n';
  }
  out_ << '\n';
}

}  // namespace gwpcli
