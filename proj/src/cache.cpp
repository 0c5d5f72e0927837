#include "opturan/cache.hpp"

#include <fstream>
#include <sstream>

#include "opturan/version.hpp"

namespace opturan {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  load();
}

void ResultCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    ExtremalResult r;
    std::string mode;
    std::string witnesses;
    std::string version;
    if (!(fields >> r.n >> r.p >> r.q >> mode >> r.value >> witnesses >>
          r.mop_count >> version))
      continue;  // malformed line: skip rather than fail the run
    if (version != kCodeVersion) continue;
    try {
      r.mode = parse_mode(mode);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (witnesses != "-") {
      std::istringstream parts(witnesses);
      std::string w;
      while (std::getline(parts, w, ','))
        if (!w.empty()) r.witnesses.push_back(w);
    }
    entries_[{r.n, r.p, r.q, static_cast<int>(r.mode)}] = std::move(r);
  }
}

void ResultCache::save() const {
  std::ofstream out(path_, std::ios::trunc);
  if (!out) return;
  out << "# n p q mode value witnesses mop_count code_version\n";
  for (const auto& [key, r] : entries_) {
    std::string witnesses;
    for (const auto& w : r.witnesses) {
      if (!witnesses.empty()) witnesses.push_back(',');
      witnesses += w;
    }
    if (witnesses.empty()) witnesses = "-";
    out << r.n << ' ' << r.p << ' ' << r.q << ' ' << mode_name(r.mode)
        << ' ' << r.value << ' ' << witnesses << ' ' << r.mop_count << ' '
        << kCodeVersion << '\n';
  }
}

std::optional<ExtremalResult> ResultCache::lookup(int n, int p, int q,
                                                  Mode mode) const {
  auto it = entries_.find({n, p, q, static_cast<int>(mode)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const ExtremalResult& result) {
  entries_[{result.n, result.p, result.q,
            static_cast<int>(result.mode)}] = result;
  save();
}

}  // namespace opturan
