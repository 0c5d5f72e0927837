#ifndef OPTURAN_CACHE_HPP
#define OPTURAN_CACHE_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "opturan/search.hpp"

namespace opturan {

/// Line-oriented result store. One record per line, fields in fixed
/// order: n p q mode value witnesses mop_count code_version, where
/// witnesses is a comma-joined graph6 list or "-". Records written by a
/// different code version are ignored on load.
class ResultCache {
public:
  explicit ResultCache(std::string path);

  std::optional<ExtremalResult> lookup(int n, int p, int q,
                                       Mode mode) const;
  void store(const ExtremalResult& result);

  const std::string& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

private:
  using Key = std::tuple<int, int, int, int>;
  void load();
  void save() const;

  std::string path_;
  std::map<Key, ExtremalResult> entries_;
};

}  // namespace opturan

#endif
