#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semilink/modules.hpp"

namespace semilink {

/// `ring R { field = GF(32003); vars = [x:3, y:4]; relations = ["..."] }`
RingPtr parse_ring(std::string_view text);
/// `module M over R { generators = [g0:0, g1:2]; relations = ["x*g0 - g1"] }`
ModulePtr parse_module(std::string_view text, const RingPtr& ring);
/// `ideal a over R { generators = ["x^2", "y"] }`
std::vector<Poly> parse_ideal(std::string_view text, const RingPtr& ring);

std::string read_file(const std::filesystem::path& path);
RingPtr load_ring(const std::filesystem::path& path);
ModulePtr load_module(const std::filesystem::path& path, const RingPtr& ring);
std::vector<Poly> load_ideal(const std::filesystem::path& path, const RingPtr& ring);

/// Round-trippable `.mod` text, generators named g0, g1, ...
std::string format_module(const ModulePtr& M, const std::string& name = "M");

/// Minimal TOML: comments, `key = value` with strings, integers, booleans and
/// string arrays, and `[[table]]` arrays of tables.
struct TomlDoc {
  using Value = std::variant<std::string, long, bool, std::vector<std::string>>;
  using Table = std::map<std::string, Value>;
  Table top;
  std::map<std::string, std::vector<Table>> arrays;
};

TomlDoc parse_toml(std::string_view text);

}  // namespace semilink
