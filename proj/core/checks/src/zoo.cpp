#include "equlat/checks/zoo.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>

#include "equlat/dfa_io.hpp"
#include "equlat/error.hpp"
#include "equlat/text_io.hpp"

namespace equlat::checks {

namespace fs = std::filesystem;

std::string data_dir() {
  if (const char* env = std::getenv("EQULAT_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return EQULAT_DATA_DIR;
}

namespace {

std::vector<fs::path> files_with_extension(const std::string& dir, const std::string& extension) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::kParse, "no such directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::vector<NamedMachine> load_zoo(const std::string& dir) {
  std::vector<NamedMachine> zoo;
  for (const auto& path : files_with_extension(dir, ".tm")) {
    zoo.push_back({path.stem().string(), parse_tm(read_text_file(path.string()))});
  }
  return zoo;
}

std::vector<NamedMachine> load_zoo() { return load_zoo(data_dir() + "/machines"); }

TmSpec load_machine(const std::string& name_or_path) {
  if (fs::is_regular_file(name_or_path)) return parse_tm(read_text_file(name_or_path));
  const std::string zoo_path = data_dir() + "/machines/" + name_or_path + ".tm";
  if (fs::is_regular_file(zoo_path)) return parse_tm(read_text_file(zoo_path));
  throw Error(ErrorKind::kInvalidArgument, "no machine file or zoo machine named `" + name_or_path + "`");
}

std::vector<NamedRelation> load_automatic_corpus(const std::string& dir) {
  std::vector<NamedRelation> corpus;
  for (const auto& path : files_with_extension(dir, ".dfa")) {
    corpus.push_back({path.stem().string(), AutomaticEq::from_dfa(parse_dfa(read_text_file(path.string())))});
  }
  return corpus;
}

std::vector<NamedRelation> load_automatic_corpus() { return load_automatic_corpus(data_dir() + "/automatic"); }

std::vector<std::string> builtin_relation_names() {
  return {"top",       "parity",    "mod3",        "mod4",        "len-cap-2",
          "len-cap-3", "len-cap-4", "singleton-3", "singleton-5", "popcount-parity"};
}

Dfa builtin_relation_dfa(const std::string& name) {
  namespace c = classifiers;
  if (name == "top") return kernel_dfa(c::constant());
  if (name == "parity") return kernel_dfa(c::value_mod(2));
  if (name == "mod3") return kernel_dfa(c::value_mod(3));
  if (name == "mod4") return kernel_dfa(c::value_mod(4));
  if (name == "len-cap-2") return kernel_dfa(c::length_capped(2));
  if (name == "len-cap-3") return kernel_dfa(c::length_capped(3));
  if (name == "len-cap-4") return kernel_dfa(c::length_capped(4));
  if (name == "singleton-3") return kernel_dfa(c::equals(3));
  if (name == "singleton-5") return kernel_dfa(c::equals(5));
  if (name == "popcount-parity") return kernel_dfa(c::popcount_parity());
  throw Error(ErrorKind::kInvalidArgument, "unknown built-in relation `" + name + "`");
}

std::vector<NamedDfa> non_equivalence_dfas() {
  namespace c = classifiers;
  const BitClassifier length_parity{2, 0, {1, 1, 0, 0}, {0, 1}};
  std::vector<NamedDfa> out;
  out.push_back({"length-parity-differs", label_relation_dfa(length_parity, std::not_equal_to<>())});
  out.push_back({"length-below", label_relation_dfa(c::length_capped(3), [](std::uint32_t a, std::uint32_t b) {
                   return a < b;
                 })});
  out.push_back({"low-bits-overlap", label_relation_dfa(c::value_mod(4), [](std::uint32_t a, std::uint32_t b) {
                   return a == b || (a & b & 3u) != 0;
                 })});
  return out;
}

}  // namespace equlat::checks
