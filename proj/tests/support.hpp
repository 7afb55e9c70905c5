#pragma once

#include "hypsub/group.hpp"
#include "hypsub/group_chain.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace test_support {

inline std::string data_path(const std::string& name) { return std::string(HYPSUB_TEST_DATA) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(HYPSUB_GOLDEN) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline hypsub::GroupContext free_group(std::size_t gens, int radius) {
  hypsub::GroupPresentation p;
  std::vector<char> syms;
  for (std::size_t i = 0; i < gens; ++i) syms.push_back(static_cast<char>('a' + i));
  p.alphabet = hypsub::Alphabet(syms);
  p.ball_radius = radius;
  return hypsub::GroupContext::build(p);
}

inline hypsub::GroupContext genus2(int radius) {
  hypsub::GroupPresentation p;
  p.alphabet = hypsub::Alphabet({'a', 'b', 'c', 'd'});
  p.backend = hypsub::Backend::DehnSmallCancellation;
  p.relators = {p.alphabet.parse("abABcdCD")};
  p.ball_radius = radius;
  return hypsub::GroupContext::build(p);
}

inline hypsub::Simplex simplex(const hypsub::GroupContext& g, std::initializer_list<const char*> words) {
  hypsub::Simplex s;
  for (const char* w : words) s.vertices.push_back(g.parse(w));
  return s;
}

}  // namespace test_support
