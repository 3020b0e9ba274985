#include "sbtc/reference.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace sbtc {

std::optional<std::string_view> reference_key(std::string_view stem) {
  std::string s(stem);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto starts = [&](std::string_view p) { return s.rfind(p, 0) == 0; };
  if (starts("lena") || starts("lenna")) return "lenna";
  if (starts("pepper")) return "pepper";
  if (starts("baboon") || starts("mandrill")) return "baboon";
  if (starts("fruit")) return "fruits";
  if (starts("tiffany")) return "tiffany";
  if (starts("frymire")) return "frymire";
  return std::nullopt;
}

std::optional<ReferenceMse> find_reference(std::string_view stem, int block_rows,
                                           int block_cols) {
  if (block_rows != block_cols) return std::nullopt;
  const auto key = reference_key(stem);
  if (!key) return std::nullopt;
  for (const auto& r : kReferenceMse) {
    if (r.image == *key && r.block == block_rows) return r;
  }
  return std::nullopt;
}

}  // namespace sbtc
