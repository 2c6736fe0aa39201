#pragma once

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "scenopt/model.hpp"
#include "scenopt/union.hpp"

namespace scenopt {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem file:
///
///   {
///     "n": 2,
///     "c": [-1, -1],
///     "polytope": { "rows": [{"a": [1, 1], "b": 3}],
///                   "box": [[0, 1], [0, 1]] },
///     "constraint": "example1"
///                 | {"type": "affine_table",
///                    "table": [{"d": 0, "a": [1, 0], "b": 1}, ...]},
///     "sampler": {"type": "uniform_interval", "lo": 0, "hi": 6.283185307179586}
///   }
///
/// "box" also accepts {"lower": [...], "upper": [...]}. The sampler defaults
/// to uniform on [0, 2 pi) for "example1" and is required otherwise.
UncertainProgram parse_problem(std::string_view json_text);
UncertainProgram load_problem(const std::filesystem::path& path);

/// Family file: {"members": [<problem>, ...], "eps_k": [...],
///               "slater": [{"x0": [...], "sup": -1} | {"minmax": true} | null, ...],
///               "ulb": {"Ld": .., "kappa": .., "p": ..} or one entry per member}
/// The first member's sampler (or a top-level "sampler") is shared by all.
SubprogramFamily parse_family(std::string_view json_text);
SubprogramFamily load_family(const std::filesystem::path& path);

}  // namespace scenopt
