#pragma once

#include <string>
#include <string_view>

#include "radx/model.hpp"

namespace radx {

// Instance files use a small TOML subset:
//
//   [base]
//   type = "Q"            # "Q", "Qzeta" (with z = ...) or "Fq" (with q = ...)
//
//   [[generator]]         # characteristic 0, repeatable
//   twist = "1/3"         # e^{2 pi i twist}, default "0"
//   radicand = "2"        # positive rational, default "1"
//   root_degree = 3       # default 1
//
//   [[generator]]
//   value = "-27"         # principal root_degree-th root of a nonzero rational
//   root_degree = 3
//
//   [fq]
//   group_order = 27      # G = mu_D over F_q
//
// Comments start with '#'.  Unknown sections and keys are errors.
RadicalGroupSpec parse_instance(std::string_view text);
RadicalGroupSpec load_instance(const std::string& path);

// Inverse of parse_instance, used for reproducer dumps.
std::string format_instance(const RadicalGroupSpec& g);

}  // namespace radx
