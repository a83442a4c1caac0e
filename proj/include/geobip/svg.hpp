#pragma once

#include <optional>
#include <string>

#include "geobip/instance.hpp"
#include "geobip/verdict.hpp"

namespace geobip {

/// Static picture of an instance. With a bipartite verdict objects are drawn
/// red or blue; with an odd cycle its members are highlighted and the rest
/// grayed. Balls of dimension > 2 are projected on the first two axes.
std::string render_svg(const Instance& instance, const std::optional<Verdict>& verdict = std::nullopt);

}  // namespace geobip
