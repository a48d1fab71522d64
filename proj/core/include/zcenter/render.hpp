#pragma once

#include <string>
#include <vector>

#include "zcenter/centre.hpp"

namespace zc {

struct RenderOptions {
  bool unicode = true;
};

/// Human form of a cyclotomic value: integers, rationals, small multiples of
/// roots of unity (omega/epsilon/eta for third/fourth/ninth roots) and
/// two-term sums like 1+omega; falls back to an explicit coefficient list.
std::string render_value(const Cyclotomic& v, const RenderOptions& opt = {});

std::string render_pair(const GroupTable& g, int f, int x);

/// Aligned text table over the canonical column pairs.
std::string render_centre_table(const CentreContext& ctx,
                                const std::vector<std::string>& row_labels,
                                const std::vector<const CentreCharacter*>& rows,
                                const RenderOptions& opt = {});

std::string render_csv_table(const CentreContext& ctx,
                             const std::vector<std::string>& row_labels,
                             const std::vector<const CentreCharacter*>& rows,
                             const RenderOptions& opt = {});

}  // namespace zc
