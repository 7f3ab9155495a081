// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace zetaprime {

inline constexpr const char* kCodeVersion = "0.1.0";

} // namespace zetaprime
