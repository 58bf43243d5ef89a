// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <vector>

#include "pdescent/field.hpp"

namespace pdescent::detail {

using Row = std::vector<GQ>;

// Basis of the right nullspace of a rows x cols matrix, by exact row
// reduction. Each basis vector has a 1 in its free column.
std::vector<Row> nullspace(std::vector<Row> m, std::size_t cols);

}  // namespace pdescent::detail
