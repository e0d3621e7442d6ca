// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latstab/bodies.hpp"

namespace latstab {

enum class CountMethod { closed_form, brute_force };

const char* to_string(CountMethod m) noexcept;

/// Number of lattice points inside a body. Points whose membership could not
/// be decided are reported in `ambiguous` and are never part of `count`.
struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t ambiguous = 0;
  CountMethod method = CountMethod::brute_force;
};

struct EnumerationLimits {
  std::size_t max_dim = 8;
  std::uint64_t max_candidates = 1'000'000'000;
};

/// h with body contained in prod [-h_i, h_i].
std::vector<double> bounding_half_widths(const Body& body);

/// Integer radii m_i such that every lattice point of the body, or within the
/// eps band of its boundary, satisfies |z_i| <= m_i.
std::vector<std::int64_t> candidate_radii(const Body& body, double eps = kDefaultEps);

/// Visits every z in prod [-m_i, m_i] in lexicographic order. Throws before
/// visiting anything if the space exceeds the limits.
void for_each_candidate(std::span<const std::int64_t> radii, const EnumerationLimits& limits,
                        const std::function<void(std::span<const std::int64_t>)>& visit);

CountResult count_lattice_points(const Body& body, double eps = kDefaultEps,
                                 const EnumerationLimits& limits = {});

/// prod (2 floor(a_i) + 1), exact.
std::uint64_t count_box_closed_form(const AxisBox& box);

/// Interior-or-boundary lattice points, lexicographically sorted.
std::vector<LatticePoint> list_lattice_points(const Body& body, double eps = kDefaultEps,
                                              const EnumerationLimits& limits = {});

}  // namespace latstab
