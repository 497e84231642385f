#pragma once

#include <string>
#include <string_view>

#include "berge/board.hpp"

namespace berge {

/// Parses chained move notation, e.g. "{ 7 4 1 } U { 9 3 }".
///
/// A group { a1 a2 ... am } stands for the moves (a1<-a2), (a2<-a3), ...,
/// (a(m-1)<-am). Groups are joined by `U`, `u` or the UTF-8 union sign.
/// The literal "{}" is the empty solution. Throws ParseError.
Solution parse_solution(std::string_view text, int k, int n);

/// Greedy chaining: a group is extended while the next move's destination
/// equals the previous move's source. Groups are joined with " U ".
std::string format_solution(const Solution& solution);

}  // namespace berge
