#pragma once

#include "qps/problem.hpp"

#include <iosfwd>
#include <string>

namespace qps {

/// Reads a problem in the QPLite v1 text format:
///
///   qplite 1
///   n <int>
///   meq <int>
///   mineq <int>
///   Q
///   <n rows of n numbers, or a `sparse` marker followed by `i j v` triplets>
///   d
///   <one row of n numbers, or sparse triplets with j = 0>
///   E        (meq x n)
///   c_eq     (meq values)
///   G sense(<le|ge>)
///   c_in     (mineq values)
///   lb       (`inf` / `-inf` tokens allowed)
///   ub
///
/// Dimension mismatches are rejected with the offending line number.
QpProblem read_qplite(std::istream& in);
QpProblem read_qplite_file(const std::string& path);

/// Writes QPLite v1. Mixed-sense inequality rows are normalized to the
/// >= sense first, since the format carries one sense per G section.
void write_qplite(std::ostream& out, const QpProblem& p);
void write_qplite_file(const std::string& path, const QpProblem& p);

}  // namespace qps
