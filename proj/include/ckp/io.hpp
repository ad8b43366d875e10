#pragma once

#include <string>
#include <string_view>

#include "ckp/model.hpp"

namespace ckp {

// Line-oriented text formats. '#' starts a comment, blank lines are ignored.
//
//   ckp 1                          ineq 1                 point 1
//   b <r>                          rhs <r>                val <i> <j> <r>
//   group <n> a <r>... c <r>...    term <i> <j> <r>       ...
//
// Parsers throw Error(kParse) on malformed text and Error(kValidation) when
// the data violates an instance invariant. Serializers emit canonical
// rationals and sorted terms, so output is byte-stable.

Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& instance);

LinearInequality ParseInequality(std::string_view text);
std::string SerializeInequality(const LinearInequality& inequality);

Point ParsePoint(std::string_view text);
// Only the `val` lines, without the header.
std::string SerializePointValues(const Point& point);
std::string SerializePoint(const Point& point);

std::string ReadFile(const std::string& path);

}  // namespace ckp
