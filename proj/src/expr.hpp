#pragma once

#include <map>
#include <string>
#include <string_view>

namespace theta::detail {

using Env = std::map<std::string, long long>;

// Integer expressions over named variables: literals, + - * / %, comparisons,
// && || !, ?: and parentheses. Booleans are 0/1. Throws CatalogFormatError.
long long eval_expr(std::string_view text, const Env& env);

// Replaces every {expr} in `text` by its value.
std::string substitute(std::string_view text, const Env& env);

}  // namespace theta::detail
