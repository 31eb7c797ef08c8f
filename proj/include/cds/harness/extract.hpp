#pragma once

#include <optional>
#include <string>

#include "cds/task_spec.hpp"

namespace cds::harness {

/// Maps a free-form completion to an extracted answer, or nullopt (the
/// no-answer marker). Total: never throws on any input string.
///   boxed_math     last \boxed{...} content (brace-balanced)
///   the_answer_is  capture of the final "The answer is X" clause
///   option_letter  the A-D letter of the final answer clause
///   labeled_field  text after the final "<label>:" line prefix
std::optional<std::string> extract_answer(const std::string& completion, const TaskSpec& spec);

/// Canonical comparison form. numeric strips commas and whitespace and
/// canonicalizes signs and leading zeros; expressions that are not plain
/// numbers are compared as canonical strings (no symbolic equivalence).
std::string normalize_answer(const std::string& answer, Normalization rule);

bool exact_match(const std::optional<std::string>& extracted, const std::string& reference,
                 Normalization rule);

/// Whitespace-delimited token count inside the final open/close delimiter
/// pair (e.g. a thinking segment). nullopt when no complete pair exists.
std::optional<long> tokens_between(const std::string& text, const std::string& open,
                                   const std::string& close);

} // namespace cds::harness
