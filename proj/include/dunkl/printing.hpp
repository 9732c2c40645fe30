#pragma once

#include <string>

#include "dunkl/funcspace.hpp"
#include "dunkl/operator.hpp"

namespace dunkl {

enum class RenderFormat { plain, latex };

/// Canonical textual form of a coefficient; the plain form is valid
/// expression syntax.
std::string to_string(const Scalar& s, RenderFormat format = RenderFormat::plain);

/// Canonical textual form of an operator. Terms are ordered by total
/// x/D degree (descending), then lexicographically; the plain form
/// round-trips through the expression parser.
std::string to_string(const Operator& x, RenderFormat format = RenderFormat::plain);

std::string to_string(const Gaussian& g, RenderFormat format = RenderFormat::plain);

/// Textual form of a test function as a sum of p(x) * r^k pieces.
std::string to_string(const RFunction& f, RenderFormat format = RenderFormat::plain);

}  // namespace dunkl
