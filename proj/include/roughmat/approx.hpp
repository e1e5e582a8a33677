#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "roughmat/covering.hpp"

namespace roughmat {

/// The six covering approximation operators: second (SH/SL), fifth (IH/IL)
/// and sixth (XH/XL) upper and lower pairs.
enum class OpKind { SH, SL, IH, IL, XH, XL };

std::optional<OpKind> parse_op_kind(std::string_view token);  // "sh".."xl"
std::string to_string(OpKind kind);

/// Evaluates the operator straight from its set definition:
///   SH(X) = union of blocks meeting X        SL(X) = complement of SH(X^c)
///   IH(X) = {x | N(x) meets X}               IL(X) = {x | N(x) subset of X}
///   XH(X) = union of N(x) meeting X          XL(X) = union of N(x) subset of X
SetVec oracle_approx(const Covering& c, OpKind kind, const SetVec& x);

/// Evaluates the same operator through the characteristic matrices:
///   SH: gamma * chi          SL: gamma odot chi
///   IH: pi * chi             IL: pi odot chi
///   XH: (pi^T * pi) * chi    XL: pi^T * (pi odot chi)
/// Agrees with oracle_approx on every input.
SetVec matrix_approx(const Covering& c, OpKind kind, const SetVec& x);

/// The covering of neighborhood blocks {N(x)}, duplicates removed. XH over
/// `c` equals SH over this covering, and XL over `c` is the union of this
/// covering's blocks contained in X.
Covering cov_of(const Covering& c);

}  // namespace roughmat
