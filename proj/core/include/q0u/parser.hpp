#pragma once

#include <string_view>

#include "q0u/signature.hpp"
#include "q0u/wff.hpp"

namespace q0u {

// Parses the surface language.
//
//   atoms        x_i  f_(oi)  x^1_i  c  Q_i  iota_i  bot_i  T  F
//   application  f x y      [f x] y        (left-associative)
//   abstraction  \x_i. B
//   binders      forall x_i. B   exists x_i. B   exists1 x_i. B   I x_i. B
//   definedness  def(A)   undef(A)
//   infix        =  /=  ~=  /\  \/  =>   and prefix ~
//   sections     (~) (/\) (\/) (=>)      (the bare connective constants)
//
// Precedence, loosest to tightest: =>, \/, /\, the (in)equalities, ~,
// application.  => associates to the right, the other infixes to the left;
// binder bodies extend as far right as possible.  Parentheses and square
// brackets both group.
//
// Abbreviation tokens parse to folded nodes; use expand() for the core wff.
// Bound occurrences may omit the type annotation, which is recovered from
// the binder.  Nonlogical constants must be declared in the signature.
Wff parse_wff(std::string_view text, const Signature& sig);

}  // namespace q0u
