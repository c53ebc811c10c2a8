#ifndef KLANG_KLANG_HPP
#define KLANG_KLANG_HPP

#include "klang/alphabet.hpp"
#include "klang/classify.hpp"
#include "klang/dfa.hpp"
#include "klang/errors.hpp"
#include "klang/export.hpp"
#include "klang/horizon.hpp"
#include "klang/lang_ops.hpp"
#include "klang/nfa.hpp"
#include "klang/orbit.hpp"
#include "klang/random_regex.hpp"
#include "klang/regex.hpp"
#include "klang/verify.hpp"

#endif
