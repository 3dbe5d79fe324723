#pragma once

#include "fdl/bisim.hpp"
#include "fdl/degree.hpp"
#include "fdl/enumerate.hpp"
#include "fdl/error.hpp"
#include "fdl/eval.hpp"
#include "fdl/features.hpp"
#include "fdl/godel.hpp"
#include "fdl/interpretation.hpp"
#include "fdl/io.hpp"
#include "fdl/kb.hpp"
#include "fdl/minimize.hpp"
#include "fdl/parser.hpp"
#include "fdl/print.hpp"
#include "fdl/relation.hpp"
#include "fdl/rewrite.hpp"
#include "fdl/sublanguage.hpp"
#include "fdl/syntax.hpp"
