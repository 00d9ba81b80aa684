#pragma once

#include "sqcirc/circuits.hpp"
#include "sqcirc/corpus.hpp"
#include "sqcirc/injection.hpp"
#include "sqcirc/rauzy.hpp"
#include "sqcirc/report.hpp"
#include "sqcirc/search.hpp"
#include "sqcirc/squares.hpp"
#include "sqcirc/theorem.hpp"
#include "sqcirc/word.hpp"
