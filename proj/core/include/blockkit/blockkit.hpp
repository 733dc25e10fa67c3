#pragma once

#include "blockkit/baselines.hpp"
#include "blockkit/corpus.hpp"
#include "blockkit/errors.hpp"
#include "blockkit/eval.hpp"
#include "blockkit/klsh.hpp"
#include "blockkit/lexicon.hpp"
#include "blockkit/minhash.hpp"
#include "blockkit/parallel.hpp"
#include "blockkit/partition.hpp"
#include "blockkit/rng.hpp"
#include "blockkit/shingle.hpp"
#include "blockkit/synthgen.hpp"
#include "blockkit/text.hpp"
#include "blockkit/tlsh.hpp"
